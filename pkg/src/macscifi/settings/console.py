from __future__ import annotations

from rich.console import Console
from rich.table import Table

__all__ = ["Console", "Table"]
