"""Configuration, session state and console rendering for the CLI."""

from .config import ConfigOverrides, resolve_config, validate_config
from .console import Console, Table
from .state import ResolvedConfig, SessionState

__all__ = [
    "ConfigOverrides",
    "Console",
    "ResolvedConfig",
    "SessionState",
    "Table",
    "resolve_config",
    "validate_config",
]
