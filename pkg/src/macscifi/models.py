from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field, field_validator

from macscifi.algebra.rational import format_rational
from macscifi.symmetric.base import Expansion

REPORT_SCHEMA_VERSION = 1


class CheckRecord(BaseModel):
    """Outcome of one identity check inside a suite."""

    id: str
    params: dict[str, Any] = Field(default_factory=dict)
    passed: bool
    witness: str | None = None
    seconds: float = 0.0

    @field_validator("id")
    @classmethod
    def _non_empty(cls, value: str) -> str:
        if not value or value.strip() == "":
            raise ValueError("check id must be non-empty")
        return value


class VerifyReport(BaseModel):
    schema_version: int = REPORT_SCHEMA_VERSION
    suite: str
    seed: int
    config: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckRecord] = Field(default_factory=list)
    wall_time: float = 0.0

    @field_validator("suite")
    @classmethod
    def _non_empty(cls, value: str) -> str:
        if not value or value.strip() == "":
            raise ValueError("suite name must be non-empty")
        return value

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [check for check in self.checks if not check.passed]


class TermModel(BaseModel):
    index: list[int]
    coefficient: str


class ExpansionModel(BaseModel):
    """JSON form of an expansion; coefficients use the canonical text printer."""

    basis: str
    degree: int
    terms: list[TermModel] = Field(default_factory=list)

    @classmethod
    def of(cls, expansion: Expansion[Any]) -> ExpansionModel:
        return cls(
            basis=expansion.basis,
            degree=expansion.degree,
            terms=[
                TermModel(index=list(key), coefficient=format_rational(expansion.coefficient(key)))
                for key in expansion.sorted_keys()
            ],
        )
