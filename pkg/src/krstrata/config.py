"""Enumeration limits and the exception hierarchy shared by all modules."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_RANK = "KRSTRATA_MAX_RANK"


class KRError(Exception):
    """Base class for errors raised by this package."""


class RankMismatchError(KRError, ValueError):
    pass


class FlavorError(KRError, ValueError):
    """Element or datum does not belong to the requested group flavor."""


class WindowError(KRError, ValueError):
    """A requested enumeration exceeds the configured limits."""


class NotPermissibleError(KRError, ValueError):
    pass


class HypothesisViolation(KRError, ValueError):
    """Input to the Newton computation violates the positivity hypothesis."""

    def __init__(self, xi: int, i: int, message: str):
        super().__init__(f"component {xi}, index {i}: {message}")
        self.xi = xi
        self.i = i


class InvariantError(KRError, RuntimeError):
    """Two independent computations disagreed."""


@dataclass(frozen=True)
class Limits:
    max_rank: int = 12
    max_product: int = 200_000  # cap on |index set|^f for product enumerations

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ENV_MAX_RANK)
        if raw is None:
            return cls()
        try:
            value = int(raw)
        except ValueError:
            raise WindowError(f"{ENV_MAX_RANK} must be an integer, got {raw!r}")
        if value < 1:
            raise WindowError(f"{ENV_MAX_RANK} must be positive")
        return cls(max_rank=value)


def check_rank(m: int, limits: Limits | None = None) -> None:
    limits = limits or Limits.from_env()
    if m > limits.max_rank:
        raise WindowError(f"rank {m} exceeds the configured maximum {limits.max_rank}")


def check_product(size: int, limits: Limits | None = None) -> None:
    limits = limits or Limits.from_env()
    if size > limits.max_product:
        raise WindowError(f"product of size {size} exceeds the limit {limits.max_product}")
