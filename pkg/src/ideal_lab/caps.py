"""Resource caps shared by every enumeration in the package."""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from dataclasses import dataclass
from typing import Iterator


class CapError(RuntimeError):
    """An enumeration would exceed a configured resource cap."""


@dataclass(frozen=True)
class Caps:
    max_vars: int = 16
    max_exponent: int = 15
    max_box: int = 1 << 22

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            max_vars=int(os.environ.get("IDEAL_LAB_MAX_VARS", 16)),
            max_exponent=int(os.environ.get("IDEAL_LAB_MAX_EXPONENT", 15)),
            max_box=int(os.environ.get("IDEAL_LAB_MAX_BOX", 1 << 22)),
        )


_override: contextvars.ContextVar[Caps | None] = contextvars.ContextVar("ideal_lab_caps", default=None)


def current_caps() -> Caps:
    # the environment is read on every call so the CLI and tests can change it
    return _override.get() or Caps.from_env()


@contextlib.contextmanager
def raised_caps(**changes: int) -> Iterator[Caps]:
    """Temporarily replace some caps in the current context only."""
    caps = dataclasses.replace(current_caps(), **changes)
    token = _override.set(caps)
    try:
        yield caps
    finally:
        _override.reset(token)
