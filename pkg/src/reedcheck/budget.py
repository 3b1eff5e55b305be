from __future__ import annotations

import time


class BudgetExceeded(RuntimeError):
    """A solver ran past its wall-clock budget; no answer was produced."""


class Deadline:
    """Cheap wall-clock budget, polled every ``stride`` ticks."""

    __slots__ = ("_limit", "_count", "_stride")

    def __init__(self, budget_ms: int | None, stride: int = 256):
        self._limit = None if not budget_ms else time.monotonic() + budget_ms / 1000.0
        self._count = 0
        self._stride = stride

    def tick(self) -> None:
        if self._limit is None:
            return
        self._count += 1
        if self._count >= self._stride:
            self._count = 0
            if time.monotonic() > self._limit:
                raise BudgetExceeded("time budget exceeded")


UNLIMITED = Deadline(None)
