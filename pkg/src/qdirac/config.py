"""Desk-scale limits: configuration, not hard-coded policy.

Exact arithmetic stays tractable inside this envelope; the CLI refuses larger
requests unless --unsafe-limits is passed.  Library functions themselves are
unrestricted.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    scalar_n_max: int = 4
    scalar_deg_max: int = 6
    clifford_n_max: int = 3
    clifford_deg_max: int = 5

    def check(self, n, degree, clifford):
        if clifford:
            if n > self.clifford_n_max or degree > self.clifford_deg_max:
                raise ValueError(
                    f"n={n}, degree={degree} exceeds the Clifford-valued envelope "
                    f"(n<={self.clifford_n_max}, deg<={self.clifford_deg_max}); "
                    "pass --unsafe-limits to override"
                )
        else:
            if n > self.scalar_n_max or degree > self.scalar_deg_max:
                raise ValueError(
                    f"n={n}, degree={degree} exceeds the scalar envelope "
                    f"(n<={self.scalar_n_max}, deg<={self.scalar_deg_max}); "
                    "pass --unsafe-limits to override"
                )


DEFAULT_LIMITS = Limits()


UNLIMITED = Limits(10**9, 10**9, 10**9, 10**9)
