"""Interval contracts for factor approximations of a real-valued functor.

For a true value ``F`` and an approximation ``A``:

* r-factor: ``F/r <= A <= r*F`` when ``F >= 0``, and ``r*F <= A <= F/r`` otherwise;
* (r, s)-factor: the same interval widened by ``s`` on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .poly import Scalar, rat


@dataclass(frozen=True)
class ApproxCheck:
    true_value: Fraction
    approx_value: Fraction
    r: Fraction = Fraction(1)
    s: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("true_value", "approx_value", "r", "s"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.r < 1:
            raise PreconditionError(f"r must be >= 1, got {self.r}")
        if self.s < 0:
            raise PreconditionError(f"s must be >= 0, got {self.s}")

    def interval(self, widen: bool = True) -> tuple[Fraction, Fraction]:
        F, r = self.true_value, self.r
        lo, hi = (F / r, r * F) if F >= 0 else (r * F, F / r)
        if widen:
            lo, hi = lo - self.s, hi + self.s
        return lo, hi


def check_r_factor(c: ApproxCheck) -> bool:
    lo, hi = c.interval(widen=False)
    return lo <= c.approx_value <= hi


def check_rs_factor(c: ApproxCheck) -> bool:
    lo, hi = c.interval(widen=True)
    return lo <= c.approx_value <= hi


def approx_check(true_value: Scalar, approx_value: Scalar, r: Scalar = 1, s: Scalar = 0) -> ApproxCheck:
    return ApproxCheck(rat(true_value), rat(approx_value), rat(r), rat(s))
