"""Literal gadgets: three univariate polynomials whose unit-interval integrals
encode consistency of literal choices.

With ``g1 = 30x^2 - 36x + 9``, ``g2 = -6x + 4`` and ``f = 2x``:

    int g1 = int g2 = int f = 1,   int g1*g2 = 4,
    int g1*f = int g2*f = int g1*g2*f = 0.

So a product that pairs a positive-literal gadget with the negative-literal
gadget of the same variable integrates to zero, and every consistent pattern
integrates to a positive integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import UniPoly, unipoly_integrate01, unipoly_mul


@dataclass(frozen=True)
class GadgetSet:
    g1: UniPoly
    g2: UniPoly
    f: UniPoly


def default_gadgets() -> GadgetSet:
    return GadgetSet(
        g1=UniPoly.of(9, -36, 30),
        g2=UniPoly.of(4, -6),
        f=UniPoly.of(0, 2),
    )


@dataclass(frozen=True)
class GadgetCheck:
    name: str
    value: Fraction
    expectation: str  # "positive integer" or "zero"
    passed: bool


@dataclass(frozen=True)
class GadgetReport:
    checks: tuple[GadgetCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def __getitem__(self, name: str) -> GadgetCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_gadgets(g: GadgetSet) -> GadgetReport:
    """Evaluate the seven integral identities exactly."""
    g1g2 = unipoly_mul(g.g1, g.g2)
    cases = [
        ("int f", g.f, "positive integer"),
        ("int g1", g.g1, "positive integer"),
        ("int g2", g.g2, "positive integer"),
        ("int g1*g2", g1g2, "positive integer"),
        ("int g1*f", unipoly_mul(g.g1, g.f), "zero"),
        ("int g2*f", unipoly_mul(g.g2, g.f), "zero"),
        ("int g1*g2*f", unipoly_mul(g1g2, g.f), "zero"),
    ]
    checks = []
    for name, poly, expect in cases:
        value = unipoly_integrate01(poly)
        if expect == "zero":
            ok = value == 0
        else:
            ok = value.denominator == 1 and value > 0
        checks.append(GadgetCheck(name, value, expect, ok))
    return GadgetReport(tuple(checks))
