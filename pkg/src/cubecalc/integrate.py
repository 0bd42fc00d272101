"""Structured polynomial products and exact unit-cube integration.

Three routes to the same number:

``expand_prodsum`` + ``multipoly_integrate01_all``
    Distribute everything and integrate monomial by monomial.  Exponential in
    the factor count; this is the oracle.
``integrate_prodsum``
    For products of sums of univariate pieces.  Each factor contributes exactly
    one of its pieces (or its constant) to each expanded term, so the integral
    is a sum over assignments factor -> variable.  Variables are swept one at a
    time while a DP tracks which still-open factors were already assigned.
``integrate_cwide``
    For products of general sparse factors where every variable lives inside a
    window of ``c`` consecutive factors.  Split around a middle window,
    integrate away the variables private to each side recursively and combine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterable, Mapping, Sequence, Tuple

from . import limits
from .errors import PreconditionError, ResourceLimitError
from .poly import (
    MultiPoly,
    Scalar,
    UniPoly,
    integrate_out,
    multipoly_integrate01_all,
    multipoly_mul,
    rat,
    unipoly_integrate01,
    unipoly_mul,
)


@dataclass(frozen=True)
class SumFactor:
    """``constant + sum_v parts[v](x_v)`` with every part free of a constant term."""

    parts: Mapping[int, UniPoly] = field(default_factory=dict)
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", rat(self.constant))
        for v, q in self.parts.items():
            if q.is_zero() or q.constant != 0:
                raise PreconditionError(
                    f"part for x{v} must be nonzero with zero constant term; use SumFactor.build"
                )

    @classmethod
    def build(
        cls, pieces: Iterable[Tuple[int, UniPoly]], constant: Scalar = 0
    ) -> "SumFactor":
        """Sum univariate pieces (repeats allowed) and fold constant terms."""
        const = rat(constant)
        acc: dict[int, UniPoly] = {}
        for v, q in pieces:
            const += q.constant
            acc[v] = acc.get(v, UniPoly()) + q.without_constant()
        return cls({v: q for v, q in sorted(acc.items()) if not q.is_zero()}, const)

    def scaled(self, s: Scalar) -> "SumFactor":
        s = rat(s)
        if s == 0:
            return SumFactor({}, Fraction(0))
        return SumFactor({v: q * s for v, q in self.parts.items()}, self.constant * s)

    def variables(self) -> frozenset[int]:
        return frozenset(self.parts)

    @property
    def degree(self) -> int:
        return max((q.degree for q in self.parts.values()), default=0)

    def to_multi(self) -> MultiPoly:
        out = MultiPoly.const(self.constant)
        for v, q in self.parts.items():
            out = out + q.to_multi(v)
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        return self.constant + sum((q(point[v]) for v, q in self.parts.items()), Fraction(0))


@dataclass(frozen=True)
class ProdSumUni:
    """Product of :class:`SumFactor`; each part has degree at most ``degree_bound``."""

    factors: Tuple[SumFactor, ...]
    degree_bound: int
    num_vars: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.degree_bound < 1:
            raise PreconditionError("degree_bound must be positive")
        for i, f in enumerate(self.factors):
            if f.degree > self.degree_bound:
                raise PreconditionError(
                    f"factor {i} has degree {f.degree} > bound {self.degree_bound}"
                )
        used = max((v + 1 for f in self.factors for v in f.parts), default=0)
        if self.num_vars is None:
            object.__setattr__(self, "num_vars", used)
        elif self.num_vars < used:
            raise PreconditionError(f"num_vars={self.num_vars} but x{used - 1} occurs")

    def to_prodmulti(self) -> "ProdMulti":
        return ProdMulti(
            tuple(f.to_multi() for f in self.factors), self.degree_bound, self.num_vars
        )


@dataclass(frozen=True)
class ProdMulti:
    """Product of sparse multivariate factors of total degree <= ``degree_bound``."""

    factors: Tuple[MultiPoly, ...]
    degree_bound: int
    num_vars: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.degree_bound < 0:
            raise PreconditionError("degree_bound must be nonnegative")
        for i, f in enumerate(self.factors):
            if f.degree > self.degree_bound:
                raise PreconditionError(
                    f"factor {i} has degree {f.degree} > bound {self.degree_bound}"
                )
        used = max((v + 1 for f in self.factors for v in f.variables()), default=0)
        if self.num_vars is None:
            object.__setattr__(self, "num_vars", used)
        elif self.num_vars < used:
            raise PreconditionError(f"num_vars={self.num_vars} but x{used - 1} occurs")


def _checked_mul(a: MultiPoly, b: MultiPoly, cap: int) -> MultiPoly:
    out = multipoly_mul(a, b)
    if len(out) > cap:
        raise ResourceLimitError(f"expansion exceeded {cap} terms (CUBECALC_TERM_LIMIT)")
    return out


def expand_product(factors: Iterable[MultiPoly], max_terms: int | None = None) -> MultiPoly:
    """Fully distribute a product of sparse factors."""
    cap = limits.term_limit(max_terms)
    out = MultiPoly.const(1)
    for f in factors:
        out = _checked_mul(out, f, cap)
        if out.is_zero():
            break
    return out


def expand_prodsum(p: ProdSumUni, max_terms: int | None = None) -> MultiPoly:
    """Sum-of-products expansion of ``p`` as a :class:`MultiPoly`."""
    return expand_product((f.to_multi() for f in p.factors), max_terms)


# ---------------------------------------------------------------------------
# subset DP


def _sweep_order(supports: Sequence[frozenset[int]], variables: Iterable[int]) -> list[int]:
    """Greedy variable order keeping the set of half-processed factors small."""
    remaining = set(variables)
    touching: dict[int, list[int]] = {v: [] for v in remaining}
    for i, s in enumerate(supports):
        for v in s:
            touching[v].append(i)
    left = [len(s) for s in supports]
    opened = [False] * len(supports)
    order = []
    while remaining:
        best = None
        for v in sorted(remaining):
            delta = 0
            for i in touching[v]:
                if not opened[i]:
                    delta += 1
                if left[i] == 1:
                    delta -= 1
            key = (delta, v)
            if best is None or key < best:
                best = key
        v = best[1]
        remaining.discard(v)
        order.append(v)
        for i in touching[v]:
            opened[i] = True
            left[i] -= 1
    return order


def integrate_prodsum(p: ProdSumUni, max_open: int | None = None) -> Fraction:
    """Exact cube integral of a product of univariate sums via subset DP.

    Expanding the product picks, per factor, either its constant or the part
    belonging to one variable.  Grouping the picks by variable, the integral of
    a pick pattern separates into per-variable unit-interval integrals.  The DP
    sweeps variables; its state is the set of factors that have been assigned
    to an earlier variable and still have unswept variables.  When a factor's
    last variable is swept and it was never assigned, it contributes its
    constant.

    ``max_open`` caps the number of simultaneously open factors (state width);
    it defaults to ``CUBECALC_DP_LIMIT``.
    """
    cap = limits.dp_limit(max_open)
    total = Fraction(1)
    live: list[SumFactor] = []
    for f in p.factors:
        if f.parts:
            live.append(f)
        else:
            total *= f.constant
    if total == 0:
        return Fraction(0)
    if not live:
        return total

    supports = [f.variables() for f in live]
    touching: dict[int, list[int]] = {}
    for i, s in enumerate(supports):
        for v in s:
            touching.setdefault(v, []).append(i)
    order = _sweep_order(supports, touching)

    position = {v: t for t, v in enumerate(order)}
    closes_at: dict[int, list[int]] = {}
    for i, s in enumerate(supports):
        closes_at.setdefault(max(s, key=position.__getitem__), []).append(i)

    opened: set[int] = set()
    widest = 0
    for v in order:
        opened.update(touching[v])
        widest = max(widest, len(opened))
        opened.difference_update(closes_at.get(v, ()))
    if widest > cap:
        raise ResourceLimitError(
            f"subset DP needs {widest} open factors, limit is {cap} (CUBECALC_DP_LIMIT)"
        )

    states: dict[int, Fraction] = {0: Fraction(1)}
    for v in order:
        fs = touching[v]
        weights: dict[int, Fraction] = {}
        for r in range(len(fs) + 1):
            for combo in itertools.combinations(fs, r):
                prod = UniPoly.of(1)
                mask = 0
                for i in combo:
                    prod = unipoly_mul(prod, live[i].parts[v])
                    mask |= 1 << i
                w = unipoly_integrate01(prod)
                if w:
                    weights[mask] = w
        fmask = sum(1 << i for i in fs)

        nxt: dict[int, Fraction] = {}
        for state, val in states.items():
            free = fmask & ~state
            for tmask, w in weights.items():
                if tmask & ~free:
                    continue
                key = state | tmask
                nxt[key] = nxt.get(key, Fraction(0)) + val * w

        for i in closes_at.get(v, ()):
            bit = 1 << i
            c = live[i].constant
            closed: dict[int, Fraction] = {}
            for state, val in nxt.items():
                if state & bit:
                    key, val2 = state & ~bit, val
                else:
                    if c == 0:
                        continue
                    key, val2 = state, val * c
                closed[key] = closed.get(key, Fraction(0)) + val2
            nxt = closed
        states = {k: x for k, x in nxt.items() if x}
        if not states:
            return Fraction(0)

    return total * states.get(0, Fraction(0))


# ---------------------------------------------------------------------------
# bounded width


def width_of(p: ProdMulti) -> int:
    """Smallest ``c`` for which ``p`` is c-wide (1 if no variable occurs)."""
    if not p.factors:
        raise PreconditionError("width_of needs at least one factor")
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, f in enumerate(p.factors):
        for v in f.variables():
            first.setdefault(v, i)
            last[v] = i
    return max((last[v] - first[v] + 1 for v in first), default=1)


def integrate_cwide(p: ProdMulti, c: int, max_terms: int | None = None) -> Fraction:
    """Exact cube integral of a c-wide product by divide and conquer.

    ``solve(lo, hi)`` returns the integral of ``f[lo] ... f[hi-1]`` over the
    variables that occur only inside that range, as a polynomial in the
    remaining (boundary) variables.  Ranges of at most ``2c`` factors are
    expanded directly.  Longer ranges are split as left | window of ``c`` |
    right; both sides recurse and the three pieces are multiplied before the
    range-private variables are integrated away.
    """
    if c < 1:
        raise PreconditionError("c must be a positive integer")
    if not p.factors:
        return Fraction(1)
    w = width_of(p)
    if w > c:
        raise PreconditionError(f"product is {w}-wide, not {c}-wide")
    cap = limits.term_limit(max_terms)
    factors = p.factors
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    for i, f in enumerate(factors):
        for v in f.variables():
            first.setdefault(v, i)
            last[v] = i

    def private(poly: MultiPoly, lo: int, hi: int) -> list[int]:
        return [v for v in poly.variables() if first[v] >= lo and last[v] < hi]

    def solve(lo: int, hi: int) -> MultiPoly:
        if hi - lo <= 2 * c:
            prod = MultiPoly.const(1)
            for f in factors[lo:hi]:
                prod = _checked_mul(prod, f, cap)
            return integrate_out(prod, private(prod, lo, hi))
        mid = lo + ceil((hi - lo - c) / 2)
        left = solve(lo, mid)
        right = solve(mid + c, hi)
        prod = left
        for f in factors[mid:mid + c]:
            prod = _checked_mul(prod, f, cap)
        prod = _checked_mul(prod, right, cap)
        return integrate_out(prod, private(prod, lo, hi))

    result = solve(0, len(factors))
    assert result.degree <= 0
    return multipoly_integrate01_all(result)

