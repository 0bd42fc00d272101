"""Exact rational polynomial arithmetic and unit-cube integration rules.

Scalars are :class:`fractions.Fraction` throughout; a ``Fraction`` is always
stored reduced with a positive denominator, which is exactly the invariant we
need for the zero-versus-positive decisions made downstream.

Two polynomial shapes are provided:

* :class:`UniPoly` - dense coefficients ``c[0] + c[1] x + ...`` for the short
  single-variable pieces (gadgets, parts of a sum factor).
* :class:`MultiPoly` - a sparse ``{Monomial: coefficient}`` map.  A monomial is
  a tuple of ``(var, exponent)`` pairs sorted by variable with every exponent
  positive; ``()`` is the constant monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import PreconditionError

Rat = Fraction
Scalar = Union[int, Fraction]
Monomial = Tuple[Tuple[int, int], ...]

ONE: Monomial = ()


def rat(value: Scalar | str) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings into a Fraction."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact scalars")
    return Fraction(value)


def format_rat(value: Fraction) -> str:
    """Render as ``num/den``, or just ``num`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# Univariate


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [rat(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def of(cls, *coeffs: Scalar) -> "UniPoly":
        """Build from coefficients in increasing degree: ``of(9, -36, 30)``."""
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UniPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if isinstance(other, UniPoly):
            return unipoly_mul(self, other)
        s = rat(other)
        return UniPoly(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def without_constant(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return UniPoly((Fraction(0),) + self.coeffs[1:])

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def to_multi(self, var: int) -> "MultiPoly":
        return MultiPoly.from_terms(
            (((var, i),) if i else ONE, c) for i, c in enumerate(self.coeffs)
        )

    def __str__(self) -> str:
        return self.to_multi(0).__str__()


def unipoly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    """Exact product of two univariate polynomials."""
    if p.is_zero() or q.is_zero():
        return UniPoly()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return UniPoly(tuple(out))


def unipoly_integrate01(p: UniPoly) -> Fraction:
    """Exact value of the integral of ``p`` over ``[0, 1]``."""
    return sum((c / (i + 1) for i, c in enumerate(p.coeffs)), Fraction(0))


# ---------------------------------------------------------------------------
# Monomials


def monomial(exponents: Mapping[int, int] | Iterable[Tuple[int, int]]) -> Monomial:
    """Canonical monomial from a ``{var: exponent}`` mapping or pair list.

    Zero exponents are dropped; repeated variables accumulate.
    """
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for v, e in items:
        if v < 0 or e < 0:
            raise ValueError(f"bad monomial entry ({v}, {e})")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def is_multilinear(m: Monomial) -> bool:
    return all(e == 1 for _, e in m)


# ---------------------------------------------------------------------------
# Multivariate


@dataclass(frozen=True)
class MultiPoly:
    """Sparse multivariate polynomial with exact coefficients.

    Instances are treated as immutable; build them through :meth:`from_terms`,
    :meth:`const` or :meth:`var` so the no-zero-coefficient invariant holds.
    """

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, items: Iterable[Tuple[Monomial, Scalar]]) -> "MultiPoly":
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = rat(c)
            if c:
                acc[m] = acc.get(m, Fraction(0)) + c
        return cls({m: c for m, c in acc.items() if c})

    @classmethod
    def const(cls, value: Scalar) -> "MultiPoly":
        return cls.from_terms([(ONE, value)])

    @classmethod
    def var(cls, v: int, coeff: Scalar = 1) -> "MultiPoly":
        return cls.from_terms([(((v, 1),), coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def variables(self) -> frozenset[int]:
        return frozenset(v for m in self.terms for v, _ in m)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        return MultiPoly.from_terms([*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return multipoly_mul(self, other)
        s = rat(other)
        if s == 0:
            return MultiPoly()
        return MultiPoly({m: c * s for m, c in self.terms.items()})

    __rmul__ = __mul__

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def evaluate(self, point: Mapping[int, Scalar] | Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            for v, e in m:
                c = c * Fraction(point[v]) ** e
            total += c
        return total

    def sorted_terms(self) -> list[Tuple[Monomial, Fraction]]:
        """Terms in canonical order: lexicographic by (var, exponent) pairs."""
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in m)
            if not body:
                parts.append(format_rat(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{format_rat(c)}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def multipoly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact sparse product."""
    if a.is_zero() or b.is_zero():
        return MultiPoly()
    acc: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = mono_mul(ma, mb)
            acc[m] = acc.get(m, Fraction(0)) + ca * cb
    return MultiPoly({m: c for m, c in acc.items() if c})


def _mono_integral(m: Monomial) -> Fraction:
    den = 1
    for _, e in m:
        den *= e + 1
    return Fraction(1, den)


def multipoly_integrate01_all(p: MultiPoly) -> Fraction:
    """Integral over the unit cube in every variable of ``p``.

    Each monomial ``prod x_v**a_v`` contributes ``prod 1/(a_v + 1)``; variables
    that do not occur integrate to a factor of one.
    """
    return sum((c * _mono_integral(m) for m, c in p.terms.items()), Fraction(0))


def integrate_out(p: MultiPoly, variables: Iterable[int]) -> MultiPoly:
    """Integrate ``p`` over ``[0, 1]`` in each of ``variables``, keeping the rest."""
    drop = frozenset(variables)
    if not drop:
        return p
    acc: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        keep = []
        den = 1
        for v, e in m:
            if v in drop:
                den *= e + 1
            else:
                keep.append((v, e))
        key = tuple(keep)
        acc[key] = acc.get(key, Fraction(0)) + c / den
    return MultiPoly({m: c for m, c in acc.items() if c})


def integrate_disjoint_product(f1: MultiPoly, f2: MultiPoly) -> Fraction:
    """Cube integral of ``f1 * f2`` for variable-disjoint factors.

    Uses the separation rule: the integral of the product is the product of the
    integrals when no variable is shared.
    """
    shared = f1.variables() & f2.variables()
    if shared:
        raise PreconditionError(f"factors share variables {sorted(shared)}")
    return multipoly_integrate01_all(f1) * multipoly_integrate01_all(f2)
