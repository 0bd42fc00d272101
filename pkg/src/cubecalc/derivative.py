"""Mixed derivative at the origin via multilinear coefficient extraction.

For a polynomial ``P`` in ``x_1..x_n``, ``d^n P / dx_1...dx_n`` at the origin is
the coefficient of ``x_1 x_2 ... x_n`` in the expanded product.  A term that has
picked up some exponent >= 2 can never grow back into that monomial, so the
product is multiplied out left to right while such terms are thrown away.

With every surviving term multilinear, a term is just a set of variables and
is stored as an int bitmask.  Two further cuts keep desk-scale reduction
instances tractable and never change the result:

* a variable absent from the term and from every remaining factor can no
  longer be supplied, so the term is dead; likewise when the remaining factors
  do not have enough degree left to fill the missing variables;
* variables that are interchangeable in every remaining factor (swapping them
  maps each factor onto itself) give the same completion count, so terms that
  differ only by which members of such a class they used are merged.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import limits
from .errors import PreconditionError, ResourceLimitError
from .integrate import ProdMulti, expand_product
from .poly import is_multilinear, mono_degree, monomial


def _check_vars(p: ProdMulti, vars: Sequence[int]) -> list[int]:
    vs = list(vars)
    if len(set(vs)) != len(vs):
        dup = sorted({v for v in vs if vs.count(v) > 1})
        raise PreconditionError(f"duplicate variables {dup}")
    declared = set(range(p.num_vars))
    missing = declared - set(vs)
    extra = set(vs) - declared
    if missing or extra:
        raise PreconditionError(
            f"vars must list each declared variable once; missing {sorted(missing)}, "
            f"undeclared {sorted(extra)}"
        )
    return vs


def _masked_factors(p: ProdMulti, bit: dict[int, int]) -> list[list[tuple[int, Fraction]]]:
    out = []
    for f in p.factors:
        terms = []
        for m, c in f.terms.items():
            if is_multilinear(m):
                mask = 0
                for v, _ in m:
                    mask |= bit[v]
                terms.append((mask, c))
        out.append(terms)
    return out


def _suffix_classes(factors: list[list[tuple[int, Fraction]]], n: int):
    """For each cut point, the interchangeable-variable classes of the suffix.

    ``result[i]`` describes factors ``i..end``: a list of
    ``(class_mask, prefix_masks)`` for classes of size >= 2.  Two variables get
    the same class id when, factor by factor, the terms containing them have
    equal (coefficient, rest-of-monomial) multisets; equal signatures rule out
    a term containing both, so the swap is a symmetry of every factor.
    """
    k = len(factors)
    ids = [0] * n
    result = [None] * (k + 1)
    result[k] = []
    for j in range(k - 1, -1, -1):
        entries: dict[int, list] = {}
        for mask, c in factors[j]:
            m = mask
            while m:
                low = m & -m
                b = low.bit_length() - 1
                entries.setdefault(b, []).append((c, mask & ~low))
                m ^= low
        intern: dict[tuple, int] = {}
        new_ids = [0] * n
        for b in range(n):
            e = entries.get(b)
            key = (tuple(sorted(e)) if e else None, ids[b])
            new_ids[b] = intern.setdefault(key, len(intern))
        ids = new_ids
        groups: dict[int, list[int]] = {}
        for b in range(n):
            groups.setdefault(ids[b], []).append(b)
        classes = []
        for members in groups.values():
            if len(members) < 2:
                continue
            prefix = [0]
            for b in members:
                prefix.append(prefix[-1] | (1 << b))
            classes.append((prefix[-1], prefix))
        result[j] = classes
    return result


def multilinear_coefficient(
    p: ProdMulti, vars: Sequence[int], max_states: int | None = None
) -> Fraction:
    """Coefficient of the product of all ``vars`` in the expansion of ``p``.

    Equals the mixed partial derivative in every variable, at the origin.
    ``max_states`` caps the number of live partial terms (default
    ``CUBECALC_TERM_LIMIT``).
    """
    vs = _check_vars(p, vars)
    cap = limits.term_limit(max_states)
    n = len(vs)
    bit = {v: 1 << i for i, v in enumerate(vs)}
    full = (1 << n) - 1
    factors = _masked_factors(p, bit)
    k = len(factors)
    if k == 0:
        return Fraction(1) if n == 0 else Fraction(0)

    support = [0] * (k + 1)
    room = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        fmask = 0
        deg = 0
        for mask, _ in factors[j]:
            fmask |= mask
            deg = max(deg, mask.bit_count())
        support[j] = support[j + 1] | fmask
        room[j] = room[j + 1] + deg
    if support[0] != full or room[0] < n:
        return Fraction(0)
    classes = _suffix_classes(factors, n)

    states: dict[int, Fraction] = {0: Fraction(1)}
    for i, terms in enumerate(factors):
        done = full & ~support[i + 1]
        need = n - room[i + 1]
        cls = classes[i + 1]
        nxt: dict[int, Fraction] = {}
        for state, val in states.items():
            for mask, c in terms:
                if mask & state:
                    continue
                key = state | mask
                if key & done != done or key.bit_count() < need:
                    continue
                for cmask, prefix in cls:
                    used = key & cmask
                    if used:
                        key = (key & ~cmask) | prefix[used.bit_count()]
                nxt[key] = nxt.get(key, Fraction(0)) + val * c
        states = {s: x for s, x in nxt.items() if x}
        if len(states) > cap:
            raise ResourceLimitError(f"{len(states)} partial terms exceed limit {cap}")
        if not states:
            return Fraction(0)
    return states.get(full, Fraction(0))


def derivative_at_origin_oracle(
    p: ProdMulti, vars: Sequence[int], max_terms: int | None = None
) -> Fraction:
    """Same quantity as :func:`multilinear_coefficient`, by unpruned expansion."""
    vs = _check_vars(p, vars)
    expanded = expand_product(p.factors, max_terms)
    return expanded.coefficient(monomial((v, 1) for v in vs))


def has_multilinear_term(p: ProdMulti, max_states: int | None = None) -> bool:
    """Whether any multilinear monomial (the constant included) survives expansion."""
    cap = limits.term_limit(max_states)
    states: dict[tuple, Fraction] = {(): Fraction(1)}
    for f in p.factors:
        nxt: dict[tuple, Fraction] = {}
        for m, c in states.items():
            used = {v for v, _ in m}
            for fm, fc in f.terms.items():
                if not is_multilinear(fm) or any(v in used for v, _ in fm):
                    continue
                key = monomial([*m, *fm])
                nxt[key] = nxt.get(key, Fraction(0)) + c * fc
        states = {m: c for m, c in nxt.items() if c}
        if len(states) > cap:
            raise ResourceLimitError(f"{len(states)} partial terms exceed limit {cap}")
        if not states:
            return False
    return bool(states)


def total_degree(p: ProdMulti) -> int:
    """Sum of the factor degrees (upper bound on the product's degree)."""
    return sum(max((mono_degree(m) for m in f.terms), default=0) for f in p.factors)

