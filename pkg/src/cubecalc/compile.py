"""Formula-to-polynomial compilers and the satisfiability deciders built on them.

Both compilers walk the literal occurrences in clause order, then literal
order, and map each occurrence of ``x_i`` by its rank:

==================  ======================  ==========================
occurrence          integration instance    derivative instance
==================  ======================  ==========================
first positive      ``g1(y_i)``             ``z_i1 * u_i1``
second positive     ``g2(y_i)``             ``z_i2 * u_i2``
the negative one    ``f(y_i)``              ``z_i1 * z_i2``
==================  ======================  ==========================

A constant ``3 * scale**2`` is multiplied into the first factor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from .cnf import CnfFormula, Literal
from .derivative import multilinear_coefficient
from .errors import PreconditionError
from .gadgets import GadgetSet, default_gadgets
from .integrate import ProdMulti, ProdSumUni, SumFactor, integrate_prodsum
from .poly import MultiPoly, monomial
from .reductions import compact, is_33sat_instance, preprocess, reduce_3sat_to_33sat

FIRST, SECOND, NEGATIVE = "first", "second", "negative"


def _require_33(F: CnfFormula) -> None:
    check = is_33sat_instance(F)
    if not check:
        raise PreconditionError("not a (3,3)-SAT instance: " + "; ".join(check.problems))


def _ranked(F: CnfFormula) -> Iterator[list[tuple[Literal, str]]]:
    seen_pos = [0] * F.num_vars
    for c in F.clauses:
        ranked = []
        for lit in c:
            if lit.negated:
                ranked.append((lit, NEGATIVE))
            else:
                seen_pos[lit.var] += 1
                ranked.append((lit, FIRST if seen_pos[lit.var] == 1 else SECOND))
        yield ranked


def _multiplier(scale: int) -> int:
    if not isinstance(scale, int) or scale < 1:
        raise PreconditionError(f"scale must be a positive integer, got {scale!r}")
    return 3 * scale * scale


def compile_integration_instance(
    F: CnfFormula, g: GadgetSet | None = None, scale: int = 1
) -> ProdSumUni:
    """One sum factor per clause with gadgets substituted for literals.

    The cube integral is zero exactly when ``F`` is unsatisfiable and otherwise
    a positive multiple of ``3 * scale**2``.
    """
    _require_33(F)
    mult = _multiplier(scale)
    g = g or default_gadgets()
    gadget = {FIRST: g.g1, SECOND: g.g2, NEGATIVE: g.f}
    factors = [
        SumFactor.build((lit.var, gadget[rank]) for lit, rank in clause)
        for clause in _ranked(F)
    ]
    if factors:
        factors[0] = factors[0].scaled(mult)
    else:
        factors = [SumFactor({}, mult)]
    bound = max(g.g1.degree, g.g2.degree, g.f.degree, 1)
    return ProdSumUni(tuple(factors), bound, F.num_vars)


def derivative_var_ids(num_bool_vars: int) -> dict[str, Callable[[int], int]]:
    """Variable numbering used by :func:`compile_derivative_instance`.

    ``z_i1, z_i2, u_i1, u_i2`` are ``4i .. 4i+3``; padding ``v_j`` follow at ``4d + j``.
    """
    d = num_bool_vars
    return {
        "z1": lambda i: 4 * i,
        "z2": lambda i: 4 * i + 1,
        "u1": lambda i: 4 * i + 2,
        "u2": lambda i: 4 * i + 3,
        "v": lambda j: 4 * d + j,
    }


def compile_derivative_instance(F: CnfFormula, scale: int = 1) -> tuple[ProdMulti, list[int]]:
    """Degree-2 product whose all-variable multilinear coefficient decides ``F``.

    Clause factors are sums of the literal monomials above.  With ``m = 4d``
    clause-side variables and ``2k`` their total degree, ``m - 2k`` padding
    factors ``v_j * (sum of all clause-side variables)`` make the product
    homogeneous of degree equal to its variable count, so the coefficient of
    the product of all variables is ``3 scale^2 * (#consistent literal
    selections) * (m - 2k)!``.
    """
    _require_33(F)
    mult = _multiplier(scale)
    d = F.num_vars
    ids = derivative_var_ids(d)
    literal_mono = {
        FIRST: lambda i: monomial([(ids["z1"](i), 1), (ids["u1"](i), 1)]),
        SECOND: lambda i: monomial([(ids["z2"](i), 1), (ids["u2"](i), 1)]),
        NEGATIVE: lambda i: monomial([(ids["z1"](i), 1), (ids["z2"](i), 1)]),
    }
    factors = [
        MultiPoly.from_terms((literal_mono[rank](lit.var), 1) for lit, rank in clause)
        for clause in _ranked(F)
    ]
    m = 4 * d
    d1 = 2 * len(factors)
    pad = m - d1
    if pad < 0:
        raise PreconditionError(
            f"{len(factors)} clauses over {d} variables leave no room for padding (m - d1 = {pad})"
        )
    for j in range(pad):
        v = ids["v"](j)
        factors.append(MultiPoly.from_terms((monomial([(x, 1), (v, 1)]), 1) for x in range(m)))
    if factors:
        factors[0] = factors[0] * mult
    else:
        factors = [MultiPoly.const(mult)]
    n = m + pad
    return ProdMulti(tuple(factors), 2, n), list(range(n))


def _prepare(F: CnfFormula) -> CnfFormula | bool:
    if F.max_width > 3:
        raise PreconditionError(f"clause width {F.max_width} > 3")
    res = preprocess(F)
    if res.decided:
        return res.status
    G = compact(res.formula)
    if not is_33sat_instance(G):
        res = preprocess(reduce_3sat_to_33sat(G))
        if res.decided:
            return res.status
        G = compact(res.formula)
    return G


def decide_sat_via_integration(F: CnfFormula) -> bool:
    """Satisfiable iff the compiled product has a positive cube integral."""
    G = _prepare(F)
    if isinstance(G, bool):
        return G
    return integrate_prodsum(compile_integration_instance(G, default_gadgets(), 1)) > 0


def decide_sat_via_derivative(F: CnfFormula) -> bool:
    """Satisfiable iff the compiled product has a positive mixed derivative at 0."""
    G = _prepare(F)
    if isinstance(G, bool):
        return G
    p, vs = compile_derivative_instance(G, 1)
    return multilinear_coefficient(p, vs) > Fraction(0)
