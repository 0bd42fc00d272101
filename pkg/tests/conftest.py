from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from cubecalc.cnf import CnfFormula
from cubecalc.gadgets import default_gadgets
from cubecalc.integrate import ProdMulti, ProdSumUni, SumFactor
from cubecalc.poly import MultiPoly, UniPoly, monomial

# Example formulas from the worked reductions, DIMACS-style literals.
EXAMPLE1 = CnfFormula.from_ints(2, [[1, 2], [1, -2], [-1, 2]])
EXAMPLE2 = CnfFormula.from_ints(2, [[1, 2], [-1], [-2]])


def x(i: int) -> MultiPoly:
    return MultiPoly.var(i)


def sum_factor(*pieces) -> SumFactor:
    return SumFactor.build(pieces)


@pytest.fixture
def gadgets():
    return default_gadgets()


@pytest.fixture
def example1_poly(gadgets):
    g1, g2, f = gadgets.g1, gadgets.g2, gadgets.f
    return ProdSumUni(
        (
            sum_factor((0, g1), (1, g1)),
            sum_factor((0, g2), (1, f)),
            sum_factor((0, f), (1, g2)),
        ),
        2,
    )


@pytest.fixture
def example2_poly(gadgets):
    g1, f = gadgets.g1, gadgets.f
    return ProdSumUni((sum_factor((0, g1), (1, g1)), sum_factor((0, f)), sum_factor((1, f))), 2)


# ---------------------------------------------------------------------------
# random generators shared by property tests and the acceptance suite


def random_unipoly(rng: random.Random, max_deg: int, bound: int = 50) -> UniPoly:
    return UniPoly(tuple(rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)))


def random_prodsum(rng: random.Random, max_k=6, max_d=6, max_deg=2, bound=50) -> ProdSumUni:
    d = rng.randint(1, max_d)
    factors = []
    for _ in range(rng.randint(0, max_k)):
        vs = rng.sample(range(d), rng.randint(1, d))
        pieces = [(v, random_unipoly(rng, max_deg, bound)) for v in vs]
        factors.append(SumFactor.build(pieces, rng.randint(-bound, bound)))
    return ProdSumUni(tuple(factors), max_deg, d)


def random_prodmulti(rng: random.Random, max_k=6, max_n=6, max_deg=2, max_terms=4, bound=5) -> ProdMulti:
    n = rng.randint(1, max_n)
    factors = []
    for _ in range(rng.randint(1, max_k)):
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(0, max_deg)
            terms.append((monomial([(rng.randrange(n), 1) for _ in range(deg)]), rng.randint(-bound, bound)))
        factors.append(MultiPoly.from_terms(terms))
    return ProdMulti(tuple(factors), max_deg, n)


def random_cwide(rng: random.Random, c: int, m: int, max_terms=3, bound=5) -> ProdMulti:
    """Each variable gets a random window of c consecutive factors to live in."""
    n = rng.randint(1, m + 2)
    home = {v: rng.randrange(m) for v in range(n)}
    factors = []
    for i in range(m):
        local = [v for v in range(n) if home[v] <= i < home[v] + c] or [None]
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            deg = rng.randint(0, 2)
            pairs = [(v, 1) for v in rng.choices(local, k=deg) if v is not None]
            terms.append((monomial(pairs), rng.randint(-bound, bound)))
        f = MultiPoly.from_terms(terms)
        factors.append(f if not f.is_zero() else MultiPoly.const(1))
    return ProdMulti(tuple(factors), 2, n)


def random_cnf(rng: random.Random, max_vars=4, max_clauses=6, max_width=3) -> CnfFormula:
    n = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        w = rng.randint(1, min(max_width, n))
        clauses.append([(v + 1) * rng.choice((1, -1)) for v in rng.sample(range(n), w)])
    return CnfFormula.from_ints(n, clauses)


# ---------------------------------------------------------------------------
# hypothesis strategies

small_rat = st.fractions(min_value=-20, max_value=20, max_denominator=7)
unipolys = st.lists(st.integers(-50, 50), max_size=4).map(lambda cs: UniPoly(tuple(cs)))


@st.composite
def multipolys(draw, variables=range(4), max_terms=4, max_exp=3):
    vs = list(variables)
    terms = draw(st.lists(
        st.tuples(
            st.dictionaries(st.sampled_from(vs), st.integers(1, max_exp), max_size=3),
            st.integers(-9, 9),
        ),
        max_size=max_terms,
    ))
    return MultiPoly.from_terms((monomial(m), c) for m, c in terms)


@st.composite
def cnfs(draw, max_vars=4, max_clauses=6):
    n = draw(st.integers(1, max_vars))
    lit = st.builds(lambda v, s: v * s, st.integers(1, n), st.sampled_from((1, -1)))
    clauses = draw(st.lists(st.lists(lit, min_size=1, max_size=3), max_size=max_clauses))
    return CnfFormula.from_ints(n, clauses)


def brute_force_sat(F: CnfFormula) -> bool:
    """Independent of the packed truth table: plain itertools enumeration."""
    from itertools import product

    return any(F.satisfied_by(bits) for bits in product((False, True), repeat=F.num_vars))


def consistent_selections(F: CnfFormula) -> list[tuple]:
    """All ways to pick one literal occurrence per clause without a clash."""
    from itertools import product

    out = []
    for pick in product(*[range(len(c)) for c in F.clauses]):
        chosen = [F.clauses[i][j] for i, j in enumerate(pick)]
        pos = {l.var for l in chosen if not l.negated}
        neg = {l.var for l in chosen if l.negated}
        if not pos & neg:
            out.append(pick)
    return out



def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
