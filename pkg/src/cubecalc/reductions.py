"""Formula-level transformations: occurrence-bounded reduction, validation and
simplification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cnf import CnfFormula, Literal
from .errors import PreconditionError


@dataclass(frozen=True)
class InstanceCheck:
    """Result of :func:`is_33sat_instance`; truthy when the formula conforms."""

    ok: bool
    problems: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def is_33sat_instance(F: CnfFormula) -> InstanceCheck:
    """Clause width <= 3 and, per variable, <= 3 occurrences, <= 1 negated, <= 2 positive.

    The positive cap is stricter than bare occurrence counting allows; the
    compilers only have gadgets for a first and second positive occurrence.
    """
    problems = []
    for i, c in enumerate(F.clauses):
        if len(c) > 3:
            problems.append(f"clause {i} has {len(c)} literals")
    pos, neg = F.occurrences()
    for v in range(F.num_vars):
        if pos[v] + neg[v] > 3:
            problems.append(f"x{v} occurs {pos[v] + neg[v]} times")
        if neg[v] > 1:
            problems.append(f"x{v} occurs negated {neg[v]} times")
        if pos[v] > 2:
            problems.append(f"x{v} occurs positively {pos[v]} times")
    return InstanceCheck(not problems, tuple(problems))


def reduce_3sat_to_33sat(F: CnfFormula) -> CnfFormula:
    """Equisatisfiable rewrite in which every variable occurs at most three times.

    Occurrence ``j`` of ``x_i`` becomes a fresh ``y_ij``; the cycle of
    implications ``x_i -> y_i1 -> ... -> y_im -> x_i`` forces all copies to
    agree.  Each copy then occurs three times (its own literal plus once on
    each side of the cycle).  Variables left with two negated occurrences are
    complemented everywhere, leaving one negated and two positive.
    """
    if F.max_width > 3:
        raise PreconditionError(f"clause width {F.max_width} > 3")
    next_var = F.num_vars
    copies: dict[int, list[int]] = {}
    rewritten = []
    for c in F.clauses:
        new_c = []
        for lit in c:
            y = next_var
            next_var += 1
            copies.setdefault(lit.var, []).append(y)
            new_c.append(Literal(y, lit.negated))
        rewritten.append(tuple(new_c))

    chains = []
    for x in sorted(copies):
        ring = [x, *copies[x], x]
        for a, b in zip(ring, ring[1:]):
            chains.append((Literal(a, True), Literal(b, False)))

    clauses = rewritten + chains
    _, neg = CnfFormula(next_var, tuple(clauses)).occurrences()
    flip = {v for v in range(next_var) if neg[v] >= 2}
    if flip:
        clauses = [
            tuple(Literal(l.var, not l.negated) if l.var in flip else l for l in c)
            for c in clauses
        ]
    return CnfFormula(next_var, tuple(clauses))


@dataclass(frozen=True)
class PreprocessResult:
    """Simplified formula plus verdict: True/False if decided, None otherwise."""

    formula: CnfFormula
    status: Optional[bool]
    assignment: dict[int, bool] = field(default_factory=dict)

    @property
    def decided(self) -> bool:
        return self.status is not None


def preprocess(F: CnfFormula) -> PreprocessResult:
    """Unit propagation and pure-literal elimination to a fixpoint.

    An undecided result has no unit clauses and every remaining variable
    occurs both positively and negatively.
    """
    clauses = [tuple(c) for c in F.clauses]
    assigned: dict[int, bool] = {}
    while True:
        if not clauses:
            return PreprocessResult(CnfFormula(F.num_vars, ()), True, assigned)
        unit = next((c[0] for c in clauses if len(set(c)) == 1), None)
        if unit is not None:
            lit = unit
        else:
            pos, neg = set(), set()
            for c in clauses:
                for l in c:
                    (neg if l.negated else pos).add(l.var)
            pure = sorted((pos - neg) | (neg - pos))
            if not pure:
                return PreprocessResult(CnfFormula(F.num_vars, tuple(clauses)), None, assigned)
            v = pure[0]
            lit = Literal(v, v in neg)
        assigned[lit.var] = not lit.negated
        out = []
        for c in clauses:
            if lit in c:
                continue
            reduced = tuple(l for l in c if l.var != lit.var)
            if not reduced:
                return PreprocessResult(CnfFormula(F.num_vars, tuple(clauses)), False, assigned)
            out.append(reduced)
        clauses = out


def compact(F: CnfFormula) -> CnfFormula:
    """Renumber the variables that occur to ``0..k-1`` in first-seen order."""
    index: dict[int, int] = {}
    for c in F.clauses:
        for l in c:
            index.setdefault(l.var, len(index))
    return CnfFormula(
        len(index),
        tuple(tuple(Literal(index[l.var], l.negated) for l in c) for c in F.clauses),
    )
