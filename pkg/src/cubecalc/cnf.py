"""CNF formulas, occurrence bookkeeping and the truth-table oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

import numpy as np

from . import limits
from .errors import PreconditionError, ResourceLimitError


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    negated: bool = False

    @classmethod
    def from_dimacs(cls, lit: int) -> "Literal":
        if lit == 0:
            raise ValueError("0 is not a literal")
        return cls(abs(lit) - 1, lit < 0)

    def to_dimacs(self) -> int:
        return -(self.var + 1) if self.negated else self.var + 1

    def __neg__(self) -> "Literal":
        return Literal(self.var, not self.negated)

    def __str__(self) -> str:
        return f"~x{self.var}" if self.negated else f"x{self.var}"


Clause = Tuple[Literal, ...]


@dataclass(frozen=True)
class CnfFormula:
    """Conjunction of clauses over variables ``0 .. num_vars-1``."""

    num_vars: int
    clauses: Tuple[Clause, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise PreconditionError("num_vars must be nonnegative")
        for i, c in enumerate(self.clauses):
            if not c:
                raise PreconditionError(f"clause {i} is empty")
            for lit in c:
                if not 0 <= lit.var < self.num_vars:
                    raise PreconditionError(
                        f"clause {i}: variable x{lit.var} outside 0..{self.num_vars - 1}"
                    )

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Sequence[int]]) -> "CnfFormula":
        """Build from DIMACS-style signed 1-based integers."""
        return cls(num_vars, tuple(tuple(Literal.from_dimacs(x) for x in c) for c in clauses))

    def to_ints(self) -> list[list[int]]:
        return [[lit.to_dimacs() for lit in c] for c in self.clauses]

    @property
    def max_width(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    def occurrences(self) -> tuple[list[int], list[int]]:
        """Per-variable (positive, negative) occurrence counts."""
        pos = [0] * self.num_vars
        neg = [0] * self.num_vars
        for c in self.clauses:
            for lit in c:
                if lit.negated:
                    neg[lit.var] += 1
                else:
                    pos[lit.var] += 1
        return pos, neg

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[l.var] != l.negated for l in c) for c in self.clauses)

    def __str__(self) -> str:
        if not self.clauses:
            return "TRUE"
        return "".join("(" + " + ".join(map(str, c)) + ")" for c in self.clauses)


_LOW_PATTERNS = [
    np.uint64(0xAAAAAAAAAAAAAAAA),
    np.uint64(0xCCCCCCCCCCCCCCCC),
    np.uint64(0xF0F0F0F0F0F0F0F0),
    np.uint64(0xFF00FF00FF00FF00),
    np.uint64(0xFFFF0000FFFF0000),
    np.uint64(0xFFFFFFFF00000000),
]
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


def truth_table_sat(F: CnfFormula, max_vars: int | None = None) -> bool:
    """Exhaustive satisfiability check over all ``2**num_vars`` assignments.

    Assignments are packed 64 per machine word: variable ``i < 6`` follows a
    fixed bit pattern inside each word, higher variables select words.
    """
    cap = limits.truth_table_limit(max_vars)
    n = F.num_vars
    if n > cap:
        raise ResourceLimitError(f"truth table over {n} variables exceeds limit {cap}")
    if not F.clauses:
        return True
    n_words = 1 << max(n - 6, 0)
    word_idx = np.arange(n_words, dtype=np.uint64)
    columns = []
    for v in range(n):
        if v < 6:
            columns.append(np.full(n_words, _LOW_PATTERNS[v], dtype=np.uint64))
        else:
            on = (word_idx >> np.uint64(v - 6)) & np.uint64(1)
            columns.append(np.where(on == 1, _ALL, np.uint64(0)).astype(np.uint64))
    acc = np.full(n_words, _ALL, dtype=np.uint64)
    if n < 6:
        acc &= np.uint64((1 << (1 << n)) - 1)
    for c in F.clauses:
        clause = np.zeros(n_words, dtype=np.uint64)
        for lit in c:
            col = columns[lit.var]
            clause |= ~col if lit.negated else col
        acc &= clause
        if not acc.any():
            return False
    return bool(acc.any())
