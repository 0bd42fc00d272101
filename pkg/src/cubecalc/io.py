"""DIMACS CNF and polynomial document (de)serialization.

A polynomial document is a version line followed by a JSON body::

    cubecalc-poly v1
    {
      "kind": "prodsum",
      "num_vars": 2,
      "degree_bound": 2,
      "factors": [
        {"constant": "18", "parts": {"0": ["0", "-36", "30"], "1": ["0", "-36", "30"]}},
        ...
      ]
    }

``prodmulti`` factors are ``{"terms": [[coef, [[var, exp], ...]], ...]}``.
All scalars are strings ``"num/den"`` or ``"num"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple, Union

from .cnf import CnfFormula
from .errors import CubecalcError, ParseError, PreconditionError
from .integrate import ProdMulti, ProdSumUni, SumFactor
from .poly import MultiPoly, UniPoly, format_rat, monomial

HEADER = "cubecalc-poly v1"
KINDS = ("prodsum", "prodmulti")

# ---------------------------------------------------------------------------
# DIMACS


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF; comment lines (``c``) are ignored."""
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    current_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise ParseError("duplicate problem line", line=lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {line!r}, expected 'p cnf <vars> <clauses>'", line=lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", line=lineno) from None
            if n < 0 or m < 0:
                raise ParseError("negative counts in header", line=lineno)
            header = (n, m)
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", line=lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", line=lineno)
                clauses.append(current)
                current = []
                continue
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} out of range 1..{header[0]}", line=lineno)
            if not current:
                current_line = lineno
            current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("clause not terminated by 0", line=current_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula.from_ints(header[0], clauses)


def format_dimacs(F: CnfFormula, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p cnf {F.num_vars} {len(F.clauses)}")
    lines.extend(" ".join(str(l.to_dimacs()) for l in c) + " 0" for c in F.clauses)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# polynomial documents


@dataclass(frozen=True)
class PolyDocument:
    kind: str
    degree_bound: int
    factors: Tuple[Union[SumFactor, MultiPoly], ...]
    num_vars: int

    @classmethod
    def wrap(cls, p: ProdSumUni | ProdMulti) -> "PolyDocument":
        kind = "prodsum" if isinstance(p, ProdSumUni) else "prodmulti"
        return cls(kind, p.degree_bound, p.factors, p.num_vars)

    def to_prodsum(self) -> ProdSumUni:
        if self.kind != "prodsum":
            raise PreconditionError("document is not a prodsum")
        return ProdSumUni(self.factors, self.degree_bound, self.num_vars)

    def to_prodmulti(self) -> ProdMulti:
        if self.kind == "prodsum":
            return self.to_prodsum().to_prodmulti()
        return ProdMulti(self.factors, self.degree_bound, self.num_vars)

    def unwrap(self) -> ProdSumUni | ProdMulti:
        return self.to_prodsum() if self.kind == "prodsum" else self.to_prodmulti()


def serialize_poly(doc: PolyDocument | ProdSumUni | ProdMulti) -> str:
    if not isinstance(doc, PolyDocument):
        doc = PolyDocument.wrap(doc)
    factors: list[dict[str, Any]] = []
    for f in doc.factors:
        if doc.kind == "prodsum":
            factors.append({
                "constant": format_rat(f.constant),
                "parts": {
                    str(v): ["0", *(format_rat(c) for c in q.coeffs[1:])]
                    for v, q in sorted(f.parts.items())
                },
            })
        else:
            factors.append({
                "terms": [[format_rat(c), [list(ve) for ve in m]] for m, c in f.sorted_terms()]
            })
    body = {
        "kind": doc.kind,
        "num_vars": doc.num_vars,
        "degree_bound": doc.degree_bound,
        "factors": factors,
    }
    return HEADER + "\n" + json.dumps(body, indent=2) + "\n"


_RAT = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def _parse_rat(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"expected a rational string, got {value!r}", path=path)
    m = _RAT.match(str(value))
    if not m:
        raise ParseError(f"malformed rational {value!r}", path=path)
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError("denominator is zero", path=path)
    return Fraction(int(m.group(1)), den)


def _expect(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise ParseError(message, path=path)


def _nonneg_int(value: Any, path: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool) and value >= 0,
            f"expected a nonnegative integer, got {value!r}", path)
    return value


def parse_poly(text: str) -> PolyDocument:
    """Parse a polynomial document; schema errors carry a JSON path."""
    first, _, rest = text.lstrip("﻿").partition("\n")
    if first.strip() != HEADER:
        raise ParseError(f"expected header {HEADER!r}, got {first.strip()!r}", line=1)
    try:
        body = json.loads(rest)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno + 1) from None
    _expect(isinstance(body, dict), "document body must be an object", "$")
    kind = body.get("kind")
    _expect(kind in KINDS, f"kind must be one of {KINDS}, got {kind!r}", "$.kind")
    num_vars = _nonneg_int(body.get("num_vars"), "$.num_vars")
    degree_bound = _nonneg_int(body.get("degree_bound"), "$.degree_bound")
    raw_factors = body.get("factors")
    _expect(isinstance(raw_factors, list), "factors must be a list", "$.factors")

    factors: list = []
    for i, rf in enumerate(raw_factors):
        fpath = f"$.factors[{i}]"
        _expect(isinstance(rf, dict), "factor must be an object", fpath)
        if kind == "prodsum":
            const = _parse_rat(rf.get("constant", "0"), fpath + ".constant")
            parts = rf.get("parts", {})
            _expect(isinstance(parts, dict), "parts must be an object", fpath + ".parts")
            pieces = []
            for key, coeffs in parts.items():
                ppath = f"{fpath}.parts[{key!r}]"
                _expect(re.fullmatch(r"\d+", str(key)) is not None, "variable key must be a nonnegative integer", ppath)
                v = int(key)
                _expect(v < num_vars, f"variable {v} >= num_vars {num_vars}", ppath)
                _expect(isinstance(coeffs, list), "coefficients must be a list", ppath)
                q = UniPoly(tuple(_parse_rat(c, f"{ppath}[{j}]") for j, c in enumerate(coeffs)))
                pieces.append((v, q))
            factors.append(SumFactor.build(pieces, const))
        else:
            terms = rf.get("terms")
            _expect(isinstance(terms, list), "terms must be a list", fpath + ".terms")
            items = []
            for j, t in enumerate(terms):
                tpath = f"{fpath}.terms[{j}]"
                _expect(isinstance(t, list) and len(t) == 2, "term must be [coef, monomial]", tpath)
                c = _parse_rat(t[0], tpath + "[0]")
                _expect(isinstance(t[1], list), "monomial must be a list of [var, exp]", tpath + "[1]")
                pairs = []
                for r, ve in enumerate(t[1]):
                    vpath = f"{tpath}[1][{r}]"
                    _expect(isinstance(ve, list) and len(ve) == 2, "expected [var, exp]", vpath)
                    v = _nonneg_int(ve[0], vpath + "[0]")
                    e = _nonneg_int(ve[1], vpath + "[1]")
                    _expect(v < num_vars, f"variable {v} >= num_vars {num_vars}", vpath)
                    pairs.append((v, e))
                items.append((monomial(pairs), c))
            factors.append(MultiPoly.from_terms(items))

    doc = PolyDocument(kind, degree_bound, tuple(factors), num_vars)
    try:
        doc.unwrap()
    except CubecalcError as e:
        raise ParseError(str(e), path="$") from None
    return doc

