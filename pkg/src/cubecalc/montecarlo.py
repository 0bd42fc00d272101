"""Plain Monte Carlo estimates of cube integrals, as a floating-point sanity check.

Points come from numpy's PCG64 generator seeded with ``seed``; the polynomial
is evaluated in its factored form, never expanded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .integrate import ProdMulti, ProdSumUni
from .io import PolyDocument

GENERATOR = "PCG64"
_CHUNK = 65536


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int
    generator: str = GENERATOR

    def within(self, exact, k: float = 5.0) -> bool:
        return abs(self.mean - float(exact)) <= k * self.stderr


def _evaluate(p: ProdSumUni | ProdMulti, X: np.ndarray) -> np.ndarray:
    out = np.ones(X.shape[0])
    if isinstance(p, ProdSumUni):
        for f in p.factors:
            val = np.full(X.shape[0], float(f.constant))
            for v, q in f.parts.items():
                val += np.polynomial.polynomial.polyval(X[:, v], [float(c) for c in q.coeffs])
            out *= val
    else:
        for f in p.factors:
            val = np.zeros(X.shape[0])
            for m, c in f.terms.items():
                term = np.full(X.shape[0], float(c))
                for v, e in m:
                    term *= X[:, v] ** e
                val += term
            out *= val
    return out


def mc_samples(p: PolyDocument | ProdSumUni | ProdMulti, samples: int, seed: int) -> np.ndarray:
    """Function values at ``samples`` uniform points of the unit cube."""
    if samples < 1:
        raise PreconditionError("samples must be >= 1")
    if isinstance(p, PolyDocument):
        p = p.unwrap()
    rng = np.random.Generator(np.random.PCG64(seed))
    d = p.num_vars
    values = np.empty(samples)
    for start in range(0, samples, _CHUNK):
        stop = min(start + _CHUNK, samples)
        X = rng.random((stop - start, d))
        values[start:stop] = _evaluate(p, X)
    return values


def mc_estimate(p: PolyDocument | ProdSumUni | ProdMulti, samples: int, seed: int) -> MCEstimate:
    values = mc_samples(p, samples, seed)
    mean = float(values.mean())
    if samples > 1:
        stderr = float(values.std(ddof=1)) / math.sqrt(samples)
    else:
        stderr = 0.0
    return MCEstimate(mean, stderr, samples, seed)
