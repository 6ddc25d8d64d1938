"""Scan for triples whose relation matrix has a uniform diagonal (a, a, a).

For those, F and G collapse to expressions in the elementary symmetric
functions of (d1, d2, d3); the scan recomputes both routes and insists they
agree.  A uniform diagonal forces distinct products a*d_i, so every hit is
non-symmetric.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .closedform import closed_form
from .core import Generators, validate_generators
from .errors import InternalMismatch, InvalidInput, NonIntegerResult, ValidationError
from .relation import RelationMatrix, classify, relation_matrix


@dataclass(frozen=True)
class UniformDiagonalRecord:
    triple: tuple
    a: int
    F: int
    G: int
    matrix: RelationMatrix


def uniform_closed(a: int, d) -> tuple:
    """(F, G) when the relation diagonal is (a, a, a)."""
    d1, d2, d3 = d
    e1 = d1 + d2 + d3
    e2 = d1 * d2 + d1 * d3 + d2 * d3
    e3 = d1 * d2 * d3
    disc = (e1 * e1 - 4 * e2) * a * a + 4 * e3
    root = math.isqrt(disc)
    if root * root != disc:
        raise NonIntegerResult(f"discriminant {disc} is not a perfect square")
    if ((a - 2) * e1 + root) % 2:
        raise NonIntegerResult("Frobenius expression is odd")
    F = ((a - 2) * e1 + root) // 2
    if (1 + (a - 1) * e1 - a ** 3) % 2:
        raise NonIntegerResult("genus expression is odd")
    G = (1 + (a - 1) * e1 - a ** 3) // 2
    return F, G


def _scan_range(a: int, d3_lo: int, d3_hi: int):
    out = []
    for d3 in range(d3_lo, d3_hi + 1):
        for d2 in range(3, d3):
            for d1 in range(3, d2):
                try:
                    g = validate_generators((d1, d2, d3))
                except ValidationError:
                    continue
                A = relation_matrix(g)
                if A.diag != (a, a, a):
                    continue
                cls = classify(g, A, cross_check=False)
                if cls.symmetric:
                    raise InternalMismatch(f"uniform diagonal yet symmetric: {g}")
                cf = closed_form(g, A, cls)
                F, G = uniform_closed(a, g.elements)
                if (F, G) != (cf.F, cf.G):
                    raise InternalMismatch(
                        f"uniform closed form disagrees for {g}: "
                        f"({F}, {G}) != ({cf.F}, {cf.G})")
                out.append(UniformDiagonalRecord(g.elements, a, F, G, A))
    return out


def scan_uniform(a: int, d3_max: int, threads: int = 1):
    """All uniform-diagonal triples with d3 <= d3_max, sorted."""
    if a < 3:
        raise InvalidInput(f"need a >= 3, got {a}")
    if d3_max < 5:
        return []
    if threads > 1 and d3_max >= 60:
        chunks = []
        step = max(4, (d3_max - 4) // (threads * 4) + 1)
        lo = 5
        while lo <= d3_max:
            chunks.append((a, lo, min(lo + step - 1, d3_max)))
            lo += step
        records = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_scan_range, *zip(*chunks)):
                records.extend(part)
    else:
        records = _scan_range(a, 5, d3_max)
    return sorted(records, key=lambda r: r.triple)
