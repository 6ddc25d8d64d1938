"""Generator tuples, representability, gap sets, and Hilbert-series numerators.

The gap-set enumeration here is the brute-force oracle every closed form in
the other modules is tested against, so it stays deliberately dumb: bitmask
reachability over 0..bound, nothing clever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import (
    ContainsUnit,
    InternalMismatch,
    InvalidInput,
    NotCoprime,
    NotMinimal,
    TooShort,
)
from .polynomial import SparsePolynomial


@dataclass(frozen=True)
class Generators:
    """A validated minimal generating tuple d_1 < ... < d_m, gcd 1."""

    elements: tuple

    @property
    def m(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def sum(self) -> int:
        return sum(self.elements)

    def product(self) -> int:
        return math.prod(self.elements)

    def __repr__(self):
        return f"Generators{self.elements}"


@dataclass(frozen=True)
class GapSet:
    """The finite set of non-representable positive integers."""

    gaps: tuple

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1


# --- representability primitives -------------------------------------------

def reachable_mask(gens: Iterable[int], bound: int) -> int:
    """Bitmask of integers in [0, bound] representable over gens.

    Doubling shifts: OR-ing shifted copies with offsets g, 2g, 4g, ... closes
    the mask under +g because every multiple k*g is a sum of distinct
    power-of-two multiples (binary expansion of k).
    """
    full = (1 << (bound + 1)) - 1
    mask = 1
    for g in gens:
        step = g
        while step <= bound:
            mask |= (mask << step) & full
            step <<= 1
    return mask


def representable_pair(t: int, a: int, b: int) -> bool:
    """t == x*a + y*b with x, y >= 0, in O(log) time via modular inverse."""
    if t < 0:
        return False
    g = math.gcd(a, b)
    if t % g:
        return False
    t, a, b = t // g, a // g, b // g
    if a == 1 or b == 1:
        return True
    # smallest x >= 0 with x*a == t (mod b); representable iff x*a <= t
    x = (t % b) * pow(a, -1, b) % b
    return x * a <= t


def _representable(t: int, gens) -> bool:
    """t representable over an arbitrary positive-integer tuple."""
    if t == 0:
        return True
    if t < 0:
        return False
    usable = [g for g in gens if g <= t]
    if not usable:
        return False
    if len(usable) == 1:
        return t % usable[0] == 0
    if len(usable) == 2:
        return representable_pair(t, usable[0], usable[1])
    return bool(reachable_mask(usable, t) >> t & 1)


def is_representable(n: int, g: Generators) -> bool:
    """Membership of n in the semigroup generated by g."""
    return _representable(n, g.elements)


# --- validation -------------------------------------------------------------

def validate_generators(raw) -> Generators:
    """Sort, deduplicate, and check: all >1, gcd 1, minimal."""
    elems = sorted(raw)
    if not elems:
        raise TooShort("empty generator list")
    if elems[0] <= 1:
        raise ContainsUnit(f"element {elems[0]} <= 1")
    for i in range(1, len(elems)):
        if elems[i] == elems[i - 1]:
            raise NotMinimal(elems[i], f"duplicate element {elems[i]}")
    if len(elems) < 2:
        raise TooShort("need at least 2 generators")
    if math.gcd(*elems) != 1:
        raise NotCoprime(f"gcd{tuple(elems)} = {math.gcd(*elems)}")
    for i, e in enumerate(elems):
        if _representable(e, elems[:i] + elems[i + 1:]):
            raise NotMinimal(e)
    return Generators(tuple(elems))


# --- gap sets ---------------------------------------------------------------

def _gap_bound(elems) -> Optional[int]:
    """Sylvester bound from the best coprime pair, else None."""
    best = None
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            a, b = elems[i], elems[j]
            if math.gcd(a, b) == 1:
                f = a * b - a - b
                if best is None or f < best:
                    best = f
    return best


def gap_set(g: Generators) -> GapSet:
    """Exact gap set via reachability DP.  This is the oracle."""
    elems = g.elements
    bound = _gap_bound(elems)
    if bound is not None:
        mask = reachable_mask(elems, bound) if bound >= 0 else 1
        # one linear pass over a bit string; per-n shifts would be quadratic
        bits = format(mask, "b")[::-1].ljust(bound + 2, "0")
        gaps = [n for n in range(1, bound + 1) if bits[n] == "0"]
        return GapSet(tuple(gaps))
    # No coprime pair: grow until d_1 consecutive representable integers
    # appear; from there on everything is representable (keep adding d_1).
    d1 = elems[0]
    hi = 4 * elems[-1] ** 2
    while True:
        mask = reachable_mask(elems, hi)
        bits = format(mask, "b")[::-1]
        idx = bits.find("1" * d1)
        if idx >= 0:
            gaps = [n for n in range(1, idx) if bits[n] == "0"]
            return GapSet(tuple(gaps))
        hi *= 2


def is_symmetric_gapset(gs: GapSet) -> bool:
    """Definition-based test: s in S  <=>  F-s not in S."""
    gaps = set(gs.gaps)
    f = gs.frobenius
    if f < 0:
        return False
    if 2 * gs.genus != f + 1:
        return False
    # the reflection t -> F-t must send every gap to a non-gap; counting then
    # forces it to be a bijection between gaps and non-gaps in [0, F]
    return all(f - t not in gaps for t in gaps)


# --- generating functions ---------------------------------------------------

def phi_polynomial(gs: GapSet) -> SparsePolynomial:
    """Phi = sum of z^s over the gap set."""
    return SparsePolynomial.from_exponents(gs.gaps)


class SylvesterResult(NamedTuple):
    F: int
    G: int
    Q: SparsePolynomial
    milnor: int  # Milnor number of the plane monomial curve, = 2G


def sylvester_closed(d1: int, d2: int) -> SylvesterResult:
    """Two-generator closed forms: F, G, Q = 1 - z^(d1 d2)."""
    if d1 < 2 or d2 <= d1:
        raise InvalidInput(f"need 1 < d1 < d2, got ({d1}, {d2})")
    if math.gcd(d1, d2) != 1:
        raise NotCoprime(f"gcd({d1}, {d2}) = {math.gcd(d1, d2)}")
    F = d1 * d2 - d1 - d2
    G = (d1 - 1) * (d2 - 1) // 2
    return SylvesterResult(F, G, SparsePolynomial.one_minus_z(d1 * d2), 2 * G)


def hilbert_numerator(g: Generators, gs: Optional[GapSet] = None) -> SparsePolynomial:
    """Q with H = Q / prod(1 - z^d_j), via the gap generating function:

        Q = prod_{j=2}^{m} (1 - z^{d_j}) * [ sum_{k<d_1} z^k - (1 - z^{d_1}) Phi ]
    """
    if gs is None:
        gs = gap_set(g)
    d = g.elements
    phi = phi_polynomial(gs)
    bracket = SparsePolynomial.geometric(d[0]) - SparsePolynomial.one_minus_z(d[0]) * phi
    q = bracket
    for dj in d[1:]:
        q = q * SparsePolynomial.one_minus_z(dj)
    if q.degree != gs.frobenius + g.sum():
        raise InternalMismatch(
            f"deg Q = {q.degree} != F + sum(d) = {gs.frobenius + g.sum()} for {g}"
        )
    return q


def nonzero_count(p: SparsePolynomial) -> int:
    """Number of monomials counted with coefficient multiplicity."""
    return p.nonzero_count()


def verify_hilbert_identity(g: Generators, gs: Optional[GapSet] = None) -> bool:
    """Check both series identities exactly, truncated where finite:

    (1-z)(Phi + S_trunc) == 1 - z^(N+1)   and   trunc(prod(1-z^d_j) * S_trunc) == Q.
    """
    if gs is None:
        gs = gap_set(g)
    q = hilbert_numerator(g, gs)
    n = q.degree
    mask = reachable_mask(g.elements, n)
    s_trunc = SparsePolynomial({k: 1 for k in range(n + 1) if mask >> k & 1})
    phi = phi_polynomial(gs)
    lhs = SparsePolynomial.one_minus_z(1) * (phi + s_trunc)
    if lhs != SparsePolynomial({0: 1, n + 1: -1}):
        return False
    prod = SparsePolynomial.one()
    for dj in g.elements:
        prod = prod * SparsePolynomial.one_minus_z(dj)
    full = prod * s_trunc
    truncated = SparsePolynomial({d: c for d, c in full.items() if d <= n})
    return truncated == q
