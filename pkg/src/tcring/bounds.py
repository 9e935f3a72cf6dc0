"""Nilpotency of the zero-divisor ideal and of the augmentation ideal.

Notation: ``nil(I)`` is the least ``k`` such that every product of ``k``
elements of ``I`` vanishes (so ``nil(0) = 1``).  ``nil(Ker Δ*)`` bounds
TC from below and ``nil(H^{>0})`` bounds cat from below.

Why enumerating generator products is enough: take ideal elements
``z_t = Σ r_{t,s} û_s``.  Expanding ``z_1 ⋯ z_k`` and moving every ring
coefficient ``r`` to the front (graded commutativity only costs a sign)
writes the product as a combination ``Σ ± r ⋯ r · û_{s_1} ⋯ û_{s_k}``.  So
all k-fold ideal products vanish iff all k-fold generator products do, and
by commutativity up to sign it is enough to try each multiset once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graded import Element, GradedRing
from .kunneth import SquareRing, square_ring, zero_divisor_generators
from .scalars import CoefficientRing, row_reduce

__all__ = [
    "Witness",
    "BoundReport",
    "NilpotencyCapExceeded",
    "DEFAULT_MAX_K",
    "find_witness",
    "zero_divisor_nilpotency",
    "tc_lower_bound",
    "cuplength_nilpotency",
    "find_cup_witness",
    "nilpotency_oracle",
]

DEFAULT_MAX_K = 64


class NilpotencyCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Witness:
    """A nonzero product of generators, listed by base-ring basis label.

    For zero-divisor witnesses the factors are the ``û`` of each label and
    ``product`` lives in the square ring; for cup-length witnesses the
    factors are the basis classes themselves.
    """

    factors: tuple[str, ...]
    indices: tuple[int, ...]
    product: Element
    zero_divisors: bool = True

    def __len__(self):
        return len(self.factors)

    def describe(self) -> str:
        if self.zero_divisors:
            return " · ".join(f"^{f}" for f in self.factors)
        return " · ".join(self.factors)

    def recompute(self, sq: SquareRing | None = None) -> Element:
        """Multiply the factors again from scratch."""
        if self.zero_divisors:
            if sq is None:
                raise ValueError("zero-divisor witnesses need their square ring")
            gens = dict(zip(sq.generator_indices(), zero_divisor_generators(sq)))
            factors = [gens[i] for i in self.indices]
        else:
            R = self.product.ring
            factors = [R[i] for i in self.indices]
        out = factors[0]
        for f in factors[1:]:
            out = out * f
        return out


def _first_nonzero(gens: Sequence[Element], k: int, top: int) -> tuple[tuple[int, ...], Element] | None:
    """Lexicographically first multiset of ``k`` generator positions whose
    left-to-right product is nonzero.

    Depth-first search over nondecreasing index tuples visits multisets in
    lexicographic order; a zero prefix prunes its whole subtree, as does a
    degree that no completion can fit under ``top``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    degs = [g.degree for g in gens]
    if not gens:
        return None
    # least generator degree among positions >= t
    tail_min = list(degs)
    for t in range(len(degs) - 2, -1, -1):
        tail_min[t] = min(tail_min[t], tail_min[t + 1])

    def rec(start, prefix, prefix_deg, chosen):
        depth = len(chosen)
        if depth == k:
            return chosen, prefix
        remaining = k - depth - 1
        for t in range(start, len(gens)):
            d = prefix_deg + degs[t]
            if d + remaining * tail_min[t] > top:
                continue
            p = gens[t] if prefix is None else prefix * gens[t]
            if p.is_zero():
                continue
            found = rec(t, p, d, chosen + (t,))
            if found:
                return found
        return None

    return rec(0, None, 0, ())


def find_witness(sq: SquareRing, k: int) -> Witness | None:
    """First nonzero k-fold product of zero-divisor generators, if any."""
    gens = zero_divisor_generators(sq)
    found = _first_nonzero(gens, k, sq.product_ring.top_degree)
    if found is None:
        return None
    positions, product = found
    base_idx = sq.generator_indices()
    idx = tuple(base_idx[p] for p in positions)
    return Witness(tuple(sq.base.labels[i] for i in idx), idx, product)


def _nil(find, max_k: int):
    witness = None
    k = 1
    while True:
        if k > max_k:
            raise NilpotencyCapExceeded(
                f"nonzero {max_k}-fold product found; raise max_k or set a formal dimension"
            )
        found = find(k)
        if found is None:
            return k, witness
        witness = found
        k += 1


def zero_divisor_nilpotency(sq: SquareRing, max_k: int = DEFAULT_MAX_K) -> tuple[int, Witness | None]:
    """``nil(Ker Δ*)`` and a nonzero product of ``nil - 1`` generators
    (``None`` when the ideal is zero)."""
    return _nil(lambda k: find_witness(sq, k), max_k)


def find_cup_witness(R: GradedRing, k: int) -> Witness | None:
    gen_idx = [i for i in range(1, len(R)) if R.degrees[i] > 0]
    found = _first_nonzero([R[i] for i in gen_idx], k, R.top_degree)
    if found is None:
        return None
    positions, product = found
    idx = tuple(gen_idx[p] for p in positions)
    return Witness(tuple(R.labels[i] for i in idx), idx, product, zero_divisors=False)


def cuplength_nilpotency(R: GradedRing, max_k: int = DEFAULT_MAX_K) -> tuple[int, Witness | None]:
    """``nil`` of the positive-degree ideal, i.e. cup length + 1."""
    return _nil(lambda k: find_cup_witness(R, k), max_k)


@dataclass(frozen=True)
class BoundReport:
    ring_name: str
    coeff: CoefficientRing
    zcl: int
    tc_lower_bound: int
    cuplength_nil: int
    cat_lower_bound: int
    witness: Witness | None
    cup_witness: Witness | None = None


def tc_lower_bound(R: GradedRing, max_k: int = DEFAULT_MAX_K) -> BoundReport:
    sq = square_ring(R)
    zcl, witness = zero_divisor_nilpotency(sq, max_k)
    nil, cup_witness = cuplength_nilpotency(R, max_k)
    return BoundReport(R.name, R.coeff, zcl, zcl, nil, nil, witness, cup_witness)


def nilpotency_oracle(sq: SquareRing) -> int:
    """``nil(Ker Δ*)`` by linear algebra over a field.

    Builds ``I = span{x · û}`` over all square-ring basis elements ``x`` and
    generators ``û``, then ``I^{j+1} = span{w · û : w spans I^j}``, until the
    zero space.  No generator-product enumeration is involved.
    """
    P = sq.product_ring
    F = P.coeff
    if not F.is_field:
        raise ValueError(f"the span oracle needs field coefficients, got {F}")
    N = len(P)
    gens = zero_divisor_generators(sq)

    def dense(e: Element) -> list:
        row = [0] * N
        for i, c in e._c.items():
            row[i] = c
        return row

    def span(elements) -> list[list]:
        return row_reduce([dense(e) for e in elements], F)

    current = span(b * u for b in P.basis_elements() for u in gens)
    j = 1
    while current:
        spanning = [P.element({i: c for i, c in enumerate(r) if c}) for r in current]
        current = span(w * u for w in spanning for u in gens)
        j += 1
    return j
