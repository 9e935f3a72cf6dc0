"""The square ring H*(X) ⊗ H*(X), the diagonal map and zero-divisors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .graded import DEFAULT_MAX_BASIS, Element, GradedRing, tensor_product
from .scalars import MixedRingError

__all__ = [
    "SquareRing",
    "square_ring",
    "cross",
    "diagonal",
    "zero_divisor",
    "zero_divisor_generators",
]


@dataclass(frozen=True, eq=False)
class SquareRing:
    """``base ⊗ base`` with basis ``b_i ⊗ b_j`` at flat index ``i * n + j``."""

    base: GradedRing
    product_ring: GradedRing

    @property
    def n(self) -> int:
        return len(self.base)

    def flat(self, i: int, j: int) -> int:
        return i * self.n + j

    def pair(self, flat: int) -> tuple[int, int]:
        return divmod(flat, self.n)

    def generator_indices(self) -> list[int]:
        """Base indices of the positive-degree basis elements."""
        return [i for i in range(1, self.n) if self.base.degrees[i] > 0]


def square_ring(R: GradedRing, *, max_basis: int = DEFAULT_MAX_BASIS) -> SquareRing:
    """Build (and validate) the Künneth square of ``R``.

    Results are cached per ring object, since the bounds and the classifier
    ask for the same square repeatedly.
    """
    if max_basis == DEFAULT_MAX_BASIS:
        return _cached_square(R)
    return _build_square(R, max_basis)


def _build_square(R: GradedRing, max_basis: int) -> SquareRing:
    P = tensor_product(R, R, f"{R.name}⊗{R.name}", max_basis=max_basis)
    return SquareRing(R, P)


@lru_cache(maxsize=128)
def _cached_square(R: GradedRing) -> SquareRing:
    return _build_square(R, DEFAULT_MAX_BASIS)


def _in_base(sq: SquareRing, u: Element):
    if u.ring is not sq.base and u.ring != sq.base:
        raise MixedRingError(f"element of {u.ring.name} is not in the base ring {sq.base.name}")


def cross(sq: SquareRing, u: Element, v: Element) -> Element:
    """The cross product ``u × v = u ⊗ v``."""
    _in_base(sq, u)
    _in_base(sq, v)
    out: dict[int, Any] = {}
    for i, a in u._c.items():
        for j, b in v._c.items():
            out[sq.flat(i, j)] = a * b
    return sq.product_ring.element(out)


def diagonal(sq: SquareRing, e: Element) -> Element:
    """Δ*: linear extension of ``b_i ⊗ b_j ↦ b_i · b_j``."""
    if e.ring is not sq.product_ring and e.ring != sq.product_ring:
        raise MixedRingError(f"element of {e.ring.name} is not in {sq.product_ring.name}")
    out: dict[int, Any] = {}
    prods = sq.base._products
    for x, c in e._c.items():
        i, j = sq.pair(x)
        for k, ck in prods.get((i, j), {}).items():
            out[k] = out.get(k, 0) + c * ck
    return sq.base.element(out)


def zero_divisor(sq: SquareRing, u: Element) -> Element:
    """``û = u ⊗ 1 - 1 ⊗ u`` for homogeneous ``u`` of positive degree."""
    _in_base(sq, u)
    d = u.degree
    if d is None:
        raise ValueError(f"zero divisor needs a nonzero homogeneous class, got {u}")
    if d == 0:
        raise ValueError("zero divisor needs a class of positive degree")
    one = sq.base.one()
    return cross(sq, u, one) - cross(sq, one, u)


def zero_divisor_generators(sq: SquareRing) -> list[Element]:
    """One ``û`` per positive-degree basis element, in basis order.

    For a free coefficient module these generate Ker Δ* as an ideal.
    """
    return [zero_divisor(sq, sq.base[i]) for i in sq.generator_indices()]
