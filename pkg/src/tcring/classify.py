"""Poincaré duality checks and the admissibility test for closed orientable
manifolds with TC <= 3.

The classifier is a necessary-condition test: an admissible verdict says
the cohomology has one of the three allowed shapes, never that TC <= 3.
An excluded verdict always carries a nonzero product of zero-divisors that
proves the reported ``tc_floor``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .bounds import Witness, find_witness, zero_divisor_nilpotency
from .graded import DegreeMismatch, GradedRing
from .kunneth import square_ring
from .scalars import GF, QQ, ZZ, CoefficientRing, Scalar, field_rank

__all__ = [
    "HomologyProfile",
    "ManifoldData",
    "Verdict",
    "DualityReport",
    "ClassificationError",
    "MissingPresentation",
    "UndecidedBranch",
    "ManifoldDataError",
    "pairing_matrix",
    "check_poincare_duality",
    "validate_manifold",
    "classify_theorem2",
]

log = logging.getLogger(__name__)

ALTERNATIVE1 = "Alternative1"
ALTERNATIVE2 = "Alternative2"
ALTERNATIVE3 = "Alternative3"
EXCLUDED = "Excluded"


class ClassificationError(ValueError):
    pass


class MissingPresentation(ClassificationError):
    pass


class UndecidedBranch(ClassificationError):
    """The data is outside what the case analysis can settle."""


class ManifoldDataError(ClassificationError):
    pass


def _prime_of(order: int) -> int:
    for p in range(2, order + 1):
        if order % p == 0:
            q = order
            while q % p == 0:
                q //= p
            if q != 1:
                raise ValueError(f"torsion order {order} is not a prime power")
            return p
    raise ValueError(f"torsion order {order} must be at least 2")


@dataclass(frozen=True)
class HomologyProfile:
    """Integral homology ``H_i(M; Z)`` for ``i = 0..m``: free ranks plus the
    orders of the prime-power cyclic summands."""

    dimension: int
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        m = self.dimension
        ranks = tuple(int(r) for r in self.ranks)
        torsion = tuple(tuple(int(t) for t in ts) for ts in self.torsion) or ((),) * (m + 1)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "torsion", torsion)
        if m < 1:
            raise ManifoldDataError(f"dimension must be positive, got {m}")
        if len(ranks) != m + 1 or len(torsion) != m + 1:
            raise ManifoldDataError(f"homology profile needs {m + 1} degrees (0..{m})")
        if any(r < 0 for r in ranks):
            raise ManifoldDataError("negative Betti number")
        if ranks[0] != 1:
            raise ManifoldDataError("H_0 must be Z (connected manifold)")
        for ts in torsion:
            for t in ts:
                try:
                    _prime_of(t)
                except ValueError as exc:
                    raise ManifoldDataError(str(exc)) from None

    @classmethod
    def from_degrees(cls, m: int, groups: Mapping[int, tuple[int, Sequence[int]] | int]) -> HomologyProfile:
        """``{degree: rank}`` or ``{degree: (rank, [torsion orders])}``;
        missing degrees are zero."""
        ranks = [0] * (m + 1)
        torsion: list[tuple[int, ...]] = [()] * (m + 1)
        for i, g in groups.items():
            if not 0 <= i <= m:
                raise ManifoldDataError(f"homology degree {i} outside 0..{m}")
            if isinstance(g, int):
                ranks[i] = g
            else:
                ranks[i], ts = g
                torsion[i] = tuple(ts)
        return cls(m, tuple(ranks), tuple(torsion))

    def p_summands(self, p: int, i: int) -> int:
        if not 0 <= i <= self.dimension:
            return 0
        return sum(1 for t in self.torsion[i] if _prime_of(t) == p)

    def torsion_primes(self, degrees: Sequence[int] | None = None) -> set[int]:
        degrees = range(self.dimension + 1) if degrees is None else degrees
        return {_prime_of(t) for i in degrees for t in self.torsion[i]}

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def rank(self, i: int, coeff: CoefficientRing) -> int:
        """dim H_i(M; F) = dim H^i(M; F) by universal coefficients; for Z and
        Q this is the free rank."""
        if not 0 <= i <= self.dimension:
            return 0
        if coeff.characteristic == 0:
            return self.ranks[i]
        p = coeff.characteristic
        return self.ranks[i] + self.p_summands(p, i) + self.p_summands(p, i - 1)

    def middle(self) -> range:
        return range(2, self.dimension - 1)


@dataclass(frozen=True)
class ManifoldData:
    name: str
    profile: HomologyProfile
    rings: Mapping[CoefficientRing, GradedRing] = field(default_factory=dict)
    pi1_free_rank: int = 0
    orientable: bool = True

    @property
    def dimension(self) -> int:
        return self.profile.dimension

    def ring(self, coeff: CoefficientRing) -> GradedRing:
        try:
            return self.rings[coeff]
        except KeyError:
            raise MissingPresentation(f"{self.name}: no ring presentation over {coeff}") from None

    def ordered_rings(self, prefer: Sequence[CoefficientRing] = ()) -> list[GradedRing]:
        order = list(dict.fromkeys(list(prefer) + sorted(self.rings, key=_coeff_order)))
        return [self.rings[c] for c in order if c in self.rings]


def _coeff_order(c: CoefficientRing):
    return (c.kind != "Z", c.kind != "Q", c.modulus or 0)


def validate_manifold(data: ManifoldData) -> None:
    """Raise :class:`ManifoldDataError` on inconsistent manifold data."""
    prof = data.profile
    m = prof.dimension
    if data.pi1_free_rank < 0:
        raise ManifoldDataError("pi1 rank must be nonnegative")
    if m >= 1 and prof.ranks[1] != data.pi1_free_rank:
        raise ManifoldDataError(
            f"{data.name}: free pi1 of rank {data.pi1_free_rank} needs H_1 of rank "
            f"{data.pi1_free_rank}, profile says {prof.ranks[1]}"
        )
    if data.orientable and prof.ranks[m] != 1:
        raise ManifoldDataError(f"{data.name}: closed orientable manifold needs H_{m} = Z")
    for coeff, R in data.rings.items():
        if R.coeff != coeff:
            raise ManifoldDataError(f"{data.name}: ring filed under {coeff} is over {R.coeff}")
        if R.formal_dim != m:
            raise ManifoldDataError(f"{data.name}: ring {R.name} has formal dimension {R.formal_dim}, expected {m}")
        if coeff == ZZ and not prof.torsion_free:
            raise ManifoldDataError(f"{data.name}: Z presentations need a torsion-free profile; use Q or F_p")
        dims = R.dims()
        for i in range(m + 1):
            want = prof.rank(i, coeff)
            if dims.get(i, 0) != want:
                raise ManifoldDataError(
                    f"{data.name}: ring over {coeff} has rank {dims.get(i, 0)} in degree {i}, "
                    f"universal coefficients give {want}"
                )


# Poincaré duality --------------------------------------------------------------


def _top_index(R: GradedRing) -> int:
    if R.formal_dim is None:
        raise ValueError(f"{R.name} has no formal dimension")
    top = R.indices_of_degree(R.formal_dim)
    if len(top) != 1:
        raise DegreeMismatch(f"{R.name}: degree {R.formal_dim} has rank {len(top)}, expected 1")
    return top[0]


def pairing_matrix(R: GradedRing, k: int) -> list[list[Scalar]]:
    """``M[i][j]`` = coefficient of the top class in ``b_i · b_j`` for
    ``b_i`` of degree ``k`` and ``b_j`` of degree ``m - k``."""
    g = _top_index(R)
    m = R.formal_dim
    rows = R.indices_of_degree(k)
    cols = R.indices_of_degree(m - k)
    return [[R.product(i, j).coeff(g) for j in cols] for i in rows]


@dataclass(frozen=True)
class DegreeCheck:
    degree: int
    rows: int
    cols: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.rows == self.cols == self.rank


@dataclass(frozen=True)
class DualityReport:
    ring_name: str
    top_rank: int
    checks: tuple[DegreeCheck, ...]

    @property
    def ok(self) -> bool:
        return self.top_rank == 1 and all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self) -> list[str]:
        out = []
        if self.top_rank != 1:
            out.append(f"top degree has rank {self.top_rank}, expected 1")
        for c in self.checks:
            if not c.ok:
                out.append(f"degree {c.degree}: {c.rows}x{c.cols} pairing of rank {c.rank}")
        return out


def check_poincare_duality(R: GradedRing) -> DualityReport:
    """Non-singularity of every cup pairing ``H^k x H^{m-k} -> H^m`` over a
    field."""
    if not R.coeff.is_field:
        raise ValueError(f"{R.name}: duality check needs Q or F_p; base-change the Z ring first")
    if R.formal_dim is None:
        raise ValueError(f"{R.name} has no formal dimension")
    m = R.formal_dim
    top_rank = len(R.indices_of_degree(m))
    if top_rank != 1:
        return DualityReport(R.name, top_rank, ())
    checks = []
    for k in range(m + 1):
        M = pairing_matrix(R, k)
        rows, cols = len(R.indices_of_degree(k)), len(R.indices_of_degree(m - k))
        rank = field_rank(M, R.coeff) if rows and cols else 0
        checks.append(DegreeCheck(k, rows, cols, rank))
    return DualityReport(R.name, top_rank, tuple(checks))


def _pairing_is_perfect(R: GradedRing, k: int) -> bool:
    """Square pairing matrix whose determinant is a unit of the coefficients."""
    M = pairing_matrix(R, k)
    if not M or len(M) != len(M[0]):
        return False
    if R.coeff.is_field:
        return field_rank(M) == len(M)
    det = _integer_det([[x.value for x in row] for row in M])
    return det in (1, -1)


def _integer_det(M: list[list[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def _is_exterior_pair(R: GradedRing, k: int, l: int) -> bool:
    """Whether ``R`` is ⋀(x_k, x_l): ranks 1, 1, 1, 1 in degrees 0, k, l, k+l
    (or 1, 2, 1 when k = l), a perfect pairing into the top class, and
    generators squaring to zero."""
    if R.formal_dim != k + l:
        return False
    want: dict[int, int] = {}
    for d in (0, k, l, k + l):
        want[d] = want.get(d, 0) + 1
    if R.dims() != dict(sorted(want.items())):
        return False
    if not _pairing_is_perfect(R, k):
        return False
    gens = set(R.indices_of_degree(k)) | set(R.indices_of_degree(l))
    return all((R[i] * R[i]).is_zero() for i in gens)


# verdicts -------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    outcome: str
    params: tuple[int, ...]
    reason: str
    tc_floor: int
    witness: Witness | None = None
    witness_coeff: CoefficientRing | None = None

    @property
    def admissible(self) -> bool:
        return self.outcome != EXCLUDED

    @property
    def label(self) -> str:
        if self.params:
            return f"{self.outcome}({','.join(map(str, self.params))})"
        return self.outcome


def _exclude(data: ManifoldData, prefer: Sequence[CoefficientRing], reason: str) -> Verdict:
    rings = data.ordered_rings(prefer)
    for k in (3, 4):
        for R in rings:
            w = find_witness(square_ring(R), k)
            if w is not None:
                return Verdict(EXCLUDED, (), reason, k + 1, w, R.coeff)
    raise UndecidedBranch(
        f"{data.name}: {reason}, but no supplied presentation has a nonzero 3- or 4-fold "
        "zero-divisor product"
    )


def _admit(data: ManifoldData, outcome: str, params: tuple[int, ...], reason: str) -> Verdict:
    floor = 1
    for R in data.ordered_rings():
        zcl, _ = zero_divisor_nilpotency(square_ring(R))
        if zcl >= 4:
            # a direct computation beats the shape test
            log.warning("%s: shape looks admissible but zcl over %s is %d", data.name, R.coeff, zcl)
            return _exclude(data, [R.coeff], f"zero-divisor cup length over {R.coeff} is {zcl}")
        floor = max(floor, zcl)
    return Verdict(outcome, params, reason + "; admissibility is necessary, not sufficient, for TC <= 3", floor)


def _profile_supported_on(prof: HomologyProfile, degrees: set[int]) -> bool:
    return all(
        (prof.ranks[i] == 0 and not prof.torsion[i]) for i in range(prof.dimension + 1) if i not in degrees
    )


def classify_theorem2(data: ManifoldData) -> Verdict:
    """Decide which admissible cohomology shape (if any) the data has.

    * free pi1 of rank >= 2: excluded by a four-fold product;
    * rank 1: admissible only as ⋀(x_1, x_{m-1}) with m-1 odd;
    * simply connected: split by middle homology (degrees 2..m-2) over Q,
      odd F_p and F_2.
    """
    validate_manifold(data)
    if not data.orientable:
        raise ClassificationError(f"{data.name}: only orientable manifolds are classified")
    prof = data.profile
    m = prof.dimension
    if m < 3:
        raise ClassificationError(f"{data.name}: dimension {m} < 3 is outside the classification")
    r = data.pi1_free_rank

    if r >= 2:
        reason = f"pi1 free of rank {r} >= 2"
        for R in data.ordered_rings([ZZ, QQ]):
            if R.coeff.characteristic:
                continue
            w = find_witness(square_ring(R), 4)
            if w is not None:
                return Verdict(EXCLUDED, (), reason, 5, w, R.coeff)
        return _exclude(data, [ZZ, QQ], reason + " (no nonzero four-fold product)")

    if r == 1:
        R = data.ring(ZZ) if prof.torsion_free else None
        if (
            R is not None
            and (m - 1) % 2 == 1
            and _profile_supported_on(prof, {0, 1, m - 1, m})
            and prof.ranks[m - 1] == 1
            and _is_exterior_pair(R, 1, m - 1)
        ):
            return _admit(data, ALTERNATIVE2, (1, m - 1), f"pi1 = Z and H*(M;Z) = Lambda(x1,x{m - 1})")
        if (m - 1) % 2 == 0:
            reason = f"pi1 = Z with m-1 = {m - 1} even"
        else:
            reason = "pi1 = Z with cohomology beyond Lambda(x1, x_{m-1})"
        return _exclude(data, [ZZ, QQ], reason)

    mid = list(prof.middle())
    if any(prof.ranks[i] for i in mid):
        reason = "rational middle homology"
        if prof.torsion_free:
            R = data.ring(ZZ)
            positive = sorted(d for d in R.degrees[1:] if d < m)
            if len(positive) == 2 and all(d % 2 for d in positive):
                k, l = positive
                if _is_exterior_pair(R, k, l) and sum(prof.ranks) == 4:
                    return _admit(data, ALTERNATIVE2, (k, l), f"H*(M;Z) = Lambda(x{k},x{l}) with k, l odd")
            reason += " not of the form Lambda(x_k, x_l), k, l odd"
        else:
            reason += " together with torsion"
        return _exclude(data, [ZZ, QQ], reason)

    odd = sorted(p for p in prof.torsion_primes(mid) if p != 2)
    if odd:
        p = odd[0]
        data.ring(GF(p))
        return _exclude(data, [GF(p)], f"odd {p}-torsion in middle homology")

    if 2 in prof.torsion_primes(mid):
        R = data.ring(GF(2))
        k = (m - 1) // 2
        reason = "only 2-torsion in middle homology"
        if m % 2 == 1 and _profile_supported_on(prof, {0, k, m}) and prof.ranks[k] == 0:
            if _is_exterior_pair(R, k, k + 1):
                return _admit(
                    data, ALTERNATIVE3, (k,), f"H_i(M;Z) = 0 off 0, {k}, {m} and H*(M;F2) = Lambda(x{k},x{k + 1})"
                )
            reason += f", but H*(M;F2) is not Lambda(x{k},x{k + 1}) with x{k}^2 = 0"
        else:
            reason += ", not concentrated in the single degree (m-1)/2"
        return _exclude(data, [GF(2)], reason)

    return _admit(data, ALTERNATIVE1, (m,), f"no middle homology: H*(M;Z) = Lambda(x{m})")
