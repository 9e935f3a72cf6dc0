"""Built-in manifolds with their expected bounds and, where known, TC and cat.

Every ``expected_zcl`` value below was computed twice, by generator-product
enumeration and by the span oracle, before being written down here.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .bounds import cuplength_nilpotency, nilpotency_oracle, zero_divisor_nilpotency
from .classify import (
    HomologyProfile,
    ManifoldData,
    check_poincare_duality,
    classify_theorem2,
    validate_manifold,
)
from .graded import (
    GradedRing,
    base_change,
    connected_sum_ring,
    exterior_algebra,
    make_ring,
    sphere_product_ring,
    validate,
)
from .kunneth import square_ring
from .scalars import GF, QQ, ZZ, CoefficientRing

__all__ = [
    "CatalogEntry",
    "CheckResult",
    "catalog_entries",
    "catalog_check",
    "check_entry",
    "entry_ring",
    "find_entry",
]

F2 = GF(2)


@dataclass(frozen=True)
class CatalogEntry:
    data: ManifoldData
    expected_zcl: Mapping[CoefficientRing, int]
    expected_verdict: str | None = None  # None: outside the classifier's scope
    expected_tc_floor: int | None = None
    known_tc: int | None = None
    known_cat: int | None = None
    source_note: str = ""
    aliases: tuple[str, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.data.name


def entry_ring(entry: CatalogEntry, coeff: CoefficientRing) -> GradedRing:
    """The entry's presentation over ``coeff``, base-changing the Z ring
    when no direct presentation is stored."""
    rings = entry.data.rings
    if coeff in rings:
        return rings[coeff]
    if ZZ in rings and coeff.is_field:
        return base_change(rings[ZZ], coeff)
    raise KeyError(f"{entry.name}: no presentation over {coeff}")


def _profile_from_ring(R: GradedRing) -> HomologyProfile:
    """Homology of a closed orientable manifold with torsion-free
    cohomology ``R`` (ranks are read off degree by degree)."""
    m = R.formal_dim
    dims = R.dims()
    return HomologyProfile(m, tuple(dims.get(i, 0) for i in range(m + 1)))


def _torsion_free(name: str, R: GradedRing, pi1: int = 0) -> ManifoldData:
    return ManifoldData(name, _profile_from_ring(R), {ZZ: R}, pi1_free_rank=pi1)


def sphere_entry(k: int) -> CatalogEntry:
    R = sphere_product_ring([k], name=f"S{k}")
    data = _torsion_free(f"S{k}", R, pi1=1 if k == 1 else 0)
    odd = k % 2 == 1
    return CatalogEntry(
        data,
        {ZZ: 2 if odd else 3, QQ: 2 if odd else 3, F2: 2},
        expected_verdict=f"Alternative1({k})" if k >= 3 else None,
        expected_tc_floor=(2 if odd else 3) if k >= 3 else None,
        known_tc=2 if odd else 3,
        source_note="odd spheres have TC 2; even spheres have TC 3",
    )


def sphere_product_entry(k: int, l: int, known_tc: int | None = 3) -> CatalogEntry:
    """``S^k x S^l``; with k and l odd these are the products of odd spheres."""
    R = sphere_product_ring([k, l], name=f"S{k}xS{l}")
    both_odd = k % 2 == 1 and l % 2 == 1
    pi1 = (k == 1) + (l == 1)
    return CatalogEntry(
        _torsion_free(f"S{k}xS{l}", R, pi1=pi1),
        {ZZ: 3 if both_odd else 5},
        expected_verdict=f"Alternative2({k},{l})" if both_odd else "Excluded",
        expected_tc_floor=3 if both_odd else 4,
        known_tc=known_tc if both_odd else None,
        source_note="product of two odd spheres" if both_odd else "even sphere factors; TC not recorded",
    )


def exterior_entry(
    name: str, k: int, l: int, known_tc=None, known_cat=None, note="", aliases=()
) -> CatalogEntry:
    R = exterior_algebra(ZZ, [k, l], name=name)
    return CatalogEntry(
        _torsion_free(name, R),
        {ZZ: 3},
        expected_verdict=f"Alternative2({k},{l})",
        expected_tc_floor=3,
        known_tc=known_tc,
        known_cat=known_cat,
        source_note=note,
        aliases=tuple(aliases),
    )


def torus_entry() -> CatalogEntry:
    R = exterior_algebra(ZZ, [1, 1], labels=["u", "v"], name="T2")
    # pi1(T^2) = Z^2 is not free; the rank only mirrors H_1 here
    data = ManifoldData("T2", _profile_from_ring(R), {ZZ: R}, pi1_free_rank=2)
    return CatalogEntry(data, {ZZ: 3, F2: 3}, known_tc=3, source_note="torus, a surface with TC 3")


def wu_entry() -> CatalogEntry:
    R = exterior_algebra(F2, [2, 3], name="Wu")
    prof = HomologyProfile.from_degrees(5, {0: 1, 2: (0, [2]), 5: 1})
    return CatalogEntry(
        ManifoldData("Wu", prof, {F2: R}),
        {F2: 3},
        expected_verdict="Alternative3(2)",
        expected_tc_floor=3,
        known_cat=3,
        source_note="Wu manifold SU(3)/SO(3); category 3, TC undetermined",
    )


def klein_entry(m: int = 3) -> CatalogEntry:
    R = exterior_algebra(F2, [1, m - 1], name=f"KleinGen{m}")
    # non-orientable S^{m-1}-bundle over S^1: H_1 = Z, H_{m-1} = Z/2
    prof = HomologyProfile.from_degrees(m, {0: 1, 1: 1, m - 1: (0, [2])})
    return CatalogEntry(
        ManifoldData(f"KleinGen{m}", prof, {F2: R}, pi1_free_rank=1, orientable=False),
        {F2: 3},
        known_cat=3,
        source_note="generalized Klein bottle; category 3, TC undetermined; non-orientable",
    )


def connected_sum_entry(m: int) -> CatalogEntry:
    A = sphere_product_ring([1, m - 1], labels=["u", "v"], name=f"S1xS{m - 1}")
    R = connected_sum_ring(A, A, name=f"ConnSum{m}")
    R = _relabel_top(R, "g")
    # u_i v_j = δ_ij g; the four-fold product of zero-divisors is
    # ((-1)^(m-1) - 1) g⊗g, so it survives only for even m
    even = m % 2 == 0
    return CatalogEntry(
        _torsion_free(f"ConnSum{m}", R, pi1=2),
        {ZZ: 5 if even else 4},
        expected_verdict="Excluded",
        expected_tc_floor=5 if even else 4,
        source_note=f"(S1xS{m - 1})#(S1xS{m - 1}); free pi1 of rank 2",
    )


def _relabel_top(R: GradedRing, label: str) -> GradedRing:
    labels = list(R.labels)
    labels[R.indices_of_degree(R.formal_dim)[0]] = label
    table = {k: v for k, v in R._products.items() if k[0] <= k[1]}
    return make_ring(R.coeff, list(zip(labels, R.degrees)), table, R.formal_dim, R.name)


def catalog_entries(sphere_dims: Iterable[int] = range(1, 7)) -> list[CatalogEntry]:
    entries = [sphere_entry(k) for k in sphere_dims]
    entries += [
        torus_entry(),
        sphere_product_entry(1, 3),
        sphere_product_entry(1, 5),
        sphere_product_entry(3, 3),
        sphere_product_entry(3, 5),
        sphere_product_entry(2, 2),
        exterior_entry("SU3", 3, 5, known_tc=3, known_cat=3, note="SU(3): cat 3, hence TC 3"),
        exterior_entry(
            "Sp2",
            3,
            7,
            known_tc=4,
            known_cat=4,
            note="Sp(2): cat 4 via secondary operations, hence TC 4; the bound 3 is not sharp",
            aliases=("E_3w", "E_4w", "E_5w"),
        ),
        exterior_entry("V2C3", 3, 5, known_cat=3, note="complex Stiefel manifold V_2(C^3)"),
        exterior_entry("V2C4", 5, 7, known_cat=3, note="complex Stiefel manifold V_2(C^4)"),
        exterior_entry(
            "V2H3",
            7,
            11,
            known_cat=3,
            note="quaternionic Stiefel manifold V_2(H^3) = Lambda(x_{4n-5}, x_{4n-1}), n = 3",
        ),
        wu_entry(),
        klein_entry(3),
        connected_sum_entry(3),
        connected_sum_entry(4),
    ]
    return entries


def find_entry(name: str, entries: Iterable[CatalogEntry] | None = None) -> CatalogEntry:
    for e in entries if entries is not None else catalog_entries():
        if e.name == name or name in e.aliases:
            return e
    raise KeyError(f"no catalog entry named {name!r}")


@dataclass
class CheckResult:
    name: str
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, quantity: str, expected, got):
        self.failures.append(f"{self.name}: {quantity}: expected {expected}, got {got}")


def check_entry(entry: CatalogEntry) -> CheckResult:
    res = CheckResult(entry.name)
    try:
        validate_manifold(entry.data)
        for R in entry.data.rings.values():
            validate(R)
            F = R if R.coeff.is_field else base_change(R, QQ)
            duality = check_poincare_duality(F)
            if not duality:
                res.fail(f"Poincare duality over {F.coeff}", "non-singular", "; ".join(duality.failures()))
    except Exception as exc:  # report, don't abort the sweep
        res.fail("validation", "valid", f"{type(exc).__name__}: {exc}")
        return res

    for coeff, want in entry.expected_zcl.items():
        R = entry_ring(entry, coeff)
        sq = square_ring(R)
        got, _ = zero_divisor_nilpotency(sq)
        if got != want:
            res.fail(f"zcl over {coeff}", want, got)
        Rf = R if R.coeff.is_field else base_change(R, QQ)
        oracle = nilpotency_oracle(square_ring(Rf))
        if oracle != got:
            res.fail(f"span oracle over {Rf.coeff}", got, oracle)
        if entry.known_tc is not None and got > entry.known_tc:
            res.fail(f"zcl over {coeff} <= known TC", f"<= {entry.known_tc}", got)

    if entry.known_cat is not None:
        for R in entry.data.rings.values():
            nil, _ = cuplength_nilpotency(R)
            if nil > entry.known_cat:
                res.fail(f"cup-length bound over {R.coeff} <= known cat", f"<= {entry.known_cat}", nil)

    if entry.expected_verdict is not None:
        try:
            v = classify_theorem2(entry.data)
        except Exception as exc:
            res.fail("verdict", entry.expected_verdict, f"{type(exc).__name__}: {exc}")
        else:
            if v.label != entry.expected_verdict:
                res.fail("verdict", entry.expected_verdict, v.label)
            if entry.expected_tc_floor is not None and v.tc_floor != entry.expected_tc_floor:
                res.fail("tc_floor", entry.expected_tc_floor, v.tc_floor)
            if entry.known_tc is not None and entry.known_tc <= 3 and not v.admissible:
                res.fail("admissible for known TC <= 3", "admissible", v.label)
    return res


def catalog_check(entries: Iterable[CatalogEntry] | None = None) -> list[CheckResult]:
    """Run every regression check; results follow entry order."""
    return [check_entry(e) for e in (entries if entries is not None else catalog_entries())]


def tampered(entry: CatalogEntry, **changes) -> CatalogEntry:
    """Copy of an entry with fields replaced (for harness tests)."""
    return replace(entry, **changes)
