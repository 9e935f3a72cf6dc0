import pytest

from tcring.bounds import zero_divisor_nilpotency
from tcring.catalog import find_entry
from tcring.classify import (
    ALTERNATIVE1,
    ALTERNATIVE2,
    EXCLUDED,
    ClassificationError,
    HomologyProfile,
    ManifoldData,
    ManifoldDataError,
    MissingPresentation,
    check_poincare_duality,
    classify_theorem2,
    pairing_matrix,
    validate_manifold,
)
from tcring.graded import base_change, exterior_algebra, make_ring, sphere_product_ring, sphere_ring
from tcring.kunneth import square_ring
from tcring.scalars import GF, QQ, ZZ


def closed(name, R, pi1=0):
    dims = R.dims()
    prof = HomologyProfile(R.formal_dim, tuple(dims.get(i, 0) for i in range(R.formal_dim + 1)))
    return ManifoldData(name, prof, {ZZ: R}, pi1_free_rank=pi1)


# homology profiles ---------------------------------------------------------------


def test_profile_universal_coefficients():
    # Wu manifold: H_2 = Z/2, everything else trivial apart from the ends
    prof = HomologyProfile.from_degrees(5, {0: 1, 2: (0, [2]), 5: 1})
    assert [prof.rank(i, GF(2)) for i in range(6)] == [1, 0, 1, 1, 0, 1]
    assert [prof.rank(i, QQ) for i in range(6)] == [1, 0, 0, 0, 0, 1]
    assert [prof.rank(i, GF(3)) for i in range(6)] == [1, 0, 0, 0, 0, 1]
    assert prof.torsion_primes() == {2}
    assert not prof.torsion_free
    assert list(prof.middle()) == [2, 3]


def test_profile_rejects_bad_data():
    with pytest.raises(ValueError):
        HomologyProfile(3, (0, 0, 0, 1))
    with pytest.raises(ValueError):
        HomologyProfile.from_degrees(3, {0: 1, 1: (0, [6]), 3: 1})
    with pytest.raises(ValueError):
        HomologyProfile(3, (1, -1, 0, 1))


def test_validate_manifold_checks_ring_dimensions():
    R = sphere_ring(3)
    prof = HomologyProfile.from_degrees(3, {0: 1, 1: 1, 3: 1})
    with pytest.raises(ManifoldDataError):
        validate_manifold(ManifoldData("bad", prof, {ZZ: R}, pi1_free_rank=1))


def test_validate_manifold_checks_pi1_against_h1():
    with pytest.raises(ManifoldDataError):
        validate_manifold(closed("S1xS3", sphere_product_ring([1, 3]), pi1=0))


def test_integer_ring_needs_torsion_free_profile():
    prof = HomologyProfile.from_degrees(5, {0: 1, 2: (0, [2]), 5: 1})
    R = make_ring(ZZ, [("u", 2), ("v", 3), ("g", 5)], {("u", "v"): "g"}, 5)
    with pytest.raises(ManifoldDataError):
        validate_manifold(ManifoldData("fake", prof, {ZZ: R}))


# Poincaré duality ---------------------------------------------------------------


def test_pairing_matrix_of_su3():
    R = base_change(exterior_algebra(ZZ, [3, 5]), QQ)
    M = pairing_matrix(R, 3)
    assert [[c.value for c in row] for row in M] == [[1]]


def test_duality_holds_for_sphere_products():
    report = check_poincare_duality(base_change(sphere_product_ring([2, 2]), QQ))
    assert report.ok and not report.failures()


def test_duality_fails_without_pairing():
    R = make_ring(QQ, [("u", 1), ("v", 2), ("g", 3)], formal_dim=3)
    report = check_poincare_duality(R)
    assert not report
    assert any("degree 1" in f for f in report.failures())


def test_duality_needs_a_field():
    with pytest.raises(ValueError):
        check_poincare_duality(sphere_ring(2))


# the decision procedure ---------------------------------------------------------


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_spheres_are_alternative_one(k):
    v = classify_theorem2(closed(f"S{k}", sphere_ring(k)))
    assert v.outcome == ALTERNATIVE1
    assert v.params == (k,)
    assert v.admissible


def test_circle_times_odd_sphere():
    v = classify_theorem2(closed("S1xS5", sphere_product_ring([1, 5]), pi1=1))
    assert v.outcome == ALTERNATIVE2
    assert v.label == "Alternative2(1,5)"


def test_circle_times_even_sphere_is_excluded():
    v = classify_theorem2(closed("S1xS2", sphere_product_ring([1, 2]), pi1=1))
    assert v.outcome == EXCLUDED
    assert v.tc_floor == len(v.witness) + 1 == 4


def test_sp2_admissible_but_reported_as_necessary_only():
    v = classify_theorem2(find_entry("Sp2").data)
    assert v.label == "Alternative2(3,7)"
    assert v.tc_floor == 3
    assert "necessary" in v.reason


def test_extra_middle_class_excludes():
    # S1 x S2 x S3 has pi1 = Z but cohomology well beyond Lambda(x1, x5)
    R = sphere_product_ring([1, 2, 3])
    v = classify_theorem2(closed("S1xS2xS3", R, pi1=1))
    assert v.outcome == EXCLUDED
    assert not v.witness.recompute(square_ring(R)).is_zero()


def test_odd_torsion_excludes_using_the_fp_ring():
    prof = HomologyProfile.from_degrees(5, {0: 1, 2: (0, [5]), 5: 1})
    R = make_ring(GF(5), [("u", 2), ("v", 3), ("g", 5)], {("u", "v"): "g"}, 5)
    v = classify_theorem2(ManifoldData("M5", prof, {GF(5): R}))
    assert v.outcome == EXCLUDED
    assert v.witness_coeff == GF(5)
    assert v.tc_floor == 4


def test_missing_presentation():
    prof = HomologyProfile.from_degrees(5, {0: 1, 2: (0, [3]), 5: 1})
    R = make_ring(GF(2), [("g", 5)], formal_dim=5)
    with pytest.raises(MissingPresentation):
        classify_theorem2(ManifoldData("M3", prof, {GF(2): R}))


def test_non_orientable_input_rejected():
    with pytest.raises(ClassificationError):
        classify_theorem2(find_entry("KleinGen3").data)


def test_low_dimension_rejected():
    with pytest.raises(ClassificationError):
        classify_theorem2(find_entry("T2").data)


@pytest.mark.parametrize("name", ["S3", "S1xS3", "SU3", "Sp2", "Wu", "S2xS2", "ConnSum3", "ConnSum4"])
def test_admissible_never_contradicts_direct_computation(name):
    data = find_entry(name).data
    v = classify_theorem2(data)
    zcls = [zero_divisor_nilpotency(square_ring(R))[0] for R in data.rings.values()]
    if v.admissible:
        assert max(zcls) <= 3
    else:
        assert not v.witness.recompute(square_ring(data.ring(v.witness_coeff))).is_zero()
        assert v.tc_floor == len(v.witness) + 1
