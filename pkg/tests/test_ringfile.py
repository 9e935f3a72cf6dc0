from fractions import Fraction

import pytest

from tcring.catalog import catalog_entries
from tcring.classify import MissingPresentation
from tcring.graded import CommutativityViolation, OddSquareViolation, exterior_algebra, make_ring
from tcring.ringfile import (
    RingFileError,
    is_manifold_text,
    parse_manifold,
    parse_ring,
    parse_ring_file,
    serialize_manifold,
    serialize_ring,
)
from tcring.scalars import GF, QQ, ZZ

S2_TEXT = """\
# the 2-sphere
ring S2
coeff Z
dim 2
basis v:2
mul v*v = 0
"""


def test_parse_simple_ring():
    R = parse_ring(S2_TEXT)
    assert R.name == "S2" and R.coeff == ZZ and R.formal_dim == 2
    assert R.labels == ("1", "v")
    assert (R["v"] * R["v"]).is_zero()


def test_terms_with_coefficients():
    text = "ring X\ncoeff F_5\nbasis a:2 b:2 c:4\nmul a*b = 2*c\nmul a*a = -c + c + c\n"
    R = parse_ring(text)
    assert (R["a"] * R["b"]).coeff("c").value == 2
    assert (R["a"] * R["a"]) == R["c"]


def test_rational_coefficients():
    R = make_ring(QQ, [("a", 2), ("b", 4)], {("a", "a"): {"b": Fraction(1, 2)}}, 4)
    text = serialize_ring(R)
    assert "1/2*b" in text
    assert parse_ring(text) == R


@pytest.mark.parametrize(
    "text, needle",
    [
        ("coeff Z\n", "line 1"),
        ("ring X\nbasis u:1\n", "missing 'coeff'"),
        ("ring X\ncoeff W\n", "line 2"),
        ("ring X\ncoeff Z\nbasis u\n", "label:degree"),
        ("ring X\ncoeff Z\nbasis u:one\n", "integer"),
        ("ring X\ncoeff Z\nbasis u:1 u:1\n", "duplicate"),
        ("ring X\ncoeff Z\nbasis u:1\nmul u*q = 0\n", "unknown label 'q'"),
        ("ring X\ncoeff Z\nbasis u:1\nmul u*u = 2*\n", "cannot parse"),
        ("ring X\ncoeff Z\nbasis u:1\nmul u u = 0\n", "left side"),
        ("ring X\ncoeff Z\nbasis u:1\nfrobnicate\n", "unknown directive"),
        ("ring X\ncoeff Z\ncoeff Q\n", "twice"),
    ],
)
def test_grammar_errors_carry_line_numbers(text, needle):
    with pytest.raises(RingFileError) as info:
        parse_ring(text)
    assert needle in str(info.value)


def test_axiom_errors_surface_from_the_validator():
    with pytest.raises(CommutativityViolation):
        parse_ring("ring X\ncoeff Z\nbasis u:1 v:1 g:2\nmul u*v = g\nmul v*u = g\n")
    with pytest.raises(OddSquareViolation):
        parse_ring("ring X\ncoeff Z\nbasis u:1 g:2\nmul u*u = g\n")


def test_raw_parse_keeps_order():
    rf = parse_ring_file("ring X\ncoeff Q\nbasis b:4\nbasis a:2\n")
    assert rf.basis == [("b", 4), ("a", 2)]


def test_serialize_exterior_algebra():
    R = exterior_algebra(ZZ, [3, 5], name="SU3")
    text = serialize_ring(R)
    assert text.splitlines()[:4] == ["ring SU3", "coeff Z", "dim 8", "basis x3:3 x5:5 x3x5:8"]
    assert parse_ring(text) == R


@pytest.mark.parametrize("entry", catalog_entries(), ids=lambda e: e.name)
def test_catalog_round_trip(entry):
    text = serialize_manifold(entry.data)
    assert is_manifold_text(text)
    data = parse_manifold(text)
    assert serialize_manifold(data) == text
    assert data.profile == entry.data.profile
    assert data.pi1_free_rank == entry.data.pi1_free_rank
    assert data.orientable == entry.data.orientable
    assert dict(data.rings) == dict(entry.data.rings)
    for R in entry.data.rings.values():
        assert parse_ring(serialize_ring(R)) == R


def test_manifold_with_external_ring_file(tmp_path):
    (tmp_path / "wu.ring").write_text(
        "ring Wu\ncoeff F_2\ndim 5\nbasis u:2 v:3 g:5\nmul u*v = g\n"
    )
    text = "manifold Wu\nhomology 0:1\nhomology 2:0,2^1\nhomology 5:1\nringfile wu.ring\n"
    data = parse_manifold(text, tmp_path)
    assert data.dimension == 5
    assert data.profile.torsion[2] == (2,)
    assert data.ring(GF(2)).name == "Wu"
    with pytest.raises(MissingPresentation):
        data.ring(QQ)


@pytest.mark.parametrize(
    "text, needle",
    [
        ("homology 0:1\n", "manifold"),
        ("manifold M\nhomology 0:1\nhomology 0:1\n", "twice"),
        ("manifold M\nhomology 2:0,6\n", "line 2"),
        ("manifold M\norientable maybe\n", "yes or no"),
        ("manifold M\nringfile /nonexistent/x.ring\n", "cannot read"),
    ],
)
def test_manifold_errors(text, needle):
    with pytest.raises(RingFileError) as info:
        parse_manifold(text)
    assert needle in str(info.value)
