import pytest

from tcring.bounds import find_witness, nilpotency_oracle, zero_divisor_nilpotency
from tcring.catalog import catalog_check, catalog_entries, check_entry, entry_ring, find_entry, tampered
from tcring.kunneth import square_ring
from tcring.scalars import GF, QQ, ZZ

ENTRIES = catalog_entries()


def test_names_are_unique():
    names = [e.name for e in ENTRIES]
    assert len(names) == len(set(names))


def test_pristine_catalog_passes():
    results = catalog_check(ENTRIES)
    assert [r.name for r in results] == [e.name for e in ENTRIES]
    assert all(r.passed for r in results), [f for r in results for f in r.failures]


def test_tampered_entry_fails_once_and_names_itself():
    bad = tampered(find_entry("S2"), expected_zcl={ZZ: 4})
    entries = [bad if e.name == "S2" else e for e in ENTRIES]
    failing = [r for r in catalog_check(entries) if not r.passed]
    assert len(failing) == 1
    assert failing[0].name == "S2"
    assert len(failing[0].failures) == 1
    assert "S2" in failing[0].failures[0] and "expected 4, got 3" in failing[0].failures[0]


def test_tampered_verdict_is_reported():
    res = check_entry(tampered(find_entry("SU3"), expected_verdict="Alternative1(8)"))
    assert not res.passed
    assert "verdict" in res.failures[0]


def test_aliases_resolve_to_sp2():
    for alias in ("E_3w", "E_4w", "E_5w"):
        assert find_entry(alias).name == "Sp2"
    with pytest.raises(KeyError):
        find_entry("CP2")


def test_entry_ring_base_changes_integer_rings():
    e = find_entry("S2")
    assert entry_ring(e, GF(2)).coeff == GF(2)
    with pytest.raises(KeyError):
        entry_ring(find_entry("Wu"), QQ)


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_expected_zcl_below_known_tc(entry):
    for want in entry.expected_zcl.values():
        if entry.known_tc is not None:
            assert want <= entry.known_tc


def test_sp2_bound_is_strict():
    e = find_entry("Sp2")
    assert e.expected_zcl[ZZ] == 3 < e.known_tc == 4


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_oracle_agrees_over_every_field(entry):
    for coeff in [QQ, GF(2), GF(3)]:
        try:
            R = entry_ring(entry, coeff)
        except KeyError:
            continue
        sq = square_ring(R)
        assert zero_divisor_nilpotency(sq)[0] == nilpotency_oracle(sq)


def test_connected_sum_parity():
    # the four-fold product of zero divisors is ((-1)^(m-1) - 1) g⊗g
    assert find_witness(square_ring(entry_ring(find_entry("ConnSum3"), ZZ)), 4) is None
    w = find_witness(square_ring(entry_ring(find_entry("ConnSum4"), ZZ)), 4)
    assert w is not None
    assert [c.value for _, c in w.product.terms()] in ([2], [-2])
