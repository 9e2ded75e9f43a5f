import json

import pytest

from legprod import QuadraticForm, equivalence_audit, list_theorems, mixed_classes, primes_between, verify, verify_many
from legprod.errors import BadModulus, BadParameter, EmptyRange, UnknownTheorem
from legprod.registry import ASSERTED, AUDIT, CATALOG, CSV_HEADER, default_modulus, reports_to_csv

from oracles import legendre_by_squares, symbol_product_brute, value_product_brute

REQUIRED_IDS = [
    "T2.1", "L2.2", "T2.4ii-plus", "T2.4ii-minus", "C3.2", "T3.3i", "T3.4", "L3.5", "R3.5", "T3.6",
    "C7.4-k3", "L4.1i", "L4.1ii", "T4.2-plus", "T4.2-minus", "T4.3", "L4.4", "L4.5", "C4.6", "C4.7",
    "T4.7", "L4.8", "T4.9", "T4.10", "L4.11", "T4.12", "R2.4-conj71",
]
AUDIT_IDS = {"R3.5", "R2.4-conj71", "R2.3-counts"}
ASSERTED_IDS = [tid for tid, kind, _ in list_theorems() if kind == ASSERTED]
AUDIT_ALL = [tid for tid, kind, _ in list_theorems() if kind == AUDIT]


def test_catalog_contents():
    ids = [t[0] for t in list_theorems()]
    assert len(ids) >= 25 and len(ids) == len(set(ids))
    for tid in REQUIRED_IDS:
        assert tid in ids
    assert AUDIT_IDS <= set(AUDIT_ALL)
    desc = dict((t[0], t[2]) for t in list_theorems())
    assert "N_p(4)" in desc["T4.3"]
    assert "p != 5" in desc["L3.5"]
    assert list_theorems() == list_theorems()


def test_l35_skips_five():
    r = verify("L3.5", 5, 7)
    assert (r.checked, r.skipped) == (1, 1)


@pytest.mark.parametrize("tid", ASSERTED_IDS)
def test_asserted_entries_pass(tid):
    r = verify(tid, 5, 300)
    assert r.status == "PASS", r.failures[:5]
    assert r.checked + r.skipped == len(primes_between(5, 300))
    assert r.checked > 0


@pytest.mark.parametrize("tid", AUDIT_ALL)
def test_audit_entries_report_without_failing(tid):
    r = verify(tid, 5, 300)
    assert r.kind == AUDIT
    assert r.status in ("PASS", "DISCREPANCIES")
    assert not r.failed


@pytest.mark.parametrize(
    "tid",
    ["R3.5", "T2.4ii-plus-printed", "L3.1iii-printed", "T3.3i-printed", "L3.5-triangle", "L4.1ii-printed",
     "T4.2-plus-printed", "C4.7-printed", "T4.7-printed", "T4.9-printed", "T4.12-intervals", "L4.11-printed"],
)
def test_literal_readings_are_refuted(tid):
    # each of these encodes a statement exactly as printed; all have counterexamples below 300
    assert verify(tid, 5, 300).status == "DISCREPANCIES"


def test_l41ii_sign_is_minus_exactly_at_7_mod_8():
    for p in primes_between(5, 200):
        h = (p - 1) // 2
        value = 1
        for i in range(1, h + 1):
            for j in range(1, h + 1):
                if i != j:
                    value *= legendre_by_squares(i - j, p)
        assert (value == -1) is (p % 8 == 7)
    assert verify("L4.1ii", 5, 200).status == "PASS"


def test_r35_printed_list():
    r = verify("R3.5", 5, 100)
    bad = {f.p for f in r.failures}
    assert 7 in bad and 31 in bad and 13 not in bad


def test_conj71_literal_reading_at_7():
    r = verify("R2.4-conj71", 5, 7)
    at7 = [f for f in r.failures if f.p == 7]
    assert at7 and all(f.claimed == 0 and f.computed in (-1, 1) for f in at7)


def test_l22_example():
    r = verify("L2.2", 5, 100)
    assert r.status == "PASS" and r.failures == []


def test_t43_example():
    assert verify("T4.3", 5, 1000).status == "PASS"


def test_l45_skips():
    r = verify("L4.5", 5, 1000)
    primes = primes_between(5, 1000)
    assert r.status == "PASS"
    assert r.skipped == sum(1 for p in primes if p % 8 not in (3, 7))


def test_unknown_theorem():
    with pytest.raises(UnknownTheorem):
        verify("T9.9", 5, 100)


@pytest.mark.parametrize("lo, hi", [(2, 100), (3, 100), (100, 50), (24, 28)])
def test_empty_range(lo, hi):
    with pytest.raises(EmptyRange):
        verify("T4.3", lo, hi)


def test_bad_parameters():
    with pytest.raises(BadParameter):
        verify("T4.2-plus", 5, 50, {"bogus": 1})
    with pytest.raises(BadParameter):
        verify("T4.2-plus", 5, 50, {"s": "ten"})
    with pytest.raises(BadParameter):
        verify("T4.2-plus", 5, 50, jobs=0)


def test_parameter_override():
    narrow = verify("T4.2-plus", 5, 100, {"s": "2..3"})
    wide = verify("T4.2-plus", 5, 100)
    assert narrow.params == {"s": "2..3"}
    assert narrow.cases < wide.cases


def test_failures_carry_witness_data():
    # with the modulus forced to 8 the family is no longer constant on classes
    r = verify("T3.4", 5, 600, {"modulus": 8})
    assert r.failed
    f = r.failures[0]
    assert {"class", "first_prime"} <= set(f.params)
    assert f.claimed != f.computed


def test_report_serialization():
    r = verify("R3.5", 5, 60)
    d = json.loads(r.to_json())
    assert set(d) == {"theorem", "kind", "range", "params", "checked", "skipped", "cases", "failures", "status"}
    assert d["range"] == [5, 60] and d["status"] == "DISCREPANCIES"
    assert [f["p"] for f in d["failures"]] == sorted(f["p"] for f in d["failures"])
    csv_text = reports_to_csv([r])
    lines = csv_text.strip().split("\n")
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + len(r.failures)


def test_timing_only_on_request():
    assert "elapsed" not in verify("T4.3", 5, 50).to_dict()
    assert "elapsed" in verify("T4.3", 5, 50, timing=True).to_dict()


def test_parallel_matches_serial():
    ids = ["T4.3", "R3.5", "C4.7", "T3.4"]
    serial = [r.to_json() for r in verify_many(ids, 5, 400, jobs=1)]
    parallel = [r.to_json() for r in verify_many(ids, 5, 400, jobs=3)]
    assert serial == parallel


def test_verify_many_routes_params():
    reports = verify_many(["T4.2-plus", "T4.3"], 5, 60, {"s": "2..4"})
    assert reports[0].params == {"s": "2..4"} and reports[1].params == {}


def test_default_modulus():
    assert default_modulus(QuadraticForm(1, 1, 1), "triangle") == 288
    assert default_modulus(QuadraticForm(1, 0, 1), "square") % 8 == 0
    assert default_modulus(QuadraticForm(1, 0, 1), "triangle") >= 8


def test_audit_examples():
    assert mixed_classes(equivalence_audit(QuadraticForm(1, 1, 1), "triangle", 288, 3000)) == 0
    assert mixed_classes(equivalence_audit(QuadraticForm(1, 0, 1), "square", 8, 2000)) == 0


def test_audit_k3_family_is_not_periodic_mod_24():
    r = equivalence_audit(QuadraticForm(1, 4, 1), "triangle", 24, 3000)
    assert mixed_classes(r) > 0
    assert r.failed


def test_audit_default_modulus_and_skips():
    # sigma = 1 - 1 - 1 = -1 and c = -1, so nothing is skipped for the triangle
    r = equivalence_audit(QuadraticForm(1, -1, -1), "square", None, 1500)
    assert r.status == "PASS"
    r = equivalence_audit(QuadraticForm(2, 5, 6), "triangle", None, 200)
    assert r.skipped == 1  # p = 13 divides sigma


def test_audit_bad_modulus():
    with pytest.raises(BadModulus):
        equivalence_audit(QuadraticForm(1, 1, 1), "triangle", 1, 100)


def test_every_entry_has_a_decidable_predicate():
    for entry in CATALOG.values():
        params = entry.resolve()
        for p in (5, 7, 11, 13, 17, 41):
            assert entry.applies(p, params) in (True, False)


# closed forms re-derived here from brute-force enumeration, independently of the catalog code


def test_closed_form_t43_by_definition():
    for p in primes_between(5, 400):
        h = (p - 1) // 2
        n4 = sum(1 for i in range(1, h + 1) if 2 * (4 * i % p) > p and legendre_by_squares(i, p) == -1)
        k = p // 8
        claimed = {1: 1, 5: -1, 3: (-1) ** k, 7: (-1) ** (k + 1)}[p % 8]
        assert (-1) ** n4 == claimed


def test_closed_form_c32_by_enumeration():
    for p in primes_between(5, 150):
        e = (p - 5) // 8 if p % 4 == 1 else (p + 1) // 8
        assert value_product_brute((1, 0, 1), "triangle", p) == (-1) ** e % p


def test_closed_form_t33i_by_enumeration():
    for p in primes_between(5, 120):
        for t in range(-3, 5):
            if (4 * t - 1) % p == 0 or t % p == 0:
                continue
            minus = p % 8 in (5, 7) and legendre_by_squares(4 * t - 1, p) == -1
            assert symbol_product_brute((1, -1, t), "triangle", p) == (-1 if minus else 1), (p, t)


def test_closed_form_l35_by_enumeration():
    for p in primes_between(7, 200):
        r = p % 20
        if r in (1, 9):
            claimed = -pow(5, (p - 1) // 4, p) % p
        elif r in (13, 17):
            claimed = pow(-5, (p - 1) // 4, p)
        elif r in (3, 7):
            claimed = (-1) ** ((p - 10) // 20) % p
        else:
            claimed = (-1) ** ((p - 5) // 10) % p
        assert value_product_brute((1, -1, -1), "square", p) == claimed, p
