import json

import pytest

from mockq.qseries import QSeries
from mockq.registry import (
    IdentityRecord,
    registry_catalog,
    verify,
    verify_all,
)


def test_catalog_shape():
    recs = registry_catalog()
    ids = [r.id for r in recs]
    assert len(ids) == len(set(ids))
    assert len(recs) >= 18
    for r in recs:
        assert r.default_order >= 200
        assert r.description


def test_all_records_pass_at_low_order():
    for rec in registry_catalog():
        rep = verify(rec.id, 30)
        assert rep.status == "pass", (rec.id, rep.first_mismatch)
        assert rep.order == 30


def test_report_json_schema():
    rep = verify("NEWOMEGA", 25)
    d = rep.to_json_dict()
    assert set(d) == {"id", "status", "order", "first_mismatch", "ms"}
    assert d["status"] == "pass" and d["first_mismatch"] is None
    json.dumps(d)


def test_perturbation_flips_to_fail(monkeypatch):
    import mockq.registry as reg

    rec = next(r for r in reg.registry_catalog() if r.id == "NEWOMEGA")
    orig = rec.builder

    def broken(cap):
        pairs = orig(cap)
        lhs, rhs = pairs[0]
        bump = QSeries.monomial(1, 7 * 24, lhs.cap)
        return [(lhs + bump, rhs)]

    monkeypatch.setitem(reg._catalog_map(), "NEWOMEGA_BROKEN",
                        IdentityRecord("NEWOMEGA_BROKEN", "perturbed", broken, 25))
    rep = reg.verify("NEWOMEGA_BROKEN", 25)
    assert rep.status == "fail"
    e, a, b = rep.first_mismatch
    assert e == 7 * 24 and a - b != 0
    d = rep.to_json_dict()
    assert d["first_mismatch"]["exponent_num_24"] == 168
    del reg._catalog_map()["NEWOMEGA_BROKEN"]


def test_unknown_id_raises():
    with pytest.raises(KeyError):
        verify("NOT_A_RECORD")


def test_verify_all_sorted_and_parallel_consistent():
    serial = verify_all(order_override=20)
    parallel = verify_all(order_override=20, jobs=4)
    assert [r.id for r in serial] == sorted(r.id for r in serial)
    assert [(r.id, r.status) for r in serial] == [(r.id, r.status) for r in parallel]
    assert all(r.status == "pass" for r in serial)


def test_rln_descriptions_record_interpretation():
    recs = {r.id: r for r in registry_catalog()}
    assert "omega(q^3)" in recs["RLN_OMEGA"].description
    assert "classical theta" in recs["RLN_F"].description
