import json

import pytest

from degenmat import ledger
from degenmat.errors import DomainViolation, UnknownIdentity
from degenmat.ledger import CATALOG, Grid, perturb, run, verify
from degenmat.ledger._common import RT_BINDINGS
from degenmat.ring import parse_poly

REQUIRED = [
    "thm-2.1", "lem-rp", "thm-pg", "example-p4", "pascal-addition", "pascal-inverse",
    "eq-0", "beta-addition", "thm-B-product", "cor-bk", "eq-bp", "B-inverse",
    "B-factorization", "B-nilpotent", "h-sum-beta", "h-sum-shift", "h-sum-gff", "eq-1b2",
    "eq-8", "eq-10", "eq-9", "eq-4", "vertical-recurrences", "shifted-orth-pair", "eq-19",
    "S-Q-factorization", "eq-5", "eq-50", "eq-5a", "eq-6", "eq-6a", "cor-bst1-particulars",
    "eq-2", "B-self-order", "gen-orthogonality", "eq-7a", "eq-7", "cor-bst2-particulars",
    "eq-14", "eq-14a", "eq-s2s", "eq-s1s", "eq-7a1", "eq-71", "eq-51", "eq-5a1", "eq-7a2",
    "eq-72", "eq-13", "eq-17", "hyperharmonic-bracket",
]


def test_catalog_contents():
    ids = CATALOG.ids()
    assert len(ids) >= 40
    assert len(set(ids)) == len(ids)
    missing = [i for i in REQUIRED if i not in CATALOG]
    assert not missing
    for prefix in ("thm-bs-", "sec5.1-", "sec5.2-", "sec5.3-", "sec5.4-"):
        assert any(i.startswith(prefix) for i in ids), prefix


def test_every_entry_is_documented():
    for ident, anchor, domain in ledger.list_identities():
        assert anchor and domain, ident


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        CATALOG.get("nonsense")
    with pytest.raises(ValueError):
        verify("thm-2.1", profile="huge")


def test_thm21_rational():
    grid = Grid(n=range(1, 7), binding=RT_BINDINGS)
    report = verify("thm-2.1", grid)
    assert report.ok and report.attempted == 24


def test_eq6_symbolic():
    # the identity is stated for j >= h only
    grid = Grid(h=[0, 1, 2], i=range(7), j=lambda c: range(c["h"], c["i"] + 1))
    report = verify("eq-6", grid)
    assert report.ok and report.attempted == 28 + 21 + 15


def test_quick_profile_is_clean():
    reports = ledger.verify_all("quick")
    assert len(reports) == len(CATALOG)
    bad = {r.id: r.failures[:1] for r in reports if not r.ok}
    assert not bad
    assert all(r.attempted > 0 for r in reports)


def test_domain_violation():
    spec = CATALOG.get("h-sum-beta")
    with pytest.raises(DomainViolation):
        run(spec, Grid(h=[2], m=[2]))


def test_perturbed_entry_fails_everywhere():
    spec = perturb(CATALOG.get("pascal-inverse"))
    report = run(spec, spec.default_grid())
    assert report.attempted > 0 and report.passed == 0
    f = report.failures[0]
    assert f.lhs != f.rhs and f.bindings


def test_report_serialization():
    report = verify("beta-first-few")
    data = json.loads(json.dumps(report.to_json()))
    assert set(data) == {"id", "anchor", "attempted", "passed", "failures", "elapsed_ms"}
    assert data["passed"] == data["attempted"]
    bad = run(perturb(CATALOG.get("beta-first-few")), Grid(m=[2])).to_json()
    failure = bad["failures"][0]
    # the recorded sides are printed polynomials and parse back
    assert parse_poly(failure["lhs"]) + 1 == parse_poly(failure["rhs"])


def test_deterministic(monkeypatch):
    first = verify("eq-9").to_json()
    monkeypatch.setenv("DEGENMAT_THREADS", "4")
    second = verify("eq-9").to_json()
    for d in (first, second):
        d.pop("elapsed_ms")
    assert first == second
