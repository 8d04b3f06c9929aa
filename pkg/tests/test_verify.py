import json
from collections import Counter

import pytest

from mockparts import mocktheta as mt
from mockparts.qseries import QSeries
from mockparts.verify import (
    ALIASES,
    CONTEXT_WIDTH,
    NO_ORACLE,
    REGISTRY,
    Discrepancy,
    ExceptionalSet,
    IdentityReport,
    UnknownCheckError,
    beck_excess_nu,
    beck_excess_omega,
    check_corollaries_omega,
    check_equal,
    check_lemma_gm,
    check_nonneg,
    check_oracles,
    check_parity_c,
    check_pentagonal_nu,
    check_phi_main,
    check_prop_2f3_f2,
    check_prop_bs,
    oracle_table,
    resolve_names,
    run_check,
)

# Every identity or inequality the registry must verify, in registry wording.
# Each must be owned by exactly one check.
DISPLAYED_IDENTITIES = [
    "q omega = A_omega",
    "A_omega = B_omega",
    "B_omega(z) = A~_omega2(z)",
    "A~_omega2(z) = A_omega2(z)",
    "B_omega(z) = A_omega2(z)",
    "A_omega(z) = A_omega2(z^2)(1 - z^2 q)/(z(1 - zq))",
    "omega class bijection",
    "omega excess = rows with a 2",
    "parts of B_omega = rows of odd Ferrers diagrams",
    "omega excess first form",
    "omega excess pair form",
    "omega pairs with odd Ferrers diagrams",
    "omega pairs with omega partitions",
    "nu(-q) = A_nu2",
    "nu(-q) = B_nu",
    "B_nu(z) = A_nu2(z)",
    "B_nu(z) closed form",
    "A_nu(z) column form",
    "nu class bijection",
    "nu excess = c(n)",
    "c(n) >= 0",
    "nu pentagonal",
    "c(n) parity",
    "phi alternating form",
    "B_phi(-1) = phi",
    "A_phi(1) = 1 - phi + 2(-q;q^2) theta",
    "B_phi(-1/z) series form",
    "A_phi(z) + B_phi(-1/z) = D_phi(z)",
    "D_phi two forms",
    "phi derivative = F1 - F2",
    "F1 - F2 >= 0",
    "F3 >= 0",
    "F1 - 2 F3 theta >= 0",
    "2F3 - F2 >=_S 0",
    "(2F3 - F2) theta >=_T 0",
    "b_n <= b_(n-1) + b_(n-4)",
    "(q^4 + q - 1) F2 >= 0",
    "F2 theta - F2 >=_V 0",
    "f_m + g_m decomposition",
    "phi self-conjugate reading",
    "phi M2-rank reading",
    "F2 counts parts of distinct odd partitions",
]


# -- registry ----------------------------------------------------------------


def test_registry_covers_each_identity_exactly_once():
    owners = Counter(c for spec in REGISTRY.values() for c in spec.covers)
    assert set(owners) == set(DISPLAYED_IDENTITIES)
    assert all(v == 1 for v in owners.values()), [k for k, v in owners.items() if v > 1]


def test_registry_names_match_keys():
    for name, spec in REGISTRY.items():
        assert spec.name == name and spec.default_order >= 1


def test_resolve_names():
    assert resolve_names(None) == list(REGISTRY)
    assert resolve_names(["all"]) == list(REGISTRY)
    assert resolve_names(["t1"]) == ["omega_excess"]
    assert resolve_names(["nu_chain", "t1", "omega_excess"]) == ["nu_chain", "omega_excess"]
    with pytest.raises(UnknownCheckError):
        resolve_names(["nope"])
    assert set(ALIASES.values()) <= set(REGISTRY)


def test_alias_report_carries_the_alias():
    rep = run_check("t1", order=40, enum_cap=10, label="t1")
    assert rep.ok and rep.name == "t1"


# -- reports and exceptional sets ------------------------------------------------


def test_report_invariant():
    with pytest.raises(ValueError):
        IdentityReport("x", 5, "failed")
    with pytest.raises(ValueError):
        IdentityReport("x", 5, "verified", Discrepancy(1, 2, 3))


def test_report_dict_is_json_ready():
    rep = IdentityReport("x", 5, "failed", Discrepancy(3, 10**30, -1), elapsed=0.0123)
    d = rep.to_dict()
    assert d["first_discrepancy"] == {"exponent": 3, "lhs": str(10**30), "rhs": "-1"}
    assert d["elapsed_ms"] == 12
    assert json.loads(json.dumps(d)) == d


def test_exceptional_set():
    S = ExceptionalSet([16, 1, 4, 8])
    assert list(S) == [1, 4, 8, 16] and 4 in S and 5 not in S and len(S) == 4
    with pytest.raises(ValueError):
        ExceptionalSet([-1])


def test_check_equal_names_and_series():
    assert check_equal("a_omega", "b_omega", 100).ok
    assert check_equal(mt.a_omega, lambda N: mt.omega(N).shift(1), 100).ok


def test_check_equal_failure_context():
    a = QSeries.one(30).over_poch(1, 1, 1)
    b = a + QSeries.monomial(30, 17)
    rep = check_equal(a, b, 30, name="bump")
    assert not rep.ok and rep.status == "failed"
    d = rep.first_discrepancy
    assert (d.exponent, d.rhs - d.lhs) == (17, 1)
    assert len(rep.context) == CONTEXT_WIDTH
    assert 17 in [e for e, _, _ in rep.context]


def test_check_equal_bivariate_failure():
    rep = check_equal(mt.A_omega_z(30), mt.A_nu_z(30), 30)
    assert not rep.ok


def test_check_equal_unknown_series():
    with pytest.raises(UnknownCheckError):
        check_equal("nope", "phi", 10)


def test_check_nonneg_and_sets():
    assert check_nonneg("f3", N=500).ok
    a = lambda N: mt.F3(N) * 2 - mt.F2(N)
    S = ExceptionalSet({1, 4, 8, 16})
    U = ExceptionalSet({1, 2, 3, 4, 5, 8, 9, 12, 13, 16, 17})
    assert check_nonneg(a, S, floor=4, floor_except=U, N=500).ok
    bad = check_nonneg(a, ExceptionalSet({1, 4, 8}), N=100)
    assert not bad.ok and bad.first_discrepancy.exponent == 16
    too_high = check_nonneg(a, S, floor=5, floor_except=U, N=200)
    assert not too_high.ok


def test_min_over_s_is_minus_four():
    a = mt.F3(500) * 2 - mt.F2(500)
    assert min(a[e] for e in (1, 4, 8, 16)) == -4


# -- section checks ------------------------------------------------------------


def test_beck_excess_omega_small():
    r = beck_excess_omega(1)
    assert (r.via_enumeration, r.via_series, r.via_ferrers) == (0, 0, 0)
    for n in range(1, 31):
        assert beck_excess_omega(n).agree


def test_beck_excess_nu_small():
    for n in range(1, 31):
        r = beck_excess_nu(n)
        assert r.agree and r.via_series >= 0
        assert r.via_series == r.via_enumeration == r.via_ranks == r.via_odd_parts
    assert beck_excess_nu(8).via_series % 2 == 1


def test_pair_corollaries():
    assert check_corollaries_omega(30).ok


@pytest.mark.parametrize("n", [0, 5, 8, 22, 40])
def test_pentagonal(n):
    assert check_pentagonal_nu(n).ok


def test_parity():
    rep = check_parity_c(500)
    assert rep.ok and rep.order_checked == 500


def test_phi_main():
    assert check_phi_main(200).ok


def test_props():
    assert check_prop_2f3_f2(500).ok
    assert check_prop_bs(500).ok


def test_lemma():
    assert check_lemma_gm(30, 100).ok


def test_oracle_table_covers_combinatorial_catalog():
    covered = {cat for cat, _ in oracle_table(5).values()}
    assert covered | set(NO_ORACLE) == set(mt.CATALOG)
    assert check_oracles(20).ok


def test_checks_are_deterministic():
    a = run_check("nu_parity", order=200)
    b = run_check("nu_parity", order=200)
    assert (a.name, a.status, a.order_checked, a.first_discrepancy) == (b.name, b.status, b.order_checked, b.first_discrepancy)


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_every_check_passes_at_low_order(name):
    rep = run_check(name, order=24, enum_cap=12)
    assert rep.ok, (rep.detail, rep.context)


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        run_check("omega_chain", order=0)
