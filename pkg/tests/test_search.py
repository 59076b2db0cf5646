"""Search operations: witnesses, branch selection, and certificate re-checks."""

from itertools import combinations

import pytest

from schreier.certificates import make_certificate, verify_certificate
from schreier.colorings import Coloring, get_coloring, hash_coloring
from schreier.families import parse_family
from schreier.finsets import Window
from schreier.ordinals import from_int, parse_ordinal
from schreier.rank import index_compare
from schreier.search import (
    StreamBudget,
    detect_chain,
    hereditary_dichotomy,
    homogenize,
    homogenize_stream,
    large_index_transfer,
    majority_strategy,
    rank_separation,
    recheck_transfer,
    schreier_transfer,
    sperner_refine,
)


def o(text):
    return parse_ordinal(text)


# -- homogenize -------------------------------------------------------


def test_homogenize_parity_pairs():
    cert = homogenize(parse_family("A:2"), get_coloring("parity-sum"),
                      Window(1, 20), 4)
    assert cert is not None
    assert cert.witness == (1, 3, 5, 7)  # lex-first all-odd witness
    assert cert.payload_dict()["color"] == 1
    ok, reason = verify_certificate(cert)
    assert ok, reason


def test_homogenize_singletons_pigeonhole():
    c = hash_coloring(3)
    cert = homogenize(parse_family("A:1"), c, Window(1, 9), 4)
    assert cert is not None
    colors = {c((x,)) for x in cert.witness}
    assert len(colors) == 1
    assert verify_certificate(cert, coloring=c)[0]


def test_homogenize_span_threshold():
    cert = homogenize(parse_family("A:w"), get_coloring("span-threshold"),
                      Window(1, 30), 5)
    assert cert is not None
    assert verify_certificate(cert)[0]


def test_homogenize_window_exhaustion():
    assert homogenize(parse_family("A:1"), get_coloring("parity-sum"),
                      Window(1, 3), 4) is None


def test_homogenize_deterministic():
    a = homogenize(parse_family("A:2"), hash_coloring(9), Window(1, 18), 4)
    b = homogenize(parse_family("A:2"), hash_coloring(9), Window(1, 18), 4)
    assert a == b and a.transcript_hash == b.transcript_hash


# -- homogenize_stream ------------------------------------------------


def test_stream_singleton_base_case():
    c = hash_coloring(1)
    out = homogenize_stream(parse_family("A:1"), c, range(1, 10),
                            budget=StreamBudget(depth=1, horizon=9, emit=9))
    assert out.status == "ok"
    assert out.prefix
    assert {c((x,)) for x in out.prefix} == {out.color}
    assert verify_certificate(out.certificate, coloring=c)[0]
    # majority sampling picks the bigger singleton class
    counts = {1: 0, 2: 0}
    for x in range(1, 10):
        counts[c((x,))] += 1
    assert out.color == min(k for k, v in counts.items()
                            if v == max(counts.values()))


def test_stream_pairs_on_evens():
    out = homogenize_stream(parse_family("A:2"), get_coloring("parity-sum"),
                            range(2, 40, 2),
                            budget=StreamBudget(depth=2, horizon=12, emit=6))
    assert out.status == "ok"
    assert out.color == 1  # even + even sums are even
    assert out.prefix == (2, 4, 6, 8, 10, 12)
    ok, reason = verify_certificate(out.certificate)
    assert ok, reason


def test_stream_budget_zero_trivially_certified():
    out = homogenize_stream(parse_family("A:2"), get_coloring("parity-sum"),
                            range(1, 30), budget=StreamBudget(0, 0, 0))
    assert out.status == "ok"
    assert out.prefix == ()
    assert out.certificate is not None
    assert verify_certificate(out.certificate)[0]


def test_stream_depth_exhaustion_reported():
    out = homogenize_stream(parse_family("A:w"), get_coloring("parity-sum"),
                            range(5, 30),
                            budget=StreamBudget(depth=2, horizon=6, emit=2))
    assert out.status == "budget_exhausted"
    assert out.certificate is not None  # prefix too short to hold a member


def test_stream_contrarian_strategy_self_cancels():
    # picking the anti-majority color thins every level to nothing: the
    # empty prefix is still (vacuously) certified
    def contrarian(labels):
        return 2 if majority_strategy(labels) == 1 else 1

    out = homogenize_stream(parse_family("A:2"), get_coloring("parity-sum"),
                            range(2, 40, 2), strategy=contrarian,
                            budget=StreamBudget(depth=2, horizon=12, emit=6))
    assert out.status == "ok"
    assert out.prefix == ()
    assert verify_certificate(out.certificate)[0]


def test_stream_impure_oracle_reported_as_failure():
    # an oracle that changes its answers between recursion and re-check
    # breaks the purity contract; the final check must catch it
    calls = {"n": 0}

    def flaky(s):
        calls["n"] += 1
        return 1 if calls["n"] <= 9 else 2

    out = homogenize_stream(parse_family("A:1"),
                            Coloring(flaky, name="impure"), range(1, 10),
                            budget=StreamBudget(depth=1, horizon=9, emit=9))
    assert out.status == "failed"
    assert out.certificate is None


def test_stream_input_validation():
    with pytest.raises(ValueError):
        homogenize_stream(parse_family("exL"), get_coloring("parity-sum"),
                          range(1, 10))
    with pytest.raises(ValueError):
        homogenize_stream(parse_family("A:2"), get_coloring("parity-sum"),
                          [3, 3, 4])


# -- sperner_refine ---------------------------------------------------


def test_sperner_equal_sizes_trivial():
    cert = sperner_refine(parse_family("A:3"), Window(1, 10), 6)
    assert cert.witness == (1, 2, 3, 4, 5, 6)
    assert verify_certificate(cert)[0]


def test_sperner_mixed_family():
    spec = parse_family("ex112")
    cert = sperner_refine(spec, Window(1, 25), 6)
    assert cert is not None
    members = [s for k in range(1, 7)
               for s in combinations(cert.witness, k) if spec.member(s)]
    for i, s in enumerate(members):
        for t in members[i + 1:]:
            assert not (set(s) < set(t) or set(t) < set(s))
    assert verify_certificate(cert)[0]


def test_sperner_size_equals_min():
    cert = sperner_refine(parse_family("exR"), Window(1, 12), 5)
    assert cert.witness == (1, 2, 3, 4, 5)
    assert verify_certificate(cert)[0]


# -- hereditary_dichotomy ---------------------------------------------


def branches_of(certs):
    return sorted(c.payload_dict()["branch"] for c in certs)


def test_dichotomy_prefix_side():
    certs = hereditary_dichotomy("down:F:1", parse_family("exL"),
                                 Window(1, 30), target=8)
    assert branches_of(certs) == ["B"]
    ok, reason = verify_certificate(certs[0])
    assert ok, reason


def test_dichotomy_containment_side():
    certs = hereditary_dichotomy("down:exL", parse_family("exR"),
                                 Window(1, 30), target=8)
    assert branches_of(certs) == ["A"]
    ok, reason = verify_certificate(certs[0])
    assert ok, reason


def test_dichotomy_all_sets():
    certs = hereditary_dichotomy("all", parse_family("A:2"), Window(1, 12),
                                 target=5)
    assert branches_of(certs) == ["A"]


def test_dichotomy_ladder_matches_symbolic_comparison():
    for k in range(1, 5):
        for j in range(1, 5):
            certs = hereditary_dichotomy(f"down:A:{k}", parse_family(f"A:{j}"),
                                         Window(1, 14), target=6)
            got = branches_of(certs)
            verdict = index_compare(from_int(k + 1), from_int(j))
            if verdict == "FirstBranch":
                assert got == ["A"], (k, j)
            elif verdict == "SecondBranch":
                assert got == ["B"], (k, j)
            else:
                assert "A" in got, (k, j)
            for c in certs:
                assert verify_certificate(c)[0]


def test_dichotomy_validation():
    with pytest.raises(ValueError):
        hereditary_dichotomy("member:A:2", parse_family("exL"), Window(1, 20))
    with pytest.raises(ValueError):
        hereditary_dichotomy("down:F:1", parse_family("ex112"), Window(1, 20))


# -- rank_separation --------------------------------------------------


def test_separation_pairs_into_size_equals_min():
    cert = rank_separation(2, o("w"), Window(1, 20))
    assert cert is not None
    assert cert.witness == (3, 4, 5, 6, 7, 8)
    ok, reason = verify_certificate(cert)
    assert ok, reason


def test_separation_singletons_into_pairs():
    cert = rank_separation(1, 2, Window(1, 12))
    assert cert.witness == (1, 2, 3, 4, 5, 6)
    assert verify_certificate(cert)[0]


def test_separation_limit_levels():
    cert = rank_separation(o("w"), o("w*2"), Window(1, 40))
    assert cert is not None
    assert verify_certificate(cert)[0]


def test_separation_rejects_bad_order():
    with pytest.raises(ValueError):
        rank_separation(o("w"), 2, Window(1, 20))
    with pytest.raises(ValueError):
        rank_separation(2, 2, Window(1, 20))


# -- detect_chain -----------------------------------------------------


def test_chain_all_sets():
    cert = detect_chain("all", Window(1, 12), 6)
    links = cert.payload_dict()["chain"]
    assert links[0] == [] and len(links) == 6
    assert verify_certificate(cert)[0]


def test_chain_bounded_cardinality():
    assert detect_chain("down:A:3", Window(1, 14), 5) is None
    cert = detect_chain("down:A:3", Window(1, 14), 4)
    assert cert is not None
    assert verify_certificate(cert)[0]


def test_chain_needs_min_at_least_depth():
    cert = detect_chain("member:F:1", Window(1, 14), 4)
    links = [tuple(s) for s in cert.payload_dict()["chain"]]
    assert links == [(4,), (4, 5), (4, 5, 6), (4, 5, 6, 7)]
    assert verify_certificate(cert)[0]


# -- transfers --------------------------------------------------------


def test_fast_star_matches_residual_walk():
    from schreier.families import uniform_star
    from schreier.ordinals import omega_power
    from schreier.search import _fast_system_star

    for level in (0, 1, 2):
        sys_ord = omega_power(level)
        for k in range(0, 7):
            for s in combinations(range(1, 15), k):
                assert _fast_system_star(level, s) == uniform_star(sys_ord, s), \
                    (level, s)


def test_transfer_shift_level_one():
    w = Window(1, 15)
    cert = schreier_transfer(1, w)
    assert cert.witness == tuple(range(3, 16))
    p = cert.payload_dict()
    from schreier.families import enumerate_union_schreier, star_closure
    assert p["spread_checked"] == len(
        enumerate_union_schreier(o("1"), Window(1, 13)))
    assert p["closure_checked"] == len(
        star_closure(parse_family("B:1"), w)) - 1  # empty prefix skipped
    ok, reason = verify_certificate(cert)
    assert ok, reason


def test_transfer_level_zero_trivial():
    cert = schreier_transfer(0, Window(1, 10))
    assert verify_certificate(cert)[0]


def test_transfer_validation():
    with pytest.raises(ValueError):
        schreier_transfer(3, Window(1, 20))
    with pytest.raises(ValueError):
        schreier_transfer(o("w"), Window(1, 20))
    with pytest.raises(ValueError):
        schreier_transfer(1, Window(1, 2))


def test_transfer_forged_witness_rejected():
    good = schreier_transfer(1, Window(1, 15))
    forged = make_certificate("Transfer", good.family, good.window,
                              good.witness[1:], good.payload_dict())
    ok, reason = recheck_transfer(forged)
    assert not ok and "witness" in reason


def test_transfer_density_flag_recorded_not_checked():
    cert = schreier_transfer(1, Window(1, 15), assume_dense=True)
    assert cert.payload_dict()["assume_dense"] is True
    assert verify_certificate(cert)[0]


def test_large_index_direct_route():
    cert = large_index_transfer("down:A:w*2", o("w*2+1"), 1, Window(1, 40))
    assert cert is not None
    assert cert.payload_dict()["route"] == "direct"
    ok, reason = verify_certificate(cert)
    assert ok, reason


def test_large_index_boundary_lift():
    cert = large_index_transfer("down:B:1", o("w+1"), 1, Window(1, 30))
    assert cert is not None
    assert cert.payload_dict()["route"] == "lift"
    ok, reason = verify_certificate(cert)
    assert ok, reason


def test_large_index_infinity_surrogate():
    cert = large_index_transfer("all", None, 1, Window(1, 20))
    assert cert is not None
    assert cert.payload_dict()["sigma"] == "infinity"
    assert verify_certificate(cert)[0]


def test_large_index_rejects_small_index():
    with pytest.raises(ValueError):
        large_index_transfer("down:A:2", o("3"), 1, Window(1, 20))


def test_large_index_route_forgery_rejected():
    good = large_index_transfer("all", None, 1, Window(1, 20))
    p = good.payload_dict()
    p["route"] = "lift"
    forged = make_certificate("Transfer", good.family, good.window,
                              good.witness, p)
    ok, reason = recheck_transfer(forged)
    assert not ok and "route" in reason
