"""Tests for the tree-coloring certificate machinery, including differential
validation of the center-crossing scan against the naive palindromic scan."""

import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from nonrep.words import G2, G5, Morphism, PowerFreeSpec, apply_morphism, iter_powerfree_ternary
from nonrep.repetitions import find_squares
from nonrep.treecert import (
    BranchCheckSpec,
    ConfigurationError,
    _scan_image_centers,
    analyze_morphism_structure,
    branch_palindrome_scan,
    build_level_tree,
    certify_morphic_tree_coloring,
    directedness_threshold,
)
from nonrep.graphs import verify_coloring

G2_SPEC = BranchCheckSpec(2, PowerFreeSpec(Fraction(19, 10), min_period=2), 3)
G5_SPEC = BranchCheckSpec(5, PowerFreeSpec(Fraction(83, 42), min_period=5), 20)


def test_directedness_threshold_examples():
    assert directedness_threshold(Fraction(19, 10), 3) == 20
    assert directedness_threshold(Fraction(83, 42), 20) == 798
    assert directedness_threshold(Fraction(1), 2) == 1
    with pytest.raises(ValueError):
        directedness_threshold(Fraction(2), 3)
    with pytest.raises(ValueError):
        directedness_threshold(Fraction(19, 10), 0)


def test_directedness_threshold_is_least_satisfying_p():
    # p* is the least p with (2 - beta) * p + 1 >= d, scanning p = 1..1000
    for beta, d in ((Fraction(19, 10), 3), (Fraction(83, 42), 20), (Fraction(3, 2), 7)):
        p_star = directedness_threshold(beta, d)
        sat = [p for p in range(1, 1001) if (2 - beta) * p + 1 >= d]
        assert sat and sat[0] == p_star


def test_branch_palindrome_scan_examples():
    assert branch_palindrome_scan("01", 1, 1) is None
    hit = branch_palindrome_scan("00", 1, 1)
    assert hit is not None
    center, rep = hit
    assert rep.period == 1
    with pytest.raises(ValueError):
        branch_palindrome_scan("01", 2, 1)


def test_branch_scan_all_g2_images_clean():
    # every palindromic branch word over every image of a threshold-free
    # length-8 source word is square-free for periods 2..19
    for src in iter_powerfree_ternary(8):
        assert branch_palindrome_scan(apply_morphism(G2, src), 2, 19) is None


def naive_crossing_square(w: str, periods) -> bool:
    """Exists a center i and period p such that the palindromic branch word
    w[:i+1] + reverse(w[:i]) has a square of period p ending 1..p symbols past
    the center."""
    for i in range(len(w)):
        branch = w[: i + 1] + w[:i][::-1]
        for rep in find_squares(branch, 1, max(periods)):
            if rep.period not in periods:
                continue
            delta = rep.start + rep.length - 1 - i
            if 1 <= delta <= rep.period:
                return True
    return False


def test_scan_image_centers_exhaustive_binary():
    periods = list(range(1, 5))
    for length in range(0, 11):
        for tw in product("01", repeat=length):
            w = "".join(tw)
            got = _scan_image_centers(w, periods)
            want = naive_crossing_square(w, set(periods))
            assert (got is not None) == want, w
            if got is not None:
                i, delta, rep = got
                branch = w[: i + 1] + w[:i][::-1]
                assert (
                    branch[rep.start : rep.start + rep.period]
                    == branch[rep.start + rep.period : rep.start + rep.length]
                )
                assert rep.start + rep.length - 1 - i == delta
                assert 1 <= delta <= rep.period


@settings(max_examples=300)
@given(st.text(alphabet="012", max_size=60), st.integers(1, 8), st.integers(0, 8))
def test_scan_image_centers_random(w, lo, extra):
    periods = list(range(lo, lo + extra + 1))
    got = _scan_image_centers(w, periods)
    assert (got is not None) == naive_crossing_square(w, set(periods))


def test_morphism_structure_g2():
    st2 = analyze_morphism_structure(G2)
    assert st2.width == 12 and st2.distinct
    assert st2.shifted_window_hits == ()
    assert (st2.lcp_max, st2.lcs_max, st2.solo_run_max) == (0, 0, 0)
    assert st2.misaligned_run_bound() == 22
    assert st2.run_bound(13) == 22
    assert st2.run_bound(12) == 0  # one aligned block pair, images disagree everywhere
    assert st2.run_bound(48) == 36  # floor(3*4/4) = 3 full blocks


def test_morphism_structure_g5():
    st5 = analyze_morphism_structure(G5)
    assert st5.width == 21 and st5.distinct
    assert st5.shifted_window_hits == ()
    # common prefix of images 1 and 2 is 16 symbols; common suffix pairs are
    # short; both recomputed here by direct comparison
    lcp = max(
        len_common_prefix(a, b) for a in G5.images for b in G5.images if a != b
    )
    lcs = max(
        len_common_prefix(a[::-1], b[::-1]) for a in G5.images for b in G5.images if a != b
    )
    assert (st5.lcp_max, st5.lcs_max) == (lcp, lcs) == (16, 3)
    assert st5.solo_run_max == 16
    assert st5.misaligned_run_bound() == 40


def len_common_prefix(a, b):
    n = 0
    while n < len(a) and a[n] == b[n]:
        n += 1
    return n


def test_run_bound_is_sound_on_enumerated_images():
    # actual match runs inside images never exceed the structural bound
    st2 = analyze_morphism_structure(G2)
    for src in iter_powerfree_ternary(6):
        img = apply_morphism(G2, src)
        for p in range(1, 40):
            run = 0
            best = 0
            for j in range(p, len(img)):
                run = run + 1 if img[j] == img[j - p] else 0
                best = max(best, run)
            assert best <= st2.run_bound(p), (src, p)


def test_certify_g2():
    cert = certify_morphic_tree_coloring(G2, G2_SPEC, 8, "g2")
    assert cert.passed and cert.p_star == 20
    assert cert.factor_len == 8 and cert.covered_window == 84
    names = [c.name for c in cert.checks]
    assert names == ["image-freeness", "directedness", "threshold", "center-scan"]
    scan = cert.checks[3]
    assert scan.params["pmax"] == 19
    assert set(scan.params["dynamic_crossing_periods"]) <= set(range(2, 20))


def test_certificate_json():
    cert = certify_morphic_tree_coloring(G2, G2_SPEC, 8, "g2")
    doc = json.loads(cert.to_json())
    assert doc["beta"] == "19/10"
    assert doc["passed"] is True
    assert doc["p_star"] == 20
    assert doc["images"] == list(G2.images)
    # keys are sorted in the serialized form
    text = cert.to_json()
    top_keys = [line.split('"')[1] for line in text.splitlines() if line.startswith('  "')]
    assert top_keys == sorted(top_keys)


def test_certify_constant_morphism_fails_freeness():
    const = Morphism(("0", "0", "0"))
    spec = BranchCheckSpec(1, PowerFreeSpec(Fraction(19, 10), min_period=1), 2)
    cert = certify_morphic_tree_coloring(const, spec, 4, "const")
    assert not cert.passed
    assert not cert.checks[0].passed
    assert cert.checks[0].counterexample["repetition"]["period"] == 1


def test_certify_factor_len_too_small():
    with pytest.raises(ConfigurationError) as exc:
        certify_morphic_tree_coloring(G2, G2_SPEC, 3)
    assert exc.value.min_factor_len == 5
    # the reported minimum is itself admissible
    cert = certify_morphic_tree_coloring(G2, G2_SPEC, exc.value.min_factor_len)
    assert cert.passed


def test_certify_small_period_max_consistency():
    bad = BranchCheckSpec(2, PowerFreeSpec(Fraction(19, 10), min_period=2), 3, 25)
    with pytest.raises(ConfigurationError):
        certify_morphic_tree_coloring(G2, bad, 8)
    good = BranchCheckSpec(2, PowerFreeSpec(Fraction(19, 10), min_period=2), 3, 19)
    assert certify_morphic_tree_coloring(G2, good, 8).passed


def test_branch_check_spec_invariants():
    with pytest.raises(ValueError):
        BranchCheckSpec(0, PowerFreeSpec(Fraction(19, 10)), 3)
    with pytest.raises(ValueError):
        BranchCheckSpec(3, PowerFreeSpec(Fraction(19, 10)), 3, 1)


def test_build_level_tree_examples():
    g, coloring = build_level_tree("012", 2, 1)
    assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]
    # leaf-to-root colors spell the word
    assert [coloring.colors[v] for v in (2, 1, 0)] == [0, 1, 2]
    g0, c0 = build_level_tree("012", 0, 1)
    assert g0.n == 1 and c0.colors == (0,)
    with pytest.raises(ValueError):
        build_level_tree("01", 2, 1)


def test_level_tree_small_oracle():
    # depth-6 binary tree colored through g2 has no squares of period >= 2
    word = apply_morphism(G2, "010")
    g, coloring = build_level_tree(word, 6, 2)
    assert verify_coloring(g, coloring, 2, 13) is None
