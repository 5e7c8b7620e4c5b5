import random

import pytest

from arbora.errors import ArityMismatch, BudgetExceeded
from arbora.family import build_table
from arbora.tree import load_table
from arbora.verifier import (
    CHECK_IDS,
    HkClass,
    Report,
    check_branch_witnesses,
    check_exponent_laws,
    check_free_semigroup,
    check_fractal_witnesses,
    check_hk_and_branch,
    check_lemma_chains,
    check_noncontracting_witness,
    check_parity_and_even_d,
    check_section_tables,
    check_transitivity,
    run_all,
    sample_words,
)
from arbora.words import Alphabet, Word, parse_word


def test_run_all_passes_at_arity_3():
    reports = run_all(3)
    assert [r.check_id for r in reports] == list(CHECK_IDS)
    assert all(r.status == "pass" for r in reports)


def test_run_all_skips_at_even_arity():
    reports = run_all(4)
    status = {r.check_id: r.status for r in reports}
    assert status["lemma_chains"] == "skip"
    assert status["fractal_witnesses"] == "skip"
    assert status["branch_witnesses"] == "skip"
    assert status["free_semigroup"] == "skip"
    assert status["hk_and_branch"] == "skip"
    for check_id in (
        "exponent_laws",
        "section_tables",
        "noncontracting_witness",
        "transitivity",
        "parity_and_even_d",
    ):
        assert status[check_id] == "pass"
    assert all(r.ok for r in reports)


def test_run_all_is_deterministic():
    first = [(r.check_id, r.status, r.detail) for r in run_all(3, seed=7)]
    second = [(r.check_id, r.status, r.detail) for r in run_all(3, seed=7)]
    assert first == second


def test_individual_checks_at_larger_odd_arities():
    assert check_lemma_chains(7).ok
    assert check_fractal_witnesses(7).ok
    assert check_branch_witnesses(5).ok
    assert check_section_tables(6).ok
    assert check_noncontracting_witness(6).ok


def test_lemma_chain_preconditions():
    with pytest.raises(ValueError):
        check_lemma_chains(4)
    with pytest.raises(ValueError):
        check_lemma_chains(11)
    with pytest.raises(ValueError):
        check_fractal_witnesses(6)
    with pytest.raises(ValueError):
        check_branch_witnesses(4)


def test_transitivity_check():
    t = build_table(3)
    rep = check_transitivity(t, 3)
    assert rep.ok and rep.data["sizes"] == {1: 3, 2: 9, 3: 27}


def test_exponent_laws_fail_on_a_broken_table():
    # same permutations as the built-in arity-3 table, but one section
    # word replaced, which breaks the per-slot count shift
    broken = load_table(
        "a = (a, b, e) (1 2)\n"
        "b = (e, b, c) (2 3)\n"
        "c = (a, e, a) (3 1)\n"
    )
    w = parse_word("c c", broken.alphabet, {"a": 1, "b": 2, "c": 3})
    rep = check_exponent_laws(broken, [w])
    assert rep.status == "fail"
    assert "shift law" in rep.detail


def test_report_ok_property():
    assert Report("x", "pass", "fine").ok
    assert Report("x", "skip", "elsewhere").ok
    assert not Report("x", "fail", "broken").ok


def test_hk_class():
    with pytest.raises(ValueError):
        HkClass(0)
    H1, H2 = HkClass(1), HkClass(2)
    assert H1.modulus == 4 and H2.modulus == 8
    A3 = Alphabet(3)
    a = Word(A3, (1,))
    assert not H1.contains(a)
    assert H1.contains(a**4)
    assert H1.contains(Word(A3, (1, 2, 3, 2)))  # signed total 4
    assert not H2.contains(a**4)
    assert H2.contains(a**8)
    with pytest.raises(ArityMismatch):
        H1.contains(Word(Alphabet(5), (1,)))


def test_hk_and_branch_check():
    rep = check_hk_and_branch(1, seed=3)
    assert rep.ok
    assert rep.data["index_bound"] == 64
    assert rep.data["tuples"]
    for coords in rep.data["tuples"]:
        assert len(coords) == 3 and all(0 <= j < 4 for j in coords)
    rep = check_hk_and_branch(2, seed=3)
    assert rep.ok
    assert rep.data["index_bound"] == 8**9
    with pytest.raises(ValueError):
        check_hk_and_branch(3)


def test_free_semigroup_budget():
    with pytest.raises(BudgetExceeded):
        check_free_semigroup(3, 3, pair_budget=1)


def test_free_semigroup_counts():
    rep = check_free_semigroup(3, 4)
    assert rep.ok
    assert rep.data["words"] == 3 + 9 + 27 + 81


def test_free_semigroup_flags_even_arity_coincidences():
    # at arity 4 the generators a1 and a3 have disjoint supports and
    # commute, so the distinctness property genuinely fails there; the
    # check must find the coincidence rather than report a pass
    rep = check_free_semigroup(4, 2)
    assert rep.status == "fail"
    assert "a1 a3" in rep.detail and "coincide" in rep.detail
    assert rep.data["words"] == 4 + 16


def test_parity_check():
    rep = check_parity_and_even_d(seed=11, sample_size=50)
    assert rep.ok and rep.data["words"] == 50


def test_sample_words_is_seed_stable():
    A = Alphabet(3)
    first = sample_words(A, 20, 10, random.Random(42))
    second = sample_words(A, 20, 10, random.Random(42))
    assert first == second
    assert all(len(w) <= 10 for w in first)
    assert all(w.alphabet is A for w in first)
