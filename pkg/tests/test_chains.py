import math
from fractions import Fraction

import pytest

from semiwalk.chains import (
    NotIrreducible,
    TransitionMatrix,
    build_chain,
    check_lumping,
    mixing_bound,
    stationary_oracle,
    truncated_semaphore_chain,
    tv_distance,
)
from semiwalk.core import semigroup_from_table
from semiwalk.expansions import karnofsky_rhodes
from semiwalk.stationary import stationary_kr, uniform_probs
from semiwalk import families

F = Fraction
HALF = [F(1, 2), F(1, 2)]


def test_column_sums_exact(p3, b2, z2x01):
    for S, xs in ((p3, [F(1, 2), F(1, 3), F(1, 6)]), (b2, HALF),
                  (z2x01, HALF)):
        for space in ("k_s", "kr_ideal"):
            T = build_chain(S, xs, space)
            assert all(v == 1 for v in T.column_sums())


def test_b2_kr_chain_structure(b2):
    T = build_chain(b2, HALF, "kr_ideal")
    assert sorted(T.labels) == ["aa", "abb", "baa", "bb"]
    lab = {name: i for i, name in enumerate(T.labels)}
    # from aa: a loops, b moves to baa
    assert T.cols[lab["aa"]] == {lab["aa"]: F(1, 2), lab["baa"]: F(1, 2)}
    # from baa: a back to aa, b to bb
    assert T.cols[lab["baa"]] == {lab["aa"]: F(1, 2), lab["bb"]: F(1, 2)}
    # from abb: a to aa, b to bb
    assert T.cols[lab["abb"]] == {lab["aa"]: F(1, 2), lab["bb"]: F(1, 2)}


def test_one_state_chain():
    S = semigroup_from_table([[0]], gens=[0], gen_names=["e"])
    T = build_chain(S, [F(1)], "k_s")
    assert T.n == 1 and T.cols[0] == {0: F(1)}
    assert stationary_oracle(T) == {"e": 1.0}


def test_tsetlin_chain_is_move_to_front(p3):
    x = [F(1, 2), F(1, 3), F(1, 6)]
    T = build_chain(p3, x, "kr_ideal")
    assert T.n == 6
    lab = {name: i for i, name in enumerate(T.labels)}
    # letter 2 moves 132 to 213
    assert T.cols[lab["132"]][lab["213"]] == F(1, 3)


def test_oracle_matches_engine(p3, b2, z2x01_quotient):
    fixtures = [
        (b2, HALF),
        (p3, [F(1, 2), F(1, 3), F(1, 6)]),
        (z2x01_quotient, [F(2, 5), F(3, 5)]),
        (families.rees_cycle(2, 2), [F(2, 5), F(3, 5)]),
    ]
    for S, xs in fixtures:
        r = stationary_kr(S, xs)
        T = build_chain(S, xs, "kr_ideal")
        oracle = stationary_oracle(T)
        for k, v in r.entries.items():
            assert abs(float(v) - oracle[k]) < 1e-10


def test_oracle_invariance(b2):
    T = build_chain(b2, HALF, "kr_ideal")
    psi = stationary_oracle(T)
    v = [psi[lab] for lab in T.labels]
    w = T.apply_float(v)
    assert sum(abs(a - b) for a, b in zip(v, w)) < 1e-10


def test_oracle_rejects_two_closed_classes():
    S = families.rees_general()
    T = build_chain(S, HALF, "k_s")
    with pytest.raises(NotIrreducible):
        stationary_oracle(T)


def test_check_lumping_kr_to_s(z2x01_quotient, b2, p3):
    for S, xs in ((z2x01_quotient, [F(2, 5), F(3, 5)]), (b2, HALF),
                  (p3, uniform_probs(p3))):
        r = stationary_kr(S, xs)
        T = build_chain(S, xs, "kr_ideal")
        classes = {lab: S.element_name(r.key_info[lab].element) for lab in T.labels}
        assert check_lumping(T, classes)


def test_check_lumping_negative_control(b2):
    # non-uniform weights so no accidental symmetry lumping survives
    T = build_chain(b2, [F(2, 5), F(3, 5)], "kr_ideal")
    lab = {name: i for i, name in enumerate(T.labels)}
    bad = {"aa": "x", "bb": "x", "abb": "y", "baa": "y"}
    assert set(bad) == set(lab)
    assert not check_lumping(T, bad)


def test_semaphore_truncation_lumps_to_kr(b2, z2x01_quotient):
    for S, xs in ((b2, HALF), (z2x01_quotient, [F(2, 5), F(3, 5)])):
        T, interior, words = truncated_semaphore_chain(S, xs, 12)
        assert interior  # the truncation has a real interior
        kr = karnofsky_rhodes(S)
        classes = {
            lab: S.word_label(kr.words[kr.graph.follow(0, w)])
            for lab, w in words.items()
        }
        assert check_lumping(T, classes, interior)


def test_semaphore_truncation_lumps_to_semigroup():
    # word-level walk lumped straight onto a left-zero ideal with 4 states
    S = families.flat_tower(2, 1)
    xs = [F(1, 2), F(1, 3), F(1, 6)]
    T, interior, words = truncated_semaphore_chain(S, xs, 12)
    assert interior
    classes = {lab: S.element_name(S.product(w)) for lab, w in words.items()}
    assert len(set(classes.values())) == 4
    assert check_lumping(T, classes, interior)


def test_semaphore_truncation_negative(b2):
    T, interior, words = truncated_semaphore_chain(b2, [F(2, 5), F(3, 5)], 12)
    # classify by word length parity: not a lumping
    classes = {lab: str(len(w) % 2) for lab, w in words.items()}
    assert not check_lumping(T, classes, interior)


def test_code_words_form_a_prefix_code(b2, p3):
    # no ideal-entering word is a proper prefix of another
    for S in (b2, p3):
        xs = uniform_probs(S)
        _, _, words = truncated_semaphore_chain(S, xs, 9)
        ws = sorted(words.values())
        for w1, w2 in zip(ws, ws[1:]):
            assert w2[: len(w1)] != w1


def test_tv_distance():
    assert tv_distance({"x": 0.5, "y": 0.5}, {"x": 0.5, "y": 0.5}) == 0
    assert tv_distance({"x": 1.0}, {"y": 1.0}) == 1
    assert abs(tv_distance({"x": 0.5, "y": 0.5},
                           {"x": 1 / 3, "y": 2 / 3}) - 1 / 6) < 1e-15


def test_mixing_bound_tsetlin(p3):
    mb = mixing_bound(p3, uniform_probs(p3), 1)
    assert (mb.n, mb.gap, mb.p_min, mb.k) == (3, 1, F(1, 3), 18)


def test_mixing_bound_single_generator_line():
    n = 4
    table = [[min(i + j + 2, n) - 1 for j in range(n)] for i in range(n)]
    S = semigroup_from_table(table, gens=[0], gen_names=["a"])
    mb = mixing_bound(S, [F(1)], 1)
    assert mb.gap == 1
    assert mb.k == 2 * (mb.n + 1 - 1)  # p = 1


def test_mixing_bound_b2(b2):
    mb = mixing_bound(b2, HALF, 1)
    assert mb.n == 3 and mb.gap == 2 and mb.p_min == F(1, 2)
    assert mb.k == math.ceil(2 * (3 + 2 - 1) / F(1, 2) ** 2)
    assert mb.as_dict()["p_min"] == "1/2"
    import json

    assert json.loads(mb.to_json()) == mb.as_dict()


def test_matrix_validation():
    with pytest.raises(Exception):
        TransitionMatrix(["x"], [{0: F(1, 2)}])
