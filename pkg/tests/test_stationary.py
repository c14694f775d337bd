from fractions import Fraction
from itertools import permutations

import pytest

from semiwalk.core import IdealSet, SizeCapExceeded, adjoin_zero, minimal_ideal
from semiwalk.expansions import karnofsky_rhodes
from semiwalk.kleene import enumerate_words, evaluate_expr, pretty, series
from semiwalk.stationary import (
    NotACodeWord,
    StationaryEngine,
    expressions_report,
    ideal_preimage_predicate,
    is_code_word,
    lump_by_classifier,
    nf_preimage_expr,
    normal_forms,
    normalization_check,
    parse_probs,
    semaphore_left_action,
    stationary_kr,
    stationary_s,
    uniform_probs,
)
from semiwalk import families

F = Fraction
HALF = [F(1, 2), F(1, 2)]
X25 = [F(2, 5), F(3, 5)]


# -- probabilities ---------------------------------------------------------------


def test_parse_probs(b2):
    assert parse_probs("a=1/2, b=1/2", b2) == HALF
    with pytest.raises(Exception):
        parse_probs("a=1/2", b2)
    with pytest.raises(Exception):
        parse_probs("a=1/2,b=1/3", b2)
    with pytest.raises(Exception):
        parse_probs("a=0,b=1", b2)


# -- semaphore machinery -----------------------------------------------------------


def test_ideal_preimage_predicate(p3, b2):
    pred = ideal_preimage_predicate(p3, minimal_ideal(p3))
    assert pred((0, 1, 2))
    assert not pred((0, 1))
    predb = ideal_preimage_predicate(b2, minimal_ideal(b2))
    assert predb((0, 0))  # aa lands on the sink


def test_code_words(p3, b2):
    I3 = minimal_ideal(p3)
    assert is_code_word(p3, (0, 2, 1), I3)
    assert not is_code_word(p3, (0, 2), I3)
    assert not is_code_word(p3, (0, 1, 2, 0), I3)
    Ib = minimal_ideal(b2)
    assert is_code_word(b2, (0, 0), Ib)


def test_semaphore_left_action_examples(p3, b2, z2x01_quotient):
    I3 = minimal_ideal(p3)
    # prepending 2 to 132 enters the ideal at 213
    assert semaphore_left_action(p3, (0, 2, 1), 1, I3) == (1, 0, 2)
    Sq = z2x01_quotient
    Iq = minimal_ideal(Sq)
    # b.(b b^{2k} a) extends the run of b's
    assert semaphore_left_action(Sq, (1, 0), 1, Iq) == (1, 1, 0)
    assert semaphore_left_action(Sq, (1, 1, 0), 1, Iq) == (1, 1, 1, 0)
    # a.s truncates immediately
    assert semaphore_left_action(Sq, (1, 1, 0), 0, Iq) == (0,)
    with pytest.raises(NotACodeWord):
        semaphore_left_action(p3, (0, 1), 0, I3)


# -- normal forms ------------------------------------------------------------------


def test_normal_forms_tsetlin(p3):
    nfs = normal_forms(p3)
    words = {p3.word_label(w) for w in nfs.words}
    assert words == {"".join(str(a + 1) for a in pi) for pi in permutations(range(3))}


def test_normal_forms_b2(b2):
    nfs = normal_forms(b2)
    assert [b2.word_label(w) for w in nfs.words] == ["aa", "abb", "baa", "bb"]


def test_normal_forms_quotient(z2x01_quotient):
    nfs = normal_forms(z2x01_quotient)
    assert [z2x01_quotient.word_label(w) for w in nfs.words] == ["a", "ba", "bba"]


def test_normal_forms_custom_ideal(p3):
    # target the ideal of subsets of size >= 2: entry happens at the second
    # letter, so the forms are the ordered pairs
    names = p3.element_names()
    members = {e for e, nm in enumerate(names) if len(nm) >= 2}
    nfs = normal_forms(p3, IdealSet(members))
    labels = [p3.word_label(w) for w in nfs.words]
    assert labels == ["12", "13", "21", "23", "31", "32"]


def test_engine_caps_propagate(z2x01_quotient):
    with pytest.raises(SizeCapExceeded):
        StationaryEngine(z2x01_quotient, mc_cap=2)
    with pytest.raises(SizeCapExceeded):
        StationaryEngine(z2x01_quotient, kr_cap=2)


def test_normal_forms_adjoined_zero(z2x01):
    S2 = adjoin_zero(z2x01)
    nfs = normal_forms(S2)
    labels = [S2.word_label(w) for w in nfs.words]
    z = "□"
    assert labels == sorted(
        [z, "a" + z, "aa" + z, "ab" + z, "b" + z, "bb" + z, "ba" + z,
         "baa" + z, "bab" + z, "bba" + z, "bbaa" + z, "bbab" + z]
    )


# -- expressions -------------------------------------------------------------------


def test_b2_expressions(b2):
    report = expressions_report(b2)
    assert report == {
        "aa": "a(ba)⋆a",
        "abb": "ab(ab)⋆b",
        "baa": "ba(ba)⋆a",
        "bb": "b(ab)⋆b",
    }


def test_quotient_expressions(z2x01_quotient):
    report = expressions_report(z2x01_quotient)
    assert report == {"a": "a", "ba": "b(bb)⋆a", "bba": "bb(bb)⋆a"}


def test_tsetlin_expression_structure(p3):
    e = nf_preimage_expr(p3, (0, 1, 2))
    # first letter occurs before any loop; value matches the direct formula
    x = [F(1, 2), F(1, 3), F(1, 6)]
    assert evaluate_expr(e, x) == families.hendricks(x, (0, 1, 2))
    assert pretty(e, p3.gen_names).startswith("11⋆2")


def test_expression_values_match_engine(b2, p3, z2x01_quotient):
    for S, xs in ((b2, HALF), (p3, [F(1, 2), F(1, 3), F(1, 6)]),
                  (z2x01_quotient, X25)):
        engine = StationaryEngine(S)
        vals = engine.values(xs)
        for nf in engine.normal_forms:
            e = engine.expression(nf)
            assert evaluate_expr(e, xs) == vals[nf.mc_vertex]


def _brute_force_walk_series(engine, nf, xs, max_len):
    """Weights of ideal-avoiding walks onto nf, graded by length."""
    g = engine.mc.graph
    out = [F(0)] * (max_len + 1)
    target = nf.mc_vertex
    stack = [(0, F(1), 0)]
    while stack:
        v, w, depth = stack.pop()
        if depth >= max_len:
            continue
        for a, u in enumerate(g.out[v]):
            if u is None:
                continue
            piece = w * xs[a]
            if u == target:
                out[depth + 1] += piece
            elif u in engine._nf_vertices or engine._in_ideal[u]:
                continue
            else:
                stack.append((u, piece, depth + 1))
    return out


def test_expression_series_exact_to_length_12(b2, z2x01_quotient, p3):
    fixtures = [
        (b2, HALF, 12),
        (z2x01_quotient, X25, 12),
        (p3, [F(1, 2), F(1, 3), F(1, 6)], 12),
    ]
    for S, xs, depth in fixtures:
        engine = StationaryEngine(S)
        for nf in engine.normal_forms:
            e = engine.expression(nf)
            truncated = series(e, xs, depth)
            brute = _brute_force_walk_series(engine, nf, xs, depth)
            assert truncated == brute


def test_expression_words_are_code_words(b2):
    engine = StationaryEngine(b2)
    I = minimal_ideal(b2)
    for nf in engine.normal_forms:
        words = enumerate_words(engine.expression(nf), 9)
        assert all(c == 1 for c in words.values())  # unambiguous
        for w in words:
            assert is_code_word(b2, w, I)


# -- stationary distributions -------------------------------------------------------


def test_stationary_b2(b2):
    r = stationary_kr(b2, HALF)
    assert dict(r.entries) == {
        "aa": F(1, 3), "abb": F(1, 6), "baa": F(1, 6), "bb": F(1, 3)
    }
    assert normalization_check(r)
    xa, xb = X25
    r2 = stationary_kr(b2, X25)
    assert r2["aa"] == xa * xa / (1 - xa * xb)
    assert r2["abb"] == xa * xb * xb / (1 - xa * xb)


def test_stationary_quotient_closed_forms(z2x01_quotient):
    xa, xb = X25
    r = stationary_kr(z2x01_quotient, X25)
    assert r["a"] == xa
    assert r["ba"] == xa * xb / (1 - xb * xb)
    assert r["bba"] == xa * xb * xb / (1 - xb * xb)
    assert normalization_check(r)


def test_stationary_tsetlin(p3):
    uniform = uniform_probs(p3)
    r = stationary_kr(p3, uniform)
    assert all(v == F(1, 6) for v in r.entries.values())
    x = [F(1, 2), F(1, 3), F(1, 6)]
    r2 = stationary_kr(p3, x)
    assert r2["123"] == F(1, 3)
    for pi in permutations(range(3)):
        label = "".join(str(a + 1) for a in pi)
        assert r2[label] == families.hendricks(x, pi)


def test_stationary_s_tsetlin_is_degenerate(p3):
    # the walk on the subsets themselves is absorbed at the full set
    r = stationary_s(p3, uniform_probs(p3))
    assert dict(r.entries) == {"123": F(1)}


def test_stationary_s_on_expanded_semigroup(p3):
    # the walk on the expanded semigroup has the arrangement states
    S = karnofsky_rhodes(p3).semigroup()
    x = [F(1, 2), F(1, 3), F(1, 6)]
    r = stationary_s(S, x)
    assert len(r.entries) == 6
    for pi in permutations(range(3)):
        label = "".join(str(a + 1) for a in pi)
        assert r[label] == families.hendricks(x, pi)


def test_limit_mode_z2x01(z2x01):
    xa, xb = X25
    r = stationary_kr(z2x01, X25)
    c = xa * xb / (2 * (1 - xb * xb))
    assert dict(r.entries) == {
        "a": xa / 2, "aa": xa / 2, "ba": c, "baa": c,
        "bba": c * xb, "bbaa": c * xb,
    }
    assert normalization_check(r)
    rs = stationary_s(z2x01, X25)
    assert dict(rs.entries) == {"(1,0)": F(1, 2), "(z,0)": F(1, 2)}


def test_adjoined_zero_table_at_concrete_weight(z2x01):
    # direct run on the enlarged semigroup at zero weight 1/10; nine classes,
    # two normal forms merging into one class at depths 2 and deeper
    t = F(1, 10)
    a0, b0 = X25
    xa, xb, xz = a0 * (1 - t), b0 * (1 - t), t
    S2 = adjoin_zero(z2x01)
    r = stationary_kr(S2, [xa, xb, xz])
    z = "□"
    s = xa + xb
    big = 1 - s * s
    small = 1 - xb * xb
    want = {
        z: xz,
        "a" + z: xa * xz / big,
        "aa" + z: xa * s * xz / big,
        "b" + z: xb * xz / small,
        "bb" + z: xb * xb * xz / small,
        "ba" + z: xa * xb * xz / (small * big),
        "baa" + z: xa * s * xb * xz / (small * big),
        "bba" + z: xa * xb * xb * xz / (small * big),
        "bbaa" + z: xa * s * xb * xb * xz / (small * big),
    }
    assert dict(r.entries) == want
    assert r.key_info["aa" + z].nf_words == ((0, 0, 2), (0, 1, 2))  # aa|ab
    assert normalization_check(r)


def test_limit_mode_alt_labels(z2x01):
    r = stationary_kr(z2x01, HALF)
    z = "□"
    assert r.key_info["a"].alt_label == "a" + z
    assert r.key_info["aa"].alt_label == "aa" + z


def test_limit_reproduces_direct_when_left_zero(b2, p3, flipflop):
    for S, xs in ((b2, HALF), (p3, [F(1, 2), F(1, 3), F(1, 6)]),
                  (flipflop, X25)):
        direct = stationary_kr(S, xs)
        limit = stationary_kr(S, xs, force_limit=True)
        assert dict(direct.entries) == dict(limit.entries)


def test_rees_limit(tmp_path):
    S = families.rees_general()
    xa, xb = X25
    r = stationary_kr(S, X25)
    assert r["a"] == xa * xa / 2
    assert r["ab"] == xa * xb / 2
    assert r["aba"] == xa * xa / 2
    assert r["abab"] == xa * xb / 2
    assert r["b"] == xb * xb / 2
    assert r["bab"] == xb * xb / 2
    assert normalization_check(r)
    z = "□"
    assert r.key_info["a"].alt_label == "a" + z
    assert r.key_info["ab"].alt_label == "ab" + z


def test_lump_by_classifier_total(b2):
    r = stationary_kr(b2, HALF)
    lumped = lump_by_classifier(r, lambda info: "all")
    assert dict(lumped.entries) == {"all": F(1)}


def test_normalization_check_negative():
    from semiwalk.stationary import StationaryResult

    bad = StationaryResult("kr", {"x": F(1, 2), "y": F(1, 3)})
    assert not normalization_check(bad)


def test_hendricks_product_up_to_n4():
    for n in (2, 3, 4):
        S = families.tsetlin(n)
        weights = [F(2 ** (n - i)) for i in range(n)]
        total = sum(weights)
        xs = [w / total for w in weights]
        r = stationary_kr(S, xs)
        for pi in permutations(range(n)):
            label = "".join(str(a + 1) for a in pi)
            assert r[label] == families.hendricks(xs, pi)


def test_r_trivial_product_formula(p3, flipflop):
    fixtures = [
        (p3, [F(1, 2), F(1, 3), F(1, 6)]),
        (flipflop, X25),
        (families.flat_tower(2, 1), [F(1, 6), F(1, 3), F(1, 2)]),
    ]
    for S, xs in fixtures:
        closed = families.r_trivial_stationary(S, xs)
        r = stationary_kr(S, xs)
        assert dict(r.entries) == closed
