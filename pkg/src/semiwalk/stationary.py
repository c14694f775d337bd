"""Stationary distributions of semigroup random walks, computed exactly.

Pipeline: expand the right Cayley graph (transition-edge identification,
then simple-path expansion), enumerate normal forms (shortest simple paths
from the root into the ideal), and for each normal form sum the weights of
all ideal-avoiding walks that loop-erase to it.  That sum is obtained by
weighted state elimination on the ideal-pruned expansion graph, which also
yields, in a second semiring, a regular expression for the walk language.

When the minimal ideal is left zero the per-normal-form sums grouped by
expansion element are the stationary distribution of the expanded chain;
lumping by underlying element gives the chain on the semigroup itself.
Otherwise a fresh zero generator is adjoined with formal weight t, the
user's weights are scaled by (1-t), the left-zero pipeline runs over the
field of rational functions in t, and the limit t -> 0 is taken exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .core import (
    ASemigroup,
    IdealSet,
    SemigroupError,
    Word,
    adjoin_zero,
    kernel_is_left_zero,
    minimal_ideal,
)
from .expansions import KRExpansion, McExpansion, karnofsky_rhodes, mccammond
from .kleene import (
    DivergentStar,
    KleeneExpr,
    Letter,
    concat,
    pretty,
    star,
    union,
    zimin_rewrite,
)
from .ratfunc import RatF


class NotACodeWord(SemigroupError):
    pass


# -- probabilities -------------------------------------------------------------


def uniform_probs(S: ASemigroup) -> list[Fraction]:
    k = S.n_gens
    return [Fraction(1, k)] * k


def parse_probs(text: str, S: ASemigroup) -> list[Fraction]:
    """Parse 'a=1/3,b=2/3' into per-generator exact weights."""
    by_name: dict[str, Fraction] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise SemigroupError(f"bad probability entry {part!r}")
        name, val = part.split("=", 1)
        by_name[name.strip()] = Fraction(val.strip())
    missing = [n for n in S.gen_names if n not in by_name]
    if missing:
        raise SemigroupError(f"missing probabilities for generators {missing}")
    extra = [n for n in by_name if n not in S.gen_names]
    if extra:
        raise SemigroupError(f"unknown generators {extra}")
    return validate_probs(S, [by_name[n] for n in S.gen_names])


def validate_probs(S: ASemigroup, xs: Sequence[Fraction]) -> list[Fraction]:
    xs = [Fraction(v) for v in xs]
    if len(xs) != S.n_gens:
        raise SemigroupError("one probability per generator required")
    if any(not (0 < v <= 1) for v in xs):
        raise SemigroupError("probabilities must lie in (0, 1]")
    if sum(xs) != 1:
        raise SemigroupError(f"probabilities sum to {sum(xs)}, not 1")
    return xs


# -- semaphore machinery ---------------------------------------------------------


def ideal_preimage_predicate(S: ASemigroup, I: IdealSet) -> Callable[[Word], bool]:
    """Word predicate: does the word's image lie in the ideal?"""
    members = I.members

    def pred(word: Word) -> bool:
        return S.product(word) in members

    return pred


def is_code_word(S: ASemigroup, word: Word, I: IdealSet) -> bool:
    """True iff the word enters the ideal exactly at its last letter."""
    if not word:
        return False
    e = S.gens[word[0]]
    for i, g in enumerate(word[1:], start=1):
        if e in I.members:
            return False
        e = S.mult(e, S.gens[g])
    return e in I.members


def semaphore_left_action(
    S: ASemigroup, word: Word, a: int, I: IdealSet | None = None
) -> Word:
    """Prefix of a.word that first enters the ideal.

    The input must itself be a code word (minimal ideal-entering word).
    """
    if I is None:
        I = minimal_ideal(S)
    if not is_code_word(S, word, I):
        raise NotACodeWord(f"{word} is not minimal for the ideal")
    new = (a,) + tuple(word)
    e = S.gens[new[0]]
    if e in I.members:
        return (new[0],)
    for i in range(1, len(new)):
        e = S.mult(e, S.gens[new[i]])
        if e in I.members:
            return new[: i + 1]
    raise AssertionError("prepending a letter must still reach the ideal")


# -- normal forms and the engine ------------------------------------------------


@dataclass
class NormalForm:
    word: Word
    mc_vertex: int
    kr_vertex: int
    s_element: int


@dataclass
class NormalFormSet:
    forms: list[NormalForm]

    @property
    def words(self) -> list[Word]:
        return [nf.word for nf in self.forms]

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)


class StationaryEngine:
    """Shared expansion state for one semigroup and one target ideal."""

    def __init__(
        self,
        S: ASemigroup,
        ideal: IdealSet | None = None,
        kr_cap: int | None = None,
        mc_cap: int | None = None,
    ):
        self.S = S
        self.ideal = ideal if ideal is not None else minimal_ideal(S)
        kw = {}
        if kr_cap is not None:
            kw["cap"] = kr_cap
        self.kr: KRExpansion = karnofsky_rhodes(S, **kw)
        kw = {}
        if mc_cap is not None:
            kw["cap"] = mc_cap
        self.mc: McExpansion = mccammond(self.kr.graph, **kw)

        g = self.mc.graph
        members = self.ideal.members
        self._in_ideal = [
            (img is not None and img in members) for img in g.s_image
        ]
        self.live = [v for v in range(g.n) if not self._in_ideal[v]]
        self._depth = [0] * g.n
        for v in range(1, g.n):
            self._depth[v] = self._depth[self.mc.parent[v]] + 1
        self._word = [self.mc.path_word(v) for v in range(g.n)]

        forms = []
        for v in range(1, g.n):
            if self._in_ideal[v] and not self._in_ideal[self.mc.parent[v]]:
                forms.append(
                    NormalForm(
                        word=self._word[v],
                        mc_vertex=v,
                        kr_vertex=self.mc.endpoint[v],
                        s_element=g.s_image[v],
                    )
                )
        forms.sort(key=lambda nf: nf.word)
        self.normal_forms = NormalFormSet(forms)
        self._nf_vertices = {nf.mc_vertex for nf in forms}

    # -- exact values, all normal forms in one elimination pass ---------------

    def values(self, xs: Sequence) -> dict[int, object]:
        """Walk-weight sum per normal form (keyed by expansion vertex).

        One state elimination over the ideal-pruned graph, deepest vertices
        first; the value of a normal form is the accumulated weight of the
        root edge into it.
        """
        one = _one_of(xs)
        g = self.mc.graph
        live = set(self.live)
        targets = self._nf_vertices
        out: dict[int, dict[int, object]] = {v: {} for v in self.live}
        inc: dict[int, dict[int, object]] = {v: {} for v in self.live}
        for v in self.live:
            for a, w in enumerate(g.out[v]):
                if w is None:
                    continue
                if w in live or w in targets:
                    _acc(out[v], w, xs[a])
                    if w in live:
                        _acc(inc[w], v, xs[a])
                else:
                    raise AssertionError(
                        "edge from outside the ideal must enter at a normal form"
                    )

        order = sorted(
            (v for v in self.live if v != 0),
            key=lambda v: (-self._depth[v], self._word[v]),
        )
        for v in order:
            loop = out[v].pop(v, None)
            inc[v].pop(v, None)
            factor = one if loop is None else _star_value(loop, one)
            ins = inc.pop(v)
            outs = out.pop(v)
            for u in ins:
                out[u].pop(v, None)
            for w in outs:
                if w in inc:
                    inc[w].pop(v, None)
            for u, wu in ins.items():
                base = wu * factor
                for w, ww in outs.items():
                    piece = base * ww
                    _acc(out[u], w, piece)
                    if w in inc:
                        _acc(inc[w], u, piece)

        root_out = out[0]
        return {v: root_out.get(v, None) for v in targets}

    # -- symbolic expression for one normal form ------------------------------

    def expression(self, nf: NormalForm, rewrite: bool = True) -> KleeneExpr:
        """Regular expression for the ideal-avoiding walks onto this form.

        Elimination order: vertices off the root geodesic of the target
        first (deepest first, ties by path word), then the geodesic itself
        from the root outward.  This convention reproduces the compact
        left-to-right factored forms: loops attach to the vertex where the
        walk leaves for the target.
        """
        g = self.mc.graph
        target = nf.mc_vertex
        geodesic = []
        v = self.mc.parent[target]
        while v is not None and v != 0:
            geodesic.append(v)
            v = self.mc.parent[v]
        geodesic.reverse()
        geo_set = set(geodesic)

        live = set(self.live)
        out: dict[int, dict[int, KleeneExpr]] = {v: {} for v in self.live}
        inc: dict[int, dict[int, KleeneExpr]] = {v: {} for v in self.live}
        for v in self.live:
            for a, w in enumerate(g.out[v]):
                if w is None:
                    continue
                if w in live or w == target:
                    _acc_expr(out[v], w, Letter(a))
                    if w in live:
                        _acc_expr(inc[w], v, Letter(a))

        off = sorted(
            (v for v in self.live if v != 0 and v not in geo_set),
            key=lambda u: (-self._depth[u], self._word[u]),
        )
        for v in off + geodesic:
            loop = out[v].pop(v, None)
            inc[v].pop(v, None)
            mid = star(loop) if loop is not None else None
            ins = inc.pop(v)
            outs = out.pop(v)
            for u in ins:
                out[u].pop(v, None)
            for w in outs:
                if w in inc:
                    inc[w].pop(v, None)
            for u, eu in ins.items():
                for w, ew in outs.items():
                    piece = concat(eu, mid, ew) if mid is not None else concat(eu, ew)
                    _acc_expr(out[u], w, piece)
                    if w in inc:
                        _acc_expr(inc[w], u, piece)

        expr = out[0].get(target)
        if expr is None:
            raise AssertionError("normal form unreachable from the root")
        return zimin_rewrite(expr) if rewrite else expr


def _acc(d: dict, k, v) -> None:
    old = d.get(k)
    d[k] = v if old is None else old + v


def _acc_expr(d: dict, k, e: KleeneExpr) -> None:
    old = d.get(k)
    d[k] = e if old is None else union(old, e)


def _one_of(xs: Sequence):
    sample = xs[0]
    if isinstance(sample, Fraction):
        return Fraction(1)
    return sample.one()


def _star_value(v, one):
    if isinstance(v, Fraction):
        if v >= 1:
            raise DivergentStar(f"loop weight {v} >= 1: ideal unreachable from a cycle")
        return one / (one - v)
    if v == one:
        raise DivergentStar("loop weight 1: ideal unreachable from a cycle")
    return one / (one - v)


def normal_forms(S: ASemigroup, ideal: IdealSet | None = None) -> NormalFormSet:
    return StationaryEngine(S, ideal).normal_forms


def nf_preimage_expr(
    S: ASemigroup, word: Word, engine: StationaryEngine | None = None
) -> KleeneExpr:
    """Expression for the walks that loop-erase to the given normal form."""
    if engine is None:
        engine = StationaryEngine(S)
    for nf in engine.normal_forms:
        if nf.word == tuple(word):
            return engine.expression(nf)
    raise SemigroupError(f"{word} is not a normal form")


# -- results ---------------------------------------------------------------------


@dataclass
class KeyInfo:
    label: str
    word: Word | None = None  # canonical generator word for the state
    alt_label: str | None = None  # adjoined-zero normal form, in limit mode
    element: int | None = None  # underlying semigroup element
    kr_vertex: int | None = None  # vertex in the expansion of the input
    nf_words: tuple[Word, ...] = ()


@dataclass
class StationaryResult:
    over: str  # "kr" | "s" | "lumped"
    entries: dict[str, Fraction]
    key_info: dict[str, KeyInfo] = field(default_factory=dict)

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def __getitem__(self, key: str) -> Fraction:
        return self.entries[key]


def normalization_check(d: StationaryResult) -> bool:
    """Exact check that the masses sum to one."""
    return d.total() == 1


def lump_by_classifier(
    d: StationaryResult, classify: Callable[[KeyInfo], str]
) -> StationaryResult:
    """Project a distribution onto classes of its states."""
    entries: dict[str, Fraction] = {}
    info: dict[str, KeyInfo] = {}
    for label, value in d.entries.items():
        cls = classify(d.key_info[label])
        entries[cls] = entries.get(cls, Fraction(0)) + value
        info.setdefault(cls, KeyInfo(label=cls))
    ordered = dict(sorted(entries.items()))
    return StationaryResult("lumped", ordered, info)


# -- the two stationary distributions --------------------------------------------


def stationary_kr(
    S: ASemigroup,
    xs: Sequence[Fraction],
    force_limit: bool = False,
    engine: StationaryEngine | None = None,
) -> StationaryResult:
    """Stationary distribution of the walk on the expanded semigroup.

    States are the elements of the minimal ideal of the expansion; exact
    rational masses.  Falls back to the adjoined-zero limit when the
    minimal ideal is not left zero (or when forced).
    """
    xs = validate_probs(S, xs)
    I = minimal_ideal(S)
    if kernel_is_left_zero(S, I) and not force_limit:
        return _stationary_kr_direct(S, xs, I, engine)
    return _stationary_kr_limit(S, xs)


def _stationary_kr_direct(
    S: ASemigroup,
    xs: Sequence,
    I: IdealSet,
    engine: StationaryEngine | None = None,
) -> StationaryResult:
    if engine is None:
        engine = StationaryEngine(S, I)
    vals = engine.values(xs)

    by_kr: dict[int, list[NormalForm]] = {}
    for nf in engine.normal_forms:
        by_kr.setdefault(nf.kr_vertex, []).append(nf)

    entries: dict[str, Fraction] = {}
    info: dict[str, KeyInfo] = {}
    for kr_v in sorted(by_kr, key=lambda v: min(nf.word for nf in by_kr[v])):
        forms = sorted(by_kr[kr_v], key=lambda nf: nf.word)
        total = None
        for nf in forms:
            v = vals[nf.mc_vertex]
            if v is None:
                continue
            total = v if total is None else total + v
        if total is None:
            continue
        canonical = forms[0].word
        label = S.word_label(canonical)
        entries[label] = total
        info[label] = KeyInfo(
            label=label,
            word=canonical,
            element=forms[0].s_element,
            kr_vertex=kr_v,
            nf_words=tuple(nf.word for nf in forms),
        )
    return StationaryResult("kr", entries, info)


def _stationary_kr_limit(S: ASemigroup, xs: Sequence[Fraction]) -> StationaryResult:
    S2 = adjoin_zero(S)
    t = RatF.variable()
    one = RatF.const(1)
    xs2 = [RatF.const(v) * (one - t) for v in xs] + [t]
    I2 = minimal_ideal(S2)
    sym = _stationary_kr_direct(S2, xs2, I2)

    kr1 = karnofsky_rhodes(S)
    K1 = minimal_ideal(kr1.semigroup())
    ideal_vertices = {e + 1 for e in K1.members}
    zero_gen = S.n_gens

    entries: dict[str, Fraction] = {}
    info: dict[str, KeyInfo] = {}
    collected = []
    for alt_label, value in sym.entries.items():
        ki = sym.key_info[alt_label]
        word2 = ki.word
        if any(g == zero_gen for g in word2[:-1]) or word2[-1] != zero_gen:
            # the adjoined zero letter can only appear once, at the very end
            raise AssertionError("malformed adjoined-zero normal form")
        u = word2[:-1]
        limit = value.limit_at_zero()
        if not u:
            if limit != 0:
                raise AssertionError("pure-zero state must vanish in the limit")
            continue
        v1 = kr1.graph.follow(kr1.graph.root, u)
        if v1 not in ideal_vertices:
            if limit != 0:
                raise AssertionError(
                    "state outside the expansion ideal kept mass in the limit"
                )
            continue
        collected.append((kr1.words[v1], v1, limit, ki.nf_words, alt_label))

    collected.sort(key=lambda item: item[0])
    for word1, v1, limit, nf_words, alt_label in collected:
        label = S.word_label(word1)
        if label in entries:
            raise AssertionError("two adjoined-zero states mapped to one state")
        entries[label] = limit
        info[label] = KeyInfo(
            label=label,
            word=word1,
            alt_label=alt_label,
            element=kr1.graph.s_image[v1],
            kr_vertex=v1,
            nf_words=nf_words,
        )
    return StationaryResult("kr", entries, info)


def stationary_s(
    S: ASemigroup, xs: Sequence[Fraction], force_limit: bool = False
) -> StationaryResult:
    """Stationary distribution of the walk on the semigroup itself.

    Obtained from the expansion-level distribution by summing over states
    with the same underlying element.
    """
    kr_level = stationary_kr(S, xs, force_limit=force_limit)
    by_element: dict[int, Fraction] = {}
    for label, value in kr_level.entries.items():
        e = kr_level.key_info[label].element
        by_element[e] = by_element.get(e, Fraction(0)) + value
    entries: dict[str, Fraction] = {}
    info: dict[str, KeyInfo] = {}
    for e in sorted(by_element, key=lambda e: S.element_name(e)):
        label = S.element_name(e)
        entries[label] = by_element[e]
        info[label] = KeyInfo(label=label, element=e)
    return StationaryResult("s", entries, info)


def expressions_report(
    S: ASemigroup, engine: StationaryEngine | None = None
) -> dict[str, str]:
    """Pretty-printed expression per normal form (dict preserves sort order)."""
    if engine is None:
        engine = StationaryEngine(S)
    out = {}
    for nf in engine.normal_forms:
        out[S.word_label(nf.word)] = pretty(engine.expression(nf), S.gen_names)
    return out
