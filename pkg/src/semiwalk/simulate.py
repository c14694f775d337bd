"""Seeded Monte Carlo walks on the word level, for end-to-end verification.

Random number generator contract: SplitMix64 (Steele-Lea-Vigna), 64-bit
state, advancing by the golden-ratio increment and finalizing with two
xor-multiply rounds.  Walker w of a run seeded with s uses the stream
seeded by mix64(mix64(s) ^ (GOLDEN * (w+1) mod 2^64)).  Letters are drawn
by comparing the top 53 bits of the next output against cumulative integer
thresholds floor(cum_i * 2^53).  Everything is integer arithmetic, so runs
are bit-identical across platforms for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ASemigroup, SemigroupError, Word, adjoin_zero, kernel_is_left_zero, minimal_ideal
from .expansions import karnofsky_rhodes
from .stationary import validate_probs

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return mix64(self.state)

    def next53(self) -> int:
        return self.next64() >> 11


def walker_seed(seed: int, index: int) -> int:
    return mix64(mix64(seed) ^ ((_GOLDEN * (index + 1)) & _MASK))


def _thresholds(xs: Sequence[Fraction]) -> list[int]:
    acc = Fraction(0)
    out = []
    for v in xs:
        acc += v
        out.append(int(acc * (1 << 53)))
    out[-1] = 1 << 53
    return out


def _draw(rng: SplitMix64, thresholds: list[int]) -> int:
    r = rng.next53()
    for i, t in enumerate(thresholds):
        if r < t:
            return i
    raise AssertionError("thresholds must cover the draw range")


@dataclass
class EmpiricalDistribution:
    counts: dict[str, int]
    total: int

    def probs(self) -> dict[str, float]:
        return {k: c / self.total for k, c in sorted(self.counts.items())}

    def to_csv(self) -> str:
        lines = ["state,count,frequency"]
        for k, c in sorted(self.counts.items()):
            lines.append(f"{k},{c},{c / self.total!r}")
        return "\n".join(lines) + "\n"

    # mapping-style access so tv_distance can consume it directly
    def __iter__(self):
        return iter(self.counts)

    def get(self, key, default=0):
        return self.counts.get(key, 0) / self.total if self.total else default

    def keys(self):
        return self.counts.keys()


class _WordWalk:
    """Walk on minimal ideal-entering words with memoized steps and lumping."""

    def __init__(self, S: ASemigroup, ideal, space: str):
        self.S = S
        self.ideal = ideal
        self.members = ideal.members
        self.space = space
        if space == "kr_ideal":
            self.kr = karnofsky_rhodes(S)
        elif space != "k_s":
            raise SemigroupError(f"unknown lumping space {space!r}")
        self._step_memo: dict[tuple[int, Word], Word] = {}
        self._lump_memo: dict[Word, str] = {}

    def first_entry_prefix(self, word: Word) -> Word:
        e = self.S.gens[word[0]]
        if e in self.members:
            return word[:1]
        for i in range(1, len(word)):
            e = self.S.mult(e, self.S.gens[word[i]])
            if e in self.members:
                return word[: i + 1]
        raise AssertionError("word does not reach the ideal")

    def step(self, word: Word, a: int) -> Word:
        key = (a, word)
        nxt = self._step_memo.get(key)
        if nxt is None:
            nxt = self.first_entry_prefix((a,) + word)
            if len(self._step_memo) < 200_000:
                self._step_memo[key] = nxt
        return nxt

    def lump(self, word: Word) -> str:
        lab = self._lump_memo.get(word)
        if lab is None:
            if self.space == "k_s":
                lab = self.S.element_name(self.S.product(word))
            else:
                g = self.kr.graph
                v = g.follow(g.root, word)
                lab = self.S.word_label(self.kr.words[v])
            if len(self._lump_memo) < 200_000:
                self._lump_memo[word] = lab
        return lab

    def initial_word(self, rng: SplitMix64, thresholds: list[int]) -> Word:
        word: list[int] = []
        e = None
        while True:
            a = _draw(rng, thresholds)
            word.append(a)
            e = self.S.gens[a] if e is None else self.S.mult(e, self.S.gens[a])
            if e in self.members:
                return tuple(word)


def _prepare(S, xs, zero_weight):
    xs = validate_probs(S, xs)
    I = minimal_ideal(S)
    if kernel_is_left_zero(S, I):
        return S, xs, I
    if zero_weight is None:
        raise SemigroupError(
            "minimal ideal is not left zero; pass zero_weight to walk the "
            "adjoined-zero model at an explicit zero probability"
        )
    w = Fraction(zero_weight)
    S2 = adjoin_zero(S)
    xs2 = [v * (1 - w) for v in xs] + [w]
    return S2, validate_probs(S2, xs2), minimal_ideal(S2)


def simulate_semaphore(
    S: ASemigroup,
    xs: Sequence[Fraction],
    walkers: int,
    steps: int,
    seed: int,
    space: str = "kr_ideal",
    zero_weight: Fraction | None = None,
) -> EmpiricalDistribution:
    """Occupation measure of the lumped word walk.

    Each walker samples its initial minimal ideal-entering word letter by
    letter (which samples the word-level stationary law exactly), then
    takes ``steps`` left-action steps, recording the lumped state after
    each one.  Counts aggregate over walkers.
    """
    S, xs, I = _prepare(S, xs, zero_weight)
    walk = _WordWalk(S, I, space)
    thresholds = _thresholds(xs)
    counts: dict[str, int] = {}
    for w in range(walkers):
        rng = SplitMix64(walker_seed(seed, w))
        word = walk.initial_word(rng, thresholds)
        for _ in range(steps):
            word = walk.step(word, _draw(rng, thresholds))
            lab = walk.lump(word)
            counts[lab] = counts.get(lab, 0) + 1
    return EmpiricalDistribution(counts, walkers * steps)


def simulate_state_at(
    S: ASemigroup,
    xs: Sequence[Fraction],
    walkers: int,
    steps: int,
    seed: int,
    space: str = "kr_ideal",
    start_word: Word | None = None,
    zero_weight: Fraction | None = None,
) -> EmpiricalDistribution:
    """Empirical law of the lumped state after exactly ``steps`` steps.

    All walkers start from the same word (default: the lexicographically
    first shortest ideal-entering word), so this measures worst-case-style
    convergence from a point mass.
    """
    S, xs, I = _prepare(S, xs, zero_weight)
    walk = _WordWalk(S, I, space)
    thresholds = _thresholds(xs)
    if start_word is None:
        start_word = _lex_first_code_word(S, I)
    counts: dict[str, int] = {}
    for w in range(walkers):
        rng = SplitMix64(walker_seed(seed, w))
        word = tuple(start_word)
        for _ in range(steps):
            word = walk.step(word, _draw(rng, thresholds))
        lab = walk.lump(word)
        counts[lab] = counts.get(lab, 0) + 1
    return EmpiricalDistribution(counts, walkers)


def _lex_first_code_word(S: ASemigroup, I) -> Word:
    frontier: list[tuple[Word, int]] = []
    for a, e in enumerate(S.gens):
        if e in I.members:
            return (a,)
        frontier.append(((a,), e))
    while frontier:
        nxt = []
        for word, e in frontier:
            for a, ge in enumerate(S.gens):
                f = S.mult(e, ge)
                if f in I.members:
                    return word + (a,)
                nxt.append((word + (a,), f))
        frontier = nxt
    raise SemigroupError("ideal unreachable from the generators")
