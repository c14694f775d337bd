"""Independent verification machinery for the exact engine.

Explicit column-stochastic transition matrices (exact rationals), a float
power-iteration oracle kept deliberately separate from the exact path,
lumping-condition checks, total-variation distance and the expansion-based
mixing-time bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import ASemigroup, SemigroupError, minimal_ideal
from .expansions import karnofsky_rhodes, mccammond
from .graphs import sccs, transition_edges


class NotConverged(ArithmeticError):
    pass


class NotIrreducible(SemigroupError):
    pass


class TransitionMatrix:
    """Sparse column-stochastic matrix with state labels.

    cols[s] maps target index -> exact probability of s -> target.
    """

    def __init__(self, labels: Sequence[str], cols: list[dict[int, Fraction]],
                 validate: bool = True):
        self.labels = list(labels)
        self.cols = cols
        if validate:
            for s, col in enumerate(cols):
                total = sum(col.values(), Fraction(0))
                if total != 1:
                    raise SemigroupError(
                        f"column {self.labels[s]} sums to {total}, not 1"
                    )

    @property
    def n(self) -> int:
        return len(self.labels)

    def column_sums(self) -> list[Fraction]:
        return [sum(c.values(), Fraction(0)) for c in self.cols]

    def apply_float(self, v: list[float]) -> list[float]:
        out = [0.0] * self.n
        for s, col in enumerate(self.cols):
            vs = v[s]
            if vs:
                for t, p in col.items():
                    out[t] += vs * float(p)
        return out


def build_chain(
    S: ASemigroup, xs: Sequence[Fraction], space: str = "k_s"
) -> TransitionMatrix:
    """Left-multiplication walk, either on the minimal ideal of the
    semigroup ("k_s") or on the minimal ideal of its expansion ("kr_ideal")."""
    if space == "k_s":
        members = sorted(minimal_ideal(S).members)
        index = {e: i for i, e in enumerate(members)}
        labels = [S.element_name(e) for e in members]
        cols: list[dict[int, Fraction]] = [dict() for _ in members]
        for i, e in enumerate(members):
            for a, ge in enumerate(S.gens):
                t = index[S.mult(ge, e)]
                cols[i][t] = cols[i].get(t, Fraction(0)) + xs[a]
        return TransitionMatrix(labels, cols)
    if space == "kr_ideal":
        kr = karnofsky_rhodes(S)
        K = minimal_ideal(kr.semigroup())
        vertices = sorted(e + 1 for e in K.members)
        index = {v: i for i, v in enumerate(vertices)}
        labels = [S.word_label(kr.words[v]) for v in vertices]
        cols = [dict() for _ in vertices]
        for i, v in enumerate(vertices):
            for a in range(S.n_gens):
                t = index[kr.left_multiply(a, v)]
                cols[i][t] = cols[i].get(t, Fraction(0)) + xs[a]
        return TransitionMatrix(labels, cols)
    raise SemigroupError(f"unknown state space {space!r}")


def truncated_semaphore_chain(
    S: ASemigroup, xs: Sequence[Fraction], max_len: int
) -> tuple[TransitionMatrix, set[str], dict[str, tuple[int, ...]]]:
    """Word-level walk restricted to ideal-entering words of bounded length.

    Returns the (substochastic at the boundary) matrix over word labels,
    the set of interior labels whose full column lies inside the
    truncation, and the label -> word map.
    """
    from .stationary import semaphore_left_action

    I = minimal_ideal(S)
    words: list[tuple[int, ...]] = []
    stack: list[tuple[tuple[int, ...], int | None]] = [((), None)]
    while stack:
        word, e = stack.pop()
        if len(word) >= max_len:
            continue
        for a, ge in enumerate(S.gens):
            f = ge if e is None else S.mult(e, ge)
            if f in I.members:
                words.append(word + (a,))
            else:
                stack.append((word + (a,), f))
    words.sort()
    index = {w: i for i, w in enumerate(words)}
    labels = [S.word_label(w) for w in words]
    cols: list[dict[int, Fraction]] = [dict() for _ in words]
    interior: set[str] = set()
    for i, w in enumerate(words):
        inside = True
        for a in range(S.n_gens):
            t = semaphore_left_action(S, w, a, I)
            j = index.get(t)
            if j is None:
                inside = False
                continue
            cols[i][j] = cols[i].get(j, Fraction(0)) + xs[a]
        if inside:
            interior.add(labels[i])
    T = TransitionMatrix(labels, cols, validate=False)
    return T, interior, dict(zip(labels, words))


def stationary_oracle(
    T: TransitionMatrix, tol: float = 1e-13, max_iter: int = 1_000_000
) -> dict[str, float]:
    """Float power iteration, independent of the exact engine.

    Iterates the lazy chain (T+I)/2, which has the same stationary vector
    and converges for periodic chains too.  Transient states get mass 0;
    more than one closed class is an error.
    """
    n = T.n
    succ = [set(col.keys()) for col in T.cols]
    comp = _scc_of_columns(succ)
    n_comp = max(comp) + 1
    closed = [True] * n_comp
    for s in range(n):
        for t in succ[s]:
            if comp[t] != comp[s]:
                closed[comp[s]] = False
    closed_ids = [c for c in range(n_comp) if closed[c]]
    if len(closed_ids) != 1:
        raise NotIrreducible(f"{len(closed_ids)} closed classes, need exactly 1")
    recurrent = [s for s in range(n) if comp[s] == closed_ids[0]]

    v = [0.0] * n
    for s in recurrent:
        v[s] = 1.0 / len(recurrent)
    for it in range(max_iter):
        w = T.apply_float(v)
        w = [0.5 * (a + b) for a, b in zip(w, v)]
        norm = sum(w)
        w = [a / norm for a in w]
        delta = 0.5 * sum(abs(a - b) for a, b in zip(w, v))
        v = w
        if delta < tol:
            return {T.labels[s]: v[s] for s in range(n)}
    raise NotConverged(f"no convergence after {max_iter} iterations")


def _scc_of_columns(succ: list[set[int]]) -> list[int]:
    # reuse the graph SCC routine through a tiny adapter
    class _G:
        def __init__(self, succ):
            self.out = [sorted(s) for s in succ]
            self.n = len(succ)

        def edges(self):
            for v, row in enumerate(self.out):
                for w in row:
                    yield v, 0, w

    return sccs(_G(succ))  # type: ignore[arg-type]


def check_lumping(
    T: TransitionMatrix,
    classes: Mapping[str, str],
    interior: set[str] | None = None,
) -> bool:
    """Exact lumpability: states in one class must have identical
    class-aggregated columns.  ``classes`` maps state label -> class label;
    ``interior`` restricts which columns are compared (for truncations)."""
    idx_class = [classes[lab] for lab in T.labels]
    signatures: dict[str, dict[str, Fraction]] = {}
    for s, lab in enumerate(T.labels):
        if interior is not None and lab not in interior:
            continue
        sig: dict[str, Fraction] = {}
        for t, p in T.cols[s].items():
            c = idx_class[t]
            sig[c] = sig.get(c, Fraction(0)) + p
        cls = idx_class[s]
        if cls in signatures:
            if signatures[cls] != sig:
                return False
        else:
            signatures[cls] = sig
    return True


def tv_distance(d1: Mapping[str, object], d2: Mapping[str, object]) -> float:
    """Total variation distance, as half the L1 difference."""
    keys = set(d1) | set(d2)
    return 0.5 * sum(abs(float(d1.get(k, 0)) - float(d2.get(k, 0))) for k in keys)


@dataclass
class MixingBound:
    """k = ceil(2*(n + gap*c - 1) / p_min**gap) bounds the time to reach
    total variation e**-c, where n is the expansion tree depth and gap is
    one more than the longest run of non-transitional tree edges on any
    root-to-leaf path."""

    n: int
    gap: int
    p_min: Fraction
    c: int
    k: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "gap": self.gap,
            "p_min": str(self.p_min),
            "c": self.c,
            "k": self.k,
        }

    def to_json(self) -> str:
        import json

        return json.dumps(self.as_dict())


def mixing_bound(S: ASemigroup, xs: Sequence[Fraction], c: int = 1) -> MixingBound:
    kr = karnofsky_rhodes(S)
    mc = mccammond(kr.graph)
    g = mc.graph
    comp = sccs(g)
    trans = transition_edges(g, comp)

    children: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (v, a) in mc.tree_edges:
        children[v].append((g.out[v][a], a))

    depth = [0] * g.n
    run = [0] * g.n  # current run of consecutive non-transitional tree edges
    best_depth = 0
    best_run = 0
    stack = [0]
    while stack:
        v = stack.pop()
        if not children[v]:
            best_depth = max(best_depth, depth[v])
        for w, a in children[v]:
            depth[w] = depth[v] + 1
            run[w] = 0 if (v, a) in trans else run[v] + 1
            best_run = max(best_run, run[w])
            stack.append(w)

    p = min(Fraction(v) for v in xs)
    gap = 1 + best_run
    k = math.ceil(Fraction(2) * (best_depth + gap * c - 1) / p**gap)
    return MixingBound(n=best_depth, gap=gap, p_min=p, c=c, k=k)
