"""Karnofsky-Rhodes and McCammond expansions of rooted labelled graphs.

The Karnofsky-Rhodes expansion identifies two generator words iff they reach
the same element of the underlying semigroup *and* their paths in the right
Cayley graph cross the same set of transition edges.  The result is again a
right Cayley graph, so it carries a semigroup structure of its own.

The McCammond expansion of a deterministic rooted graph has one vertex per
simple path from the root; an edge either extends a simple path (tree edge)
or falls back to the unique initial segment ending at the target vertex
(back edge).
"""

from __future__ import annotations

from .core import ASemigroup, SizeCapExceeded, Word
from .graphs import RootedLabeledGraph, graphs_isomorphic, right_cayley, sccs, transition_edges

DEFAULT_KR_CAP = 200_000
DEFAULT_MC_CAP = 1_000_000


class KRExpansion:
    """Karnofsky-Rhodes expansion: a rooted graph plus its semigroup view.

    Vertex i > 0 corresponds to semigroup element i-1 of ``semigroup()``.
    """

    def __init__(self, base, graph, tsets, words):
        self.base: ASemigroup = base
        self.graph: RootedLabeledGraph = graph
        self.tsets: list[frozenset] = tsets  # per vertex
        self.words: list[Word] = words  # BFS word per vertex
        self._semigroup: ASemigroup | None = None

    def s_image(self, v: int) -> int | None:
        return self.graph.s_image[v]

    def multiply(self, v: int, word: Word) -> int:
        """Follow ``word`` from vertex v."""
        return self.graph.follow(v, word)

    def left_multiply(self, a: int, v: int) -> int:
        """Vertex of generator a times the element of vertex v."""
        if v == self.graph.root:
            return self.graph.out[self.graph.root][a]
        start = self.graph.out[self.graph.root][a]
        return self.graph.follow(start, self.words[v])

    def semigroup(self) -> ASemigroup:
        """The expansion as a semigroup (element i = vertex i+1).

        Multiplication follows the second factor's word through the graph;
        kept lazy (memoized) since full tables get large for towers.
        """
        if self._semigroup is None:
            g = self.graph
            n = g.n - 1
            words = self.words

            def mult_fn(i: int, j: int) -> int:
                return g.follow(i + 1, words[j + 1]) - 1

            gens = [g.out[g.root][a] - 1 for a in range(len(g.alphabet))]
            names = [g.labels[v] for v in range(1, g.n)]
            self._semigroup = ASemigroup(
                n, gens, list(g.alphabet), mult_fn=mult_fn, element_names=names
            )
        return self._semigroup


def karnofsky_rhodes(S: ASemigroup, cap: int = DEFAULT_KR_CAP) -> KRExpansion:
    rcay = right_cayley(S)
    comp = sccs(rcay)
    trans = transition_edges(rcay, comp)
    k = S.n_gens

    key0 = (rcay.root, frozenset())
    index: dict[tuple[int, frozenset], int] = {key0: 0}
    keys = [key0]
    words: list[Word] = [()]
    out: list[list[int | None]] = [[None] * k]

    head = 0
    while head < len(keys):
        v = head
        head += 1
        rv, tset = keys[v]
        for a in range(k):
            rw = rcay.out[rv][a]
            tset2 = tset | {(rv, a)} if (rv, a) in trans else tset
            key = (rw, tset2)
            w = index.get(key)
            if w is None:
                if len(keys) >= cap:
                    raise SizeCapExceeded(f"expansion exceeded cap {cap}")
                w = len(keys)
                index[key] = w
                keys.append(key)
                words.append(words[v] + (a,))
                out.append([None] * k)
            out[v][a] = w

    labels = [rcay.labels[rcay.root]]
    images: list[int | None] = [None]
    for v in range(1, len(keys)):
        labels.append(_kr_label(S, words[v]))
        images.append(rcay.s_image[keys[v][0]])
    graph = RootedLabeledGraph(S.gen_names, labels, out, images)
    tsets = [kv[1] for kv in keys]
    return KRExpansion(S, graph, tsets, words)


def _kr_label(S: ASemigroup, word: Word) -> str:
    return S.word_label(word)


class McExpansion:
    """McCammond expansion: graph over simple paths, spanning tree marked."""

    def __init__(self, base_graph, graph, parent, parent_gen, endpoint, tree_edges):
        self.base_graph: RootedLabeledGraph = base_graph
        self.graph: RootedLabeledGraph = graph
        self.parent: list[int | None] = parent
        self.parent_gen: list[int | None] = parent_gen
        self.endpoint: list[int] = endpoint  # vertex of the input graph
        self.tree_edges: set[tuple[int, int]] = tree_edges

    @property
    def back_edges(self) -> set[tuple[int, int]]:
        return {(v, a) for v, a, _ in self.graph.edges()} - self.tree_edges

    def depth(self, v: int) -> int:
        d = 0
        while self.parent[v] is not None:
            v = self.parent[v]
            d += 1
        return d

    def path_word(self, v: int) -> Word:
        parts = []
        while self.parent[v] is not None:
            parts.append(self.parent_gen[v])
            v = self.parent[v]
        return tuple(reversed(parts))


def mccammond(G: RootedLabeledGraph, cap: int = DEFAULT_MC_CAP) -> McExpansion:
    """Expand a deterministic rooted graph over its simple paths (DFS order)."""
    k = len(G.alphabet)
    parent: list[int | None] = [None]
    parent_gen: list[int | None] = [None]
    endpoint = [G.root]
    out: list[list[int | None]] = [[None] * k]
    tree: set[tuple[int, int]] = set()

    # on_path maps an input-graph vertex to the expansion vertex of the
    # current DFS path that ends there
    on_path: dict[int, int] = {G.root: 0}
    # frames: (mc vertex, next generator to try)
    frames: list[tuple[int, int]] = [(0, 0)]
    while frames:
        v, a = frames.pop()
        if a >= k:
            del on_path[endpoint[v]]
            continue
        frames.append((v, a + 1))
        u = G.out[endpoint[v]][a]
        if u is None:
            continue
        hit = on_path.get(u)
        if hit is not None:
            out[v][a] = hit  # back edge to an initial segment
            continue
        w = len(endpoint)
        if w >= cap:
            raise SizeCapExceeded(f"simple-path count exceeded cap {cap}")
        parent.append(v)
        parent_gen.append(a)
        endpoint.append(u)
        out.append([None] * k)
        out[v][a] = w
        tree.add((v, a))
        on_path[u] = w
        frames.append((w, 0))

    labels = []
    images: list[int | None] = []
    mc = McExpansion(G, None, parent, parent_gen, endpoint, tree)  # type: ignore[arg-type]
    for v in range(len(endpoint)):
        if v == 0:
            labels.append(G.labels[G.root])
        else:
            word = mc.path_word(v)
            labels.append("·".join(G.alphabet[g] for g in word)
                          if any(len(s) != 1 for s in G.alphabet)
                          else "".join(G.alphabet[g] for g in word))
        images.append(G.s_image[endpoint[v]])
    mc.graph = RootedLabeledGraph(G.alphabet, labels, out, images)
    return mc


def mc_kr(S: ASemigroup, kr_cap: int = DEFAULT_KR_CAP, mc_cap: int = DEFAULT_MC_CAP):
    """Convenience: the McCammond expansion of the Karnofsky-Rhodes expansion."""
    kr = karnofsky_rhodes(S, cap=kr_cap)
    return kr, mccammond(kr.graph, cap=mc_cap)


def is_mc_stable(S: ASemigroup, kr: KRExpansion | None = None) -> bool:
    """True iff the Karnofsky-Rhodes expansion has unique simple paths.

    Equivalently, the McCammond expansion adds no vertices.
    """
    if kr is None:
        kr = karnofsky_rhodes(S)
    try:
        mc = mccammond(kr.graph, cap=kr.graph.n)
    except SizeCapExceeded:
        return False
    return mc.graph.n == kr.graph.n


def is_stable1(S: ASemigroup) -> bool:
    """True iff expanding changes nothing at all: the expansion graph is
    label-isomorphic to the right Cayley graph and has unique simple paths."""
    kr = karnofsky_rhodes(S)
    if not is_mc_stable(S, kr):
        return False
    return graphs_isomorphic(kr.graph, right_cayley(S))


def kr_multiply(kr: KRExpansion, v: int, word: Word) -> int:
    """Follow a generator word from a vertex of the expansion."""
    return kr.multiply(v, word)
