"""Rooted generator-labelled graphs: Cayley graphs, SCCs, transition edges.

Vertices are numbered in BFS discovery order from the root (generators in
index order), so vertex numbering, SCC numbering and DOT output are
reproducible across runs.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .core import ASemigroup

ROOT_LABEL = "\U0001d7d9"  # the adjoined identity


class RootedLabeledGraph:
    """Deterministic rooted graph: at most one out-edge per (vertex, label).

    ``out[v][a]`` is the head of the a-labelled edge out of v (None if
    absent).  ``s_image[v]`` is the underlying semigroup element of the
    vertex, None for the root.
    """

    def __init__(
        self,
        alphabet: Sequence[str],
        labels: list[str],
        out: list[list[int | None]],
        s_image: list[int | None],
        root: int = 0,
    ):
        self.alphabet = list(alphabet)
        self.labels = labels
        self.out = out
        self.s_image = s_image
        self.root = root

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (tail, generator index, head) in deterministic order."""
        for v, row in enumerate(self.out):
            for a, w in enumerate(row):
                if w is not None:
                    yield v, a, w

    def n_edges(self) -> int:
        return sum(1 for _ in self.edges())

    def follow(self, v: int, word: Sequence[int]) -> int:
        """Endpoint of the path labelled ``word`` starting at v."""
        for a in word:
            nxt = self.out[v][a]
            if nxt is None:
                raise KeyError(f"no edge labelled {self.alphabet[a]} at {self.labels[v]}")
            v = nxt
        return v

    def out_degree(self, v: int) -> int:
        return sum(1 for w in self.out[v] if w is not None)


def right_cayley(S: ASemigroup) -> RootedLabeledGraph:
    """Right Cayley graph: vertices S with adjoined root, edges s -> s*a."""
    return _cayley(S, right=True)


def left_cayley(S: ASemigroup) -> RootedLabeledGraph:
    """Left Cayley graph: edges s -> a*s."""
    return _cayley(S, right=False)


def _cayley(S: ASemigroup, right: bool) -> RootedLabeledGraph:
    k = S.n_gens
    vertex_of: dict[int, int] = {}
    labels = [ROOT_LABEL]
    images: list[int | None] = [None]
    out: list[list[int | None]] = [[None] * k]
    order: list[int | None] = [None]  # element per vertex (None = root)

    def vertex(e: int) -> int:
        v = vertex_of.get(e)
        if v is None:
            v = len(labels)
            vertex_of[e] = v
            labels.append(S.element_name(e))
            images.append(e)
            out.append([None] * k)
            order.append(e)
        return v

    head = 0
    while head < len(labels):
        v = head
        head += 1
        e = order[v]
        for a in range(k):
            ge = S.gens[a]
            if e is None:
                f = ge
            elif right:
                f = S.mult(e, ge)
            else:
                f = S.mult(ge, e)
            out[v][a] = vertex(f)

    if len(labels) != S.size + 1:
        # cannot happen for a generated semigroup, kept as a guard
        raise AssertionError("Cayley graph did not reach every element")
    g = RootedLabeledGraph(S.gen_names, labels, out, images)
    g.element_vertex = {e: v for e, v in vertex_of.items()}  # type: ignore[attr-defined]
    return g


def sccs(G: RootedLabeledGraph) -> list[int]:
    """Strongly connected components, Tarjan-style, iterative.

    Returns a component id per vertex; components are renumbered so that
    component ids increase with their smallest vertex index.
    """
    n = G.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    n_comp = 0

    for start in range(n):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        while work:
            v, ei = work.pop()
            if ei == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            row = G.out[v]
            advanced = False
            while ei < len(row):
                w = row[ei]
                ei += 1
                if w is None:
                    continue
                if index[w] == -1:
                    work.append((v, ei))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    # renumber by smallest contained vertex
    first_vertex = [n] * n_comp
    for v in range(n):
        first_vertex[comp[v]] = min(first_vertex[comp[v]], v)
    ranking = sorted(range(n_comp), key=lambda c: first_vertex[c])
    rank_of = {c: i for i, c in enumerate(ranking)}
    return [rank_of[c] for c in comp]


def transition_edges(
    G: RootedLabeledGraph, comp: list[int] | None = None
) -> set[tuple[int, int]]:
    """Edges crossing between distinct SCCs, as (tail, generator) pairs.

    Loops are never transitional.
    """
    if comp is None:
        comp = sccs(G)
    result = set()
    for v, a, w in G.edges():
        if v != w and comp[v] != comp[w]:
            result.add((v, a))
    return result


def graphs_isomorphic(G: RootedLabeledGraph, H: RootedLabeledGraph) -> bool:
    """Rooted label-respecting isomorphism (ignores vertex labels)."""
    if G.n != H.n or len(G.alphabet) != len(H.alphabet):
        return False
    k = len(G.alphabet)
    pair = {G.root: H.root}
    back = {H.root: G.root}
    queue = [(G.root, H.root)]
    head = 0
    while head < len(queue):
        v, w = queue[head]
        head += 1
        for a in range(k):
            gv, hw = G.out[v][a], H.out[w][a]
            if (gv is None) != (hw is None):
                return False
            if gv is None:
                continue
            if gv in pair:
                if pair[gv] != hw:
                    return False
            elif hw in back:
                return False
            else:
                pair[gv] = hw
                back[hw] = gv
                queue.append((gv, hw))
    return len(pair) == G.n


def to_dot(
    G: RootedLabeledGraph,
    name: str = "G",
    transitional: set[tuple[int, int]] | None = None,
    tree: set[tuple[int, int]] | None = None,
) -> str:
    """Render as DOT, deterministically.

    Transitional edges are blue, loops dashed.  When a tree-edge set is
    given (expansion output), non-tree edges are dashed red.
    """
    if transitional is None:
        transitional = transition_edges(G)
    lines = [f"digraph {name} {{"]
    for v in range(G.n):
        shape = ', shape=box' if v == G.root else ""
        lines.append(f'  v{v} [label="{G.labels[v]}"{shape}];')
    for v, a, w in G.edges():
        attrs = [f'label="{G.alphabet[a]}"']
        if (v, a) in transitional:
            attrs.append('color="blue"')
        if v == w:
            attrs.append('style="dashed"')
        elif tree is not None and (v, a) not in tree:
            attrs.append('style="dashed"')
            attrs.append('color="red"')
        lines.append(f"  v{v} -> v{w} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
