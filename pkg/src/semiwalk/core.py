"""Finite semigroups with a distinguished generating set.

Elements are dense integer indices 0..n-1.  A semigroup carries the list of
generator element indices, printable generator names, optional printable
element names, and (computed lazily) a canonical representative word per
element: the first word reaching the element in a breadth-first walk that
multiplies by generators in index order.  That word is shortest possible,
with ties broken lexicographically, so all derived labelling is
deterministic across runs.

The formal identity used as the root of Cayley graphs is *virtual*: it is
never an element of the semigroup, matching the convention that the vertex
set of a right Cayley graph is the semigroup with one adjoined identity.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

Word = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 100_000
_FULL_ASSOC_CHECK_MAX = 60


class SemigroupError(ValueError):
    pass


class NotAssociative(SemigroupError):
    pass


class GeneratorsDoNotGenerate(SemigroupError):
    pass


class ClosureTooLarge(SemigroupError):
    pass


class SizeCapExceeded(SemigroupError):
    pass


class IdealSet:
    """A two-sided or left ideal, stored as a frozen set of element indices."""

    __slots__ = ("members", "kind")

    def __init__(self, members: Iterable[int], kind: str = "two-sided"):
        self.members = frozenset(members)
        if not self.members:
            raise SemigroupError("an ideal must be nonempty")
        if kind not in ("two-sided", "left"):
            raise SemigroupError("ideal kind must be 'two-sided' or 'left'")
        self.kind = kind

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IdealSet)
            and self.members == other.members
            and self.kind == other.kind
        )

    def __repr__(self) -> str:
        return f"IdealSet({sorted(self.members)}, kind={self.kind!r})"


class ASemigroup:
    """A finite semigroup together with a chosen generating set.

    Multiplication is either table-backed or composition of transformations
    (kept lazy for large closures).  Use the ``semigroup_from_*``
    constructors rather than instantiating directly.
    """

    def __init__(
        self,
        size: int,
        gens: Sequence[int],
        gen_names: Sequence[str],
        table: list[list[int]] | None = None,
        mult_fn: Callable[[int, int], int] | None = None,
        element_names: Sequence[str] | None = None,
        one_adjoined: bool = False,
    ):
        if table is None and mult_fn is None:
            raise SemigroupError("need a multiplication table or function")
        if not gens:
            raise SemigroupError("generator list must be nonempty")
        if len(gen_names) != len(gens):
            raise SemigroupError("one name per generator required")
        if len(set(gen_names)) != len(gen_names):
            raise SemigroupError("generator names must be unique")
        self.size = size
        self.gens = list(gens)
        self.gen_names = list(gen_names)
        self._table = table
        self._mult_fn = mult_fn
        self._mult_memo: dict[tuple[int, int], int] = {}
        self._element_names = list(element_names) if element_names else None
        if self._element_names is not None:
            if len(self._element_names) != size:
                raise SemigroupError("one name per element required")
            if len(set(self._element_names)) != size:
                raise SemigroupError("element names must be unique")
        self._rep_words: list[Word] | None = None
        self.one_adjoined = one_adjoined

    # -- basic structure ---------------------------------------------------

    def __len__(self) -> int:
        return self.size

    @property
    def n_gens(self) -> int:
        return len(self.gens)

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        key = (i, j)
        r = self._mult_memo.get(key)
        if r is None:
            r = self._mult_fn(i, j)
            self._mult_memo[key] = r
        return r

    def product(self, word: Sequence[int]) -> int:
        """Image of a word of generator indices under the product map."""
        if not word:
            raise SemigroupError("empty word has no image (identity is virtual)")
        e = self.gens[word[0]]
        for g in word[1:]:
            e = self.mult(e, self.gens[g])
        return e

    # -- canonical words and names ------------------------------------------

    def rep_words(self) -> list[Word]:
        """Shortest (lex-first) generator word per element, by BFS."""
        if self._rep_words is None:
            rep: list[Word | None] = [None] * self.size
            queue: list[int] = []
            for g, e in enumerate(self.gens):
                if rep[e] is None:
                    rep[e] = (g,)
                    queue.append(e)
            head = 0
            while head < len(queue):
                e = queue[head]
                head += 1
                w = rep[e]
                for g, ge in enumerate(self.gens):
                    f = self.mult(e, ge)
                    if rep[f] is None:
                        rep[f] = w + (g,)
                        queue.append(f)
            if any(r is None for r in rep):
                raise GeneratorsDoNotGenerate(
                    "generators do not generate the whole semigroup"
                )
            self._rep_words = rep  # type: ignore[assignment]
        return self._rep_words

    def word_label(self, word: Sequence[int]) -> str:
        """Printable form of a generator word.

        Single-character generator names are juxtaposed; otherwise parts are
        joined with a middle dot to keep labels unambiguous.
        """
        names = [self.gen_names[g] for g in word]
        if all(len(s) == 1 for s in self.gen_names):
            return "".join(names)
        return "·".join(names)

    def element_name(self, e: int) -> str:
        if self._element_names is not None:
            return self._element_names[e]
        return self.word_label(self.rep_words()[e])

    def element_names(self) -> list[str]:
        return [self.element_name(e) for e in range(self.size)]

    # -- checks --------------------------------------------------------------

    def check_generated(self) -> None:
        self.rep_words()

    def check_associative(self) -> None:
        """Associativity check: exhaustive when small, Light's test otherwise.

        Light's test only needs triples whose middle factor is a generator,
        which is sufficient once the generators generate the semigroup.
        """
        n = self.size
        if n <= _FULL_ASSOC_CHECK_MAX:
            for a in range(n):
                for b in range(n):
                    ab = self.mult(a, b)
                    for c in range(n):
                        if self.mult(ab, c) != self.mult(a, self.mult(b, c)):
                            raise NotAssociative(
                                f"({a}*{b})*{c} != {a}*({b}*{c})"
                            )
            return
        self.check_generated()
        for ge in set(self.gens):
            for a in range(n):
                ag = self.mult(a, ge)
                for b in range(n):
                    if self.mult(ag, b) != self.mult(a, self.mult(ge, b)):
                        raise NotAssociative(
                            f"({a}*g)*{b} != {a}*(g*{b}) for generator element {ge}"
                        )

    def __repr__(self) -> str:
        return f"ASemigroup(|S|={self.size}, A={self.gen_names})"


# -- constructors -------------------------------------------------------------


def semigroup_from_table(
    table: Sequence[Sequence[int]],
    gens: Sequence[int],
    gen_names: Sequence[str] | None = None,
    element_names: Sequence[str] | None = None,
    check: bool = True,
) -> ASemigroup:
    n = len(table)
    rows = [list(r) for r in table]
    for r in rows:
        if len(r) != n or any(not (0 <= v < n) for v in r):
            raise SemigroupError("table must be n x n over 0..n-1")
    if gen_names is None:
        gen_names = [_default_gen_name(i) for i in range(len(gens))]
    S = ASemigroup(n, gens, gen_names, table=rows, element_names=element_names)
    if check:
        S.check_generated()
        S.check_associative()
    return S


def _default_gen_name(i: int) -> str:
    alpha = "abcdefghijklmnopqrstuvwxyz"
    return alpha[i] if i < len(alpha) else f"g{i}"


def semigroup_from_transformations(
    n_states: int,
    maps: dict[str, Sequence[int]],
    cap: int = DEFAULT_CLOSURE_CAP,
) -> ASemigroup:
    """Semigroup generated by total maps on 0..n_states-1.

    The product f*g acts as "f then g": (f*g)(q) = g(f(q)).  This matches
    the right-Cayley convention where following the edge labelled ``a``
    from the vertex of ``w`` lands on the vertex of ``wa``.
    """
    gen_names = list(maps.keys())
    gen_maps = []
    for name in gen_names:
        m = tuple(maps[name])
        if len(m) != n_states or any(not (0 <= q < n_states) for q in m):
            raise SemigroupError(f"map {name!r} is not total on 0..{n_states - 1}")
        gen_maps.append(m)

    index: dict[tuple[int, ...], int] = {}
    elements: list[tuple[int, ...]] = []
    gens: list[int] = []
    for m in gen_maps:
        if m not in index:
            index[m] = len(elements)
            elements.append(m)
        gens.append(index[m])
    head = 0
    while head < len(elements):
        f = elements[head]
        head += 1
        for m in gen_maps:
            fg = tuple(m[q] for q in f)
            if fg not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(
                        f"transformation closure exceeded cap {cap}"
                    )
                index[fg] = len(elements)
                elements.append(fg)

    n = len(elements)
    if n <= 1500:
        table = [
            [index[tuple(g[q] for q in f)] for g in elements] for f in elements
        ]
        return ASemigroup(n, gens, gen_names, table=table)

    def mult_fn(i: int, j: int) -> int:
        f, g = elements[i], elements[j]
        return index[tuple(g[q] for q in f)]

    return ASemigroup(n, gens, gen_names, mult_fn=mult_fn)


# -- ideals -------------------------------------------------------------------


def principal_ideal(S: ASemigroup, e: int) -> IdealSet:
    """The two-sided ideal generated by a single element."""
    seen = {e}
    stack = [e]
    while stack:
        u = stack.pop()
        for ge in S.gens:
            for v in (S.mult(u, ge), S.mult(ge, u)):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return IdealSet(seen)


def minimal_ideal(S: ASemigroup) -> IdealSet:
    """The unique minimal two-sided ideal.

    Mutual reachability under one-generator left/right multiplication is
    exactly the two-sided divisibility relation, so the minimal ideal is
    the unique sink component of that reachability graph.
    """
    from .graphs import sccs  # local import, graphs depends on core

    n = S.size
    succ: list[list[int]] = []
    for e in range(n):
        row = set()
        for ge in S.gens:
            row.add(S.mult(e, ge))
            row.add(S.mult(ge, e))
        succ.append(sorted(row))

    class _G:
        out = succ

        @property
        def n(self):
            return len(succ)

    comp = sccs(_G())  # type: ignore[arg-type]
    n_comp = max(comp) + 1
    is_sink = [True] * n_comp
    for e in range(n):
        for f in succ[e]:
            if comp[f] != comp[e]:
                is_sink[comp[e]] = False
    sinks = [c for c in range(n_comp) if is_sink[c]]
    if len(sinks) != 1:
        raise AssertionError("a finite semigroup has exactly one minimal ideal")
    return IdealSet(e for e in range(n) if comp[e] == sinks[0])


def is_left_zero(S: ASemigroup, I: IdealSet) -> bool:
    """True iff x*y = x for all x, y in the given set."""
    for x in I.members:
        for y in I.members:
            if S.mult(x, y) != x:
                return False
    return True


def kernel_is_left_zero(S: ASemigroup, K: IdealSet) -> bool:
    """Left-zero test specialized to the minimal ideal.

    For x in the minimal ideal, x*s = x for every s once it holds for every
    generator (if x*a = x on generators then x*s = x for all s, hence in
    particular on the ideal; conversely left zero forces x*s = (x*s)*u = x
    for u in the ideal).  Checking |K|*|A| products instead of |K|^2.
    """
    for x in K.members:
        for ge in S.gens:
            if S.mult(x, ge) != x:
                return False
    return True


# -- quotients and element-adjoining constructions ----------------------------

ZERO_NAME = "□"  # printable box for an adjoined/collapsed zero


def rees_quotient(S: ASemigroup, I: IdealSet) -> ASemigroup:
    """Collapse a two-sided ideal to a single zero element."""
    if I.kind != "two-sided":
        raise SemigroupError("Rees quotient needs a two-sided ideal")
    survivors = [e for e in range(S.size) if e not in I.members]
    new_index = {e: i for i, e in enumerate(survivors)}
    zero = len(survivors)
    n = zero + 1

    def img(e: int) -> int:
        return new_index.get(e, zero)

    table = [[zero] * n for _ in range(n)]
    for i, e in enumerate(survivors):
        for j, f in enumerate(survivors):
            table[i][j] = img(S.mult(e, f))
    zname = _fresh_name(ZERO_NAME, [S.element_name(e) for e in survivors])
    names = [S.element_name(e) for e in survivors] + [zname]
    gens = [img(S.gens[g]) for g in range(S.n_gens)]
    return semigroup_from_table(table, gens, list(S.gen_names), names)


def adjoin_zero(S: ASemigroup) -> ASemigroup:
    """Append a new zero element, also added as the last generator."""
    n = S.size
    zero = n
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        for j in range(n):
            table[i][j] = S.mult(i, j)
        table[i][zero] = zero
        table[zero][i] = zero
    table[zero][zero] = zero
    zname = _fresh_name(ZERO_NAME, list(S.gen_names) + S.element_names())
    names = S.element_names() + [zname]
    gens = S.gens + [zero]
    gen_names = S.gen_names + [zname]
    return semigroup_from_table(table, gens, gen_names, names)


def opposite(S: ASemigroup) -> ASemigroup:
    """Same elements, multiplication reversed."""
    n = S.size
    table = [[S.mult(j, i) for j in range(n)] for i in range(n)]
    return semigroup_from_table(
        table, list(S.gens), list(S.gen_names), S.element_names()
    )


BAR_ONE = "‾\U0001d7d9"  # name of the adjoined reset generator
FLAT_ONE = "~\U0001d7d9"


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken:
        name += "'"
    return name


def _unique_names(names: list[str]) -> list[str]:
    """Deterministically de-duplicate by priming later occurrences."""
    seen: set[str] = set()
    out = []
    for name in names:
        while name in seen:
            name += "'"
        seen.add(name)
        out.append(name)
    return out


def bar(S: ASemigroup) -> ASemigroup:
    """Adjoin a constant-map copy of the semigroup.

    Elements are S, a marked copy of S, and one extra generator r with
    relations  x*copy(y) = copy(y),  copy(x)*y = copy(x*y),  z*r = r,
    r*y = copy(y), r*r = r.  Size is 2|S|+1.
    """
    n = S.size
    r = 2 * n
    size = 2 * n + 1

    table = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = S.mult(i, j)
            table[n + i][j] = n + S.mult(i, j)
        table[r][i] = n + i
    for z in range(size):
        for j in range(n):
            table[z][n + j] = n + j
        table[z][r] = r
    rname = _fresh_name(BAR_ONE, S.gen_names)
    names = S.element_names()
    names = _unique_names(names + ["‾" + s for s in names] + [rname])
    rname = names[-1]
    gens = S.gens + [r]
    gen_names = S.gen_names + [rname]
    return semigroup_from_table(table, gens, gen_names, names)


def flat(S: ASemigroup) -> ASemigroup:
    """Order-reversed dual of :func:`bar`; its minimal ideal is left zero.

    Relations:  copy(y)*x = copy(y),  y*copy(x) = copy(y*x),  r*z = r,
    y*r = copy(y), r*r = r.
    """
    n = S.size
    r = 2 * n
    size = 2 * n + 1

    table = [[0] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            table[i][j] = S.mult(i, j)
            table[i][n + j] = n + S.mult(i, j)
        table[i][r] = n + i
    for z in range(size):
        for i in range(n):
            table[n + i][z] = n + i
        table[r][z] = r
    rname = _fresh_name(FLAT_ONE, S.gen_names)
    names = S.element_names()
    names = _unique_names(names + ["~" + s for s in names] + [rname])
    rname = names[-1]
    gens = S.gens + [r]
    gen_names = S.gen_names + [rname]
    return semigroup_from_table(table, gens, gen_names, names)
