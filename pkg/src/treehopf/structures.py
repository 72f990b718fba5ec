"""Combinatorial index objects and their enumeration.

Every algebra in this package is indexed by one of the objects defined here:
labelled (ordered) rooted forests, unlabelled rooted forests in canonical
form, plane forests, endofunctions, permutations and packed words.  All
values are immutable after construction and every operation is a pure
function, so unrestricted concurrent use is safe.

Text formats (bit-exact):

* ``OrderedForest``  -- space-separated parent vector, ``"4 3 0 0 6 4"``;
  the empty forest is the empty string.
* ``Endofunction``   -- space-separated image vector, ``"2 3 2 3 4"``.
* ``PackedWord``     -- space-separated letters, ``"1 2 2"``.
* ``PlaneForest``    -- one balanced-parenthesis group per tree, trees
  space-separated, e.g. ``"(()())"`` for a root with two leaf children.
* ``RootedForest``   -- canonical form: each tree rendered as ``"("`` +
  lexicographically sorted child forms + ``")"``, trees sorted
  lexicographically and space-separated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_ENUMERATION_BOUND = 8


class StructureError(ValueError):
    """Invalid combinatorial data (bad parent vector, inadmissible cut, ...)."""


class FormatError(StructureError):
    """Malformed text input; ``position`` is the index of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at token {position})")
        self.position = position


class EnumerationBoundError(RuntimeError):
    """Requested enumeration exceeds the configured size bound."""


def _check_bound(n: int, bound: int | None, what: str) -> None:
    limit = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    if n > limit:
        raise EnumerationBoundError(f"{what} at size {n} exceeds bound {limit}")


def _split_tokens(text: str) -> list[str]:
    return text.split()


def _parse_int_vector(text: str, what: str) -> tuple[int, ...]:
    values = []
    for pos, token in enumerate(_split_tokens(text), start=1):
        try:
            values.append(int(token))
        except ValueError:
            raise FormatError(f"{what}: expected an integer, got {token!r}", pos) from None
    return tuple(values)


# ---------------------------------------------------------------------------
# Ordered forests
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderedForest:
    """Rooted forest on the totally ordered vertex set {1..n}.

    Stored as a parent vector: ``parent[v-1]`` is the parent of vertex ``v``,
    with 0 marking a root.  Edges are oriented from the leaves down to the
    roots, so an edge is a pair (child, parent).
    """

    parent: tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        for v, p in enumerate(self.parent, start=1):
            if not 0 <= p <= n:
                raise StructureError(f"parent of vertex {v} out of range: {p}")
            if p == v:
                raise StructureError(f"vertex {v} is its own parent")
        for v in range(1, n + 1):
            seen = set()
            while v != 0:
                if v in seen:
                    raise StructureError(f"parent vector contains a cycle through {v}")
                seen.add(v)
                v = self.parent[v - 1]

    @property
    def n(self) -> int:
        return len(self.parent)

    def roots(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.parent[v - 1] == 0)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All (child, parent) pairs."""
        return tuple((v, p) for v, p in enumerate(self.parent, start=1) if p != 0)

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for v, p in self.edges():
            kids[p].append(v)
        return kids

    def ancestors(self, v: int) -> set[int]:
        """Strict ancestors of v (the vertices v eventually points down to)."""
        out = set()
        p = self.parent[v - 1]
        while p != 0:
            out.add(p)
            p = self.parent[p - 1]
        return out

    def tree_vertex_sets(self) -> list[set[int]]:
        """Vertex sets of the trees, listed by increasing root label."""
        comp = {}
        for v in range(1, self.n + 1):
            w = v
            while self.parent[w - 1] != 0:
                w = self.parent[w - 1]
            comp.setdefault(w, set()).add(v)
        return [comp[r] for r in sorted(comp)]

    def render(self) -> str:
        return " ".join(str(p) for p in self.parent)

    @classmethod
    def parse(cls, text: str) -> "OrderedForest":
        return cls(_parse_int_vector(text, "ordered forest"))

    def sort_key(self):
        return (self.n, self.parent)


def relabel_forest(forest: OrderedForest, new_label: dict[int, int]) -> OrderedForest:
    """Rename vertex v to new_label[v]; new_label must be a bijection onto {1..n}."""
    n = forest.n
    parent = [0] * n
    for v in range(1, n + 1):
        p = forest.parent[v - 1]
        parent[new_label[v] - 1] = 0 if p == 0 else new_label[p]
    return OrderedForest(tuple(parent))


def restrict_forest(forest: OrderedForest, vertices: Iterable[int]) -> OrderedForest:
    """Induced subforest on ``vertices``, re-standardized to {1..k}.

    Keeps exactly the edges with both endpoints in ``vertices``; the unique
    increasing bijection onto {1..k} renames the survivors.
    """
    keep = sorted(set(vertices))
    if any(v < 1 or v > forest.n for v in keep):
        raise StructureError(f"restriction set {keep} not a subset of the vertex set")
    index = {v: i + 1 for i, v in enumerate(keep)}
    parent = []
    for v in keep:
        p = forest.parent[v - 1]
        parent.append(index[p] if p in index else 0)
    return OrderedForest(tuple(parent))


def enumerate_ordered_forests(n: int, bound: int | None = None) -> list[OrderedForest]:
    """All ordered forests on {1..n}, lexicographic in the parent vector."""
    _check_bound(n, bound, "ordered forest enumeration")
    if n == 0:
        return [OrderedForest(())]
    out: list[OrderedForest] = []
    parent = [0] * (n + 1)  # 1-based; parent[0] unused

    def closes_cycle(v: int, w: int) -> bool:
        # Walk already-assigned parents from w.  A cycle closes at the moment
        # its last edge is assigned, so checking "reaches v" here is complete.
        while w != 0:
            if w == v:
                return True
            if w >= v:  # parent not assigned yet
                return False
            w = parent[w]
        return False

    def extend(v: int):
        if v > n:
            out.append(OrderedForest(tuple(parent[1:])))
            return
        for w in range(n + 1):
            if w == v or closes_cycle(v, w):
                continue
            parent[v] = w
            extend(v + 1)
        parent[v] = 0

    extend(1)
    return out


# ---------------------------------------------------------------------------
# Admissible cuts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleCut:
    """A totally disconnected vertex subset of a forest.

    No member may lie on an oriented path to another member; validity against
    a particular forest is checked by :func:`is_admissible`.
    """

    vertices: frozenset[int]

    def sort_key(self):
        return sorted(self.vertices)


def is_admissible(forest: OrderedForest, cut: AdmissibleCut | Iterable[int]) -> bool:
    members = cut.vertices if isinstance(cut, AdmissibleCut) else frozenset(cut)
    if any(v < 1 or v > forest.n for v in members):
        return False
    return all(not (forest.ancestors(v) & members) for v in members)


def enumerate_admissible_cuts(forest, bound: int | None = None) -> list[AdmissibleCut]:
    """All admissible cuts of ``forest``, in increasing bitmask order.

    Unlabelled forests are cut through the depth-first labelling of their
    canonical form (cuts are vertex subsets, so the labelling only names them).
    """
    if not isinstance(forest, OrderedForest):
        forest = plane_to_ordered(forest.as_plane())
    _check_bound(forest.n, bound, "admissible cut enumeration")
    n = forest.n
    anc = [forest.ancestors(v) for v in range(1, n + 1)]
    out = []
    for mask in range(1 << n):
        members = [v for v in range(1, n + 1) if mask >> (v - 1) & 1]
        if all(not (anc[v - 1] & set(members)) for v in members):
            out.append(AdmissibleCut(frozenset(members)))
    return out


def lea_roo(forest, cut: AdmissibleCut | Iterable[int]):
    """Split along an admissible cut; returns (Roo, Lea) of the input's kind.

    Lea keeps the cut vertices and everything above them, Roo the rest; each
    part keeps exactly its induced edges.  Ordered parts are re-standardized;
    for an unlabelled forest the cut refers to the depth-first labelling of
    its canonical form and both parts are canonicalized again.
    """
    if not isinstance(forest, OrderedForest):
        labelled = plane_to_ordered(forest.as_plane())
        roo, lea = lea_roo(labelled, cut)
        return canonicalize(roo), canonicalize(lea)
    members = cut.vertices if isinstance(cut, AdmissibleCut) else frozenset(cut)
    if not is_admissible(forest, members):
        raise StructureError(f"cut {sorted(members)} is not admissible")
    lea = set()
    for v in range(1, forest.n + 1):
        if v in members or forest.ancestors(v) & members:
            lea.add(v)
    roo = set(range(1, forest.n + 1)) - lea
    return restrict_forest(forest, roo), restrict_forest(forest, lea)


# ---------------------------------------------------------------------------
# Plane forests
# ---------------------------------------------------------------------------

# A plane tree is the tuple of its subtrees; a plane forest the tuple of its
# trees.  Child order is significant.

@dataclass(frozen=True)
class PlaneForest:
    trees: tuple

    def __post_init__(self):
        def check(tree):
            if not isinstance(tree, tuple):
                raise StructureError("plane trees must be nested tuples")
            for sub in tree:
                check(sub)

        if not isinstance(self.trees, tuple):
            raise StructureError("a plane forest is a tuple of trees")
        for tree in self.trees:
            check(tree)

    @property
    def n(self) -> int:
        def size(tree):
            return 1 + sum(size(sub) for sub in tree)

        return sum(size(t) for t in self.trees)

    def render(self) -> str:
        def rec(tree):
            return "(" + "".join(rec(sub) for sub in tree) + ")"

        return " ".join(rec(t) for t in self.trees)

    @classmethod
    def parse(cls, text: str) -> "PlaneForest":
        trees = []
        for pos, token in enumerate(_split_tokens(text), start=1):
            stack: list[list] = [[]]
            for ch in token:
                if ch == "(":
                    stack.append([])
                elif ch == ")":
                    if len(stack) == 1:
                        raise FormatError("unbalanced ')'", pos)
                    done = stack.pop()
                    stack[-1].append(tuple(done))
                else:
                    raise FormatError(f"unexpected character {ch!r}", pos)
            if len(stack) != 1:
                raise FormatError("unbalanced '('", pos)
            if len(stack[0]) != 1:
                raise FormatError("each token must be a single tree", pos)
            trees.append(stack[0][0])
        return cls(tuple(trees))

    def sort_key(self):
        return (self.n, self.render())


def enumerate_plane_forests(n: int, bound: int | None = None) -> list[PlaneForest]:
    """All plane forests with n vertices (Catalan many), deterministic order."""
    _check_bound(n, bound, "plane forest enumeration")
    return [PlaneForest(trees) for trees in _plane_forest_shapes(n)]


@lru_cache(maxsize=None)
def _plane_forest_shapes(n: int) -> tuple[tuple, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for tree in _plane_tree_shapes(first):
            for rest in _plane_forest_shapes(n - first):
                out.append((tree,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _plane_tree_shapes(n: int) -> tuple[tuple, ...]:
    return _plane_forest_shapes(n - 1)


def plane_to_ordered(plane: PlaneForest) -> OrderedForest:
    """Canonical "up-left" labelling: left depth-first traversal, numbering
    each vertex on first encounter."""
    parent: list[int] = []

    def visit(tree, parent_label: int):
        parent.append(parent_label)
        label = len(parent)
        for sub in tree:
            visit(sub, label)

    for tree in plane.trees:
        visit(tree, 0)
    return OrderedForest(tuple(parent))


def ordered_to_plane(forest: OrderedForest) -> PlaneForest:
    """Inverse of :func:`plane_to_ordered` on its image.

    Children are read in increasing label order and trees in increasing root
    order; raises if the input is not the canonical labelling of the result.
    """
    kids = forest.children()

    def build(v: int):
        return tuple(build(c) for c in sorted(kids[v]))

    plane = PlaneForest(tuple(build(r) for r in forest.roots()))
    if plane_to_ordered(plane) != forest:
        raise StructureError(f"{forest.render()!r} is not a canonical plane labelling")
    return plane


# ---------------------------------------------------------------------------
# Unlabelled rooted forests (Connes-Kreimer keys)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootedForest:
    """Unlabelled rooted forest, stored by its canonical string form."""

    canonical: str

    def __post_init__(self):
        if canonical_form(self.canonical) != self.canonical:
            raise StructureError(f"{self.canonical!r} is not in canonical form")

    @property
    def n(self) -> int:
        return sum(1 for ch in self.canonical if ch == "(")

    def render(self) -> str:
        return self.canonical

    @classmethod
    def parse(cls, text: str) -> "RootedForest":
        return cls(canonical_form(text))

    def as_plane(self) -> PlaneForest:
        """Some plane representative (the canonical string itself is one)."""
        return PlaneForest.parse(self.canonical)

    def sort_key(self):
        return (self.n, self.canonical)


def canonical_form(text: str) -> str:
    """Canonical form of a paren-encoded forest: children sorted, trees sorted."""
    plane = PlaneForest.parse(text)

    def rec(tree) -> str:
        return "(" + "".join(sorted(rec(sub) for sub in tree)) + ")"

    return " ".join(sorted(rec(t) for t in plane.trees))


def canonicalize(forest: OrderedForest) -> RootedForest:
    """Forget the labels of an ordered forest."""
    kids = forest.children()

    def rec(v: int) -> str:
        return "(" + "".join(sorted(rec(c) for c in kids[v])) + ")"

    return RootedForest(" ".join(sorted(rec(r) for r in forest.roots())))


def enumerate_rooted_forests(n: int, bound: int | None = None) -> list[RootedForest]:
    """All canonical forms on n vertices, via plane representatives."""
    _check_bound(n, bound, "rooted forest enumeration")
    seen = sorted({canonicalize(plane_to_ordered(p)).canonical for p in enumerate_plane_forests(n, bound)})
    return [RootedForest(s) for s in seen]


# ---------------------------------------------------------------------------
# Endofunctions, permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Endofunction:
    """A total map [n] -> [n], stored as the image vector (f(1),...,f(n))."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        for v, fv in enumerate(self.image, start=1):
            if not 1 <= fv <= n:
                raise StructureError(f"f({v}) = {fv} out of range 1..{n}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v - 1]

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.image[v - 1] == v)

    def moved_points(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.image[v - 1] != v)

    def num_fixed(self) -> int:
        return len(self.fixed_points())

    def compose(self, other: "Endofunction") -> "Endofunction":
        """self after other."""
        if self.n != other.n:
            raise StructureError("composition needs equal domains")
        return Endofunction(tuple(self.image[other.image[v - 1] - 1] for v in range(1, self.n + 1)))

    def power(self, k: int) -> "Endofunction":
        if k < 0:
            raise StructureError("negative iteration")
        result = Endofunction(tuple(range(1, self.n + 1)))
        for _ in range(k):
            result = self.compose(result)
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """The cycles of the functional graph, each starting at its least element."""
        on_cycle = cycle_vertices(self)
        seen: set[int] = set()
        out = []
        for v in range(1, self.n + 1):
            if v in on_cycle and v not in seen:
                cyc = [v]
                w = self.image[v - 1]
                while w != v:
                    cyc.append(w)
                    w = self.image[w - 1]
                seen.update(cyc)
                out.append(tuple(cyc))
        return out

    def render(self) -> str:
        return " ".join(str(v) for v in self.image)

    @classmethod
    def parse(cls, text: str) -> "Endofunction":
        return cls(_parse_int_vector(text, "endofunction"))

    def sort_key(self):
        return (self.n, self.image)


@dataclass(frozen=True)
class Permutation(Endofunction):
    """A bijective endofunction."""

    def __post_init__(self):
        super().__post_init__()
        if sorted(self.image) != list(range(1, self.n + 1)):
            raise StructureError(f"{self.image} is not a permutation")

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, fv in enumerate(self.image, start=1):
            inv[fv - 1] = v
        return Permutation(tuple(inv))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(_parse_int_vector(text, "permutation"))


def cycle_vertices(f: Endofunction) -> set[int]:
    """Vertices lying on a cycle of the functional graph (fixed points included)."""
    out = set()
    for v in range(1, f.n + 1):
        slow = fast = v
        while True:
            slow = f(slow)
            fast = f(f(fast))
            if slow == fast:
                break
        cyc = {slow}
        w = f(slow)
        while w != slow:
            cyc.add(w)
            w = f(w)
        out |= cyc
    return out


def distance_to_cycle(f: Endofunction) -> dict[int, int]:
    on_cycle = cycle_vertices(f)
    dist = {}
    for v in range(1, f.n + 1):
        d, w = 0, v
        while w not in on_cycle:
            d += 1
            w = f(w)
        dist[v] = d
    return dist


def enumerate_endofunctions(n: int, bound: int | None = None) -> list[Endofunction]:
    """All n^n endofunctions, lexicographic in the image vector."""
    _check_bound(n, bound, "endofunction enumeration")
    return [Endofunction(img) for img in itertools.product(range(1, n + 1), repeat=n)]


def enumerate_permutations(n: int, bound: int | None = None) -> list[Permutation]:
    _check_bound(n, bound, "permutation enumeration")
    return [Permutation(img) for img in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# Packed words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PackedWord:
    """A word over {1..m} using every value in {1..m} at least once."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if self.letters:
            m = max(self.letters)
            if min(self.letters) < 1 or set(self.letters) != set(range(1, m + 1)):
                raise StructureError(f"{self.letters} is not packed")

    @property
    def n(self) -> int:
        return len(self.letters)

    def max_letter(self) -> int:
        return max(self.letters) if self.letters else 0

    def render(self) -> str:
        return " ".join(str(a) for a in self.letters)

    @classmethod
    def parse(cls, text: str) -> "PackedWord":
        return cls(_parse_int_vector(text, "packed word"))

    def sort_key(self):
        return (self.n, self.letters)


def pack(word: Sequence[int]) -> PackedWord:
    """Relabel the distinct letters of ``word`` order-preservingly onto {1..r}."""
    distinct = sorted(set(word))
    rank = {b: i + 1 for i, b in enumerate(distinct)}
    return PackedWord(tuple(rank[b] for b in word))


def enumerate_packed_words(n: int, bound: int | None = None) -> list[PackedWord]:
    """All packed words of length n (ordered Bell many), deterministic order."""
    _check_bound(n, bound, "packed word enumeration")
    if n == 0:
        return [PackedWord(())]
    out = []
    for letters in itertools.product(range(1, n + 1), repeat=n):
        m = max(letters)
        if set(letters) == set(range(1, m + 1)):
            out.append(PackedWord(letters))
    return out
