"""Schur-analog R bases on ordered forests and endofunctions.

The forest order compares edge sets (more edges = smaller, cover = delete
one edge); the endofunction order fixes moved points one at a time (more
moved points = smaller, identity on top).  R is the Mobius-inverted basis
along each order.  The R product is multiplicity-free: its structure
constants are restriction conditions on the interval blocks.

The two settings invert in opposite directions.  For forests, R_F sums
over the down-set of F with edge-count signs.  For endofunctions, R_f sums
over the up-set of f (all ways of fixing a subset of its moved points, with
inclusion-exclusion signs); that direction gives the transposition a
four-term expansion and makes the quotient construction below nontrivial,
whereas the R product keeps its combinatorial description either way.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import FreeElement
from .endo import is_acyclic, std_restrict
from .structures import (
    Endofunction,
    EnumerationBoundError,
    OrderedForest,
    RootedForest,
    canonicalize,
    enumerate_endofunctions,
    enumerate_ordered_forests,
    plane_to_ordered,
    restrict_forest,
)

R_BASIS_BOUND = 5  # down-set enumerations scan all structures on n vertices


def _check_r_bound(n: int, what: str):
    if n > R_BASIS_BOUND:
        raise EnumerationBoundError(f"{what} restricted to degree <= {R_BASIS_BOUND}, got {n}")


# ---------------------------------------------------------------------------
# The order on ordered forests
# ---------------------------------------------------------------------------

def forest_leq(f: OrderedForest, g: OrderedForest) -> bool:
    """f <= g iff the edges of g all appear in f (deleting edges goes up)."""
    if f.n != g.n:
        return False
    return set(g.edges()) <= set(f.edges())


def forest_down_set(forest: OrderedForest) -> list[OrderedForest]:
    """All g <= forest, i.e. forests whose edge set extends the given one."""
    _check_r_bound(forest.n, "forest R basis")
    needed = set(forest.edges())
    return [g for g in enumerate_ordered_forests(forest.n) if needed <= set(g.edges())]


def r_from_s_forest(forest: OrderedForest) -> FreeElement:
    """R_F expanded in the S basis (signed sum over the down-set)."""
    base = len(forest.edges())
    terms = {}
    for g in forest_down_set(forest):
        terms[g] = (-1) ** (len(g.edges()) - base)
    return FreeElement("ho", terms)


def s_in_r_forest(forest: OrderedForest) -> FreeElement:
    """S^F written in the R basis: coefficient one on the whole down-set."""
    return FreeElement("ho", {g: 1 for g in forest_down_set(forest)})


def r_product_forest(left: OrderedForest, right: OrderedForest) -> FreeElement:
    """R_{F'} R_{F''} = sum of R_F over forests restricting to the factors
    on the two label intervals (an element in the R basis)."""
    k1, k2 = left.n, right.n
    _check_r_bound(k1 + k2, "forest R product")
    block1 = range(1, k1 + 1)
    block2 = range(k1 + 1, k1 + k2 + 1)
    terms = {}
    for f in enumerate_ordered_forests(k1 + k2):
        if restrict_forest(f, block1) == left and restrict_forest(f, block2) == right:
            terms[f] = 1
    return FreeElement("ho", terms)


# ---------------------------------------------------------------------------
# Commutative image: the R basis of the Connes-Kreimer algebra
# ---------------------------------------------------------------------------

def r_commutative(forest: RootedForest) -> FreeElement:
    """Image of R_F in the commutative algebra, independent of the labelling."""
    labelled = plane_to_ordered(forest.as_plane())
    out = FreeElement("ck")
    for g, coeff in r_from_s_forest(labelled).terms.items():
        out = out + FreeElement.from_key("ck", canonicalize(g), coeff)
    return out


@lru_cache(maxsize=None)
def _ck_s_in_r(forest: RootedForest) -> FreeElement:
    # R^F = S^F + (strictly more edges); unwind the unitriangular expansion.
    out = FreeElement.from_key("ck", forest)
    for g, coeff in r_commutative(forest).terms.items():
        if g != forest:
            out = out - coeff * _ck_s_in_r(g)
    return out


def ck_s_in_r(forest: RootedForest) -> FreeElement:
    _check_r_bound(forest.n, "commutative R basis")
    return _ck_s_in_r(forest)


# ---------------------------------------------------------------------------
# The order on endofunctions
# ---------------------------------------------------------------------------

def endo_leq(f: Endofunction, g: Endofunction) -> bool:
    """f <= g iff g agrees with f except on moved points of f that g fixes."""
    if f.n != g.n:
        return False
    return all(g.image[k] in (f.image[k], k + 1) for k in range(f.n))


def fix_subset(f: Endofunction, subset) -> Endofunction:
    members = set(subset)
    return Endofunction(tuple(v if v in members else f(v) for v in range(1, f.n + 1)))


def endo_up_set(f: Endofunction) -> list[Endofunction]:
    """All g >= f: fix any subset of the moved points of f."""
    moved = f.moved_points()
    out = []
    for mask in range(1 << len(moved)):
        chosen = [moved[i] for i in range(len(moved)) if mask >> i & 1]
        out.append(fix_subset(f, chosen))
    return out


def r_from_s_endo(f: Endofunction) -> FreeElement:
    """R_f in the S basis: inclusion-exclusion over fixing moved points."""
    terms: dict = {}
    base = f.num_fixed()
    for g in endo_up_set(f):
        terms[g] = terms.get(g, 0) + (-1) ** (g.num_fixed() - base)
    return FreeElement("efsym", terms)


def s_in_r_endo(f: Endofunction) -> FreeElement:
    return FreeElement("efsym", {g: 1 for g in endo_up_set(f)})


def r_product_endo(left: Endofunction, right: Endofunction) -> FreeElement:
    """R_{f'} R_{f''} = sum of R_f over f standardizing to the factors on the
    two blocks (an element in the R basis)."""
    k1, k2 = left.n, right.n
    _check_r_bound(k1 + k2, "endofunction R product")
    block1 = range(1, k1 + 1)
    block2 = range(k1 + 1, k1 + k2 + 1)
    terms = {}
    for f in enumerate_endofunctions(k1 + k2):
        if std_restrict(f, block1) == left and std_restrict(f, block2) == right:
            terms[f] = 1
    return FreeElement("efsym", terms)


# ---------------------------------------------------------------------------
# The cyclic R ideal and the quotient
# ---------------------------------------------------------------------------

def quotient_r(x: FreeElement) -> FreeElement:
    """Class of an R-basis element modulo the cyclic R ideal: kill the
    non-acyclic keys."""
    return FreeElement("efsym", {f: c for f, c in x.terms.items() if is_acyclic(f)})


def in_cyclic_r_ideal(x: FreeElement) -> bool:
    """Membership in the ideal spanned by R elements of non-acyclic keys."""
    return quotient_r(x).is_zero()


def quotient_r_product(left: Endofunction, right: Endofunction) -> FreeElement:
    """Product of classes: the combinatorial R product with non-acyclic terms killed."""
    return quotient_r(r_product_endo(left, right))


# ---------------------------------------------------------------------------
# Basis change surface
# ---------------------------------------------------------------------------

def to_s_basis(x: FreeElement) -> FreeElement:
    """Rewrite an R-basis element in the S basis (ho, efsym or ck)."""
    if x.algebra == "ho":
        return x.map_keys(r_from_s_forest)
    if x.algebra == "efsym":
        return x.map_keys(r_from_s_endo)
    if x.algebra == "ck":
        return x.map_keys(r_commutative)
    raise EnumerationBoundError(f"no R basis for algebra {x.algebra!r}")


def to_r_basis(x: FreeElement) -> FreeElement:
    """Rewrite an S-basis element in the R basis (ho, efsym or ck)."""
    if x.algebra == "ho":
        return x.map_keys(s_in_r_forest)
    if x.algebra == "efsym":
        return x.map_keys(s_in_r_endo)
    if x.algebra == "ck":
        return x.map_keys(ck_s_in_r)
    raise EnumerationBoundError(f"no R basis for algebra {x.algebra!r}")
