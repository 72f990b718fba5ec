"""Brute-force verification suites and the worked-example replay.

Every suite returns a list of (label, ok, detail) triples so the CLI and the
acceptance tests can share one engine.  The golden files under ``golden/``
hold the stored worked examples in the element JSON schema; replay failures
print a term-level diff.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Callable, Iterator

from . import bases, morphisms
from .algebra import (
    check_antipode,
    check_bialgebra_compat,
    check_coassociativity,
    get_algebra,
    tensor_to_json,
    element_to_json,
)
from .endo import ideals
from .forests import ho_coproduct, nwarrow
from .realization import (
    ALL_VERSIONS,
    FOREST_VERSIONS,
    iter_endofunction_words,
    iter_forest_words,
    iter_permutation_words,
    pi_image,
    rank_check,
    realizer_for,
    retag_side,
    split_by_side,
)
from .structures import (
    Endofunction,
    OrderedForest,
    Permutation,
    PlaneForest,
    enumerate_endofunctions,
    enumerate_ordered_forests,
    enumerate_permutations,
    plane_to_ordered,
)

Outcome = tuple[str, bool, str]

CHECK_ALGEBRAS = ("ck", "nck", "ho", "wqsym", "sgsym", "efsym")


def suite_coassoc(max_degree: int = 3) -> list[Outcome]:
    out = []
    for tag in CHECK_ALGEBRAS:
        rep = check_coassociativity(tag, max_degree)
        out.append((f"coassoc[{tag}] deg<={max_degree}", rep.ok, rep.summary()))
    return out


def suite_compat(max_degree: int = 3, sample_degree: int | None = 4) -> list[Outcome]:
    out = []
    for tag in CHECK_ALGEBRAS:
        rep = check_bialgebra_compat(tag, max_degree, sample_degree=sample_degree)
        out.append((f"compat[{tag}] deg<={max_degree}", rep.ok, rep.summary()))
    return out


def suite_antipode(max_degree: int = 3) -> list[Outcome]:
    out = []
    for tag in CHECK_ALGEBRAS:
        rep = check_antipode(tag, max_degree)
        out.append((f"antipode[{tag}] deg<={max_degree}", rep.ok, rep.summary()))
    return out


# ---------------------------------------------------------------------------
# Realization suite
# ---------------------------------------------------------------------------

def _family_keys(version: str, degree: int) -> list:
    if version in FOREST_VERSIONS:
        return enumerate_ordered_forests(degree)
    if version == "func":
        return enumerate_endofunctions(degree)
    return enumerate_permutations(degree)


def _family_product(version: str, a, b):
    if version in FOREST_VERSIONS:
        from .forests import ho_product

        return ho_product(a, b)
    if version == "func":
        from .endo import shifted_concat

        return shifted_concat(a, b)
    from .endo import sgsym_product

    return sgsym_product(a, b)


def _family_coproduct(version: str, key):
    if version in FOREST_VERSIONS:
        return ho_coproduct(key)
    if version == "func":
        from .endo import efsym_coproduct

        return efsym_coproduct(key)
    from .endo import sgsym_coproduct

    return sgsym_coproduct(key)


def _iter_doubled(version: str, key, size: int) -> Iterator:
    if version in FOREST_VERSIONS:
        return iter_forest_words(key, version, size, doubled=True)
    if version == "func":
        return iter_endofunction_words(key, size, doubled=True)
    return iter_permutation_words(key, size, doubled=True)


def multiplicativity_ok(version: str, left, right, size: int) -> bool:
    realize = realizer_for(version)
    return realize(left, size) * realize(right, size) == realize(
        _family_product(version, left, right), size
    )


def doubling_transport_ok(version: str, key, size: int) -> bool:
    """Grouping S^x(A+B) by sides reproduces the coproduct term by term."""
    grouped: dict = {}
    for word in _iter_doubled(version, key, size):
        pair = split_by_side(word)
        grouped[pair] = grouped.get(pair, 0) + 1
    realize = realizer_for(version)
    expected: dict = {}
    for (a, b), coeff in _family_coproduct(version, key).terms.items():
        left = realize(a, size)
        right = realize(b, size)
        for w1 in left.terms:
            for w2 in right.terms:
                pair = (w1, retag_side(w2, "B"))
                expected[pair] = expected.get(pair, 0) + coeff
    return grouped == expected


def suite_realization(max_degree: int = 3, size: int = 8) -> list[Outcome]:
    out = []
    for version in ALL_VERSIONS:
        bad = []
        checked = 0
        for total in range(2, max_degree + 1):
            for d1 in range(1, total):
                for a in _family_keys(version, d1):
                    for b in _family_keys(version, total - d1):
                        checked += 1
                        if not multiplicativity_ok(version, a, b, size):
                            bad.append((a, b))
        out.append(
            (
                f"realize-product[{version}] deg<={max_degree} N={size}",
                not bad,
                f"{checked} pairs, {len(bad)} failures",
            )
        )
        bad2 = []
        checked2 = 0
        for d in range(max_degree + 1):
            for key in _family_keys(version, d):
                checked2 += 1
                if not doubling_transport_ok(version, key, size):
                    bad2.append(key)
        out.append(
            (
                f"realize-doubling[{version}] deg<={max_degree} N={size}",
                not bad2,
                f"{checked2} keys, {len(bad2)} failures",
            )
        )
    for version in ("v1", "v2", "func"):
        realize = realizer_for(version)
        for d in range(1, min(max_degree, 3) + 1):
            n_keys = _family_keys(version, d)
            rep = rank_check(n_keys, realize, 2 * d + 2, label=f"{version} deg {d}")
            out.append(
                (f"realize-rank[{version}] deg {d} N={2 * d + 2}", rep.full, rep.summary())
            )
    return out


# ---------------------------------------------------------------------------
# Golden example replay
# ---------------------------------------------------------------------------

def _diff_terms(expected: list[dict], got: list[dict]) -> str:
    exp = {tuple(sorted(t.items())) for t in expected}
    act = {tuple(sorted(t.items())) for t in got}
    missing = exp - act
    extra = act - exp
    bits = []
    if missing:
        bits.append("missing: " + "; ".join(str(dict(t)) for t in sorted(missing)))
    if extra:
        bits.append("unexpected: " + "; ".join(str(dict(t)) for t in sorted(extra)))
    return " | ".join(bits) or "exact match"


def _replay_case(case: dict) -> Outcome:
    name = case["name"]
    op = case["op"]
    if op == "coproduct":
        ops = get_algebra(case["algebra"])
        got = tensor_to_json(ops.coproduct(ops.parse_key(case["key"])))["terms"]
        ok = got == case["expected"]
        return (name, ok, _diff_terms(case["expected"], got))
    if op == "nwarrow":
        got = nwarrow(OrderedForest.parse(case["left"]), OrderedForest.parse(case["right"])).render()
        return (name, got == case["expected"], f"expected {case['expected']!r}, got {got!r}")
    if op == "plane_to_ordered":
        got = plane_to_ordered(PlaneForest.parse(case["key"])).render()
        return (name, got == case["expected"], f"expected {case['expected']!r}, got {got!r}")
    if op == "pi":
        got = element_to_json(pi_image(OrderedForest.parse(case["key"])))["terms"]
        return (name, got == case["expected"], _diff_terms(case["expected"], got))
    if op == "forest_to_endo":
        got = morphisms.forest_to_endo(OrderedForest.parse(case["key"])).render()
        return (name, got == case["expected"], f"expected {case['expected']!r}, got {got!r}")
    if op == "ideals":
        got = [sorted(i.members) for i in ideals(Endofunction.parse(case["key"]))]
        return (name, got == case["expected"], f"expected {case['expected']}, got {got}")
    if op == "r_from_s":
        fn = bases.r_from_s_forest if case["algebra"] == "ho" else bases.r_from_s_endo
        ops = get_algebra(case["algebra"])
        got = element_to_json(fn(ops.parse_key(case["key"])))["terms"]
        return (name, got == case["expected"], _diff_terms(case["expected"], got))
    if op == "r_product":
        fn = bases.r_product_forest if case["algebra"] == "ho" else bases.r_product_endo
        ops = get_algebra(case["algebra"])
        got = element_to_json(fn(ops.parse_key(case["left"]), ops.parse_key(case["right"])), basis="R")["terms"]
        return (name, got == case["expected"], _diff_terms(case["expected"], got))
    if op == "r_commutative":
        from .structures import RootedForest

        got = element_to_json(bases.r_commutative(RootedForest.parse(case["key"])))["terms"]
        return (name, got == case["expected"], _diff_terms(case["expected"], got))
    if op == "oplus_transport":
        version = case["version"]
        if version in FOREST_VERSIONS:
            key = OrderedForest.parse(case["object"])
        elif version == "func":
            key = Endofunction.parse(case["object"])
        else:
            key = Permutation.parse(case["object"])
        ok = doubling_transport_ok(version, key, case["indices"])
        return (name, ok, "doubling matches coproduct" if ok else "doubling DIFFERS from coproduct")
    raise ValueError(f"unknown golden op {op!r}")


def suite_examples() -> list[Outcome]:
    out = []
    for entry in sorted(resources.files("treehopf.golden").iterdir(), key=lambda e: e.name):
        if not entry.name.endswith(".json"):
            continue
        data = json.loads(entry.read_text())
        for case in data["cases"]:
            out.append(_replay_case(case))
    return out


SUITES: dict[str, Callable[[int], list[Outcome]]] = {
    "coassoc": lambda d: suite_coassoc(d),
    "compat": lambda d: suite_compat(d),
    "antipode": lambda d: suite_antipode(d),
    "realization": lambda d: suite_realization(d),
    "examples": lambda d: suite_examples(),
}


def run_suite(name: str, max_degree: int = 3) -> list[Outcome]:
    if name == "all":
        out = []
        for key in ("coassoc", "compat", "antipode", "realization", "examples"):
            out.extend(SUITES[key](max_degree))
        return out
    return SUITES[name](max_degree)
