"""Exact free-module arithmetic and generic graded-bialgebra utilities.

Elements are finite integer combinations of basis keys; every structure
constant in this package is an integer, so any non-integer coefficient is a
bug.  Concrete algebras register themselves in :data:`ALGEBRAS` with
product/coproduct/degree callbacks, and the axiom checkers below
(coassociativity, product/coproduct compatibility, antipode convolution)
work uniformly over the registry.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence


class AlgebraTagError(ValueError):
    """Mixed or unknown algebra tags in an element operation."""


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class FreeElement:
    """Finite mapping from basis keys to integer coefficients.

    Immutable by convention: no method mutates ``terms`` after construction,
    and zero coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms: dict | None = None):
        self.algebra = algebra
        clean = {}
        for key, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"non-integer coefficient {coeff!r}")
            if coeff:
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def from_key(cls, algebra: str, key, coeff: int = 1) -> "FreeElement":
        return cls(algebra, {key: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same(self, other: "FreeElement"):
        if not isinstance(other, FreeElement) or other.algebra != self.algebra:
            raise AlgebraTagError(f"cannot combine {self.algebra} with {getattr(other, 'algebra', other)!r}")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._require_same(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, 0) + coeff
        return FreeElement(self.algebra, out)

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-1) * other

    def __neg__(self) -> "FreeElement":
        return (-1) * self

    def __rmul__(self, scalar: int) -> "FreeElement":
        if not isinstance(scalar, int):
            raise TypeError(f"scalars must be integers, got {scalar!r}")
        return FreeElement(self.algebra, {k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FreeElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __repr__(self):
        return f"FreeElement({self.algebra!r}, {self.terms!r})"

    def map_keys(self, fn: Callable, algebra: str | None = None) -> "FreeElement":
        """Linear extension of a key map (which may itself return elements)."""
        target = algebra or self.algebra
        out = FreeElement(target)
        for key, coeff in self.terms.items():
            image = fn(key)
            if isinstance(image, FreeElement):
                out = out + coeff * image
            else:
                out = out + FreeElement.from_key(target, image, coeff)
        return out


class TensorElement:
    """Finite integer combination of key pairs (two-fold tensors)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: str, terms: dict | None = None):
        self.algebra = algebra
        clean = {}
        for pair, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"non-integer coefficient {coeff!r}")
            if coeff:
                clean[pair] = coeff
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same(self, other: "TensorElement"):
        if not isinstance(other, TensorElement) or other.algebra != self.algebra:
            raise AlgebraTagError(f"cannot combine {self.algebra} with {getattr(other, 'algebra', other)!r}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._require_same(other)
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            out[pair] = out.get(pair, 0) + coeff
        return TensorElement(self.algebra, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "TensorElement":
        if not isinstance(scalar, int):
            raise TypeError(f"scalars must be integers, got {scalar!r}")
        return TensorElement(self.algebra, {k: scalar * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def __repr__(self):
        return f"TensorElement({self.algebra!r}, {self.terms!r})"


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraOps:
    """Callbacks a concrete algebra registers for the generic machinery."""

    tag: str
    key_type: type
    unit_key: Any
    degree: Callable[[Any], int]
    keys_of_degree: Callable[[int], Sequence]
    product: Callable[[Any, Any], FreeElement]
    coproduct: Callable[[Any], TensorElement]
    parse_key: Callable[[str], Any]
    render_key: Callable[[Any], str]
    sort_key: Callable[[Any], Any]
    default_basis: str = "S"


ALGEBRAS: dict[str, AlgebraOps] = {}


def register_algebra(ops: AlgebraOps) -> None:
    ALGEBRAS[ops.tag] = ops


def get_algebra(tag: str) -> AlgebraOps:
    try:
        return ALGEBRAS[tag.lower()]
    except KeyError:
        raise AlgebraTagError(f"unknown algebra {tag!r}; known: {sorted(ALGEBRAS)}") from None


def unit_element(tag: str) -> FreeElement:
    ops = get_algebra(tag)
    return FreeElement.from_key(ops.tag, ops.unit_key)


def counit(x: FreeElement) -> int:
    ops = get_algebra(x.algebra)
    return x.terms.get(ops.unit_key, 0)


# ---------------------------------------------------------------------------
# Linear extensions
# ---------------------------------------------------------------------------

def product_elements(x: FreeElement, y: FreeElement) -> FreeElement:
    if x.algebra != y.algebra:
        raise AlgebraTagError(f"cannot multiply {x.algebra} by {y.algebra}")
    ops = get_algebra(x.algebra)
    out = FreeElement(x.algebra)
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            out = out + (ca * cb) * ops.product(a, b)
    return out


def coproduct_element(x: FreeElement) -> TensorElement:
    ops = get_algebra(x.algebra)
    out = TensorElement(x.algebra)
    for key, coeff in x.terms.items():
        out = out + coeff * ops.coproduct(key)
    return out


def tensor_product(t1: TensorElement, t2: TensorElement) -> TensorElement:
    """(a (x) b)(c (x) d) = ac (x) bd, componentwise in the algebra product."""
    if t1.algebra != t2.algebra:
        raise AlgebraTagError(f"cannot multiply {t1.algebra} by {t2.algebra} tensors")
    ops = get_algebra(t1.algebra)
    out: dict = {}
    for (a, b), c1 in t1.terms.items():
        for (c, d), c2 in t2.terms.items():
            left = ops.product(a, c)
            right = ops.product(b, d)
            for ka, cl in left.terms.items():
                for kb, cr in right.terms.items():
                    pair = (ka, kb)
                    out[pair] = out.get(pair, 0) + c1 * c2 * cl * cr
    return TensorElement(t1.algebra, out)


def _triple_coproduct(tag: str, key, left_first: bool) -> dict:
    """(Delta (x) id)Delta or (id (x) Delta)Delta applied to a basis key."""
    ops = get_algebra(tag)
    out: dict = {}
    for (a, b), c in ops.coproduct(key).terms.items():
        if left_first:
            for (x, y), d in ops.coproduct(a).terms.items():
                out[(x, y, b)] = out.get((x, y, b), 0) + c * d
        else:
            for (x, y), d in ops.coproduct(b).terms.items():
                out[(a, x, y)] = out.get((a, x, y), 0) + c * d
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Axiom checks
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    """Outcome of a brute-force axiom check; failures are data, not errors."""

    name: str
    algebra: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.name}[{self.algebra}]: {self.checked} cases, {status}"


def check_coassociativity(tag: str, max_degree: int) -> CheckReport:
    """(Delta (x) id)Delta = (id (x) Delta)Delta on every key of degree <= max_degree."""
    ops = get_algebra(tag)
    report = CheckReport("coassociativity", ops.tag)
    for n in range(max_degree + 1):
        for key in ops.keys_of_degree(n):
            report.checked += 1
            if _triple_coproduct(ops.tag, key, True) != _triple_coproduct(ops.tag, key, False):
                report.failures.append(ops.render_key(key))
    return report


def check_bialgebra_compat(
    tag: str,
    max_degree: int,
    sample_degree: int | None = None,
    sample_count: int = 200,
    seed: int = 0,
) -> CheckReport:
    """Delta(xy) = Delta(x)Delta(y) on all key pairs of total degree <= max_degree.

    If ``sample_degree`` is given, additionally checks a deterministic random
    sample of pairs with that total degree (all of them if fewer exist).
    """
    ops = get_algebra(tag)
    report = CheckReport("bialgebra-compat", ops.tag)

    def check_pair(a, b):
        report.checked += 1
        lhs = coproduct_element(ops.product(a, b))
        rhs = tensor_product(ops.coproduct(a), ops.coproduct(b))
        if lhs != rhs:
            report.failures.append(f"{ops.render_key(a)} | {ops.render_key(b)}")

    for total in range(max_degree + 1):
        for da in range(total + 1):
            for a in ops.keys_of_degree(da):
                for b in ops.keys_of_degree(total - da):
                    check_pair(a, b)
    if sample_degree is not None:
        pairs = []
        for da in range(sample_degree + 1):
            for a in ops.keys_of_degree(da):
                for b in ops.keys_of_degree(sample_degree - da):
                    pairs.append((a, b))
        if len(pairs) > sample_count:
            pairs = random.Random(seed).sample(pairs, sample_count)
        for a, b in pairs:
            check_pair(a, b)
    return report


# ---------------------------------------------------------------------------
# Antipode
# ---------------------------------------------------------------------------

_ANTIPODE_CACHE: dict[tuple[str, Any], FreeElement] = {}


def antipode_key(tag: str, key) -> FreeElement:
    """Recursive antipode of a graded connected bialgebra on a basis key:
    S(1) = 1 and S(x) = -x - sum S(x') x'' over the reduced coproduct."""
    ops = get_algebra(tag)
    cached = _ANTIPODE_CACHE.get((ops.tag, key))
    if cached is not None:
        return cached
    if ops.degree(key) == 0:
        if key != ops.unit_key:
            raise AlgebraTagError(f"degree-0 key {ops.render_key(key)!r} is not the unit")
        return unit_element(ops.tag)
    result = FreeElement.from_key(ops.tag, key, -1)
    for (a, b), coeff in ops.coproduct(key).terms.items():
        if ops.degree(a) == 0 or ops.degree(b) == 0:
            continue  # reduced coproduct only
        result = result - coeff * product_elements(antipode_key(ops.tag, a), FreeElement.from_key(ops.tag, b))
    _ANTIPODE_CACHE[(ops.tag, key)] = result
    return result


def antipode(x: FreeElement) -> FreeElement:
    out = FreeElement(x.algebra)
    for key, coeff in x.terms.items():
        out = out + coeff * antipode_key(x.algebra, key)
    return out


def check_antipode(tag: str, max_degree: int) -> CheckReport:
    """Convolution identity (S * id)(key) = unit.counit(key) for degrees 1..max."""
    ops = get_algebra(tag)
    report = CheckReport("antipode-convolution", ops.tag)
    for n in range(1, max_degree + 1):
        for key in ops.keys_of_degree(n):
            report.checked += 1
            conv = FreeElement(ops.tag)
            for (a, b), coeff in ops.coproduct(key).terms.items():
                conv = conv + coeff * product_elements(antipode_key(ops.tag, a), FreeElement.from_key(ops.tag, b))
            if not conv.is_zero():  # counit vanishes in positive degree
                report.failures.append(ops.render_key(key))
    return report


# ---------------------------------------------------------------------------
# JSON element schema
# ---------------------------------------------------------------------------

def element_to_json(x: FreeElement, basis: str | None = None) -> dict:
    ops = get_algebra(x.algebra)
    chosen = basis or ops.default_basis
    terms = sorted(x.terms.items(), key=lambda kv: (ops.degree(kv[0]), ops.sort_key(kv[0])))
    return {
        "algebra": ops.tag,
        "basis": chosen,
        "terms": [{"coeff": str(c), "key": ops.render_key(k)} for k, c in terms],
    }


def element_from_json(data: dict) -> tuple[FreeElement, str]:
    """Decode the JSON element schema; returns (element, basis)."""
    try:
        ops = get_algebra(data["algebra"])
        basis = data.get("basis", ops.default_basis)
        raw = data["terms"]
    except (KeyError, TypeError) as exc:
        raise AlgebraTagError(f"bad element JSON: {exc}") from None
    terms: dict = {}
    for entry in raw:
        try:
            key_text, coeff_text = entry["key"], entry["coeff"]
        except (KeyError, TypeError) as exc:
            raise AlgebraTagError(f"bad element term {entry!r}: {exc}") from None
        key = ops.parse_key(key_text)
        try:
            coeff = int(coeff_text)
        except (TypeError, ValueError):
            raise AlgebraTagError(f"bad coefficient {coeff_text!r}") from None
        terms[key] = terms.get(key, 0) + coeff
    return FreeElement(ops.tag, terms), basis


def element_to_text(x: FreeElement) -> str:
    return json.dumps(element_to_json(x), indent=None, separators=(",", ":"))


def tensor_to_json(t: TensorElement) -> dict:
    ops = get_algebra(t.algebra)
    terms = sorted(
        t.terms.items(),
        key=lambda kv: (
            ops.degree(kv[0][0]),
            ops.sort_key(kv[0][0]),
            ops.degree(kv[0][1]),
            ops.sort_key(kv[0][1]),
        ),
    )
    return {
        "algebra": ops.tag,
        "basis": ops.default_basis,
        "terms": [
            {"coeff": str(c), "left": ops.render_key(a), "right": ops.render_key(b)}
            for (a, b), c in terms
        ],
    }


def tensor_from_json(data: dict) -> TensorElement:
    ops = get_algebra(data["algebra"])
    terms: dict = {}
    for entry in data["terms"]:
        pair = (ops.parse_key(entry["left"]), ops.parse_key(entry["right"]))
        terms[pair] = terms.get(pair, 0) + int(entry["coeff"])
    return TensorElement(ops.tag, terms)


def element_to_latex(x: FreeElement) -> str:
    """Best-effort LaTeX: basis keys rendered by their text form, not pictures."""
    ops = get_algebra(x.algebra)
    letter = {"wqsym": "M"}.get(ops.tag, "S")
    bits = []
    for key, coeff in sorted(x.terms.items(), key=lambda kv: (ops.degree(kv[0]), ops.sort_key(kv[0]))):
        body = f"{letter}^{{({ops.render_key(key)})}}"
        if coeff == 1:
            piece = body
        elif coeff == -1:
            piece = f"-{body}"
        else:
            piece = f"{coeff}\\,{body}"
        if bits and not piece.startswith("-"):
            bits.append("+")
        bits.append(piece)
    return "".join(bits) if bits else "0"
