"""WQSym in the monomial basis M, plus the b endomorphism.

The product convolves prefix/suffix packings; the coproduct splits the value
range of a packed word (the polynomial shadow of doubling an ordered
alphabet).  Both are validated elsewhere against the quotient map from
ordered forests.
"""

from __future__ import annotations

from .algebra import AlgebraOps, FreeElement, TensorElement, register_algebra
from .structures import PackedWord, enumerate_packed_words, pack


def wqsym_product(u: PackedWord, v: PackedWord) -> FreeElement:
    """M_u M_v = sum of M_w over packed w whose length-|u| prefix packs to u
    and whose suffix packs to v."""
    cut = u.n
    terms = {}
    for w in enumerate_packed_words(u.n + v.n):
        if pack(w.letters[:cut]) == u and pack(w.letters[cut:]) == v:
            terms[w] = 1
    return FreeElement("wqsym", terms)


def wqsym_coproduct(u: PackedWord) -> TensorElement:
    """Split the values of u at each threshold k, packing the upper part."""
    terms: dict = {}
    for k in range(u.max_letter() + 1):
        low = PackedWord(tuple(a for a in u.letters if a <= k))
        high = pack(tuple(a for a in u.letters if a > k))
        pair = (low, high)
        terms[pair] = terms.get(pair, 0) + 1
    return TensorElement("wqsym", terms)


def b_word(u: PackedWord) -> PackedWord:
    """1 . u[1]: shift the letters of u by one, then prepend a 1."""
    return PackedWord((1,) + tuple(a + 1 for a in u.letters))


def b_endomorphism(x: FreeElement) -> FreeElement:
    return x.map_keys(b_word)


def wqsym_realize(x: FreeElement, size: int) -> dict[tuple[int, ...], int]:
    """Realization over the ordered alphabet a_1 < ... < a_size:
    M_u = sum of words packing to u.  Words are tuples of letters."""
    import itertools

    out: dict[tuple[int, ...], int] = {}
    for u, coeff in x.terms.items():
        for word in itertools.product(range(1, size + 1), repeat=u.n):
            if pack(word).letters == u.letters:
                out[word] = out.get(word, 0) + coeff
    return {w: c for w, c in out.items() if c}


register_algebra(
    AlgebraOps(
        tag="wqsym",
        key_type=PackedWord,
        unit_key=PackedWord(()),
        degree=lambda u: u.n,
        keys_of_degree=enumerate_packed_words,
        product=wqsym_product,
        coproduct=wqsym_coproduct,
        parse_key=PackedWord.parse,
        render_key=PackedWord.render,
        sort_key=lambda u: u.letters,
        default_basis="M",
    )
)
