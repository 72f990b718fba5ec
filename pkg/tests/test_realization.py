import itertools

import pytest

from treehopf.endo import shifted_concat
from treehopf.realization import (
    NCPolynomial,
    commutative_image,
    iter_endofunction_words,
    pi_image,
    polynomial_to_json,
    project_second_subscript,
    rank_check,
    rank_of_rows,
    realize_endofunction,
    realize_forest,
    realize_permutation,
    realizer_for,
)
from treehopf.structures import (
    Endofunction,
    OrderedForest,
    Permutation,
    StructureError,
    canonicalize,
    enumerate_endofunctions,
    enumerate_ordered_forests,
)
from treehopf.verify import doubling_transport_ok, multiplicativity_ok
from treehopf.words import wqsym_realize


def A(i, j):
    return ("A", i, j)


# ---------------------------------------------------------------------------
# Frozen letter patterns from the worked realizations
# ---------------------------------------------------------------------------

def test_single_vertex_v2():
    assert realize_forest(OrderedForest((0,)), "v2", 2) == NCPolynomial(
        {(A(1, 1),): 1, (A(2, 2),): 1}
    )


def test_six_vertex_forest_v2_matches_its_constraint_sum():
    forest = OrderedForest.parse("4 3 0 0 6 4")
    size = 4
    expected = {}
    rng = range(1, size + 1)
    for i1, i2, i3, i4, i5, i6 in itertools.product(rng, repeat=6):
        if i3 < i2 and i4 < i1 and i4 < i6 < i5:
            word = (A(i4, i1), A(i3, i2), A(i3, i3), A(i4, i4), A(i6, i5), A(i4, i6))
            expected[word] = 1
    assert realize_forest(forest, "v2", size).terms == expected


def test_six_vertex_forest_v1_has_free_virtual_subscripts():
    forest = OrderedForest.parse("4 3 0 0 6 4")
    size = 3
    expected = {}
    rng = range(1, size + 1)
    for i1, i2, i3, i4, i5, i6 in itertools.product(rng, repeat=6):
        for x3 in range(size):
            for x4 in range(size):
                if x3 < i3 < i2 and x4 < i4 < i1 and i4 < i6 < i5:
                    word = (A(i4, i1), A(i3, i2), A(x3, i3), A(x4, i4), A(i6, i5), A(i4, i6))
                    expected[word] = 1
    assert realize_forest(forest, "v1", size).terms == expected


def test_single_fixed_point_func():
    assert realize_endofunction(Endofunction((1,)), 3) == NCPolynomial(
        {(A(i, j),): 1 for i in (1, 2, 3) for j in (1, 2, 3) if i != j}
    )


def test_endofunction_24352_matches_its_constraint_sum():
    f = Endofunction.parse("2 4 3 5 2")
    size = 3
    expected = {}
    rng = range(1, size + 1)
    for i, j, k, l, m, n in itertools.product(rng, repeat=6):
        if i not in (k, j, n) and k != n and l != m:
            expected[(A(i, j), A(k, i), A(l, m), A(n, k), A(i, n))] = 1
    assert realize_endofunction(f, size).terms == expected


def test_endofunction_23234_matches_its_constraint_sum():
    f = Endofunction.parse("2 3 2 3 4")
    size = 3
    expected = {}
    rng = range(1, size + 1)
    for i, j, k, l, m in itertools.product(rng, repeat=5):
        if j not in (i, k) and l not in (k, m):
            expected[(A(j, i), A(k, j), A(j, k), A(k, l), A(l, m))] = 1
    assert realize_endofunction(f, size).terms == expected


def test_permutation_24513_matches_its_subscript_pattern():
    sigma = Permutation.parse("2 4 5 1 3")
    size = 2
    expected = {}
    for i1, i2, i3, i4, i5 in itertools.product(range(1, size + 1), repeat=5):
        expected[(A(i4, i1), A(i1, i2), A(i5, i3), A(i2, i4), A(i3, i5))] = 1
    assert realize_permutation(sigma, size).terms == expected


def test_identity_permutation_realizes_as_loops():
    assert realize_permutation(Permutation((1,)), 2) == NCPolynomial(
        {(A(1, 1),): 1, (A(2, 2),): 1}
    )


def test_truncation_must_be_positive():
    with pytest.raises(StructureError):
        realize_forest(OrderedForest((0,)), "v2", 0)
    with pytest.raises(StructureError):
        realize_forest(OrderedForest((0,)), "v7", 3)


# ---------------------------------------------------------------------------
# Multiplicativity and doubling at module scale
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("version", ["v1", "v2", "func", "perm"])
def test_multiplicativity_total_degree_3_at_n5(version):
    from treehopf.verify import _family_keys

    for d1 in (1, 2):
        for a in _family_keys(version, d1):
            for b in _family_keys(version, 3 - d1):
                assert multiplicativity_ok(version, a, b, 5)


@pytest.mark.parametrize("version", ["v1", "v2", "func", "perm"])
def test_doubling_transport_degree_2_at_n5(version):
    from treehopf.verify import _family_keys

    for d in (0, 1, 2):
        for key in _family_keys(version, d):
            assert doubling_transport_ok(version, key, 5)


@pytest.mark.slow
@pytest.mark.parametrize("version", ["v1", "v2", "perm"])
def test_multiplicativity_total_degree_4_at_n8(version):
    from treehopf.verify import _family_keys

    for total in (2, 3, 4):
        for d1 in range(1, total):
            for a in _family_keys(version, d1):
                for b in _family_keys(version, total - d1):
                    assert multiplicativity_ok(version, a, b, 8), (version, a, b)


def _word_encoder(size):
    base = 2 * (size + 1) * (size + 1)

    def encode(word):
        x = 0
        for side, i, j in reversed(word):
            x = x * base + ((side == "B") * (size + 1) + i) * (size + 1) + j
        return x

    return base, encode


@pytest.mark.slow
def test_func_multiplicativity_total_degree_4_at_n8_streamed():
    # The degree-4 polynomials reach ~10^7 words; compare via integer-encoded
    # streams instead of materializing both sides as dictionaries.
    size = 8
    base, encode = _word_encoder(size)
    target_cache = {}

    def target_for(f):
        if f not in target_cache:
            target_cache[f] = frozenset(
                encode(w) for w in iter_endofunction_words(f, size)
            )
        return target_cache[f]

    keys = {d: enumerate_endofunctions(d) for d in (1, 2, 3)}
    words = {
        d: {f: [encode(w) for w in iter_endofunction_words(f, size)] for f in keys[d]}
        for d in (1, 2, 3)
    }
    for total in (2, 3, 4):
        for d1 in range(1, total):
            d2 = total - d1
            shift = base ** d1
            for f in keys[d1]:
                left = words[d1][f]
                for g in keys[d2]:
                    right = words[d2][g]
                    target = target_for(shifted_concat(f, g))
                    count = 0
                    for e2 in right:
                        offset = e2 * shift
                        for e1 in left:
                            assert e1 + offset in target
                            count += 1
                    assert count == len(target), (f, g)
        target_cache.clear()


# ---------------------------------------------------------------------------
# Commutative image
# ---------------------------------------------------------------------------

def test_commutative_image_of_one_word():
    poly = NCPolynomial({(A(2, 3), A(1, 2)): 1})
    assert commutative_image(poly) == {(A(1, 2), A(2, 3)): 1}


@pytest.mark.parametrize("version", ["v1", "v2"])
def test_commutative_image_kernel_is_shape_equality(version):
    for n in (1, 2, 3):
        size = 2 * n + 2
        forests = enumerate_ordered_forests(n)
        images = {f: commutative_image(realize_forest(f, version, size)) for f in forests}
        for f in forests:
            for g in forests:
                same_shape = canonicalize(f) == canonicalize(g)
                assert (images[f] == images[g]) == same_shape, (version, f, g)


# ---------------------------------------------------------------------------
# Rank
# ---------------------------------------------------------------------------

def test_rank_of_rows_on_known_matrices():
    assert rank_of_rows([{1: 1, 2: 1}, {2: 1}, {1: 1}]) == 2
    assert rank_of_rows([{1: 2, 2: 4}, {1: 1, 2: 2}]) == 1
    assert rank_of_rows([]) == 0
    assert rank_of_rows([{}, {1: 1}]) == 1
    # needs the general elimination fallback: no singleton columns
    rows = [{1: 1, 2: 1}, {2: 1, 3: 1}, {1: 1, 3: 1}, {1: 1, 2: 1, 3: 1}]
    assert rank_of_rows(rows) == 3


def test_rank_check_families_degree_2():
    rep = rank_check(enumerate_ordered_forests(2), realizer_for("v2"), 6, label="v2 deg 2")
    assert rep.full and rep.rank == 3
    rep = rank_check(enumerate_endofunctions(2), realizer_for("func"), 6, label="func deg 2")
    assert rep.full and rep.rank == 4


# ---------------------------------------------------------------------------
# pi and the ordered-alphabet consistency
# ---------------------------------------------------------------------------

def test_pi_image_reproduces_the_six_worked_values():
    assert sorted(m.render() for m in pi_image(OrderedForest.parse("0 1 1")).terms) == [
        "1 2 2",
        "1 2 3",
        "1 3 2",
    ]


def test_pi_commutes_with_the_letter_projection_at_n6():
    for n in (1, 2, 3):
        for forest in enumerate_ordered_forests(n):
            lhs = project_second_subscript(realize_forest(forest, "v2", 6))
            rhs = wqsym_realize(pi_image(forest), 6)
            assert lhs == rhs, forest


# ---------------------------------------------------------------------------
# JSON dump
# ---------------------------------------------------------------------------

def test_polynomial_json_shape():
    payload = polynomial_to_json(realize_forest(OrderedForest((0,)), "v2", 2), "v2", 2)
    assert payload == {
        "version": "V2",
        "N": 2,
        "terms": [
            {"coeff": "1", "word": [["A", 1, 1]]},
            {"coeff": "1", "word": [["A", 2, 2]]},
        ],
    }
