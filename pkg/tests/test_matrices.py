import random

import pytest
from hypothesis import given, strategies as st

from braidcross import (
    BraidWord,
    CrossingMatrix,
    DimensionError,
    MalformedInput,
    NotAPermutation,
    Permutation,
    SRDecompositionError,
    configuration,
    crossing_matrix,
    crossing_product,
    hook_word,
    identity,
    in_sr_plus,
    is_t0,
    is_t1,
    matrix_from_json,
    mirror,
    permutation_braid_word,
    permutation_of_matrix,
    r_matrix,
    sr_decompose,
    sym_matrix,
    tableau_parse,
    tableau_render,
)
from braidcross.matrices import Tableau, format_cell, parse_cell, transposition_matrix
from braidcross.oracle import enumerate_sr_plus, random_word, sr_candidates
from braidcross.permutations import all_permutations
from braidcross.words import concat

from known_matrices import A, A_R, A_S, G, K, V, V_TABLEAU, BLOCKAGE_321


def M(*rows):
    return CrossingMatrix(tuple(tuple(r) for r in rows))


def test_construction_checks():
    with pytest.raises(MalformedInput):
        M((1, 0), (0, 0))
    with pytest.raises(MalformedInput):
        M((0, 1), (0,))
    with pytest.raises(MalformedInput):
        M((0, 1.0), (0, 0))


def test_json_forms():
    assert matrix_from_json('{"n": 2, "rows": [[0, 1], [0, 0]]}') == transposition_matrix(2, 1)
    assert matrix_from_json("[[0, 1], [0, 0]]") == transposition_matrix(2, 1)
    with pytest.raises(MalformedInput):
        matrix_from_json('{"n": 3, "rows": [[0, 1], [0, 0]]}')
    with pytest.raises(MalformedInput):
        matrix_from_json("[[0, 1], [0, 0]")
    with pytest.raises(MalformedInput):
        matrix_from_json('[[0, true], [0, 0]]')
    assert matrix_from_json(G.to_json()) == G


def test_permutation_of_matrix_examples():
    assert permutation_of_matrix(CrossingMatrix.zero(3)) == identity(3)
    # row sums 5,1,2,0 and column sums 2,2,2,2
    assert permutation_of_matrix(A).mapping == (4, 1, 3, 2)
    for p in all_permutations(4):
        assert permutation_of_matrix(r_matrix(p)) == p


def test_permutation_of_matrix_rejects():
    with pytest.raises(NotAPermutation):
        permutation_of_matrix(M((0, 2), (0, 0)))
    with pytest.raises(NotAPermutation):
        # every index maps to 2
        permutation_of_matrix(M((0, 1, 0), (0, 0, 1), (0, 0, 0)))


def test_crossing_product_examples():
    t1 = transposition_matrix(2, 1)
    z = CrossingMatrix.zero(2)
    assert crossing_product(t1, z) == t1
    assert crossing_product(z, t1) == t1
    assert crossing_product(t1, t1) == M((0, 1), (1, 0))
    assert crossing_product(t1, t1) == crossing_matrix(BraidWord(2, (1, 1)))
    with pytest.raises(DimensionError):
        crossing_product(t1, CrossingMatrix.zero(3))


def test_crossing_product_matches_concatenation():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(2, 6)
        u = random_word(n, rng.randint(0, 8), rng.randrange(1 << 30))
        v = random_word(n, rng.randint(0, 8), rng.randrange(1 << 30))
        assert crossing_product(crossing_matrix(u), crossing_matrix(v)) == crossing_matrix(u + v)


def test_sr_decompose_reference_example():
    d = sr_decompose(A)
    assert d.s == A_S
    assert d.r == A_R
    assert d.s + d.r == A
    assert tableau_render(A).replace("\n", "|").split("|") == ["R", "2S+R", "R", "0", "S", "-S+R"]


def test_sr_decompose_symmetric():
    s = sym_matrix(4, 1, 3, 2) + sym_matrix(4, 2, 4)
    d = sr_decompose(s)
    assert d.s == s and d.r.is_zero()


def test_sr_decompose_rejections():
    with pytest.raises(SRDecompositionError) as err:
        sr_decompose(M((0, 1, 0), (0, 0, 1), (0, 0, 0)))
    assert (err.value.reason, err.value.where) == ("r_not_t1", (1, 2, 3))
    with pytest.raises(SRDecompositionError) as err:
        sr_decompose(M((0, 2), (0, 0)))
    assert (err.value.reason, err.value.where) == ("r_not_zero_one", (1, 2))
    with pytest.raises(SRDecompositionError) as err:
        sr_decompose(M((0, 0, 1), (0, 0, 0), (0, 0, 0)))
    assert err.value.reason == "r_not_t0"


def test_decomposition_permutation():
    for p in all_permutations(4):
        assert sr_decompose(r_matrix(p)).permutation() == p


def test_t0_t1_examples():
    z = CrossingMatrix.zero(4)
    assert is_t0(z) and is_t1(z)
    s13 = M((0, 0, 1), (0, 0, 0), (1, 0, 0))
    assert not is_t0(s13)
    assert is_t0(G)


def test_in_sr_plus_examples():
    assert in_sr_plus(G)
    assert in_sr_plus(K)
    assert in_sr_plus(V)
    check = in_sr_plus(M((0, -1), (0, 0)))
    assert not check and check.reason == "negative_entry"
    check = in_sr_plus(M((0, 0, 1), (0, 0, 0), (1, 0, 0)))
    assert not check and check.reason == "not_t0" and check.where == (1, 2, 3)


def test_tableaux_of_g_and_k():
    assert tableau_render(G) == "R|S|0\n0|S\nR"
    assert tableau_render(K) == "0|S|0|0\nR|R|0\nR|S\n0"


def test_configuration_examples():
    assert configuration(G, [1, 2, 3, 4]) == G
    g124 = configuration(G, [1, 2, 4])
    assert g124 == BLOCKAGE_321
    assert tableau_render(g124) == "R|0\nS"
    assert tableau_render(configuration(K, [1, 3, 4])) == "S|0\nR"
    with pytest.raises(MalformedInput):
        configuration(G, [2, 1])


def test_mirror_examples():
    anti = M((0, 1, 2), (3, 0, 1), (4, 3, 0))
    assert mirror(anti) == anti
    # G's two blockages mirror into each other, so G is its own mirror
    assert mirror(G) == G
    # tableau cell (i, j) moves to (m+1-j, m+1-i); K's cells map onto themselves
    assert mirror(K) == K
    assert tableau_render(mirror(A), strict=False) == "-S+R|S|R\n0|2S+R\nR"


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n).map(
        lambda xs: CrossingMatrix.from_flat(n, [0 if k % (n + 1) == 0 else x for k, x in enumerate(xs)])
    )
))
def test_mirror_involution(a):
    assert mirror(mirror(a)) == a
    assert tableau_parse(tableau_render(a, strict=False), a.n) == a


def test_tableau_cells():
    cases = {(0, 0): "0", (1, 0): "S", (0, 1): "R", (1, 1): "S+R", (2, 0): "2S",
             (2, 1): "2S+R", (-1, 0): "-S", (-1, 1): "-S+R", (-3, 1): "-3S+R", (0, 2): "2R",
             (1, -1): "S-R"}
    for cell, text in cases.items():
        assert format_cell(*cell) == text
        assert parse_cell(text) == cell
    for bad in ["", "X", "SS", "S2R", "R+S", "1.5S"]:
        with pytest.raises(MalformedInput):
            parse_cell(bad)


def test_tableau_zero_matrix():
    assert set(tableau_render(CrossingMatrix.zero(4)).replace("\n", "|").split("|")) == {"0"}


def test_tableau_parse_v():
    assert tableau_parse(V_TABLEAU) == V
    assert tableau_render(V) == V_TABLEAU


def test_tableau_parse_errors():
    with pytest.raises(MalformedInput):
        tableau_parse("R|0\nS|S")
    with pytest.raises(MalformedInput):
        tableau_parse("R|0\nS", n=4)
    with pytest.raises(MalformedInput):
        tableau_parse("R|Q\nS")


def test_tableau_strict_render_rejects():
    with pytest.raises(SRDecompositionError):
        tableau_render(M((0, 2), (0, 0)))
    assert tableau_render(M((0, 2), (0, 0)), strict=False) == "2R"


def test_tableau_cell_lookup():
    t = Tableau.of(A)
    assert t.cell(1, 3) == (2, 1)
    assert t.cell(3, 4) == (-1, 1)


def _witness_word(a):
    """Hook words for S followed by the permutation braid for R."""
    d = sr_decompose(a)
    n = a.n
    parts = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            s = d.s.entry(i, j)
            h = hook_word(i, j, n)
            parts.extend([h if s > 0 else h.inverse()] * abs(s))
    parts.append(permutation_braid_word(d.permutation()))
    return concat(parts, n)


def test_sr_decomposable_matrices_are_crossing_matrices():
    rng = random.Random(22)
    for _ in range(300):
        n = rng.randint(2, 5)
        a = crossing_matrix(random_word(n, rng.randint(0, 10), rng.randrange(1 << 30)))
        assert crossing_matrix(_witness_word(a)) == a
    for a in enumerate_sr_plus(3, 2):
        assert crossing_matrix(_witness_word(a)) == a


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nonzero_sr_plus_has_superdiagonal_entry(n):
    for a in enumerate_sr_plus(n, 2):
        if not a.is_zero():
            assert any(a.entry(i, i + 1) for i in range(1, n))


def test_sr_sums_define_permutations():
    rng = random.Random(23)
    for _ in range(500):
        n = rng.randint(1, 6)
        p = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        s = CrossingMatrix.zero(n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                s = s + sym_matrix(n, i, j, rng.randint(-3, 3))
        assert permutation_of_matrix(s + r_matrix(p)) == p


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mirror_preserves_sr_plus(n):
    for a in sr_candidates(n, 2):
        assert bool(in_sr_plus(a)) == bool(in_sr_plus(mirror(a)))
