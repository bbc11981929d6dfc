import random

import pytest

from brauerheight.diagram import (U, compose, e_n, flip, identity, pair_partitions, sigma, tensor,
                                  tl_generator)
from brauerheight.exact import D, ONE, PolyMatrix, format_poly, root_multiset
from brauerheight.height import height_set
from brauerheight.reptheory import (AlgebraElement, gram_matrix, globalization_check,
                                    ideal_basis, ideal_check, include, index_set,
                                    index_set_recursive, localize_psi, multiply,
                                    restriction_check, semisimplicity_report, standard_module,
                                    standard_module_dimension)

F = [["d", "1", "0", "1", "1", "1"], ["1", "d", "1", "1", "1", "0"], ["0", "1", "d", "1", "1", "1"],
     ["1", "1", "1", "d", "0", "1"], ["1", "1", "1", "0", "d", "1"], ["1", "0", "1", "1", "1", "d"]]


def el(l, n, p):
    return AlgebraElement.from_diagram(l, n, p)


def test_multiply_examples():
    e = el(0, 2, U())
    assert multiply(e, e) == e.scale(D)
    s = el(0, 2, sigma(1, 2))
    assert s * s == el(0, 2, identity(2))
    e1, e2 = el(-1, 3, tl_generator(1, 3)), el(-1, 3, tl_generator(2, 3))
    assert e1 * e2 * e1 == e1 and e2 * e1 * e2 == e2


def test_height_bound_enforced():
    with pytest.raises(ValueError):
        el(-1, 2, sigma(1, 2))
    with pytest.raises(ValueError):
        el(0, 2, U()) * el(0, 3, identity(3))


def test_localization():
    for l in (-1, 0, 1):
        e = el(l, 4, e_n(4))
        one = el(l, 4, identity(4))
        assert localize_psi(e * one * e) == el(l, 2, identity(2)).scale(D)
        rnd = random.Random(l)
        basis2 = height_set(l, 2)
        for _ in range(10):
            a, b = (el(l, 2, rnd.choice(basis2)) for _ in range(2))
            x, y = e * include(a) * e, e * include(b) * e
            assert localize_psi(x) == a.scale(D)
            assert localize_psi(x * y) == (localize_psi(x) * localize_psi(y)).scale(D)


@pytest.mark.parametrize("l", [-1, 0, 1, 2])
def test_eJe_dimension(l):
    e = e_n(4)
    image = {compose(compose(e, p), e).unscaled for p in height_set(l, 4)}
    assert len(image) == len(height_set(l, 2))


def test_ideal_examples():
    assert len(ideal_basis(1, 3, 1)) == 9
    assert len(ideal_basis(-1, 3, 1)) == 4
    assert ideal_basis(2, 4, 2) == {p for p in pair_partitions(4, 4) if not p.propagating_blocks()}


@pytest.mark.parametrize("l,n,t", [(l, n, t) for l in (-1, 0, 1) for n in (3, 4) for t in (1, 2) if 2 * t <= n])
def test_ideal_theorem(l, n, t):
    rep = ideal_check(l, n, t)
    assert rep.ok, (len(rep.generated), len(rep.target))


def test_index_sets():
    assert index_set(-1, 3) == [(3, (1,)), (1, (1,))]
    assert len(index_set(1, 3)) == 4
    assert len(index_set(0, 4)) == 5
    for l in (-1, 0, 1, 2):
        for n in range(0, 6):
            assert index_set(l, n) == index_set_recursive(l, n)


def test_standard_module_examples():
    assert standard_module(1, 4, 2, (2,)).dim == 6
    assert standard_module(-1, 4, 2, (1,)).dim == 3
    with pytest.raises(ValueError):
        standard_module(-1, 4, 2, (2,))
    for lam in [(3,), (2, 1), (1, 1, 1)]:
        m = standard_module(2, 3, 3, lam)
        assert len(m.half) == 1 and m.dim == standard_module_dimension(2, 3, 3, lam)


def test_gram_anchor():
    g = gram_matrix(1, 4, 2, (2,)).matrix
    assert [[format_poly(x) for x in row] for row in g.row_lists()] == F
    assert gram_matrix(-1, 4, 2, (1,)).matrix == g.leading_block(3)
    assert gram_matrix(0, 4, 2, (2,)).matrix == g.leading_block(4)
    assert sorted(root_multiset(g.det())) == sorted(["0", "0", "0", "-4", "2", "2"])
    assert gram_matrix(0, 2, 0, ()).matrix == PolyMatrix.from_rows([[D]])


LABELS = [(l, n, p, lam) for l in (-1, 0, 1) for n in range(1, 5) for p, lam in index_set(l, n)]


@pytest.mark.parametrize("l,n,p,lam", LABELS)
def test_gram_is_contravariant(l, n, p, lam):
    """A(a)^T G = G A(flip a) for every basis diagram a."""
    mod = standard_module(l, n, p, lam)
    g = gram_matrix(l, n, p, lam).matrix
    assert g.is_symmetric()
    for a in height_set(l, n):
        lhs = mod.action_matrix(a).transpose() @ g
        rhs = g @ mod.action_matrix(flip(a))
        assert lhs == rhs


@pytest.mark.parametrize("l,n,p,lam", [x for x in LABELS if x[1] <= 3])
def test_action_is_a_representation(l, n, p, lam):
    mod = standard_module(l, n, p, lam)
    basis = height_set(l, n)
    rnd = random.Random(n)
    for _ in range(20):
        a, b = rnd.choice(basis), rnd.choice(basis)
        assert mod.action_matrix(compose(a, b)) == mod.action_matrix(a) @ mod.action_matrix(b)


@pytest.mark.parametrize("l,n", [(l, n) for l in (-1, 0, 1) for n in (2, 3, 4)])
def test_semisimplicity(l, n):
    rep = semisimplicity_report(l, n, deltas=[0, 1])
    assert rep.sum_of_squares == rep.algebra_dim
    assert rep.generic_full_rank and rep.drops_at_roots


def test_tl_dim_bookkeeping():
    rep = semisimplicity_report(-1, 4)
    assert [x.dim for x in rep.labels] == [1, 3, 2]
    assert rep.sum_of_squares == 14


@pytest.mark.parametrize("l,n", [(l, n) for l in (0, 1) for n in range(1, 5)])
def test_restriction_rules(l, n):
    for lab in index_set(l, n):
        assert restriction_check(l, n, *lab).ok


def test_restriction_regimes():
    assert restriction_check(2, 4, 2, (2,)).regime == "<"
    assert restriction_check(0, 4, 2, (2,)).regime == "="
    r = restriction_check(-1, 5, 3, (1,))
    assert r.regime == ">" and r.ok
    assert [t for t, _ in r.quotient_terms] == [(4, (1,))]


@pytest.mark.parametrize("l", [-1, 0, 1])
def test_globalization(l):
    for n in (1, 2, 3):
        for lab in index_set(l, n + 2):
            assert globalization_check(l, n, *lab).ok
    assert globalization_check(1, 2, 2, (2,)).image_dim == 1
