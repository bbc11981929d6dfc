from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from brauerheight.exact import (D, ONE, DeltaPoly, NotDivisible, PolyMatrix, det_fraction_free,
                                expand_factors, format_poly, generic_rank, parse_poly, poly_gcd,
                                rank_at, rank_mod, rational_and_quadratic_roots, root_multiset)

coeffs = st.lists(st.integers(-6, 6), min_size=0, max_size=4)
polys = coeffs.map(lambda c: DeltaPoly(tuple(Fraction(x) for x in c)))

d = sympy.Symbol("d")


def to_sympy(p: DeltaPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * d ** k for k, c in enumerate(p.coeffs))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == DeltaPoly()


@given(polys, polys)
def test_divmod(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_exact_div_raises():
    with pytest.raises(NotDivisible):
        (D + 1).exact_div(D)


@given(polys, polys)
def test_gcd_divides(a, b):
    g = poly_gcd(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert g.divides(a) and g.divides(b)


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(polys, min_size=k * k, max_size=k * k)
                                 .map(lambda es: (k, es))))
def test_det_against_sympy(kes):
    k, es = kes
    m = PolyMatrix(k, k, tuple(es))
    ours = det_fraction_free(m)
    ref = sympy.expand(sympy.Matrix(k, k, [to_sympy(e) for e in es]).det())
    assert sympy.expand(to_sympy(ours) - ref) == 0


def test_gram_determinants_and_roots():
    rows = [[D, 1, 0, 1, 1, 1], [1, D, 1, 1, 1, 0], [0, 1, D, 1, 1, 1],
            [1, 1, 1, D, 0, 1], [1, 1, 1, 0, D, 1], [1, 0, 1, 1, 1, D]]
    f = PolyMatrix.from_rows(rows)
    assert format_poly(f.leading_block(3).det()) == "d^3 - 2*d"
    assert sorted(root_multiset(f.leading_block(3).det())) == sorted(["0", "sqrt(2)", "-sqrt(2)"])
    assert sorted(root_multiset(f.leading_block(4).det())) == sorted(
        ["0", "1", "(-1+sqrt(17))/2", "(-1-sqrt(17))/2"])
    assert sorted(root_multiset(f.det())) == sorted(["0", "0", "0", "-4", "2", "2"])


@given(polys.filter(lambda p: not p.is_zero()))
def test_factorization_expands_back(p):
    fs = rational_and_quadratic_roots(p)
    assert expand_factors(fs) * DeltaPoly.const(p.lead) == p * DeltaPoly.const(expand_factors(fs).lead)


def test_ranks():
    rows = [[D, 1, 0], [1, D, 1], [0, 1, D]]
    m = PolyMatrix.from_rows(rows)
    assert rank_at(m, 7) == 3
    assert rank_at(m, 0) == 2
    assert rank_mod(m, D * D - 2) == 2
    assert generic_rank(m) == 3
    assert rank_mod(m, D - 1) == rank_at(m, 1)


def test_csv_round_trip():
    m = PolyMatrix.from_rows([[D * D - 3, ONE], [DeltaPoly.const(Fraction(1, 2)), D]])
    assert PolyMatrix.from_csv(m.to_csv()) == m


def test_evaluate_is_exact():
    assert (D * D - 2)(Fraction(3, 2)) == Fraction(1, 4)
