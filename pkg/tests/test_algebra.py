from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from kashaev.algebra import (
    GaussRational,
    Laurent,
    circle_param,
    det_laurent,
    format_poly,
    format_t,
    herm_signature,
    poly_sqrt,
    rank_laurent,
    realify,
    substitute_u,
    sym_signature,
)
from kashaev.errors import NotASquare, NotHermitian, NotSymmetric

S = Laurent({1: 1})
SI = Laurent({-1: 1})
I = GaussRational(0, 1)


def G(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


# ------------------------------------------------------------ circle points


def test_circle_param_examples():
    p = circle_param(0)
    assert (p.sqrt_omega, p.omega, p.x) == (G(1), G(1), 1)
    p = circle_param(1)
    assert (p.sqrt_omega, p.omega, p.x) == (I, G(-1), 0)
    p = circle_param(Fraction(1, 2))
    assert p.sqrt_omega == G(Fraction(3, 5), Fraction(4, 5))
    assert p.omega == G(Fraction(-7, 25), Fraction(24, 25))
    assert p.x == Fraction(3, 5)


rationals = st.fractions(min_value=-200, max_value=200, max_denominator=50)


@given(rationals)
@settings(max_examples=100)
def test_circle_param_on_unit_circle(v):
    p = circle_param(v)
    assert p.omega.norm2() == 1 and p.sqrt_omega.norm2() == 1
    assert p.omega == p.sqrt_omega * p.sqrt_omega
    assert p.x == (1 - v * v) / (1 + v * v)
    assert 2 * p.x == (p.sqrt_omega + p.sqrt_omega.conj()).re
    assert -1 <= p.x <= 1


# --------------------------------------------------------------- signatures


@pytest.mark.parametrize("m, sig", [
    ([[0, 1], [1, 0]], 0),
    ([[2, 0, 0], [0, -3, 0], [0, 0, 0]], 0),
    ([[2, 1], [1, 2]], 2),
    ([[0, 0], [0, 0]], 0),
    ([], 0),
])
def test_sym_signature_examples(m, sig):
    assert sym_signature(m) == sig


def test_sym_signature_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        sym_signature([[1, 2], [3, 4]])


@pytest.mark.parametrize("h, sig", [
    ([[G(0), I], [-I, G(0)]], 0),
    ([[G(2), G(1, -1)], [G(1, 1), G(2)]], 2),
    ([[G(-5)]], -1),
])
def test_herm_signature_examples(h, sig):
    assert herm_signature(h) == sig
    assert sym_signature(realify(h)) == 2 * sig


def test_herm_signature_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        herm_signature([[G(0), I], [I, G(0)]])


small = st.integers(-4, 4)


@st.composite
def symmetric(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(small)
    return m


@st.composite
def unimodular(draw, n):
    # product of elementary integer row operations
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 6))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i != j:
            k = draw(st.integers(-2, 2))
            p[i] = [a + k * b for a, b in zip(p[i], p[j])]
    return p


@given(symmetric(), st.data())
@settings(max_examples=100)
def test_sym_signature_congruence_invariant(m, data):
    p = data.draw(unimodular(len(m)))
    pm = np.array(p, dtype=object) @ np.array(m, dtype=object) @ np.array(p, dtype=object).T
    assert sym_signature(pm.tolist()) == sym_signature(m)


@given(symmetric())
@settings(max_examples=100)
def test_sym_signature_matches_float_eigenvalues(m):
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    if np.min(np.abs(ev[np.abs(ev) > 1e-9]), initial=1) < 1e-6:
        return
    assert sym_signature(m) == int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))


@st.composite
def hermitian(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    h = [[G(0)] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = G(draw(small))
        for j in range(i + 1, n):
            z = G(draw(small), draw(small))
            h[i][j], h[j][i] = z, z.conj()
    return h


@given(hermitian())
@settings(max_examples=100)
def test_herm_signature_matches_float_eigenvalues(h):
    ev = np.linalg.eigvalsh(np.array([[complex(z) for z in row] for row in h]))
    nonzero = ev[np.abs(ev) > 1e-9]
    if len(nonzero) and np.min(np.abs(nonzero)) < 1e-6:
        return
    assert herm_signature(h) == int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))
    assert herm_signature(h) * 2 == sym_signature(realify(h))


# ------------------------------------------------------- Laurent matrices


def test_det_laurent_examples():
    assert det_laurent([[S, Laurent.const(1)], [Laurent.const(1), SI]]).is_zero()
    eye = [[Laurent.const(int(i == j)) for j in range(3)] for i in range(3)]
    assert det_laurent(eye) == Laurent.const(1)
    assert det_laurent([[S - SI]]) == S - SI
    assert det_laurent([]) == Laurent.const(1)


def test_rank_laurent_examples():
    zero = Laurent({})
    assert rank_laurent([[zero, zero], [zero, zero]]) == 0
    for n in (1, 3, 5):
        assert rank_laurent([[Laurent.const(int(i == j)) for j in range(n)] for i in range(n)]) == n
    assert rank_laurent([[S, S * S], [Laurent.const(1), S]]) == 1


s_sym = sympy.Symbol("s")


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * s_sym ** e
               for e, c in ((e, Fraction(c)) for e, c in p.items()))


laurent_entries = st.dictionaries(st.integers(-2, 2), st.integers(-3, 3), max_size=3).map(Laurent)


@st.composite
def laurent_matrix(draw, square=True):
    r = draw(st.integers(1, 4))
    c = r if square else draw(st.integers(1, 4))
    return [[draw(laurent_entries) for _ in range(c)] for _ in range(r)]


@given(laurent_matrix())
@settings(max_examples=60, deadline=None)
def test_det_laurent_matches_sympy(m):
    expected = sympy.Matrix([[to_sympy(e) for e in row] for row in m]).det(method="berkowitz")
    assert sympy.simplify(to_sympy(det_laurent(m)) - expected) == 0


@given(laurent_matrix(square=False))
@settings(max_examples=60, deadline=None)
def test_rank_laurent_matches_sympy(m):
    assert rank_laurent(m) == sympy.Matrix([[to_sympy(e) for e in row] for row in m]).rank(simplify=True)


def test_poly_sqrt_examples():
    sq = Laurent({2: 1, 1: -2, 0: 3, -1: -2, -2: 1})
    root = poly_sqrt(sq)
    assert root in (Laurent({1: 1, 0: -1, -1: 1}), -Laurent({1: 1, 0: -1, -1: 1}))
    assert poly_sqrt(Laurent.const(1)) in (Laurent.const(1), Laurent.const(-1))
    with pytest.raises(NotASquare):
        poly_sqrt(S + SI)


@given(laurent_entries)
def test_poly_sqrt_of_square(p):
    root = poly_sqrt(p * p)
    assert root * root == p * p


def test_substitute_u_examples():
    u = Laurent({1: 1}, "u")
    assert substitute_u(u) == S + SI
    assert substitute_u(u * u - Laurent.const(2, "u")) == S * S + SI * SI
    assert substitute_u(Laurent.const(7, "u")) == Laurent.const(7)


@given(st.dictionaries(st.integers(0, 5), st.integers(-5, 5), max_size=4))
def test_substitute_u_is_bar_symmetric(coeffs):
    p = substitute_u(Laurent(coeffs, "u"))
    assert p == p.bar()


def test_formatting():
    assert format_poly(Laurent({2: 4, 0: -2}, "x"), "x") == "4x^2-2"
    assert format_poly(Laurent({2: -4, 0: 3}, "x"), "x") == "-4x^2+3"
    assert format_poly(Laurent({}, "x"), "x") == "0"
    assert format_t(Laurent({2: 1, 0: -1, -2: 1})) == "t - 1 + t^-1"
    assert format_t(Laurent({1: 1, -1: -1})) == "t^1/2 - t^-1/2"


def test_gauss_rational_field():
    z = G(3, 4)
    assert z * z.conj() == G(25)
    assert z / z == G(1)
    assert (z ** -1) * z == G(1)
    assert z.conj().conj() == z
