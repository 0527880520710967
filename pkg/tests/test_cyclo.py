import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic_mtc.cyclo import (
    CycloNumber,
    cos2pi,
    cyclotomic_poly,
    parse_literal,
    rational,
    root_of_unity,
    sqrt_int,
    to_literal,
    totient,
)

X = sympy.Symbol("x")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 12, 13, 24, 30, 39, 52, 105])
def test_cyclotomic_poly_matches_sympy(n):
    want = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in want]
    assert totient(n) == sympy.totient(n)


conductors = st.sampled_from([1, 3, 4, 8, 12, 13, 24, 39])


@st.composite
def numbers(draw, n=None):
    n = n or draw(conductors)
    terms = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(-5, 5), st.integers(1, 4)), max_size=5))
    return CycloNumber.from_terms(n, [list(t) for t in terms])


def close(a, b, tol=1e-9):
    return abs(complex(a) - complex(b)) < tol


@given(numbers(), numbers())
def test_ring_ops_agree_with_complex(a, b):
    assert close(a + b, complex(a) + complex(b))
    assert close(a * b, complex(a) * complex(b))
    assert close(a - b, complex(a) - complex(b))


@given(numbers())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == 1


@given(numbers(), st.sampled_from([2, 3, 5]))
def test_embed_preserves_value(a, m):
    b = a.embed(a.conductor * m)
    assert b == a and close(a, b)


@given(numbers())
def test_conj_is_complex_conjugate(a):
    assert close(a.conj(), complex(a).conjugate())
    assert (a * a.conj()).conj() == a * a.conj()


@given(numbers(), st.sampled_from([1, 5, 7, 11]))
def test_galois_is_ring_map(a, k):
    n = 24
    a = a.embed(n * a.conductor // __import__("math").gcd(n, a.conductor))
    b = root_of_unity(24, 5) + 2
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 12, 13, -1, -3, -13, 39, 48])
def test_sqrt_int(n):
    s = sqrt_int(n)
    assert s * s == n
    assert close(s, cmath.sqrt(n))


@given(st.integers(1, 60), st.integers(-100, 100))
def test_root_of_unity(n, k):
    z = root_of_unity(n, k)
    assert close(z, cmath.exp(2j * cmath.pi * k / n))
    assert z ** n == 1
    assert z.as_root_of_unity() == Fraction(k % n, n) or z.as_root_of_unity() == Fraction(k, n) % 1


def test_cos2pi():
    c = cos2pi(Fraction(1, 26))
    assert close(c, cmath.cos(cmath.pi / 13))


def test_literal_round_trip():
    a = sqrt_int(3) * root_of_unity(8) + Fraction(1, 3)
    assert parse_literal(to_literal(a, 24), 24) == a
    assert parse_literal(7, 12) == 7
    with pytest.raises(ValueError):
        parse_literal("x", 12)


def test_rational_queries():
    assert rational(Fraction(3, 4)).rational() == Fraction(3, 4)
    assert not sqrt_int(2).is_rational()
    assert (sqrt_int(2) * sqrt_int(2)).is_rational()
    assert str(rational(5)) == "5"
