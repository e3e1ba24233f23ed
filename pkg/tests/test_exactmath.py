from fractions import Fraction

import pytest

from sphinv.exactmath import (
    ConductorMismatchError,
    CyclotomicNumber,
    UnitQuaternion,
    cyclotomic_polynomial,
    euler_phi,
    root_of_unity,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # Phi_2000(x) = Phi_10(x^200)
    p = cyclotomic_polynomial(2000)
    assert len(p) - 1 == euler_phi(2000) == 800
    assert [i for i, c in enumerate(p) if c] == [0, 200, 400, 600, 800]


def test_embed_root_identities():
    one = root_of_unity(0, 4, 4)
    assert one == CyclotomicNumber.one(4)
    i = root_of_unity(1, 4, 4)
    assert i.coeffs == (Fraction(0), Fraction(1))  # x in Q[x]/Phi_4
    assert i * i == CyclotomicNumber.from_rational(4, -1)
    # zeta_8^2 equals i embedded into conductor 8
    assert root_of_unity(2, 8, 8) == root_of_unity(1, 4, 8)
    assert root_of_unity(1, 4, 4).embed(8) == root_of_unity(1, 4, 8)
    with pytest.raises(ConductorMismatchError):
        root_of_unity(1, 3, 4)


def test_root_orders():
    for k, N in [(1, 12), (2, 12), (3, 12), (4, 12), (5, 20), (6, 8)]:
        z = root_of_unity(k, N, N)
        order = N // __import__("math").gcd(k, N)
        p = z
        for _ in range(order - 1):
            assert not (p.is_rational() and p.as_rational() == 1)
            p = p * z
        assert p == CyclotomicNumber.one(N)


def test_field_arithmetic():
    i = root_of_unity(1, 4, 4)
    assert i.conj() == -i
    z8 = root_of_unity(1, 8, 8)
    assert z8 * z8 == root_of_unity(1, 4, 8)
    # inverse via extended Euclid against Phi_5
    x = root_of_unity(1, 5, 5) + CyclotomicNumber.one(5)
    inv = x.inverse()
    assert x * inv == CyclotomicNumber.one(5)
    with pytest.raises(ZeroDivisionError):
        CyclotomicNumber.zero(4).inverse()


def test_conj_is_involutive_automorphism():
    a = root_of_unity(1, 20, 20) + root_of_unity(7, 20, 20).scale(Fraction(2, 3))
    b = root_of_unity(3, 20, 20) - CyclotomicNumber.from_rational(20, 5)
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


def test_golden_ratio_in_Q_zeta5():
    # (1+sqrt5)/2 expressed as -(zeta_5^2 + zeta_5^3); must satisfy x^2 = x+1
    M = 20
    phi = -(root_of_unity(2, 5, M) + root_of_unity(3, 5, M))
    assert phi * phi == phi + CyclotomicNumber.one(M)


def test_quaternion_group_law():
    M = 4
    i = UnitQuaternion.from_root(1, 4, M)
    j = UnitQuaternion.j(M)
    k = i * j
    assert k.z1.is_zero() and k.z2 == root_of_unity(1, 4, 4)
    assert j * i == -k
    minus1 = UnitQuaternion.from_root(1, 2, M)
    assert i * i == minus1
    assert j * j == minus1
    assert k * k == minus1


def test_alpha_has_order_six():
    M = 4
    half = Fraction(1, 2)
    z1 = (CyclotomicNumber.one(M) + root_of_unity(1, 4, M)).scale(half)
    alpha = UnitQuaternion(z1, z1)
    assert alpha.real_part() == CyclotomicNumber.from_rational(M, half)
    cube = alpha * alpha * alpha
    assert cube == -UnitQuaternion.identity(M)
    assert alpha.order() == 6


def test_beta_real_part_squares_to_half():
    M = 8
    invsqrt2 = (root_of_unity(1, 8, M) - root_of_unity(3, 8, M)).scale(Fraction(1, 2))
    beta = UnitQuaternion(invsqrt2, invsqrt2)
    r = beta.real_part()
    assert r * r == CyclotomicNumber.from_rational(M, Fraction(1, 2))
    assert beta.order() == 8


def test_unit_norm_enforced():
    M = 4
    with pytest.raises(ValueError):
        UnitQuaternion(CyclotomicNumber.one(M), CyclotomicNumber.one(M))


def test_associativity_and_inverse_sample():
    M = 8
    qs = [
        UnitQuaternion.from_root(1, 8, M),
        UnitQuaternion.j(M),
        UnitQuaternion.from_root(3, 8, M) * UnitQuaternion.j(M),
    ]
    for a in qs:
        assert a * a.conj() == UnitQuaternion.identity(M)
        for b in qs:
            for c in qs:
                assert (a * b) * c == a * (b * c)


def test_real_part_is_class_function_sample():
    M = 8
    g = UnitQuaternion.from_root(1, 8, M)
    q = UnitQuaternion.j(M)
    assert (g * q * g.conj()).real_part() == q.real_part()
