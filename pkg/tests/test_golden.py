import random
from fractions import Fraction

import pytest

from ammann.golden import (
    GoldenRational as G,
    ONE,
    PHI,
    PHI_INV,
    SIGMA_SQ,
    ZERO,
    sign_pair,
)


def rand_golden(rng, span=99, den=12):
    return G(
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
    )


def test_fundamental_identity():
    assert PHI * PHI == ONE + PHI
    assert ONE / PHI == PHI - ONE
    assert PHI_INV == ONE / PHI
    assert PHI_INV * PHI_INV == G(2, -1)


def test_identity_elements():
    x = G(Fraction(3, 7), Fraction(-2, 5))
    assert x + ZERO == x
    assert x * ONE == x
    assert x - x == ZERO
    assert x / x == ONE


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_conjugation():
    assert PHI.conj() == ONE - PHI
    x = G(Fraction(3, 2), Fraction(-7, 3))
    assert x.conj().conj() == x
    # conj(phi * (1 + phi)) = conj(1 + 2 phi) = 3 - 2 phi = (1 - phi)(2 - phi)
    lhs = (PHI * (ONE + PHI)).conj()
    assert lhs == G(3, -2)
    assert lhs == PHI.conj() * (ONE + PHI).conj()


def test_sign_cases():
    assert (PHI - ONE).sign() == 1
    assert ZERO.sign() == 0
    assert G(2, -1).sign() == 1  # 2 - phi > 0
    assert G(1, -1).sign() == -1  # 1 - phi < 0
    assert sign_pair(0, 0) == 0
    assert sign_pair(-3, 2) == 1  # -3 + 2 phi > 0
    assert sign_pair(3, -2) == -1


def test_total_order():
    assert G(1, -1) < ZERO < G(2, -1) < ONE < PHI < G(0, 2)
    vals = [PHI, ZERO, ONE, G(1, -1), G(2, -1)]
    assert sorted(vals) == [G(1, -1), ZERO, G(2, -1), ONE, PHI]


def test_embed():
    e = PHI.embed()
    assert abs(e[0] - 1.6180339887) < 1e-9
    assert abs(e[1] + 0.6180339887) < 1e-9
    # sigma^2 = 1 + 1/phi^2
    assert abs(SIGMA_SQ.embed()[0] - 1.3819660113) < 1e-9
    x = G(Fraction(5, 3), Fraction(-4, 7))
    assert x.embed()[0] == pytest.approx(x.conj().embed()[1])


def test_floor():
    assert PHI.floor() == 1
    assert (-PHI).floor() == -2
    assert G(0, 2).floor() == 3  # 2 phi = 3.236...
    assert ZERO.floor() == 0
    assert G(Fraction(7, 2)).floor() == 3
    assert G(3).floor() == 3


def test_pow():
    assert PHI**3 == G(1, 2)
    assert PHI**-1 == PHI_INV
    assert PHI**0 == ONE
    assert (PHI_INV**3) == G(-3, 2)


def test_json_round_trip():
    x = G(Fraction(-3, 4), Fraction(5, 6))
    assert x.to_json() == [-3, 4, 5, 6]
    assert G.from_json(x.to_json()) == x
    with pytest.raises(ValueError):
        G.from_json([1, 0, 0, 1])
    with pytest.raises(ValueError):
        G.from_json([1, 2, 3])
    with pytest.raises(ValueError):
        G.from_json([1, -2, 0, 1])


def test_field_axioms_randomized():
    rng = random.Random(20260810)
    for _ in range(500):
        x, y, z = (rand_golden(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        if y != ZERO:
            assert (x / y) * y == x
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()


def test_sign_matches_embedding():
    rng = random.Random(7)
    for _ in range(500):
        x = rand_golden(rng)
        e = x.embed()[0]
        if abs(e) > 1e-9:
            assert x.sign() == (1 if e > 0 else -1)


def test_str_forms():
    assert str(G(4, -2)) == "4 - 2*phi"
    assert str(PHI) == "phi"
    assert str(-PHI) == "-phi"
    assert str(G(Fraction(1, 2))) == "1/2"
    assert str(G(-1, 1)) == "-1 + phi"
