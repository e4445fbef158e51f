from math import gcd as math_gcd
import pytest
from hypothesis import assume, given
from hypothesis.strategies import integers
from kkdrop.arithmetic import bezout_canonical, canonical_residue, divides, gcd, lcm
from kkdrop.errors import BadModulus, NotCoprime


def test_gcd_and_lcm():
    assert gcd(12, 18) == 6
    assert gcd(0, 0) == 0
    assert lcm(12, 24) == 24
    assert lcm(4, 6) == 12


def test_divides():
    assert divides(3, 12)
    assert not divides(5, 12)
    assert divides(0, 0)
    assert not divides(0, 3)


def test_canonical_residue():
    assert canonical_residue(-1, 12) == 11
    assert canonical_residue(25, 12) == 1
    with pytest.raises(BadModulus):
        canonical_residue(5, 1)


@pytest.mark.parametrize(
    "m0, m1, expected",
    [
        (2, 3, (2, -1)),
        (3, 2, (1, -1)),
        (1, 1, (1, 0)),
        (1, 5, (1, 0)),
        (5, 1, (1, -4)),
        (3, 5, (2, -1)),
    ],
)
def test_bezout_canonical(m0, m1, expected):
    beta = bezout_canonical(m0, m1)
    assert (beta.beta0, beta.beta1) == expected


def test_bezout_rejects_common_factor():
    with pytest.raises(NotCoprime):
        bezout_canonical(2, 4)


def test_bezout_rejects_non_positive():
    with pytest.raises(ValueError):
        bezout_canonical(0, 3)


@given(integers(min_value=1, max_value=500), integers(min_value=1, max_value=500))
def test_bezout_identity(m0, m1):
    assume(math_gcd(m0, m1) == 1)
    beta = bezout_canonical(m0, m1)
    assert beta.beta0 * m0 + beta.beta1 * m1 == 1
    assert beta.beta0 >= 0
    assert beta.beta1 <= 0
    if m1 > 1:
        assert beta.beta0 < m1


@given(integers(min_value=-10**6, max_value=10**6), integers(min_value=2, max_value=500))
def test_canonical_residue_is_idempotent(v, p):
    r = canonical_residue(v, p)
    assert 0 <= r < p
    assert canonical_residue(r, p) == r
    assert canonical_residue(v + p, p) == r
