import math
from functools import lru_cache
from kkdrop.errors import BadModulus, NotCoprime
from .schemas.bezout import BezoutPair


def gcd(a: int, b: int) -> int:
    """Greatest common divisor with gcd(0, 0) = 0."""
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return math.lcm(a, b)


def divides(d: int, v: int) -> bool:
    """
    Returns whether `d` divides `v`.

    note: Only 0 is divisible by 0.
    """
    if d == 0:
        return v == 0
    return v % d == 0


def canonical_residue(v: int, p: int) -> int:
    """
    Returns the representative of `v` modulo `p` in [0, p).

    Raises:
        BadModulus: If `p` < 2.
    """
    if p < 2:
        raise BadModulus(f"Modulus must be at least 2, got {p}.")
    return v % p


@lru_cache(maxsize=None)
def bezout_canonical(m0: int, m1: int) -> BezoutPair:
    """
    Returns the Bézout pair of (m0, m1) with the least beta0 >= 0 such that beta1 <= 0.

    Raises:
        ValueError: If m0 or m1 is not positive.
        NotCoprime: If gcd(m0, m1) != 1.
    """
    if m0 < 1 or m1 < 1:
        raise ValueError(f"Endpoint drops must be positive, got ({m0}, {m1}).")
    if gcd(m0, m1) != 1:
        raise NotCoprime(f"gcd({m0}, {m1}) = {gcd(m0, m1)} is not 1.")
    # beta0 = 0 is only possible for m1 = 1 and then beta1 = 1 > 0
    beta0 = 1 if m1 == 1 else pow(m0, -1, m1)
    return BezoutPair(beta0=beta0, beta1=(1 - beta0 * m0) // m1)
