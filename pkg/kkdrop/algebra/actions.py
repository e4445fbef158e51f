from kkdrop.arithmetic import gcd
from kkdrop.errors import AlgebraMismatch, InvalidAlgebra
from .schemas.algebra import DimensionDropAlgebra
from .schemas.homomorphism import BasicHom, HomKind
from .schemas.khomology import KHomologyClass


def check_valid(algebra: DimensionDropAlgebra) -> None:
    """
    Raises:
        InvalidAlgebra: If the endpoints are not coprime or m0·m1 does not divide m.
    """
    if not algebra.coprime_endpoints:
        raise InvalidAlgebra(f"{algebra} needs coprime endpoint drops.")
    if not algebra.full_drop:
        raise InvalidAlgebra(
            f"{algebra} needs m0·m1 = {algebra.m0 * algebra.m1} to divide m = {algebra.m}."
        )


def k1_order(algebra: DimensionDropAlgebra) -> int:
    """
    Returns m/(m0·m1), the order of the cyclic group K1.
    """
    check_valid(algebra)
    return algebra.m // (algebra.m0 * algebra.m1)


def basic_homs(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra
) -> list[BasicHom]:
    """
    Returns the four basic homomorphisms in coefficient order δ0, δ1, id, id̄.
    """
    return [BasicHom(kind=kind, source=source, target=target) for kind in HomKind]


def idbar_multiplicities(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra
) -> tuple[int, int]:
    """
    Returns (q1, q0), the off-diagonal multiplicities of the flipped identity.

    q1 = m·m0 / gcd(m1·g, m/m0) and q0 = m·m1 / gcd(m0·g, m/m1) with g = gcd(m, n).
    """
    m0, m1, m = source.m0, source.m1, source.m
    g = gcd(m, target.m)
    q1 = m * m0 // gcd(m1 * g, m // m0)
    q0 = m * m1 // gcd(m0 * g, m // m1)
    return q1, q0


def _relation(algebra: DimensionDropAlgebra) -> tuple[int, int]:
    return algebra.m // algebra.m0, algebra.m // algebra.m1


def khomology_equal(a: KHomologyClass, b: KHomologyClass) -> bool:
    """
    Returns whether (a.u - b.u, a.v - b.v) is an integer multiple of (m/m0, -m/m1).
    """
    if a.algebra != b.algebra:
        raise AlgebraMismatch(f"Classes live on {a.algebra} and {b.algebra}.")
    r0, r1 = _relation(a.algebra)
    du, dv = a.u - b.u, a.v - b.v
    if du % r0:
        return False
    return -(du // r0) * r1 == dv


def khomology_positive(c: KHomologyClass) -> bool:
    """
    Returns whether the class contains a pair with both entries non-negative.

    note: Decided on the integer interval [ceil(-u·m0/m), floor(v·m1/m)] of shifts t.
    """
    check_valid(c.algebra)
    algebra = c.algebra
    lower = -((c.u * algebra.m0) // algebra.m)
    upper = (c.v * algebra.m1) // algebra.m
    return lower <= upper


def khomology_reduce(c: KHomologyClass) -> KHomologyClass:
    """
    Returns the representative of the class with 0 <= u < m/m0.
    """
    r0, r1 = _relation(c.algebra)
    t = c.u // r0
    return KHomologyClass(u=c.u - t * r0, v=c.v + t * r1, algebra=c.algebra)
