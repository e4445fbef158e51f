import logging
import numpy as np
from kkdrop.algebra import DimensionDropAlgebra, check_valid, k1_order
from kkdrop.arithmetic import canonical_residue, gcd
from kkdrop.errors import (
    ModulusNotMultiple,
    NotDecomposable,
    NotInGroup,
    NotPositive,
)
from .schemas.element import GpElement
from .schemas.report import (
    ConeDecomposition,
    ExactnessReport,
    KTheoryReport,
    NuValue,
    SegmentCheck,
)

logger = logging.getLogger(__name__)


def require_multiple(size: int, p: int) -> None:
    """
    Raises:
        BadModulus: If `p` < 2.
        ModulusNotMultiple: If `size` does not divide `p`.
    """
    canonical_residue(0, p)
    if p % size:
        raise ModulusNotMultiple(f"Modulus p = {p} is not a multiple of {size}.")


def _membership_numerator(algebra: DimensionDropAlgebra, b, c):
    return (algebra.m // algebra.m1) * c - (algebra.m // algebra.m0) * b


def in_zmp(algebra: DimensionDropAlgebra, p: int, b: int, c: int) -> bool:
    """
    Returns whether (b, c) satisfies (m/m1)·c - (m/m0)·b ≡ 0 (mod p).
    """
    return _membership_numerator(algebra, b, c) % p == 0


def _zmp_array(algebra: DimensionDropAlgebra, p: int) -> np.ndarray:
    b, c = np.meshgrid(np.arange(p), np.arange(p), indexing="ij")
    mask = _membership_numerator(algebra, b, c) % p == 0
    # argwhere yields the pairs in lexicographic order
    return np.argwhere(mask)


def zmp_members(algebra: DimensionDropAlgebra, p: int) -> list[tuple[int, int]]:
    """
    Returns all residue pairs of Z(m,p), sorted lexicographically.
    """
    check_valid(algebra)
    canonical_residue(0, p)
    return [(int(b), int(c)) for b, c in _zmp_array(algebra, p)]


def z_generators(
    algebra: DimensionDropAlgebra, p: int
) -> tuple[tuple[int, int], tuple[int, int]]:
    """
    Returns the designated generators (m0, m1) and (0, (p/m)·m1) of Z(m,p), reduced mod p.
    """
    require_multiple(algebra.m, p)
    return (
        (algebra.m0 % p, algebra.m1 % p),
        (0, (p // algebra.m) * algebra.m1 % p),
    )


def is_positive(element: GpElement) -> bool:
    """
    Returns whether the element lies in the Dadarlat-Loring positive cone.

    Raises:
        NotInGroup: If (b, c) is not in Z(m,p).
    """
    algebra = element.algebra
    if not in_zmp(algebra, element.p, element.b, element.c):
        raise NotInGroup(
            f"({element.b}, {element.c}) is not in Z({algebra.m},{element.p})."
        )
    g = gcd(algebra.m0, algebra.m1)
    return (
        element.a * algebra.m0 // g >= element.b
        and element.a * algebra.m1 // g >= element.c
    )


def cone_generators(algebra: DimensionDropAlgebra, p: int) -> list[GpElement]:
    """
    Returns the classes of δ0, δ1, id and id̄ in K0(A; G_p).

    note: These generate the positive cone over the non-negative integers.
    """
    check_valid(algebra)
    require_multiple(algebra.m, p)
    t = p // algebra.m
    coordinates = [
        (1, 0, 0),
        (1, algebra.m0, algebra.m1),
        (t, 0, t * algebra.m1),
        (t, t * algebra.m0, 0),
    ]
    return [GpElement(algebra=algebra, p=p, a=a, b=b, c=c) for a, b, c in coordinates]


def combine(
    algebra: DimensionDropAlgebra, p: int, coefficients: tuple[int, int, int, int]
) -> GpElement:
    """
    Returns the linear combination of the cone generators with the given coefficients.
    """
    a = b = c = 0
    for k, generator in zip(coefficients, cone_generators(algebra, p)):
        a += k * generator.a
        b += k * generator.b
        c += k * generator.c
    return GpElement(algebra=algebra, p=p, a=a, b=b, c=c)


def cone_decompose(element: GpElement) -> tuple[int, int, int, int]:
    """
    Writes a positive element as a non-negative combination of the cone generators.

    Returns the coefficients of [δ0], [δ1], [id], [id̄].

    Raises:
        NotPositive: If the element is not positive.
        NotDecomposable: If b or c is not divisible by m0 or m1.
    """
    algebra, p = element.algebra, element.p
    check_valid(algebra)
    require_multiple(algebra.m, p)
    if not is_positive(element):
        raise NotPositive(f"{element.coordinates} is not positive in K0({algebra}; G_{p}).")
    if element.b % algebra.m0 or element.c % algebra.m1:
        raise NotDecomposable(
            f"Residues ({element.b}, {element.c}) are not divisible by ({algebra.m0}, {algebra.m1})."
        )
    l1, l2 = element.b // algebra.m0, element.c // algebra.m1
    if l1 >= l2:
        coefficients = (element.a - l1, l2, 0, (l1 - l2) * algebra.m // p)
    else:
        coefficients = (element.a - l2, l1, (l2 - l1) * algebra.m // p, 0)
    logger.debug("decomposed %s as %s", element.coordinates, coefficients)
    return coefficients


def cone_report(element: GpElement) -> ConeDecomposition:
    """
    Wraps `cone_decompose` with the element it decomposes.
    """
    return ConeDecomposition(
        algebra=element.algebra,
        p=element.p,
        element=element.coordinates,
        coefficients=cone_decompose(element),
    )


def bockstein_mu(algebra: DimensionDropAlgebra, p: int, k: int) -> tuple[int, int]:
    """
    Returns μ(k) = (k·m0, k·m1) mod p.
    """
    return canonical_residue(k * algebra.m0, p), canonical_residue(k * algebra.m1, p)


def bockstein_nu(algebra: DimensionDropAlgebra, p: int, b: int, c: int) -> int:
    """
    Returns ν(b, c) = ((m/m1)·c - (m/m0)·b)/p mod m/(m0·m1).

    Raises:
        ModulusNotMultiple: If m does not divide p.
        NotInGroup: If (b, c) is not in Z(m,p).
    """
    s = k1_order(algebra)
    require_multiple(algebra.m, p)
    numerator = _membership_numerator(algebra, b, c)
    if numerator % p:
        raise NotInGroup(f"({b}, {c}) is not in Z({algebra.m},{p}).")
    return (numerator // p) % s


def _encode(pairs: np.ndarray, p: int) -> np.ndarray:
    return np.unique(pairs[:, 0] * p + pairs[:, 1])


def verify_bockstein_exactness(algebra: DimensionDropAlgebra, p: int) -> ExactnessReport:
    """
    Checks the sequence K0(A) -×p-> K0(A) -μ-> Z(m,p) -ν-> K1(A) -×p-> K1(A) by enumeration.

    note: ker μ is tested on the representatives k in [0, p²].
    """
    check_valid(algebra)
    require_multiple(algebra.m, p)
    s = k1_order(algebra)

    k = np.arange(p * p + 1)
    in_kernel = (k * algebra.m0 % p == 0) & (k * algebra.m1 % p == 0)
    wrong = k[in_kernel != (k % p == 0)]
    ker_mu = SegmentCheck(
        name="ker mu = pZ",
        passed=wrong.size == 0,
        witness=[int(wrong[0])] if wrong.size else None,
    )

    members = _zmp_array(algebra, p)
    nu = _membership_numerator(algebra, members[:, 0], members[:, 1]) // p % s
    logger.debug("Z(%d,%d) has %d elements", algebra.m, p, len(members))
    ks = np.arange(p)
    image_mu = _encode(np.stack([ks * algebra.m0 % p, ks * algebra.m1 % p], axis=1), p)
    kernel_nu = _encode(members[nu == 0], p)
    wrong = np.setxor1d(image_mu, kernel_nu)
    im_mu = SegmentCheck(
        name="im mu = ker nu",
        passed=wrong.size == 0,
        witness=list(map(int, divmod(int(wrong[0]), p))) if wrong.size else None,
    )

    zs = np.arange(s)
    wrong = np.setxor1d(np.unique(nu), zs[zs * p % s == 0])
    im_nu = SegmentCheck(
        name="im nu = ker(x p)",
        passed=wrong.size == 0,
        witness=[int(wrong[0])] if wrong.size else None,
    )
    return ExactnessReport(algebra=algebra, p=p, segments=[ker_mu, im_mu, im_nu])


def scalar_class(c0: int, c1: int, interior: int, p: int) -> tuple[int, int]:
    """
    Returns the class (c0 + c1 + interior·p, c1 mod p) of a representation of the
    unitized classical dimension drop algebra with the given endpoint and interior counts.
    """
    if min(c0, c1, interior) < 0:
        raise ValueError(f"Counts must be non-negative, got ({c0}, {c1}, {interior}).")
    return c0 + c1 + interior * p, canonical_residue(c1, p)


def ktheory_report(algebra: DimensionDropAlgebra, p: int) -> KTheoryReport:
    check_valid(algebra)
    generators = z_generators(algebra, p)
    return KTheoryReport(
        algebra=algebra,
        p=p,
        k1_order=k1_order(algebra),
        zmp_size=len(_zmp_array(algebra, p)),
        mu=bockstein_mu(algebra, p, 1),
        nu=f"nu(b,c) = ({algebra.m // algebra.m1}*c - {algebra.m // algebra.m0}*b)/{p} mod {k1_order(algebra)}",
        nu_generators=[
            NuValue(b=b, c=c, value=bockstein_nu(algebra, p, b, c)) for b, c in generators
        ],
        cone_generators=[g.coordinates for g in cone_generators(algebra, p)],
    )
