import logging
from kkdrop.algebra import DimensionDropAlgebra, HomKind, basic_homs, check_valid, k1_order
from kkdrop.arithmetic import bezout_canonical, gcd, lcm
from kkdrop.config import resolve_mode
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import InconsistencyError, Mismatch
from kkdrop.triples import (
    KTriple,
    decompose_triple,
    induced_triple,
    torsion_census,
    triple_add,
    triple_scale,
    triples_equal,
    zero_triple,
)
from .schemas.element import Coefficients, KKElement
from .schemas.info import KKCanonicalForm, KKGroupInfo

logger = logging.getLogger(__name__)


def default_modulus(source: DimensionDropAlgebra, target: DimensionDropAlgebra) -> int:
    """Returns lcm(m, n), the least modulus on which Γ is faithful."""
    return lcm(source.m, target.m)


def kk_zero(source: DimensionDropAlgebra, target: DimensionDropAlgebra) -> KKElement:
    return KKElement(source=source, target=target, coeffs=(0, 0, 0, 0))


def basic_element(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, kind: HomKind
) -> KKElement:
    """Returns the class of a single basic homomorphism."""
    coeffs = tuple(int(k == kind) for k in HomKind)
    return KKElement(source=source, target=target, coeffs=coeffs)


def _same_algebras(e1: KKElement, e2: KKElement) -> None:
    if (e1.source, e1.target) != (e2.source, e2.target):
        raise Mismatch(
            f"Elements of KK({e1.source}, {e1.target}) and KK({e2.source}, {e2.target}) cannot be combined."
        )


def kk_add(e1: KKElement, e2: KKElement) -> KKElement:
    _same_algebras(e1, e2)
    coeffs: Coefficients = tuple(a + b for a, b in zip(e1.coeffs, e2.coeffs))
    return KKElement(source=e1.source, target=e1.target, coeffs=coeffs)


def kk_scale(e: KKElement, k: int) -> KKElement:
    return KKElement(
        source=e.source, target=e.target, coeffs=tuple(k * c for c in e.coeffs)
    )


def gamma(e: KKElement, p: int) -> KTriple:
    """
    Returns the triple Γ(e; p) induced on K-theory with Z_p coefficients.

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
    """
    triple = zero_triple(e.source, e.target, p)
    for hom, c in zip(basic_homs(e.source, e.target), e.coeffs):
        if c:
            triple = triple_add(triple, triple_scale(induced_triple(hom, p), c))
    return triple


def kk_equal(e1: KKElement, e2: KKElement, mode: EqualityMode | None = None) -> bool:
    """
    Compares the triples of two elements at p = lcm(m, n).

    Raises:
        Mismatch: If the elements live in different KK groups.
    """
    _same_algebras(e1, e2)
    p = default_modulus(e1.source, e1.target)
    return triples_equal(gamma(e1, p), gamma(e2, p), resolve_mode(mode))


def kk_canonical(e: KKElement) -> KKCanonicalForm:
    """
    Returns the invariants of e and its expression k·id + c0·δ0 + c1·δ1.

    Raises:
        InconsistencyError: If the expression does not evaluate back to e.
    """
    check_valid(e.source)
    check_valid(e.target)
    p = default_modulus(e.source, e.target)
    triple = gamma(e, p)
    decomposition = decompose_triple(triple)
    expression = KKElement(
        source=e.source,
        target=e.target,
        coeffs=(decomposition.c0, decomposition.c1, decomposition.k, 0),
    )
    if not kk_equal(expression, e, EqualityMode.MAP):
        raise InconsistencyError(
            f"Canonical expression does not evaluate back to {e.coeffs}.",
            witness=list(expression.coeffs),
        )
    return KKCanonicalForm(
        x=triple.x,
        y_mod=triple.y % k1_order(e.target),
        d=decomposition.d,
        k=decomposition.k,
        c0=decomposition.c0,
        c1=decomposition.c1,
    )


def kk_group_info(source: DimensionDropAlgebra, target: DimensionDropAlgebra) -> KKGroupInfo:
    """
    Reports the stated decomposition Z ⊕ Z_gcd(n,m) ⊕ Z_{m/(m0·m1)} next to enumerated torsion counts.

    note: The enumeration runs over all p⁴ matrices with p = lcm(m, n).
    """
    check_valid(source)
    check_valid(target)
    p = default_modulus(source, target)
    s_a, s_b = k1_order(source), k1_order(target)
    info = KKGroupInfo(
        source=source,
        target=target,
        p=p,
        free_rank=1,
        stated_torsion=(gcd(target.m, source.m), s_a),
        k1_hom_order=gcd(s_a, s_b),
        enumerated_torsion_count=torsion_census(source, target, p, EqualityMode.MAP),
        enumerated_torsion_count_strict=torsion_census(
            source, target, p, EqualityMode.STRICT
        ),
        enumerated_full_torsion_count=torsion_census(
            source, target, p, EqualityMode.MAP, all_y=True
        ),
    )
    if not info.stated_formula_matches_full_census:
        logger.warning(
            "KK(%s, %s): stated torsion order %d differs from enumerated %d (y ≡ 0: %d)",
            source,
            target,
            info.stated_torsion_order,
            info.enumerated_full_torsion_count,
            info.enumerated_torsion_count,
        )
    return info


def k1_generator(source: DimensionDropAlgebra, target: DimensionDropAlgebra) -> KKElement:
    """
    Returns id - (m/g)·(β0·δ0 + β1·δ1) with g = gcd(m, n).

    Its triple has x = 0 and y = n/g, so it generates the part of KK acting on K1 only.
    """
    check_valid(source)
    beta = bezout_canonical(source.m0, source.m1)
    scale = source.m // gcd(source.m, target.m)
    return KKElement(
        source=source,
        target=target,
        coeffs=(-scale * beta.beta0, -scale * beta.beta1, 1, 0),
    )


def torsion_generator(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra
) -> KKElement:
    """Returns m1·δ0 - m0·δ1, an element of order m/(m0·m1)."""
    return KKElement(source=source, target=target, coeffs=(source.m1, -source.m0, 0, 0))


def kk_order(e: KKElement, mode: EqualityMode | None = None) -> int | None:
    """
    Returns the least k >= 1 with k·e equal to zero, or None if e has infinite order.

    note: Under STRICT equality y is compared as an integer, so any y != 0 gives infinite order.
    """
    mode = resolve_mode(mode)
    p = default_modulus(e.source, e.target)
    triple = gamma(e, p)
    if triple.x != 0 or (mode == EqualityMode.STRICT and triple.y != 0):
        return None
    s_a, s_b = k1_order(e.source), k1_order(e.target)
    # torsion has s_a·gcd(s_a, s_b) elements under MAP, STRICT matrices live in Z_p
    bound = p if mode == EqualityMode.STRICT else s_a * gcd(s_a, s_b)
    zero = kk_zero(e.source, e.target)
    for k in range(1, bound + 1):
        if kk_equal(kk_scale(e, k), zero, mode):
            return k
    raise InconsistencyError(
        f"Element {e.coeffs} with x = 0 has no order up to {bound}.", witness=list(e.coeffs)
    )
