import logging
from functools import lru_cache
import numpy as np
from kkdrop.algebra import (
    BasicHom,
    DimensionDropAlgebra,
    HomKind,
    check_valid,
    idbar_multiplicities,
    k1_order,
)
from kkdrop.arithmetic import bezout_canonical, gcd
from kkdrop.coeff_ktheory import bockstein_nu, in_zmp, require_multiple, z_generators
from kkdrop.config import resolve_mode
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import (
    BadMultiplicity,
    BadTorsionIndex,
    InconsistencyError,
    Mismatch,
    NoSolution,
    NotTorsionForm,
)
from .schemas.triple import (
    InducedTriple,
    KTriple,
    Matrix,
    TripleDecomposition,
    TripleReport,
    TripleValidation,
)

logger = logging.getLogger(__name__)


def _check_moduli(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, p: int
) -> None:
    require_multiple(source.m, p)
    require_multiple(target.m, p)


def apply_phi(phi: Matrix, b: int, c: int, p: int) -> tuple[int, int]:
    """Returns φ·(b, c)ᵀ mod p."""
    return (
        (phi[0][0] * b + phi[0][1] * c) % p,
        (phi[1][0] * b + phi[1][1] * c) % p,
    )


def zero_triple(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, p: int
) -> KTriple:
    return KTriple(source=source, target=target, x=0, phi=((0, 0), (0, 0)), y=0, p=p)


def validate_triple(t: KTriple) -> TripleValidation:
    """
    Checks that (x, φ, y) makes both Bockstein squares commute.

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
    """
    A, B, p = t.source, t.target, t.p
    _check_moduli(A, B, p)
    s_a, s_b = k1_order(A), k1_order(B)
    g1, g2 = z_generators(A, p)

    image = apply_phi(t.phi, *g1, p)
    expected = (t.x * A.m0 % p, t.x * A.m1 % p)
    if image != expected:
        return TripleValidation(
            valid=False, failure="first square", witness=[*image, *expected]
        )
    if t.y * s_a % s_b:
        return TripleValidation(
            valid=False, failure="multiplication by y", witness=[t.y, s_a, s_b]
        )
    for g in (g1, g2):
        image = apply_phi(t.phi, *g, p)
        if not in_zmp(B, p, *image):
            return TripleValidation(
                valid=False, failure="phi leaves Z(n,p)", witness=[*g, *image]
            )
        lhs = bockstein_nu(B, p, *image)
        rhs = t.y * bockstein_nu(A, p, *g) % s_b
        if lhs != rhs:
            return TripleValidation(
                valid=False, failure="second square", witness=[*g, lhs, rhs]
            )
    return TripleValidation(valid=True)


def equality_signature(t: KTriple, mode: EqualityMode | None = None) -> tuple[int, ...]:
    """
    Returns the data two triples must share to be equal.

    MAP: (x, φ(g1), φ(g2), y mod n/(m0·m1)) with g1, g2 the designated generators of Z(m,p).
    STRICT: (x, entries of φ, y).
    """
    mode = resolve_mode(mode)
    if mode == EqualityMode.STRICT:
        return (t.x, *t.phi[0], *t.phi[1], t.y)
    g1, g2 = z_generators(t.source, t.p)
    return (
        t.x,
        *apply_phi(t.phi, *g1, t.p),
        *apply_phi(t.phi, *g2, t.p),
        t.y % k1_order(t.target),
    )


def signature_moduli(t: KTriple, mode: EqualityMode | None = None) -> tuple[int, ...]:
    """
    Returns the modulus per signature entry, 0 meaning exact integer comparison.

    note: Signatures are linear in the triple, so sums of signatures reduced
          by these moduli are signatures of sums.
    """
    mode = resolve_mode(mode)
    y_modulus = 0 if mode == EqualityMode.STRICT else k1_order(t.target)
    return (0, t.p, t.p, t.p, t.p, y_modulus)


def triples_equal(s: KTriple, t: KTriple, mode: EqualityMode | None = None) -> bool:
    """
    Compares two triples under the given or configured equality mode.

    Raises:
        Mismatch: If the triples have different algebras or moduli.
    """
    if (s.source, s.target, s.p) != (t.source, t.target, t.p):
        raise Mismatch(
            f"Cannot compare triples over {s.source}->{s.target} (p={s.p}) and {t.source}->{t.target} (p={t.p})."
        )
    mode = resolve_mode(mode)
    return equality_signature(s, mode) == equality_signature(t, mode)


def triple_add(s: KTriple, t: KTriple) -> KTriple:
    if (s.source, s.target, s.p) != (t.source, t.target, t.p):
        raise Mismatch(
            f"Cannot add triples over {s.source}->{s.target} (p={s.p}) and {t.source}->{t.target} (p={t.p})."
        )
    phi = tuple(
        tuple(a + b for a, b in zip(row_s, row_t)) for row_s, row_t in zip(s.phi, t.phi)
    )
    return KTriple(
        source=s.source, target=s.target, x=s.x + t.x, phi=phi, y=s.y + t.y, p=s.p
    )


def triple_scale(t: KTriple, k: int) -> KTriple:
    phi = tuple(tuple(k * v for v in row) for row in t.phi)
    return KTriple(
        source=t.source, target=t.target, x=k * t.x, phi=phi, y=k * t.y, p=t.p
    )


@lru_cache(maxsize=1024)
def induced_triple(h: BasicHom, p: int) -> KTriple:
    """
    Returns the triple induced by a basic homomorphism.

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
        InvalidAlgebra: If an algebra lacks coprime endpoints or full drop.
        InconsistencyError: If the resulting triple fails validation.
    """
    A, B = h.source, h.target
    check_valid(A)
    check_valid(B)
    _check_moduli(A, B, p)
    m0, m1, m, n = A.m0, A.m1, A.m, B.m
    g = gcd(m, n)
    match h.kind:
        case HomKind.DELTA0:
            x, phi, y = m0, ((m0, 0), (m1, 0)), 0
        case HomKind.DELTA1:
            x, phi, y = m1, ((0, m0), (0, m1)), 0
        case HomKind.ID:
            x, phi, y = m // g, ((m // g, 0), (0, m // g)), n // g
        case HomKind.IDBAR:
            h_ = gcd(g, k1_order(A))
            q1, q0 = idbar_multiplicities(A, B)
            x, phi, y = m // h_, ((0, q1), (q0, 0)), -(n // h_)
    triple = KTriple(source=A, target=B, x=x, phi=phi, y=y, p=p)
    check = validate_triple(triple)
    if not check.valid:
        raise InconsistencyError(
            f"Triple induced by {h.kind.value} on {A}->{B} at p={p} fails: {check.failure}",
            witness=check.witness,
        )
    return triple


def triple_report(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    kind: HomKind | None = None,
) -> TripleReport:
    """
    Returns the induced triple of one basic homomorphism, or of all four if `kind` is None, with validation.
    """
    kinds = list(HomKind) if kind is None else [kind]
    triples = []
    for k in kinds:
        t = induced_triple(BasicHom(kind=k, source=source, target=target), p)
        triples.append(
            InducedTriple(kind=k, x=t.x, phi=t.phi, y=t.y, validation=validate_triple(t))
        )
    return TripleReport(source=source, target=target, p=p, triples=triples)


def torsion_matrix(source: DimensionDropAlgebra) -> Matrix:
    """
    Returns T = [[-m1·m0, m0·m0], [-m1·m1, m0·m1]], the matrix of the torsion triple with d = 1.
    """
    m0, m1 = source.m0, source.m1
    return (-m1 * m0, m0 * m0), (-m1 * m1, m0 * m1)


def torsion_triple(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, p: int, d: int
) -> KTriple:
    """
    Returns (0, d·T, 0).

    Raises:
        BadTorsionIndex: If d is not in [0, m/(m0·m1)).
    """
    s = k1_order(source)
    if not 0 <= d < s:
        raise BadTorsionIndex(f"Torsion index d = {d} is not in [0, {s}).")
    phi = tuple(tuple(d * v for v in row) for row in torsion_matrix(source))
    return KTriple(source=source, target=target, x=0, phi=phi, y=0, p=p)


def torsion_param(t: KTriple) -> int:
    """
    Returns the d in [0, m/(m0·m1)) with t equal as a map to (0, d·T, 0).

    Raises:
        NotTorsionForm: If x != 0, y is not ≡ 0, or no d matches.
    """
    A, B, p = t.source, t.target, t.p
    if t.x != 0 or t.y % k1_order(B):
        raise NotTorsionForm(f"Torsion triples have x = 0 and y ≡ 0, got x={t.x}, y={t.y}.")
    signature = equality_signature(t, EqualityMode.MAP)
    for d in range(k1_order(A)):
        if equality_signature(torsion_triple(A, B, p, d), EqualityMode.MAP) == signature:
            return d
    raise NotTorsionForm(f"No torsion parameter matches phi={t.phi} on {A}->{B} at p={p}.")


def build_x_triple(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, p: int, x: int
) -> KTriple:
    """
    Returns (x, x·[[m0·β0, m0·β1], [m1·β0, m1·β1]], 0).
    """
    check_valid(source)
    check_valid(target)
    _check_moduli(source, target, p)
    m0, m1 = source.m0, source.m1
    beta = bezout_canonical(m0, m1)
    phi = (
        (x * m0 * beta.beta0, x * m0 * beta.beta1),
        (x * m1 * beta.beta0, x * m1 * beta.beta1),
    )
    return KTriple(source=source, target=target, x=x, phi=phi, y=0, p=p)


def build_y_triple(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, p: int, y: int
) -> KTriple:
    """
    Returns (0, ψ, y) realising multiplication by y on K1.

    Raises:
        BadMultiplicity: If n/(m0·m1) does not divide y·m/(m0·m1).
    """
    check_valid(source)
    check_valid(target)
    _check_moduli(source, target, p)
    s_a, s_b = k1_order(source), k1_order(target)
    if y * s_a % s_b:
        raise BadMultiplicity(
            f"Multiplication by y = {y} is not defined from Z_{s_a} to Z_{s_b}."
        )
    m0, m1 = source.m0, source.m1
    beta = bezout_canonical(m0, m1)
    q = source.m * y // target.m
    phi = (
        (q * m1 * beta.beta1, -q * m0 * beta.beta1),
        (-q * m1 * beta.beta0, q * m0 * beta.beta0),
    )
    return KTriple(source=source, target=target, x=0, phi=phi, y=y, p=p)


def build_triple(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    x: int,
    y: int,
    d: int,
) -> KTriple:
    """
    Returns the triple with K0 multiplicity x, K1 multiplicity y and torsion parameter d.
    """
    return triple_add(
        triple_add(
            build_x_triple(source, target, p, x), build_y_triple(source, target, p, y)
        ),
        torsion_triple(source, target, p, d),
    )


def _basic(source, target, kind: HomKind, p: int) -> KTriple:
    return induced_triple(BasicHom(kind=kind, source=source, target=target), p)


def recombine(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    decomposition: TripleDecomposition,
) -> KTriple:
    """
    Returns k·Γ(id) + c0·Γ(δ0) + c1·Γ(δ1).
    """
    triple = triple_scale(_basic(source, target, HomKind.ID, p), decomposition.k)
    triple = triple_add(
        triple, triple_scale(_basic(source, target, HomKind.DELTA0, p), decomposition.c0)
    )
    return triple_add(
        triple, triple_scale(_basic(source, target, HomKind.DELTA1, p), decomposition.c1)
    )


def decompose_triple(t: KTriple) -> TripleDecomposition:
    """
    Writes a valid triple as k·Γ(id) + c0·Γ(δ0) + c1·Γ(δ1) up to map equality.

    Raises:
        NoSolution: If no k satisfies k·n/gcd(m,n) ≡ y (mod n/(m0·m1)).
        NotTorsionForm: If the residual is not a torsion triple.
    """
    A, B, p = t.source, t.target, t.p
    m0, m1 = A.m0, A.m1
    s_b = k1_order(B)
    g = gcd(A.m, B.m)
    k = next((k for k in range(s_b) if (k * (B.m // g) - t.y) % s_b == 0), None)
    if k is None:
        raise NoSolution(f"No k in [0, {s_b}) with k·{B.m // g} ≡ {t.y} (mod {s_b}).")
    x_rest = t.x - k * (A.m // g)
    residual = triple_add(t, triple_scale(_basic(A, B, HomKind.ID, p), -k))
    residual = triple_add(residual, triple_scale(build_x_triple(A, B, p, x_rest), -1))
    d = torsion_param(residual)
    beta = bezout_canonical(m0, m1)
    decomposition = TripleDecomposition(
        k=k,
        c0=x_rest * beta.beta0 - d * m1,
        c1=x_rest * beta.beta1 + d * m0,
        d=d,
    )
    logger.debug("decomposed %s as %s", t.render(), decomposition)
    return decomposition


def torsion_census(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    mode: EqualityMode | None = None,
    all_y: bool = False,
) -> int:
    """
    Counts the distinct valid triples (0, φ, y) by enumerating all p⁴ matrices φ.

    Only y ≡ 0 is considered unless `all_y` is set, in which case every
    admissible y in [0, n/(m0·m1)) is included.

    note: Matrices are enumerated in slices of fixed φ[0][0] to bound memory.
    """
    mode = resolve_mode(mode)
    check_valid(source)
    check_valid(target)
    _check_moduli(source, target, p)
    s_a, s_b = k1_order(source), k1_order(target)
    (b1, c1), (b2, c2) = z_generators(source, p)
    nu_g2 = bockstein_nu(source, p, b2, c2)
    n_over_m0, n_over_m1 = target.m // target.m0, target.m // target.m1
    ys = [y for y in range(s_b) if y * s_a % s_b == 0] if all_y else [0]

    rest = np.indices((p, p, p)).reshape(3, -1).T
    keys = []
    for a11 in range(p):
        phi = np.column_stack([np.full(len(rest), a11), rest])
        image1 = np.column_stack(
            [phi[:, 0] * b1 + phi[:, 1] * c1, phi[:, 2] * b1 + phi[:, 3] * c1]
        ) % p
        image2 = np.column_stack(
            [phi[:, 0] * b2 + phi[:, 1] * c2, phi[:, 2] * b2 + phi[:, 3] * c2]
        ) % p
        numerator = n_over_m1 * image2[:, 1] - n_over_m0 * image2[:, 0]
        member = (numerator % p == 0) & (image1 == 0).all(axis=1)
        nu = numerator // p % s_b
        for y in ys:
            valid = member & (nu == y * nu_g2 % s_b)
            if mode == EqualityMode.STRICT:
                rows = phi[valid]
            else:
                rows = image2[valid]
            keys.append(np.column_stack([np.full(len(rows), y), rows]))
    keys = np.concatenate(keys)
    count = len(np.unique(keys, axis=0)) if len(keys) else 0
    logger.debug(
        "torsion census %s->%s at p=%d (%s, all_y=%s): %d",
        source, target, p, mode.value, all_y, count,
    )
    return count
