import logging
from functools import lru_cache
from typing import NamedTuple
import numpy as np
from kkdrop.algebra import (
    DimensionDropAlgebra,
    HomKind,
    KHomologyClass,
    check_valid,
    idbar_multiplicities,
    k1_order,
    khomology_equal,
    khomology_positive,
)
from kkdrop.arithmetic import bezout_canonical, gcd
from kkdrop.coeff_ktheory import GpElement, cone_generators, is_positive, require_multiple
from kkdrop.config import resolve_mode
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import BadMultiplicity, BadTorsionIndex, InconsistencyError
from kkdrop.kk import KKElement, basic_element, default_modulus, gamma, kk_equal
from kkdrop.triples import apply_phi, equality_signature, signature_moduli
from .schemas.family import FamilyElement
from .schemas.report import (
    Agreement,
    ClosedFormCheck,
    LiftReport,
    PositivityCheck,
    Witness,
)

logger = logging.getLogger(__name__)


def family_element(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, x: int, d: int
) -> KKElement:
    """
    Returns (β0·x - d·m1)·δ0 + (β1·x + d·m0)·δ1.

    Raises:
        InvalidAlgebra: If the source lacks coprime endpoints or full drop.
        BadTorsionIndex: If d is not in [0, m/(m0·m1)).
    """
    s = k1_order(source)
    if not 0 <= d < s:
        raise BadTorsionIndex(f"Torsion index d = {d} is not in [0, {s}).")
    m0, m1 = source.m0, source.m1
    beta = bezout_canonical(m0, m1)
    return KKElement(
        source=source,
        target=target,
        coeffs=(beta.beta0 * x - d * m1, beta.beta1 * x + d * m0, 0, 0),
    )


def relation_rewrite(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, x: int, d: int
) -> KKElement:
    """
    Rewrites a family element with x >= m as a non-negative combination of δ0 and δ1.

    The relation (m/m0)·δ0 = (m/m1)·δ1 moves all but r0 < m/m0 copies of δ0 over to δ1.
    The result equals the family element under map equality.

    Raises:
        BadMultiplicity: If x < m.
    """
    if x < source.m:
        raise BadMultiplicity(f"Rewrite needs x >= m = {source.m}, got x = {x}.")
    c0, c1, _, _ = family_element(source, target, x, d).coeffs
    r0_period, r1_period = source.m // source.m0, source.m // source.m1
    j, r0 = divmod(c0, r0_period)
    return KKElement(
        source=source, target=target, coeffs=(r0, c1 + j * r1_period, 0, 0)
    )


def dl_positive(e: KKElement, p: int) -> PositivityCheck:
    """
    Checks whether Γ(e; p) maps the four cone generators of K0(A; G_p) into the positive cone of B.

    The image of (a, b, c) under (x, φ, y) is (x·a, φ·(b, c)ᵀ mod p).

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
    """
    A, B = e.source, e.target
    check_valid(B)
    require_multiple(A.m, p)
    require_multiple(B.m, p)
    triple = gamma(e, p)
    for kind, generator in zip(HomKind, cone_generators(A, p)):
        b, c = apply_phi(triple.phi, generator.b, generator.c, p)
        image = GpElement(algebra=B, p=p, a=triple.x * generator.a, b=b, c=c)
        if not is_positive(image):
            return PositivityCheck(positive=False, witness=kind, image=image.coordinates)
    return PositivityCheck(positive=True)


def dl_closed_form(algebra: DimensionDropAlgebra, x: int) -> ClosedFormCheck:
    """
    Evaluates the closed form of the order test for a family element with d = 0.

    Holds iff x = 0, or β0·m0·m0·x >= m, β0·m0·m1·x >= m, m0·x >= R and m1·x >= S,
    where R and S are the first two quantities reduced mod m.

    Raises:
        InvalidAlgebra: If the algebra lacks coprime endpoints or full drop.
        BadMultiplicity: If x < 0.
    """
    check_valid(algebra)
    if x < 0:
        raise BadMultiplicity(f"K0 multiplicity must be non-negative, got {x}.")
    m0, m1, m = algebra.m0, algebra.m1, algebra.m
    beta0 = bezout_canonical(m0, m1).beta0
    square, cross = beta0 * m0 * m0 * x, beta0 * m0 * m1 * x
    r, s = square % m, cross % m
    holds = x == 0 or (square >= m and cross >= m and m0 * x >= r and m1 * x >= s)
    return ClosedFormCheck(
        x=x,
        holds=holds,
        square_term=square,
        cross_term=cross,
        remainder_r=r,
        remainder_s=s,
    )


def _basic_actions(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra
) -> dict[HomKind, tuple[tuple[int, int], tuple[int, int]]]:
    # (u, v) of the images of [V0] and [V1] of the target
    m0, m1, m = source.m0, source.m1, source.m
    w = m // gcd(m, target.m)
    q1, q0 = idbar_multiplicities(source, target)
    return {
        HomKind.DELTA0: ((m0, 0), (m1, 0)),
        HomKind.DELTA1: ((0, m0), (0, m1)),
        HomKind.ID: ((w, 0), (0, w)),
        HomKind.IDBAR: ((0, q1), (q0, 0)),
    }


def js_action(e: KKElement) -> tuple[KHomologyClass, KHomologyClass]:
    """
    Returns the images of [V0] and [V1] of the target in the K-homology of the source.

    Raises:
        InvalidAlgebra: If an algebra lacks coprime endpoints or full drop.
        InconsistencyError: If the images break the relation (n/m0)[V0] = (n/m1)[V1] of the target.
    """
    A, B = e.source, e.target
    check_valid(A)
    check_valid(B)
    actions = _basic_actions(A, B)
    images = [[0, 0], [0, 0]]
    for kind, c in zip(HomKind, e.coeffs):
        for image, (u, v) in zip(images, actions[kind]):
            image[0] += c * u
            image[1] += c * v
    (u0, v0), (u1, v1) = images
    r0, r1 = B.m // B.m0, B.m // B.m1
    if not khomology_equal(
        KHomologyClass(u=r0 * u0, v=r0 * v0, algebra=A),
        KHomologyClass(u=r1 * u1, v=r1 * v1, algebra=A),
    ):
        raise InconsistencyError(
            f"K-homology action of {e.coeffs} breaks the relation of {B}.",
            witness=[u0, v0, u1, v1],
        )
    return (
        KHomologyClass(u=u0, v=v0, algebra=A),
        KHomologyClass(u=u1, v=v1, algebra=A),
    )


def js_liftable(e: KKElement) -> bool:
    """
    Returns whether both K-homology images are positive.
    """
    return all(khomology_positive(image) for image in js_action(e))


def _reduce(values: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    return np.where(moduli > 0, values % np.where(moduli > 0, moduli, 1), values)


@lru_cache(maxsize=512)
def _basic_signatures(
    source: DimensionDropAlgebra, target: DimensionDropAlgebra, mode: EqualityMode
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Returns the K0 multiplicities, the signatures without x and their moduli
    of δ0, δ1, id and id̄ at p = lcm(m, n).
    """
    p_star = default_modulus(source, target)
    basics = [gamma(basic_element(source, target, kind), p_star) for kind in HomKind]
    weights = np.array([t.x for t in basics], dtype=np.int64)
    signatures = np.array(
        [equality_signature(t, mode)[1:] for t in basics], dtype=np.int64
    )
    moduli = np.array(signature_moduli(basics[0], mode)[1:], dtype=np.int64)
    for array in (weights, signatures, moduli):
        array.setflags(write=False)
    return weights, signatures, moduli


class _PairTable(NamedTuple):
    # all (u, v) >= 0 with weight <= limit, in lexicographic order
    coeffs: np.ndarray
    weights: np.ndarray
    residues: np.ndarray


def _pair_table(
    weights: np.ndarray, signatures: np.ndarray, moduli: np.ndarray, limit: int
) -> _PairTable:
    u, v = np.meshgrid(
        np.arange(limit // weights[0] + 1, dtype=np.int64),
        np.arange(limit // weights[1] + 1, dtype=np.int64),
        indexing="ij",
    )
    coeffs = np.column_stack([u.ravel(), v.ravel()])
    total = coeffs @ weights
    coeffs, total = coeffs[total <= limit], total[total <= limit]
    return _PairTable(coeffs, total, _reduce(coeffs @ signatures, moduli))


class _KeyIndex(NamedTuple):
    """
    Compact integer keys of (weight, residues) rows, built one column at a time
    so that composite keys stay below the number of rows times a column range.
    """

    levels: tuple[tuple[int, int, np.ndarray], ...]
    first_row: np.ndarray

    @classmethod
    def build(cls, columns: np.ndarray) -> "_KeyIndex":
        ids = np.zeros(len(columns), dtype=np.int64)
        levels = []
        for column in columns.T:
            low = int(column.min())
            radix = int(column.max()) - low + 1
            keys, ids = np.unique(ids * radix + (column - low), return_inverse=True)
            ids = ids.ravel()
            levels.append((low, radix, keys))
        # rows are in lexicographic order, so the first index per key is the least row
        _, first_row = np.unique(ids, return_index=True)
        return cls(tuple(levels), first_row)

    def lookup(self, columns: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Returns a match mask and, where it holds, the least matching row per query row.
        """
        found = np.ones(len(columns), dtype=bool)
        ids = np.zeros(len(columns), dtype=np.int64)
        for (low, radix, keys), column in zip(self.levels, columns.T):
            offset = column - low
            found &= (offset >= 0) & (offset < radix)
            composite = ids * radix + np.where(found, offset, 0)
            position = np.minimum(np.searchsorted(keys, composite), len(keys) - 1)
            found &= keys[position] == composite
            ids = np.where(found, position, 0)
        return found, self.first_row[ids]


@lru_cache(maxsize=512)
def _span_tables(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    mode: EqualityMode,
    limit: int,
) -> tuple[_PairTable, _PairTable, _KeyIndex]:
    weights, signatures, moduli = _basic_signatures(source, target, mode)
    head = _pair_table(weights[:2], signatures[:2], moduli, limit)
    tail = _pair_table(weights[2:], signatures[2:], moduli, limit)
    index = _KeyIndex.build(np.column_stack([tail.weights, tail.residues]))
    return head, tail, index


def _limit(total: int) -> int:
    limit = 16
    while limit < total:
        limit *= 2
    return limit


def span_member(
    e: KKElement, p: int, mode: EqualityMode | None = None
) -> Witness | None:
    """
    Searches the non-negative span of δ0, δ1, id and id̄ for an element equal to e.

    Equality is always decided at p* = lcm(m, n), where Γ is faithful. `p` is only
    checked to be a common multiple of m and n.

    Candidates (a, b, c, e') have K0 multiplicity equal to that of e, so the
    search space is finite. The pairs (a, b) and (c, e') are tabulated once per
    pair of algebras and mode and joined on weight and signature residues.
    The lexicographically first match is returned.

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
    """
    mode = resolve_mode(mode)
    A, B = e.source, e.target
    require_multiple(A.m, p)
    require_multiple(B.m, p)
    weights, signatures, moduli = _basic_signatures(A, B, mode)
    coeffs = np.array(e.coeffs, dtype=np.int64)
    total = int(coeffs @ weights)
    if total < 0:
        return None
    target = coeffs @ signatures

    head, tail, index = _span_tables(A, B, mode, _limit(total))
    usable = head.weights <= total
    needed = np.column_stack(
        [
            total - head.weights[usable],
            _reduce(target - head.residues[usable], moduli),
        ]
    )
    found, rows = index.lookup(needed)
    if not found.any():
        return None
    first = int(np.argmax(found))
    a, b = head.coeffs[usable][first]
    c, d = tail.coeffs[rows[first]]
    return (int(a), int(b), int(c), int(d))


def lift_report(
    e: KKElement,
    p: int,
    mode: EqualityMode | None = None,
    family: FamilyElement | None = None,
) -> LiftReport:
    """
    Runs the order test, the K-homology test and the span search on one element.

    Raises:
        InconsistencyError: If a span witness does not evaluate back to e,
            or if an element in the span fails the K-homology test.
    """
    mode = resolve_mode(mode)
    dl = dl_positive(e, p)
    images = js_action(e)
    js = all(khomology_positive(image) for image in images)
    witness = span_member(e, p, mode)
    if witness is not None:
        recombined = KKElement(source=e.source, target=e.target, coeffs=witness)
        if not kk_equal(recombined, e, mode):
            raise InconsistencyError(
                f"Span witness {witness} does not evaluate back to {e.coeffs}.",
                witness=list(witness),
            )
        if not js:
            raise InconsistencyError(
                f"{e.coeffs} lies in the span via {witness} but fails the K-homology test.",
                witness=list(witness),
            )
    member = witness is not None
    return LiftReport(
        element=e,
        family=family,
        p=p,
        equality_mode=mode,
        dl_positive=dl.positive,
        dl_witness=dl.witness,
        js_positive=js,
        js_images=images,
        span_member=member,
        span_witness=witness,
        agreement=Agreement(dl_vs_span=dl.positive == member, js_vs_span=js == member),
    )
