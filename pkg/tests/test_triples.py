import itertools
import pytest
from pydantic import ValidationError
from kkdrop.algebra import BasicHom, DimensionDropAlgebra, HomKind
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import (
    BadMultiplicity,
    BadTorsionIndex,
    Mismatch,
    ModulusNotMultiple,
    NotTorsionForm,
)
from kkdrop.triples import (
    KTriple,
    apply_phi,
    build_triple,
    build_x_triple,
    build_y_triple,
    decompose_triple,
    equality_signature,
    induced_triple,
    recombine,
    torsion_census,
    torsion_matrix,
    torsion_param,
    torsion_triple,
    triple_add,
    triple_report,
    triple_scale,
    triples_equal,
    validate_triple,
    zero_triple,
)
from helpers import valid_algebras


def induced(kind, source, target, p):
    return induced_triple(BasicHom(kind=kind, source=source, target=target), p)


def test_phi_is_reduced(algebra):
    t = KTriple(source=algebra, target=algebra, x=0, phi=((-1, 13), (24, 5)), y=-3, p=12)
    assert t.phi == ((11, 1), (0, 5))
    assert t.y == -3


def test_triple_needs_equal_endpoints(algebra):
    with pytest.raises(ValidationError):
        KTriple(
            source=algebra,
            target=DimensionDropAlgebra(m0=3, m=12, m1=2),
            x=0,
            phi=((0, 0), (0, 0)),
            y=0,
            p=12,
        )


def test_apply_phi():
    assert apply_phi(((8, 8), (0, 6)), 2, 3, 12) == (4, 6)


@pytest.mark.parametrize(
    "kind, x, phi, y",
    [
        (HomKind.DELTA0, 2, ((2, 0), (3, 0)), 0),
        (HomKind.DELTA1, 3, ((0, 2), (0, 3)), 0),
        (HomKind.ID, 1, ((1, 0), (0, 1)), 1),
        (HomKind.IDBAR, 6, ((0, 4), (9, 0)), -6),
    ],
)
def test_induced_triples(algebra, kind, x, phi, y):
    t = induced(kind, algebra, algebra, 12)
    assert (t.x, t.phi, t.y) == (x, phi, y)


def test_induced_idbar_into_doubled(algebra, doubled):
    t = induced(HomKind.IDBAR, algebra, doubled, 24)
    assert (t.x, t.y) == (6, -12)
    assert validate_triple(t).valid


def test_induced_triple_needs_multiple(algebra):
    with pytest.raises(ModulusNotMultiple):
        induced(HomKind.ID, algebra, algebra, 18)


def test_sixteen_induced_triples_validate(algebra, doubled):
    for source in (algebra, doubled):
        for target in (algebra, doubled):
            for kind in HomKind:
                assert validate_triple(induced(kind, source, target, 24)).valid


@pytest.mark.parametrize("source", [a for a in valid_algebras(36) if a.m >= 2], ids=str)
def test_induced_triples_validate(source):
    for factor in (1, 2, 3):
        target = DimensionDropAlgebra(m0=source.m0, m=factor * source.m, m1=source.m1)
        for kind in HomKind:
            t = induced(kind, source, target, target.m)
            assert validate_triple(t).valid


@pytest.mark.parametrize("source", [a for a in valid_algebras(24) if a.m >= 2], ids=str)
def test_linear_combinations_stay_valid(source):
    target = DimensionDropAlgebra(m0=source.m0, m=2 * source.m, m1=source.m1)
    basics = [induced(kind, source, target, target.m) for kind in HomKind]
    for s, t in itertools.product(basics, repeat=2):
        for k in (-3, 2):
            assert validate_triple(triple_scale(s, k)).valid
            assert validate_triple(triple_add(s, triple_scale(t, k))).valid



def test_validation_failures(algebra, doubled):
    wrong_x = KTriple(source=algebra, target=algebra, x=1, phi=((0, 0), (0, 0)), y=0, p=12)
    check = validate_triple(wrong_x)
    assert not check.valid
    assert check.failure == "first square"

    wrong_y = KTriple(source=algebra, target=doubled, x=0, phi=((0, 0), (0, 0)), y=1, p=24)
    check = validate_triple(wrong_y)
    assert not check.valid
    assert check.failure == "multiplication by y"


def test_linear_combination(algebra):
    t = triple_add(
        triple_scale(induced(HomKind.DELTA0, algebra, algebra, 12), 4),
        triple_scale(induced(HomKind.DELTA1, algebra, algebra, 12), -2),
    )
    assert (t.x, t.phi, t.y) == (2, ((8, 8), (0, 6)), 0)
    assert equality_signature(t, EqualityMode.MAP) == (2, 4, 6, 0, 6, 0)
    assert equality_signature(t, EqualityMode.STRICT) == (2, 8, 8, 0, 6, 0)


def test_map_equality_is_coarser(algebra):
    t = triple_add(
        triple_scale(induced(HomKind.DELTA0, algebra, algebra, 12), 4),
        triple_scale(induced(HomKind.DELTA1, algebra, algebra, 12), -2),
    )
    twice_id = triple_scale(induced(HomKind.ID, algebra, algebra, 12), 2)
    assert triples_equal(t, twice_id, EqualityMode.MAP)
    assert not triples_equal(t, twice_id, EqualityMode.STRICT)


def test_equality_follows_environment(algebra, monkeypatch):
    t = triple_scale(induced(HomKind.DELTA0, algebra, algebra, 12), 2)
    t = triple_add(t, triple_scale(induced(HomKind.DELTA1, algebra, algebra, 12), -1))
    t = triple_scale(t, 2)
    twice_id = triple_scale(induced(HomKind.ID, algebra, algebra, 12), 2)
    assert triples_equal(t, twice_id)
    monkeypatch.setenv("KKDROP_EQUALITY", "strict")
    assert not triples_equal(t, twice_id)


def test_mismatched_triples(algebra):
    with pytest.raises(Mismatch):
        triples_equal(zero_triple(algebra, algebra, 12), zero_triple(algebra, algebra, 24))
    with pytest.raises(Mismatch):
        triple_add(zero_triple(algebra, algebra, 12), zero_triple(algebra, algebra, 24))


def test_build_triples(algebra, doubled):
    assert build_x_triple(algebra, algebra, 12, 1).phi == ((4, 10), (6, 9))
    y_triple = build_y_triple(algebra, algebra, 12, 1)
    assert (y_triple.x, y_triple.phi, y_triple.y) == (0, ((9, 2), (6, 4)), 1)
    assert validate_triple(y_triple).valid
    with pytest.raises(BadMultiplicity):
        build_y_triple(algebra, doubled, 24, 1)


def test_torsion_triples(algebra):
    assert torsion_matrix(algebra) == ((-6, 4), (-9, 6))
    t = torsion_triple(algebra, algebra, 12, 1)
    assert t.phi == ((6, 4), (3, 6))
    assert validate_triple(t).valid
    assert torsion_param(t) == 1
    assert torsion_param(zero_triple(algebra, algebra, 12)) == 0
    with pytest.raises(BadTorsionIndex):
        torsion_triple(algebra, algebra, 12, 2)
    with pytest.raises(NotTorsionForm):
        torsion_param(induced(HomKind.DELTA0, algebra, algebra, 12))


@pytest.mark.parametrize("source", [a for a in valid_algebras(36) if a.m >= 2], ids=str)
def test_torsion_triples_are_endpoint_combinations(source):
    p = source.m
    delta0 = induced(HomKind.DELTA0, source, source, p)
    delta1 = induced(HomKind.DELTA1, source, source, p)
    for d in range(source.m // (source.m0 * source.m1)):
        expected = triple_add(
            triple_scale(delta1, d * source.m0), triple_scale(delta0, -d * source.m1)
        )
        assert triples_equal(torsion_triple(source, source, p, d), expected, EqualityMode.MAP), d



@pytest.mark.parametrize(
    "kind, coordinates",
    [
        (HomKind.DELTA0, (0, 1, 0, 1)),
        (HomKind.DELTA1, (0, 6, -3, 0)),
        (HomKind.ID, (1, 0, 0, 0)),
    ],
)
def test_decompose_basic(algebra, kind, coordinates):
    d = decompose_triple(induced(kind, algebra, algebra, 12))
    assert (d.k, d.c0, d.c1, d.d) == coordinates


def test_decomposition_recombines(algebra):
    for x in range(-24, 25):
        for y in (0, 1):
            for d in (0, 1):
                t = build_triple(algebra, algebra, 12, x, y, d)
                decomposition = decompose_triple(t)
                assert decomposition.d == d
                assert triples_equal(
                    recombine(algebra, algebra, 12, decomposition), t, EqualityMode.MAP
                )


def test_torsion_census(algebra):
    assert torsion_census(algebra, algebra, 12, EqualityMode.MAP) == 2
    assert torsion_census(algebra, algebra, 12, EqualityMode.STRICT) == 72
    assert torsion_census(algebra, algebra, 12, EqualityMode.MAP, all_y=True) == 4


def test_triple_report(algebra):
    report = triple_report(algebra, algebra, 12)
    assert [t.kind for t in report.triples] == list(HomKind)
    assert all(t.validation.valid for t in report.triples)
    report = triple_report(algebra, algebra, 12, HomKind.IDBAR)
    assert [(t.x, t.phi, t.y) for t in report.triples] == [(6, ((0, 4), (9, 0)), -6)]
