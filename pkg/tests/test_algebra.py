import pytest
from hypothesis import assume, given
from hypothesis.strategies import integers, sampled_from
from pydantic import ValidationError
from kkdrop.algebra import (
    BasicHom,
    DimensionDropAlgebra,
    HomKind,
    KHomologyClass,
    basic_homs,
    check_valid,
    idbar_multiplicities,
    k1_order,
    khomology_equal,
    khomology_positive,
    khomology_reduce,
)
from kkdrop.errors import AlgebraMismatch, InvalidAlgebra
from helpers import valid_algebras


def test_parse(algebra):
    assert DimensionDropAlgebra.parse("2,12,3") == algebra
    assert DimensionDropAlgebra.parse(" I[2,12,3] ") == algebra
    assert str(algebra) == "I[2,12,3]"
    assert algebra.literal == "2,12,3"


@pytest.mark.parametrize("literal", ["2,12", "2,x,3", "5,12,3", "0,12,3"])
def test_parse_rejects(literal):
    with pytest.raises(ValueError):
        DimensionDropAlgebra.parse(literal)


def test_endpoint_sizes_must_divide():
    with pytest.raises(ValidationError):
        DimensionDropAlgebra(m0=5, m=12, m1=3)


def test_check_valid_rejects_common_factor():
    algebra = DimensionDropAlgebra(m0=2, m=12, m1=2)
    assert not algebra.coprime_endpoints
    with pytest.raises(InvalidAlgebra):
        check_valid(algebra)


def test_k1_order(algebra):
    assert k1_order(algebra) == 2
    assert k1_order(DimensionDropAlgebra(m0=1, m=12, m1=1)) == 12


def test_basic_homs_order(algebra, doubled):
    homs = basic_homs(algebra, doubled)
    assert [h.kind for h in homs] == [
        HomKind.DELTA0,
        HomKind.DELTA1,
        HomKind.ID,
        HomKind.IDBAR,
    ]


def test_basic_hom_aliases():
    assert HomKind("d0") == HomKind.DELTA0
    assert HomKind("id_bar") == HomKind.IDBAR


def test_basic_hom_needs_equal_endpoints(algebra):
    with pytest.raises(ValidationError):
        BasicHom(
            kind=HomKind.ID,
            source=algebra,
            target=DimensionDropAlgebra(m0=3, m=12, m1=2),
        )


def test_idbar_multiplicities(algebra, doubled):
    assert idbar_multiplicities(algebra, algebra) == (4, 9)
    assert idbar_multiplicities(algebra, doubled) == (4, 9)


def test_khomology_relation(algebra):
    reduced = KHomologyClass(u=2, v=0, algebra=algebra)
    assert khomology_equal(KHomologyClass(u=8, v=-4, algebra=algebra), reduced)
    assert not khomology_equal(KHomologyClass(u=8, v=-3, algebra=algebra), reduced)
    assert khomology_equal(
        KHomologyClass(u=12, v=-6, algebra=algebra),
        KHomologyClass(u=0, v=2, algebra=algebra),
    )


def test_khomology_equal_needs_same_algebra(algebra, doubled):
    with pytest.raises(AlgebraMismatch):
        khomology_equal(
            KHomologyClass(u=0, v=0, algebra=algebra),
            KHomologyClass(u=0, v=0, algebra=doubled),
        )


@pytest.mark.parametrize(
    "u, v, positive",
    [(8, -4, True), (12, -6, True), (-2, 0, False), (0, 0, True), (1, -1, False)],
)
def test_khomology_positive(algebra, u, v, positive):
    assert khomology_positive(KHomologyClass(u=u, v=v, algebra=algebra)) == positive


def test_khomology_reduce(algebra):
    assert khomology_reduce(KHomologyClass(u=8, v=-4, algebra=algebra)) == KHomologyClass(
        u=2, v=0, algebra=algebra
    )
    assert khomology_reduce(KHomologyClass(u=-2, v=0, algebra=algebra)) == KHomologyClass(
        u=4, v=-4, algebra=algebra
    )


@given(
    sampled_from(valid_algebras(36)),
    integers(min_value=-200, max_value=200),
    integers(min_value=-200, max_value=200),
)
def test_reduced_representative_decides_positivity(algebra, u, v):
    c = KHomologyClass(u=u, v=v, algebra=algebra)
    reduced = khomology_reduce(c)
    assert khomology_equal(c, reduced)
    assert 0 <= reduced.u < algebra.m // algebra.m0
    assert khomology_positive(c) == (reduced.v >= 0)


@given(
    sampled_from(valid_algebras(36)),
    integers(min_value=0, max_value=200),
    integers(min_value=0, max_value=200),
)
def test_non_negative_pairs_are_positive(algebra, u, v):
    assert khomology_positive(KHomologyClass(u=u, v=v, algebra=algebra))


@given(
    sampled_from(valid_algebras(36)),
    integers(min_value=-100, max_value=100),
    integers(min_value=-100, max_value=100),
    integers(min_value=-100, max_value=100),
    integers(min_value=-100, max_value=100),
)
def test_positive_classes_are_closed_under_sums(algebra, u1, v1, u2, v2):
    first = KHomologyClass(u=u1, v=v1, algebra=algebra)
    second = KHomologyClass(u=u2, v=v2, algebra=algebra)
    assume(khomology_positive(first) and khomology_positive(second))
    assert khomology_positive(KHomologyClass(u=u1 + u2, v=v1 + v2, algebra=algebra))
