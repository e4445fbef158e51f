from pydantic import BaseModel, ConfigDict, Field, computed_field
from kkdrop.algebra.schemas import DimensionDropAlgebra


class SegmentCheck(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(description="Segment of the exact sequence.")
    passed: bool
    witness: list[int] | None = Field(
        default=None,
        description="Offending value if the segment failed.",
    )


class ExactnessReport(BaseModel):
    """
    Result of the finite check of the Bockstein exact sequence.
    """

    model_config = ConfigDict(extra="forbid")

    algebra: DimensionDropAlgebra
    p: int
    segments: list[SegmentCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.segments)


class NuValue(BaseModel):
    model_config = ConfigDict(extra="forbid")

    b: int
    c: int
    value: int = Field(description="ν(b, c) in Z_{m/(m0·m1)}.")


class KTheoryReport(BaseModel):
    """
    K-theory with Z_p coefficients of one algebra.
    """

    model_config = ConfigDict(extra="forbid")

    algebra: DimensionDropAlgebra
    p: int
    k1_order: int = Field(description="Order of K1 = Z_{m/(m0·m1)}.")
    zmp_size: int = Field(description="Number of elements of Z(m,p).")
    mu: tuple[int, int] = Field(description="μ(1) = (m0, m1) mod p.")
    nu: str = Field(description="Formula of ν on Z(m,p).")
    nu_generators: list[NuValue] = Field(
        description="ν on the two designated generators of Z(m,p)."
    )
    cone_generators: list[tuple[int, int, int]] = Field(
        description="Classes of δ0, δ1, id and id̄ as (a, b, c)."
    )


class ConeDecomposition(BaseModel):
    model_config = ConfigDict(extra="forbid")

    algebra: DimensionDropAlgebra
    p: int
    element: tuple[int, int, int] = Field(description="(a, b, c) with b, c reduced mod p.")
    coefficients: tuple[int, int, int, int] = Field(
        description="Non-negative coefficients of the classes of δ0, δ1, id and id̄."
    )
