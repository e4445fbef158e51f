from pydantic import BaseModel, ConfigDict, Field, model_validator
from kkdrop.algebra.schemas import DimensionDropAlgebra
from kkdrop.dtypes import EqualityMode
from kkdrop.kk.schemas.element import Coefficients
from .family import FamilyElement


class LiftInput(BaseModel):
    """Element to run the lifting tests on, given by coefficients or by family parameters."""

    model_config = ConfigDict(extra="forbid")

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    coeffs: Coefficients | None = Field(
        default=None, description="Coefficients of δ0, δ1, id and id̄."
    )
    family: FamilyElement | None = None
    p: int | None = Field(default=None, ge=2, description="Modulus. Default: lcm(m, n).")
    mode: EqualityMode | None = Field(
        default=None, description="Equality of triples. Default: server setting."
    )

    @model_validator(mode="after")
    def _one_element(self) -> "LiftInput":
        if (self.coeffs is None) == (self.family is None):
            raise ValueError("Exactly one of `coeffs` and `family` must be given.")
        return self


class SearchInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    p: int | None = Field(default=None, ge=2, description="Modulus. Default: lcm(m, n).")
    x_max: int | None = Field(default=None, ge=0, description="Largest x. Default: m - 1.")
    include_torsion: bool = False
    mode: EqualityMode | None = None
    workers: int = Field(default=1, ge=1)
