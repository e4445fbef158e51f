from pydantic import BaseModel, ConfigDict, Field, model_validator
from kkdrop.algebra.schemas import DimensionDropAlgebra
from kkdrop.errors import AlgebraMismatch

Coefficients = tuple[int, int, int, int]


class KKElement(BaseModel):
    """
    A formal combination c_δ0·δ0 + c_δ1·δ1 + c_id·id + c_id̄·id̄ in KK(A, B).

    note: Model equality compares coefficients. Use `kk_equal` for equality of KK classes.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    coeffs: Coefficients = Field(
        description="Coefficients of δ0, δ1, id and id̄.",
    )

    @model_validator(mode="after")
    def _shared_endpoints(self) -> "KKElement":
        if (self.source.m0, self.source.m1) != (self.target.m0, self.target.m1):
            raise AlgebraMismatch(
                f"KK elements need equal endpoint drops: {self.source} -> {self.target}."
            )
        return self

    @staticmethod
    def parse_coeffs(literal: str) -> Coefficients:
        """
        Parses "d0,d1,id,idbar". A leading '=' is ignored.
        """
        parts = literal.strip().lstrip("=").split(",")
        if len(parts) != 4:
            raise ValueError(
                f"Coefficient literal must read 'd0,d1,id,idbar', got {literal!r}."
            )
        try:
            return tuple(int(v) for v in parts)
        except ValueError:
            raise ValueError(f"Coefficient literal {literal!r} contains a non-integer.")
