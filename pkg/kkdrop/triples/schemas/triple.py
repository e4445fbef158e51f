from typing import Any
from pydantic import BaseModel, ConfigDict, Field, model_validator
from kkdrop.algebra.schemas import DimensionDropAlgebra, HomKind
from kkdrop.errors import AlgebraMismatch

Matrix = tuple[tuple[int, int], tuple[int, int]]


class KTriple(BaseModel):
    """
    A morphism triple (x, φ, y) from K(A; p) to K(B; p).

    note: x acts on K0, φ on Z(m,p) ⊂ Z_p², and y on K1.
          φ is stored with entries reduced to [0, p); y is kept as an integer.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    source: DimensionDropAlgebra = Field(description="Domain I[m0,m,m1].")
    target: DimensionDropAlgebra = Field(description="Codomain I[m0,n,m1].")
    x: int = Field(description="K0 multiplicity.")
    phi: Matrix = Field(description="Action on Z(m,p), row major.")
    y: int = Field(description="K1 multiplicity.")
    p: int = Field(ge=2, description="Coefficient modulus.")

    @model_validator(mode="before")
    @classmethod
    def _canonical_phi(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("p"), int) and data["p"] >= 2:
            p = data["p"]
            phi = data.get("phi")
            if phi is not None:
                data = dict(data)
                data["phi"] = tuple(tuple(v % p for v in row) for row in phi)
        return data

    @model_validator(mode="after")
    def _shared_endpoints(self) -> "KTriple":
        if (self.source.m0, self.source.m1) != (self.target.m0, self.target.m1):
            raise AlgebraMismatch(
                f"Triples need equal endpoint drops: {self.source} -> {self.target}."
            )
        return self

    def render(self) -> dict[str, Any]:
        """Returns the compact form {"x", "phi", "y", "p"}."""
        return self.model_dump(mode="json", include={"x", "phi", "y", "p"})


class TripleValidation(BaseModel):
    model_config = ConfigDict(extra="forbid")

    valid: bool
    failure: str | None = Field(
        default=None, description="Which commuting condition failed."
    )
    witness: list[int] | None = Field(
        default=None, description="Values exhibiting the failure."
    )


class TripleDecomposition(BaseModel):
    """
    Coordinates of a triple as k·Γ(id) + c0·Γ(δ0) + c1·Γ(δ1).

    note: d is the torsion parameter of the residual after removing k·Γ(id) and the K0 part.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    k: int
    c0: int
    c1: int
    d: int


class InducedTriple(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: HomKind
    x: int
    phi: Matrix
    y: int
    validation: TripleValidation


class TripleReport(BaseModel):
    """
    Triples induced by basic homomorphisms at one modulus.
    """

    model_config = ConfigDict(extra="forbid")

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    p: int
    triples: list[InducedTriple]
