from aenum import MultiValueEnum
from pydantic import BaseModel, ConfigDict, Field, model_validator
from kkdrop.errors import AlgebraMismatch, NotCoprime
from .algebra import DimensionDropAlgebra


class HomKind(str, MultiValueEnum):
    """The four basic homomorphisms, in coefficient order."""

    DELTA0 = "delta0", "d0"
    DELTA1 = "delta1", "d1"
    ID = "id"
    IDBAR = "idbar", "id_bar"


class BasicHom(BaseModel):
    """
    A basic homomorphism from I[m0,m,m1] to I[m0,n,m1].

    note: Only the K-theoretic images of the homomorphisms are modelled.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: HomKind = Field(description="Which basic homomorphism.")
    source: DimensionDropAlgebra = Field(description="Domain I[m0,m,m1].")
    target: DimensionDropAlgebra = Field(description="Codomain I[m0,n,m1].")

    @model_validator(mode="after")
    def _shared_endpoints(self) -> "BasicHom":
        if (self.source.m0, self.source.m1) != (self.target.m0, self.target.m1):
            raise AlgebraMismatch(
                f"Basic homomorphisms keep the endpoint drops fixed: {self.source} -> {self.target}."
            )
        if self.kind != HomKind.ID and not self.source.coprime_endpoints:
            raise NotCoprime(
                f"{self.kind.value} requires coprime endpoint drops, got {self.source}."
            )
        return self
