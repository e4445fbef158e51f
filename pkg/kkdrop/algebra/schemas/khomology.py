from pydantic import BaseModel, ConfigDict, Field
from .algebra import DimensionDropAlgebra


class KHomologyClass(BaseModel):
    """
    The class u[V0] + v[V1] in the K-homology of an algebra.

    note: Classes are equal modulo the relation vector (m/m0, -m/m1).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    u: int = Field(description="Multiplicity of the left endpoint representation V0.")
    v: int = Field(description="Multiplicity of the right endpoint representation V1.")
    algebra: DimensionDropAlgebra
