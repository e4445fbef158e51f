from pydantic import BaseModel, ConfigDict, Field


class FamilyElement(BaseModel):
    """
    Parameters of (β0·x - d·m1)·δ0 + (β1·x + d·m0)·δ1.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    x: int = Field(description="K0 multiplicity.")
    d: int = Field(ge=0, description="Torsion parameter in [0, m/(m0·m1)).")
