from pydantic import BaseModel, ConfigDict, Field


class BezoutPair(BaseModel):
    """
    Coefficients with beta0·m0 + beta1·m1 = 1.

    note: beta0 is the least non-negative choice keeping beta1 non-positive.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    beta0: int = Field(ge=0, description="Coefficient of m0.")
    beta1: int = Field(le=0, description="Coefficient of m1.")
