import math
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, computed_field, model_validator
from kkdrop.errors import InvalidAlgebra


class DimensionDropAlgebra(BaseModel):
    """
    The dimension drop interval algebra I[m0,m,m1].

    note: Functions on [0,1] with values in M_m whose endpoint values come from M_m0 and M_m1.
          Algebras without coprime endpoints or full drop can be constructed,
          but every K-theoretic operation rejects them.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    m0: PositiveInt = Field(description="Matrix size at the left endpoint.")
    m: PositiveInt = Field(description="Matrix size in the interior.")
    m1: PositiveInt = Field(description="Matrix size at the right endpoint.")

    @model_validator(mode="after")
    def _corners_embed(self) -> "DimensionDropAlgebra":
        if self.m % self.m0 or self.m % self.m1:
            raise InvalidAlgebra(
                f"Endpoint sizes {self.m0} and {self.m1} must divide m = {self.m}."
            )
        return self

    @computed_field
    @property
    def coprime_endpoints(self) -> bool:
        return math.gcd(self.m0, self.m1) == 1

    @computed_field
    @property
    def full_drop(self) -> bool:
        return self.m % (self.m0 * self.m1) == 0

    @property
    def literal(self) -> str:
        return f"{self.m0},{self.m},{self.m1}"

    def __str__(self) -> str:
        return f"I[{self.literal}]"

    @classmethod
    def parse(cls, literal: str) -> "DimensionDropAlgebra":
        """
        Parses the literal "m0,m,m1" or "I[m0,m,m1]".

        Raises:
            ValueError: If the literal is malformed or the sizes are inconsistent.
        """
        parts = literal.strip().removeprefix("I[").removesuffix("]").split(",")
        if len(parts) != 3:
            raise ValueError(f"Algebra literal must read 'm0,m,m1', got {literal!r}.")
        try:
            m0, m, m1 = (int(v) for v in parts)
        except ValueError:
            raise ValueError(f"Algebra literal {literal!r} contains a non-integer.")
        return cls(m0=m0, m=m, m1=m1)
