from typing import Any
from pydantic import BaseModel, ConfigDict, Field, model_validator
from kkdrop.algebra.schemas import DimensionDropAlgebra


class GpElement(BaseModel):
    """
    An element (a, b, c) of K0(A; G_p) = Z ⊕ Z(m,p).

    note: b and c are stored as canonical residues in [0, p).
          Membership in Z(m,p) is checked by the operations consuming the element.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    algebra: DimensionDropAlgebra
    p: int = Field(ge=2, description="Coefficient modulus.")
    a: int = Field(description="K0 component.")
    b: int = Field(description="Residue at the left endpoint.")
    c: int = Field(description="Residue at the right endpoint.")

    @model_validator(mode="before")
    @classmethod
    def _canonical_residues(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("p"), int) and data["p"] >= 2:
            p = data["p"]
            data = dict(data)
            for key in ("b", "c"):
                if isinstance(data.get(key), int):
                    data[key] = data[key] % p
        return data

    @property
    def coordinates(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    @classmethod
    def parse(
        cls, literal: str, algebra: DimensionDropAlgebra, p: int
    ) -> "GpElement":
        """
        Parses the literal "a,b,c".
        """
        parts = literal.strip().lstrip("=").split(",")
        if len(parts) != 3:
            raise ValueError(f"Element literal must read 'a,b,c', got {literal!r}.")
        try:
            a, b, c = (int(v) for v in parts)
        except ValueError:
            raise ValueError(f"Element literal {literal!r} contains a non-integer.")
        return cls(algebra=algebra, p=p, a=a, b=b, c=c)
