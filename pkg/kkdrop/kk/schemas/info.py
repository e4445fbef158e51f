from pydantic import BaseModel, ConfigDict, Field, computed_field
from kkdrop.algebra.schemas import DimensionDropAlgebra


class KKCanonicalForm(BaseModel):
    """
    Invariants (x, y mod n/(m0·m1), d) of a KK class with the generator expression k·id + c0·δ0 + c1·δ1.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    x: int = Field(description="K0 multiplicity.")
    y_mod: int = Field(description="K1 multiplicity modulo n/(m0·m1).")
    d: int = Field(description="Torsion parameter.")
    k: int = Field(description="Coefficient of id.")
    c0: int = Field(description="Coefficient of δ0.")
    c1: int = Field(description="Coefficient of δ1.")


class KKGroupInfo(BaseModel):
    """
    Structure of KK(A, B): the stated cyclic decomposition next to enumerated counts.

    note: The counts are reported side by side. No side is taken.
    """

    model_config = ConfigDict(extra="forbid")

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    p: int = Field(description="Modulus of the enumeration, lcm(m, n).")
    free_rank: int
    stated_torsion: tuple[int, int] = Field(
        description="Cyclic orders (gcd(n,m), m/(m0·m1)) of the stated decomposition."
    )
    k1_hom_order: int = Field(
        description="Order of Hom(Z_{m/(m0·m1)}, Z_{n/(m0·m1)}) from the K1 orders."
    )
    enumerated_torsion_count: int = Field(
        description="Distinct valid triples (0, φ, y ≡ 0) under map equality."
    )
    enumerated_torsion_count_strict: int = Field(
        description="Distinct valid triples (0, φ, y ≡ 0) under entrywise equality."
    )
    enumerated_full_torsion_count: int = Field(
        description="Distinct valid triples (0, φ, y) over all admissible y under map equality."
    )

    @computed_field
    @property
    def stated_torsion_order(self) -> int:
        return self.stated_torsion[0] * self.stated_torsion[1]

    @computed_field
    @property
    def stated_formula_matches_census(self) -> bool:
        return self.stated_torsion_order == self.enumerated_torsion_count

    @computed_field
    @property
    def stated_formula_matches_full_census(self) -> bool:
        return self.stated_torsion_order == self.enumerated_full_torsion_count
