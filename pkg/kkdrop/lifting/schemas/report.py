from pydantic import BaseModel, ConfigDict, Field
from kkdrop.algebra.schemas import HomKind, KHomologyClass
from kkdrop.dtypes import EqualityMode
from kkdrop.kk.schemas import KKElement
from .family import FamilyElement

Witness = tuple[int, int, int, int]


class PositivityCheck(BaseModel):
    """
    Verdict of the Dadarlat-Loring order test on the four cone generators.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    positive: bool
    witness: HomKind | None = Field(
        default=None, description="First cone generator with a non-positive image."
    )
    image: tuple[int, int, int] | None = Field(
        default=None, description="Image (a, b, c) of the failing generator."
    )


class ClosedFormCheck(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    x: int
    holds: bool
    square_term: int = Field(description="β0·m0·m0·x.")
    cross_term: int = Field(description="β0·m0·m1·x.")
    remainder_r: int = Field(description="β0·m0·m0·x mod m.")
    remainder_s: int = Field(description="β0·m0·m1·x mod m.")


class Agreement(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    dl_vs_span: bool
    js_vs_span: bool


class LiftReport(BaseModel):
    """
    The three lifting verdicts for one KK element.

    note: `span_member` refers to the non-negative span of δ0, δ1, id and id̄.
          It is a sufficient condition for lifting, not a characterisation.
    """

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    element: KKElement
    family: FamilyElement | None = Field(
        default=None, description="Family parameters if the element came from the search."
    )
    p: int
    equality_mode: EqualityMode = Field(alias="mode")
    dl_positive: bool
    dl_witness: HomKind | None = None
    js_positive: bool
    js_images: tuple[KHomologyClass, KHomologyClass] = Field(
        description="Images of [V0] and [V1] of the target."
    )
    span_member: bool
    span_witness: Witness | None = Field(
        default=None, description="Coefficients of δ0, δ1, id and id̄."
    )
    agreement: Agreement
