from pydantic import BaseModel, ConfigDict, Field
from kkdrop.algebra.schemas import DimensionDropAlgebra
from kkdrop.dtypes import EqualityMode
from kkdrop.schemas import Table
from .report import LiftReport


class SearchTable(Table):
    x: list[int]
    d: list[int]
    c0: list[int]
    c1: list[int]
    dl_positive: list[bool]
    js_positive: list[bool]
    span_member: list[bool]

    @classmethod
    def from_reports(cls, reports: list[LiftReport]) -> "SearchTable":
        return cls(
            x=[r.family.x for r in reports],
            d=[r.family.d for r in reports],
            c0=[r.element.coeffs[0] for r in reports],
            c1=[r.element.coeffs[1] for r in reports],
            dl_positive=[r.dl_positive for r in reports],
            js_positive=[r.js_positive for r in reports],
            span_member=[r.span_member for r in reports],
        )


class SearchResult(BaseModel):
    """
    Family elements that preserve the Dadarlat-Loring order but lie outside the non-negative span.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: DimensionDropAlgebra
    target: DimensionDropAlgebra
    p: int
    x_max: int
    include_torsion: bool
    equality_mode: EqualityMode = Field(alias="mode")
    reports: list[LiftReport] = Field(description="Sorted by (x, d).")

    def to_table(self) -> SearchTable:
        return SearchTable.from_reports(self.reports)
