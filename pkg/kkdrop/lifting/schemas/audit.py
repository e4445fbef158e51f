from pydantic import BaseModel, ConfigDict, Field
from kkdrop.algebra.schemas import DimensionDropAlgebra
from kkdrop.arithmetic.schemas import BezoutPair
from kkdrop.schemas import Table
from .report import Witness


class AuditRow(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x: int
    coeffs: tuple[int, int] = Field(description="Coefficients of δ0 and δ1 at d = 0.")
    dl_closed_form: bool
    dl_positive: bool
    js_liftable: bool
    span_witness_map: Witness | None
    span_witness_strict: Witness | None


class Claim(BaseModel):
    """
    A statement of the source text next to the values computed for it.

    note: No verdict is attached.
    """

    model_config = ConfigDict(extra="forbid")

    quote: str = Field(description="Verbatim fragment of the claim.")
    statement: str
    computed: str


class AuditTable(Table):
    x: list[int]
    dl_closed_form: list[bool]
    dl_positive: list[bool]
    js_liftable: list[bool]
    span_member_map: list[bool]
    span_member_strict: list[bool]


class AuditReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    algebra: DimensionDropAlgebra = Field(description="Source and target of the scenario.")
    p: int
    bezout: BezoutPair
    rows: list[AuditRow]
    claims: list[Claim]

    def to_table(self) -> AuditTable:
        return AuditTable(
            x=[r.x for r in self.rows],
            dl_closed_form=[r.dl_closed_form for r in self.rows],
            dl_positive=[r.dl_positive for r in self.rows],
            js_liftable=[r.js_liftable for r in self.rows],
            span_member_map=[r.span_witness_map is not None for r in self.rows],
            span_member_strict=[r.span_witness_strict is not None for r in self.rows],
        )
