from .actions import (
    dl_closed_form,
    dl_positive,
    family_element,
    js_action,
    js_liftable,
    lift_report,
    relation_rewrite,
    span_member,
)
from .audit import audit_claims
from .search import search_counterexamples
from .schemas import (
    Agreement,
    AuditReport,
    AuditRow,
    AuditTable,
    Claim,
    ClosedFormCheck,
    FamilyElement,
    LiftInput,
    LiftReport,
    PositivityCheck,
    SearchInput,
    SearchResult,
    SearchTable,
)
