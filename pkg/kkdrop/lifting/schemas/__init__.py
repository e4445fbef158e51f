from .family import FamilyElement
from .report import Agreement, ClosedFormCheck, LiftReport, PositivityCheck
from .search import SearchResult, SearchTable
from .audit import AuditReport, AuditRow, AuditTable, Claim
from .io import LiftInput, SearchInput
