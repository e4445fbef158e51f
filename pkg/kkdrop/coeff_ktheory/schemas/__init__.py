from .element import GpElement
from .report import (
    ConeDecomposition,
    ExactnessReport,
    KTheoryReport,
    NuValue,
    SegmentCheck,
)
