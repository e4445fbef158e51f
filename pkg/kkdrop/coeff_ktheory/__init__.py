from .actions import (
    bockstein_mu,
    bockstein_nu,
    combine,
    cone_decompose,
    cone_generators,
    cone_report,
    in_zmp,
    is_positive,
    ktheory_report,
    require_multiple,
    scalar_class,
    verify_bockstein_exactness,
    z_generators,
    zmp_members,
)
from .schemas import (
    ConeDecomposition,
    ExactnessReport,
    GpElement,
    KTheoryReport,
    NuValue,
    SegmentCheck,
)
