from .actions import (
    basic_homs,
    check_valid,
    idbar_multiplicities,
    k1_order,
    khomology_equal,
    khomology_positive,
    khomology_reduce,
)
from .schemas import BasicHom, DimensionDropAlgebra, HomKind, KHomologyClass
