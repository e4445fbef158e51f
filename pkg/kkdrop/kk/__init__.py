from .actions import (
    basic_element,
    default_modulus,
    gamma,
    k1_generator,
    kk_add,
    kk_canonical,
    kk_equal,
    kk_group_info,
    kk_order,
    kk_scale,
    kk_zero,
    torsion_generator,
)
from .schemas import KKCanonicalForm, KKElement, KKGroupInfo
