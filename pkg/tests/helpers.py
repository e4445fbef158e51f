from math import gcd
from kkdrop.algebra import DimensionDropAlgebra


def valid_algebras(max_m: int, min_m0: int = 1) -> list[DimensionDropAlgebra]:
    """All I[m0,m,m1] with coprime endpoints and m0·m1 | m <= max_m."""
    return [
        DimensionDropAlgebra(m0=m0, m=m, m1=m1)
        for m in range(1, max_m + 1)
        for m0 in range(min_m0, m + 1)
        for m1 in range(1, m + 1)
        if gcd(m0, m1) == 1 and m % (m0 * m1) == 0
    ]
