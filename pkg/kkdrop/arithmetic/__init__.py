from .actions import (
    bezout_canonical,
    canonical_residue,
    divides,
    gcd,
    lcm,
)
from .schemas import BezoutPair
