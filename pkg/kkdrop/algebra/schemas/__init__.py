from .algebra import DimensionDropAlgebra
from .homomorphism import BasicHom, HomKind
from .khomology import KHomologyClass
