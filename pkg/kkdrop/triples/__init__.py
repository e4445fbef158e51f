from .actions import (
    apply_phi,
    build_triple,
    build_x_triple,
    build_y_triple,
    decompose_triple,
    equality_signature,
    induced_triple,
    recombine,
    signature_moduli,
    torsion_census,
    torsion_matrix,
    torsion_param,
    torsion_triple,
    triple_add,
    triple_scale,
    triple_report,
    triples_equal,
    validate_triple,
    zero_triple,
)
from .schemas import (
    InducedTriple,
    KTriple,
    Matrix,
    TripleDecomposition,
    TripleReport,
    TripleValidation,
)
