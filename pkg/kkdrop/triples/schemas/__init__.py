from .triple import (
    InducedTriple,
    KTriple,
    Matrix,
    TripleDecomposition,
    TripleReport,
    TripleValidation,
)
