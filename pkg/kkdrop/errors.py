from typing import Any


class NotCoprime(ValueError):
    """The endpoint drops m0 and m1 share a common factor."""


class BadModulus(ValueError):
    """A modulus below 2 was supplied."""


class InvalidAlgebra(ValueError):
    """The algebra does not satisfy the requirements of the operation."""


class AlgebraMismatch(ValueError):
    """Two objects refer to different algebras."""


class NotInGroup(ValueError):
    """A residue pair violates the defining congruence of Z(m,p)."""


class ModulusNotMultiple(ValueError):
    """The modulus is not a multiple of a required matrix size."""


class NotPositive(ValueError):
    """The element lies outside the positive cone."""


class NotDecomposable(ValueError):
    """Residues are not divisible by the endpoint drops."""


class NotTorsionForm(ValueError):
    """The triple does not match any torsion parameter."""


class BadMultiplicity(ValueError):
    """A multiplicity is outside its admissible set."""


class Mismatch(ValueError):
    """Operands are not defined over the same algebras and modulus."""


class NoSolution(ValueError):
    """A congruence has no solution in the searched range."""


class BadTorsionIndex(ValueError):
    """A torsion index d lies outside [0, m/(m0·m1))."""


class InconsistencyError(RuntimeError):
    """
    A runtime cross-check between independent computations failed.

    note: `witness` holds the data that exhibits the failure.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness
