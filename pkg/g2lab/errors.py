from typing import Any, List, Optional


class G2LabError(Exception):
    pass


# scalars

class TowerMismatch(G2LabError, ValueError):
    pass


class TowerDepthExceeded(G2LabError, ValueError):
    pass


class ZeroDivisorDetected(G2LabError, ArithmeticError):
    """A sqrt level of the tower is not a field: ``witness`` is a nonzero element of norm zero."""
    def __init__(self, tower: Any, level: int, witness: Any) -> None:
        super().__init__(f'zero divisor at level {level} of {tower!r}')
        self.tower = tower
        self.level = level
        self.witness = witness


class IncompleteSplit(G2LabError, ArithmeticError):
    def __init__(self, roots: List[Any], cofactor: Any, message: str = 'polynomial does not split') -> None:
        super().__init__(message)
        self.roots = roots
        self.cofactor = cofactor


class NonSquareMatrix(G2LabError, ValueError):
    pass


# quadratic spaces

class NotSimilitude(G2LabError, ValueError):
    pass


class IsotropicVector(G2LabError, ValueError):
    pass


class NotProperIsometry(G2LabError, ValueError):
    pass


# clifford and octonions

class AlgebraMismatch(G2LabError, ValueError):
    pass


class NotInvertible(G2LabError, ArithmeticError):
    pass


class NotHomogeneous(G2LabError, ValueError):
    pass


class DoesNotNormalizeV(G2LabError, ValueError):
    pass


class NotScalar(G2LabError, ValueError):
    pass


class NotEvenOrNotCliffordGroup(G2LabError, ValueError):
    pass


class NotAutomorphism(G2LabError, ValueError):
    pass


# groups

class OrderCapExceeded(G2LabError, RuntimeError):
    pass


class NotAHomomorphism(G2LabError, ValueError):
    pass


class ExponentNotDividingConductor(G2LabError, ValueError):
    pass


class SplitFailed(G2LabError, ArithmeticError):
    pass


class NonIntegerMultiplicity(G2LabError, ArithmeticError):
    pass


class WitnessUnavailable(G2LabError, ArithmeticError):
    pass


# decision procedures

class NotMonicDegree7(G2LabError, ValueError):
    pass


class EquivalenceViolation(G2LabError, AssertionError):
    def __init__(self, message: str, evidence: Optional[dict] = None) -> None:
        super().__init__(message)
        self.evidence = evidence or {}


class TheoremViolation(G2LabError, AssertionError):
    def __init__(self, message: str, evidence: Optional[dict] = None) -> None:
        super().__init__(message)
        self.evidence = evidence or {}


# gallery

class ConductorTooSmall(G2LabError, ValueError):
    pass


class ConstructionVerificationFailed(G2LabError, AssertionError):
    pass


class SimilitudeFactorNotPlusMinusOne(G2LabError, ValueError):
    pass


class SearchExhausted(G2LabError, RuntimeError):
    pass


# io

class SchemaError(G2LabError, ValueError):
    pass
