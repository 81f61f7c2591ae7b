from django.core.exceptions import BadRequest


# ---------- SPECIAL FUNCTIONS ----------


class PoleAtNonpositiveInteger(RuntimeError):
    def __init__(self, n: int, *args):
        self.n = n
        super().__init__(f"Gamma pole at z = {-n}", *args)

class IndeterminateRatio(RuntimeError):
    pass

class IllDefinedC(RuntimeError):
    pass

class ConnectionDegenerate(RuntimeError):
    pass

class IllDefinedOrder(RuntimeError):
    def __init__(self, two_nu, *args):
        self.two_nu = two_nu
        super().__init__(f"2nu = {two_nu} is a negative integer", *args)


# ---------- ANALYTIC MODELS ----------


class PoleHit(RuntimeError):
    pass

class BranchPointAtZeroK(RuntimeError):
    pass


# ---------- FROBENIUS ----------


class Breakdown(RuntimeError):
    def __init__(self, m: int, residual, *args):
        self.m = m
        self.residual = residual
        super().__init__(
            f"Recursion breaks down at order {m} (residual {residual})", *args)

class NoRootInWindow(RuntimeError):
    pass


# ---------- SOLVER ----------


class StiffnessFailure(RuntimeError):
    pass

class OriginSingularityTooStrong(RuntimeError):
    pass

class TailNotReached(RuntimeError):
    pass

class WronskianDrift(RuntimeError):
    def __init__(self, drift: float, *args):
        self.drift = drift
        super().__init__(f"Jost functions drift by {drift:.3e} between matching points", *args)


# ---------- LOCATOR ----------


class NoConvergence(RuntimeError):
    pass

class DegenerateDoubleZero(RuntimeError):
    pass

class FitDegenerate(RuntimeError):
    def __init__(self, residual: float, *args):
        self.residual = residual
        super().__init__(f"Mobius fit degenerate (residual {residual:.3e})", *args)

class AmbiguousWinding(RuntimeError):
    pass

class SymmetryViolation(RuntimeError):
    pass


# ---------- HOLOGRAPHY ----------


class HorizonDegeneracy(RuntimeError):
    pass

class NonPositiveMatsubaraIndex(BadRequest):
    pass


# ---------- CONFIGURATION ----------


class WrongModelSpecException(BadRequest):
    pass
