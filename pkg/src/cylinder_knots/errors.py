"""Exception hierarchy shared by all modules."""


class CylinderKnotError(Exception):
    """Base class; the CLI maps these to exit code 1."""

    kind = "error"

    def to_json(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class ParameterError(CylinderKnotError, ValueError):
    kind = "parameter"


class SingularPhaseError(CylinderKnotError):
    kind = "singular_phase"


class PrecisionError(CylinderKnotError):
    kind = "precision_exhausted"


class InternalContradiction(CylinderKnotError):
    """A certified computation contradicted a proven statement: an implementation bug."""

    kind = "internal_contradiction"


class BraidStructureError(CylinderKnotError):
    kind = "braid_structure"


class RunStructureViolation(CylinderKnotError):
    kind = "run_structure"

    def __init__(self, message, generator=None, index=None):
        super().__init__(message)
        self.generator = generator
        self.index = index


class MultiComponentError(CylinderKnotError):
    kind = "multi_component"


class PeriodicityError(CylinderKnotError):
    kind = "periodicity"


class BraidParseError(CylinderKnotError, ValueError):
    kind = "parse"
