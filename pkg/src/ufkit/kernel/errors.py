"""Kernel diagnostics.  Every rejection is a subclass of :class:`KernelError`."""


class KernelError(Exception):
    kind = "KernelError"

    def __init__(self, message: str = "", **detail):
        super().__init__(message)
        self.detail = detail

    def as_dict(self):
        d = {"error": self.kind, "message": str(self)}
        for k, v in self.detail.items():
            d[k] = v if isinstance(v, (str, int, float, bool, type(None))) else str(v)
        return d


class IllFormedType(KernelError):
    kind = "IllFormedType"


class DuplicateVariable(KernelError):
    kind = "DuplicateVariable"


class NotAType(KernelError):
    kind = "NotAType"


class NotATerm(KernelError):
    kind = "NotATerm"


class CannotInfer(KernelError):
    kind = "CannotInfer"


class TypeMismatch(KernelError):
    kind = "TypeMismatch"


class MissingFlag(KernelError):
    kind = "MissingFlag"


class UnboundVariable(KernelError):
    kind = "UnboundVariable"


class BadArity(KernelError):
    kind = "BadArity"


class FuelExhausted(KernelError):
    kind = "FuelExhausted"


class StuckTerm(KernelError):
    """Evaluation met an eliminator applied to a non-matching canonical form."""

    kind = "StuckTerm"
