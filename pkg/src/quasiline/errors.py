"""Exception hierarchy.

Errors are split by who is at fault: the caller (bad input), the
implementation (a structural guarantee that should always hold was
violated), or the machine (a configured search limit was hit).  The CLI
maps these onto distinct exit codes, and tests rely on the distinction
between "no solution exists" and "gave up searching".
"""


class QuasilineError(Exception):
    """Base class for all library errors."""


class InputError(QuasilineError):
    """The caller supplied invalid data (bad graph, bad spec, bad file)."""


class ParseError(InputError):
    """A text input could not be parsed.  Carries a 1-based line number."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class CompositionError(InputError):
    """A strip composition violates its structural invariants."""


class SpecError(InputError):
    """A strip-colouring spec is infeasible on its face (negative clique size)."""


class ContractViolationError(QuasilineError):
    """A guarantee that holds for every valid input failed.  Always a bug."""


class StructuralError(InputError):
    """The input lacks a structural property the stage requires (e.g. the
    rounding budget check failed because the composition is not robust)."""


class ResourceLimitError(QuasilineError):
    """An exact search exceeded its configured node limit.  Distinct from
    infeasibility: the search was abandoned, not exhausted."""


class DecompositionRequiredError(InputError):
    """The graph is robust but neither a recognizable circular interval
    graph nor decomposable by the limited detector; supply a composition."""
