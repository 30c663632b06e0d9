"""A namespace for exception handling."""

from typing import Sequence


class DynkinForgeException(Exception):
    """Base exception class for the dynkin-forge module."""


class DynkinForgeWarning(Warning):
    """Base warning class for the dynkin-forge module."""


class DataLineUnreadable(DynkinForgeException):
    """A line in the data isn't well-formed."""

    def __init__(self, offending_line: str, additional_context):
        """Raise exception citing line and issue."""
        super().__init__(
            (f"The line '{offending_line}' could not"
             f" be parsed because {additional_context}"))


class DataFileMissingOrUnreadable(DynkinForgeException):
    """Exception for missing or unreadable data file."""

    def __init__(self, short_name: str):
        """Raise exception with name of offending file."""
        super().__init__(
            f"Data file {short_name} missing or cannot be read."
        )


class DiagramNameNotFound(DynkinForgeException):
    """Could not find a Lie type of the given name."""

    def __init__(self, needle: str):
        """Raise exception announcing problem name."""
        super().__init__(f"No Dynkin diagram with name '{needle}' was found.")


class DiagramNameEmpty(DynkinForgeException):
    """No diagram can have an empty or null name."""

    def __init__(self):
        """Raise exception announcing empty name."""
        super().__init__("The search string is not allowed"
                         " to be empty or null.")


class InvalidCartanMatrix(DynkinForgeException):
    """The entries do not form a generalized Cartan matrix."""

    def __init__(self, reason: str):
        """Raise exception citing the broken condition."""
        super().__init__(f"Not a Cartan matrix: {reason}.")


class NotFiniteType(DynkinForgeException):
    """Some principal minor of the Cartan matrix is not positive."""

    def __init__(self, entries: Sequence[Sequence[int]]):
        """Raise exception quoting the matrix."""
        rows = ", ".join(str(list(row)) for row in entries)
        super().__init__(f"Cartan matrix [{rows}] is not of finite type.")


class ShapeError(DynkinForgeException):
    """Arguments have incompatible sizes or live over different objects."""

    def __init__(self, message: str):
        """Raise exception with the mismatch described."""
        super().__init__(message)


class NodeIndexError(DynkinForgeException, IndexError):
    """A node index outside the diagram."""

    def __init__(self, node: int, rank: int):
        """Raise exception naming the node and the valid range."""
        super().__init__(
            f"Node {node} is not in the range 1..{rank} of the diagram.")


class DivisibilityError(DynkinForgeException):
    """A modulus that does not divide the order of the gradation."""

    def __init__(self, modulus: int, order: int):
        """Raise exception naming both numbers."""
        super().__init__(
            f"{modulus} does not divide the order {order} of the gradation.")


class Unsupported(DynkinForgeException):
    """The construction is not defined for this input."""

    def __init__(self, message: str):
        """Raise exception explaining what is not supported."""
        super().__init__(message)


class EmptyLevel(DynkinForgeException):
    """The requested graded piece has no roots."""

    def __init__(self, level: int):
        """Raise exception naming the level."""
        super().__init__(f"Level {level} of the gradation is empty.")


class DomainError(DynkinForgeException):
    """An argument lies outside the domain of the operation."""

    def __init__(self, message: str):
        """Raise exception explaining the domain condition."""
        super().__init__(message)


class CycleError(DynkinForgeException):
    """The new node would attach to one component at two nodes."""

    def __init__(self, component: str, nodes: Sequence[int]):
        """Raise exception naming the component and the nodes."""
        super().__init__(
            f"The weight pairs nonzero with nodes {list(nodes)} of"
            f" component {component}; the augmented diagram has a cycle.")


class NuPatternError(DynkinForgeException):
    """Connecting multiplicities disagree with the weight's support."""

    def __init__(self, component: str, multiplicity: int):
        """Raise exception naming the offending component."""
        super().__init__(
            f"Multiplicity {multiplicity} for component {component} does not"
            " match the weight (zero exactly when the weight vanishes there).")


class ValidationFailed(DynkinForgeException):
    """The augmented matrix is not a finite type Cartan matrix."""

    def __init__(self, failed_checks: Sequence[str]):
        """Raise exception listing the failed checks."""
        super().__init__(
            f"Augmented matrix failed: {', '.join(failed_checks)}.")


class RegularityFailed(DynkinForgeException):
    """No Y in level -1 brackets with the chosen X to the grading element."""

    def __init__(self, diagram: str, node: int):
        """Raise exception naming the gradation."""
        super().__init__(
            f"The gradation of {diagram} at node {node} is not regular:"
            " [X, Y] = c has no solution.")


class Degenerate(DynkinForgeException):
    """The binary form of a pair of 2-forms vanishes identically."""

    def __init__(self):
        """Raise exception announcing a zero binary form."""
        super().__init__("The binary form is identically zero.")


class NotSplit(DynkinForgeException):
    """The binary form does not split into rational linear factors."""

    def __init__(self, factor: str):
        """Raise exception quoting the irreducible factor."""
        super().__init__(
            f"The factor {factor} has no rational roots.")
