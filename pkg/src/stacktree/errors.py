from __future__ import annotations


class StackTreeError(Exception):
    """Base class for every error raised by this package."""


class TreeSyntaxError(StackTreeError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ConfigError(StackTreeError):
    def __init__(self, message: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line


class LayoutError(StackTreeError):
    """Raised by the layout machine.

    ``index`` is the position of the offending command when the error comes
    out of :func:`stacktree.layout.run_program`.
    """

    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.index = index

    def at(self, index: int) -> LayoutError:
        self.index = index
        return self

    def __str__(self) -> str:
        name = type(self).__name__
        if self.index is None:
            return f"{name}: {self.message}"
        return f"{name} at command {self.index}: {self.message}"


class DepthExceeded(LayoutError):
    pass


class Underflow(LayoutError):
    pass


class EmptyStack(Underflow):
    pass


class ArityUnsupported(LayoutError):
    pass


class ArityZero(LayoutError):
    pass


class ResidualStack(LayoutError):
    pass


class RenderError(StackTreeError):
    pass


class UnrepresentableSlope(RenderError):
    pass
