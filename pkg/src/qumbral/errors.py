"""Exception hierarchy shared by every module."""


class QUmbralError(Exception):
    """Base class for all library errors (math-domain failures)."""


class NotAdmissible(QUmbralError):
    pass


class OutOfRange(QUmbralError):
    pass


class InvalidBasis(QUmbralError):
    pass


class CapMismatch(QUmbralError):
    pass


class DegreeOverflow(QUmbralError):
    pass


class OrderOverflow(QUmbralError):
    pass


class NotDegreeLowering(QUmbralError):
    pass


class Unsolvable(QUmbralError):
    pass


class SingularParameter(QUmbralError):
    pass


class ParseError(QUmbralError):
    """Raised by the expression parser; ``offset`` is the byte offset of the problem."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"at offset {offset}: {message}")
        self.offset = offset
        self.message = message
