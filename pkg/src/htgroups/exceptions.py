"""
Error types raised by the Higman-Thompson toolkit
"""


class HigmanThompsonError(Exception):
    """Base class; `code` is the stable machine-readable reason"""

    code = "HigmanThompsonError"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __init_subclass__(cls, **kwargs: object) -> None:
        super().__init_subclass__(**kwargs)
        cls.code = cls.__name__


class InvalidWord(HigmanThompsonError):
    """Malformed digit string or letter outside the alphabet"""


class NotAMember(HigmanThompsonError):
    """Word is not a member of the prefix code"""


class NotMaximalBinaryCode(HigmanThompsonError):
    """Code is not a finite maximal prefix code over {a_0, a_1}"""


class NotInDomainCode(HigmanThompsonError):
    """Word is not in the domain code of the table"""


class AlphabetMismatch(HigmanThompsonError):
    """Operands live over different (or unsupported) alphabets"""


class ImpossibleCodeSize(HigmanThompsonError):
    """No maximal prefix code of the requested size exists over the alphabet"""


class InvalidQuery(HigmanThompsonError):
    """Successor query violates its preconditions"""


class InvalidTable(HigmanThompsonError):
    """Table fails one of the table invariants"""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


class ElementParseError(HigmanThompsonError):
    """Element file could not be parsed"""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class NotMaximalCode(HigmanThompsonError):
    """Words do not form a finite maximal prefix code over the alphabet"""
