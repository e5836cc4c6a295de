"""Exception hierarchy shared by every module of the package."""


class ZlpdError(Exception):
    """Base class for all errors raised by zlpdlab."""


class DivisionByZero(ZlpdError, ZeroDivisionError):
    pass


class FieldMismatch(ZlpdError, TypeError):
    pass


class ParseError(ZlpdError, ValueError):
    pass


class DimensionMismatch(ZlpdError, ValueError):
    pass


class AssociativityError(ZlpdError, ValueError):
    """Structure constants fail associativity (or the unit axioms).

    ``triple`` holds the offending basis indices.
    """

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class BimoduleError(ZlpdError, ValueError):
    pass


class BadName(ZlpdError, ValueError):
    pass


class BadParams(ZlpdError, ValueError):
    pass


class MissingUnit(ZlpdError, ValueError):
    pass


class UnsupportedCharacteristic(ZlpdError, ValueError):
    pass


class CharacteristicTwo(ZlpdError, ValueError):
    pass


class BudgetExceeded(ZlpdError, RuntimeError):
    pass


class NotCertifiedSimple(ZlpdError, ValueError):
    pass


class NotJordan(ZlpdError, ValueError):
    pass


class HypothesesNotMet(ZlpdError, ValueError):
    pass


class BlockUnclassifiable(ZlpdError, ValueError):
    def __init__(self, message, index):
        super().__init__(message)
        self.index = index
