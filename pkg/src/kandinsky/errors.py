"""Exception types raised across the toolkit."""


class KandinskyError(Exception):
    """Base class for every domain error raised by this package."""


class PlacementBudgetExhausted(KandinskyError):
    """Rejection placement gave up; the universe is over-constrained."""


class BudgetExhausted(KandinskyError):
    """Rejection sampling against a statement gave up.

    ``split`` names the dataset split (or counterfactual side) that failed,
    when known.
    """

    def __init__(self, message, split=None):
        super().__init__(message)
        self.split = split


class UniverseMismatch(KandinskyError):
    """A figure lies outside the universe of the pattern it was checked against."""


class MissingGroundTruth(KandinskyError):
    """A universe-only pattern was used where a ground truth is required."""


class DslError(KandinskyError):
    pass


class DslSyntaxError(DslError):
    def __init__(self, line, column, expected, found=None):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        got = f", found {found!r}" if found is not None else ""
        super().__init__(f"line {line}, column {column}: expected {expected}{got}")


class UnknownPredicate(DslError):
    def __init__(self, name, line=None, column=None, note=""):
        self.name = name
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"unknown predicate {name!r}{where}{note}")


class ArityError(DslError):
    def __init__(self, name, expected, line=None, column=None):
        self.name = name
        self.expected = expected
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{name} takes {expected} argument(s){where}")


class SchemaError(KandinskyError):
    def __init__(self, path, detail):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")


class DatasetIOError(KandinskyError):
    """Reading or writing a dataset tree failed."""


class ManifestMissing(DatasetIOError):
    pass
