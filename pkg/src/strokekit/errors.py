"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: data-layer errors exit 3, model and
persistence errors exit 4 (usage errors exit 2 via argparse).
"""


class StrokekitError(Exception):
    """Base class for all toolkit errors."""


# --- data layer ---------------------------------------------------------


class DataError(StrokekitError):
    """Base class for ingestion, cleaning, encoding, and splitting errors."""


class MalformedRowError(DataError):
    def __init__(self, row: int, detail: str):
        self.row = row
        super().__init__(f"row {row}: {detail}")


class UnknownColumnError(DataError):
    pass


class CellTypeError(DataError):
    def __init__(self, row: int, column: str, detail: str):
        self.row = row
        self.column = column
        super().__init__(f"row {row}, column {column!r}: {detail}")


class EmptyCleanError(DataError):
    pass


class UnseenCategoryError(DataError):
    def __init__(self, row: int, column: str, value: str):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"row {row}, column {column!r}: unseen category {value!r}")


class DegenerateSplitError(DataError):
    pass


class LengthMismatchError(DataError):
    pass


class BandDomainError(DataError):
    pass


# --- models -------------------------------------------------------------


class ModelError(StrokekitError):
    """Base class for training and prediction errors."""


class WidthMismatchError(ModelError):
    pass


class TaskMismatchError(ModelError):
    pass


class LossDomainError(ModelError):
    pass


class SingularLeafError(ModelError):
    pass


class AllZeroScoresError(ModelError):
    pass


class DegenerateFoldError(ModelError):
    pass


class MemberFailureError(ModelError):
    def __init__(self, index: int, cause: Exception):
        self.index = index
        self.cause = cause
        super().__init__(f"ensemble member {index} failed: {cause}")


class NonFiniteError(ModelError):
    pass


class BadKError(ModelError):
    pass


# --- persistence --------------------------------------------------------


class StoreError(StrokekitError):
    """Base class for model document errors."""


class SchemaViolationError(StoreError):
    pass


class VersionMismatchError(StoreError):
    def __init__(self, found, supported: int):
        self.found = found
        self.supported = supported
        super().__init__(
            f"unsupported model document format-version {found!r}; "
            f"this build reads version {supported}"
        )
