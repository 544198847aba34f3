"""Exception types shared across the package.

Everything deriving from OnHoldError is an expected failure caused by user
input or data (the CLI maps these to exit code 2). Anything else escaping a
command is an internal bug (exit code 1).
"""


class OnHoldError(Exception):
    """Base class for expected, user-facing failures."""


class MalformedRow(OnHoldError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"malformed row at line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class UnknownLabel(OnHoldError):
    def __init__(self, value: str, line_no: int | None = None):
        where = f" at line {line_no}" if line_no is not None else ""
        super().__init__(f"unknown label {value!r}{where}")
        self.value = value
        self.line_no = line_no


class DuplicateId(OnHoldError):
    def __init__(self, comment_id: str):
        super().__init__(f"duplicate comment id {comment_id!r}")
        self.comment_id = comment_id


class IoError(OnHoldError):
    def __init__(self, path: str, reason: str = ""):
        detail = f": {reason}" if reason else ""
        super().__init__(f"cannot read {path}{detail}")
        self.path = path


class EmptyCorpus(OnHoldError):
    def __init__(self):
        super().__init__("corpus contains no comments")


class DegenerateTraining(OnHoldError):
    def __init__(self, reason: str = "training data contains a single class"):
        super().__init__(reason)


class NonFiniteLoss(OnHoldError):
    def __init__(self, epoch: int):
        super().__init__(
            f"training loss became non-finite at epoch {epoch}; "
            "lower the learning rate"
        )
        self.epoch = epoch


class SingleClass(OnHoldError):
    def __init__(self, reason: str = "both classes are required"):
        super().__init__(reason)


class TooFewInstances(OnHoldError):
    def __init__(self, reason: str):
        super().__init__(reason)


class TooFewProjects(OnHoldError):
    def __init__(self, reason: str):
        super().__init__(reason)


class ModelVersionError(OnHoldError):
    def __init__(self, found: str):
        super().__init__(f"unsupported model file version: {found!r}")
        self.found = found
