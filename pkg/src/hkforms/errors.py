"""Exception hierarchy shared by all modules."""


class HkError(Exception):
    pass


class InputError(HkError):
    """Bad user input: dimension mismatch, malformed rationals, invalid config."""


class SchemaError(InputError):
    """A serialized form/operator file violates the documented JSON schema."""


class InvariantViolation(HkError):
    """A construction-time invariant failed (wrong matrix convention etc.)."""


class TheoryViolation(HkError):
    """A result forbidden by the representation theory; signals a bug."""
