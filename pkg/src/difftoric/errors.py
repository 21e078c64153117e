"""Shared exception types mapped to CLI exit codes."""


class InputError(ValueError):
    """Malformed or schema-violating input (exit code 2)."""


class PreconditionError(ValueError):
    """A documented operation precondition was violated (exit code 3)."""


class ResourceExhausted(RuntimeError):
    """A configured resource bound was exceeded (exit code 4)."""
