"""Shared exception types."""

from __future__ import annotations


class ValidationError(ValueError):
    """Raised when an input value violates a documented precondition.

    Carries an optional ``field`` path so callers (CLI, HTTP service) can
    report structured errors without echoing the offending value.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field

    def to_record(self) -> dict:
        record: dict = {"code": "validation", "message": str(self)}
        if self.field is not None:
            record["field"] = self.field
        return record
