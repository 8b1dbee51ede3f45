"""Error hierarchy shared by all modules.

Every error carries a stable machine ``code`` (mirrored by the HTTP API and
the CLI exit diagnostics) and an optional ``detail`` naming the offending
field, item or document.
"""

from __future__ import annotations


class ShopError(Exception):
    """Base class for all domain and storage errors."""

    code = "SHOP_ERROR"

    def __init__(self, message: str, *, detail: str | None = None):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def with_row(self, row: int) -> "ShopError":
        """Copy of this error annotated with an import file row number."""
        err = type(self)(f"row {row}: {self.message}", detail=self.detail)
        err.row = row
        return err


# --- domain-core ---

class MalformedCode(ShopError):
    code = "MALFORMED_CODE"


class SequenceExhausted(ShopError):
    code = "SEQUENCE_EXHAUSTED"


# --- guards shared by inventory / trade / service-desk ---

class UnknownItem(ShopError):
    code = "UNKNOWN_ITEM"


class UnknownParty(ShopError):
    code = "UNKNOWN_PARTY"


class UnknownService(ShopError):
    code = "UNKNOWN_SERVICE"


class InsufficientStock(ShopError):
    code = "INSUFFICIENT_STOCK"


class InvalidState(ShopError):
    """State-machine guard failure; ``current_state`` names the state the
    order was actually in."""

    code = "INVALID_STATE"

    def __init__(self, message: str, *, current_state: str, detail: str | None = None):
        super().__init__(message, detail=detail or current_state)
        self.current_state = current_state

    def with_row(self, row: int) -> "InvalidState":
        err = InvalidState(
            f"row {row}: {self.message}",
            current_state=self.current_state,
            detail=self.detail,
        )
        err.row = row
        return err


class EmptyDocument(ShopError):
    code = "EMPTY_DOCUMENT"


class EmptyField(ShopError):
    code = "EMPTY_FIELD"


class ValidationError(ShopError):
    """Generic precondition violation (non-positive quantity, negative price...)."""

    code = "VALIDATION_ERROR"


class InvalidRange(ShopError):
    code = "INVALID_RANGE"


# --- ledger-store ---

class CorruptJournal(ShopError):
    code = "CORRUPT_JOURNAL"


class StorageFailure(ShopError):
    code = "STORAGE_FAILURE"


class ImportParseError(ShopError):
    code = "IMPORT_PARSE_ERROR"

    def __init__(self, message: str, *, row: int | None = None, detail: str | None = None):
        super().__init__(message, detail=detail)
        self.row = row
