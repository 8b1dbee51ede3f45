"""Date rendering for reports (Indonesian month names) and wire parsing."""

from __future__ import annotations

import datetime as dt

from .errors import ValidationError

MONTH_NAMES_ID = [
    "Januari", "Februari", "Maret", "April", "Mei", "Juni",
    "Juli", "Agustus", "September", "Oktober", "November", "Desember",
]


def format_date_id(d: dt.date) -> str:
    """Report row date: ``05-Agustus-2008``."""
    return f"{d.day:02d}-{MONTH_NAMES_ID[d.month - 1]}-{d.year:04d}"


def format_date_slash(d: dt.date) -> str:
    """Report footer date: ``05/08/2008``."""
    return f"{d.day:02d}/{d.month:02d}/{d.year:04d}"


def parse_iso_date(text: str) -> dt.date:
    """Parse a wire-format ``YYYY-MM-DD`` date."""
    try:
        return dt.date.fromisoformat(text)
    except (TypeError, ValueError):
        raise ValidationError(f"not a valid date: {text!r}", detail=str(text)) from None
