"""Rupiah amounts.

Money is a plain non-negative int (whole rupiah, no subunit), so document
arithmetic is exact. Only rendering lives here: thousands grouped with
``.`` -- ``755000`` renders ``755.000``; callers add the ``Rp. `` prefix
where a layout wants it.
"""

from __future__ import annotations

from .errors import ValidationError


def check_amount(amount: int, *, what: str = "amount") -> int:
    """Validate an integer rupiah amount (>= 0); returns it unchanged."""
    if isinstance(amount, bool) or not isinstance(amount, int):
        raise ValidationError(f"{what} must be an integer rupiah amount", detail=what)
    if amount < 0:
        raise ValidationError(f"{what} must be >= 0, got {amount}", detail=what)
    return amount


def format_rupiah(amount: int) -> str:
    """Render an amount with ``.`` thousand separators: 50000 -> ``50.000``."""
    check_amount(amount)
    return f"{amount:,}".replace(",", ".")


def parse_rupiah(text: str) -> int:
    """Inverse of format_rupiah (separators stripped)."""
    cleaned = text.strip().replace(".", "")
    if not cleaned.isdigit():
        raise ValidationError(f"not a rupiah amount: {text!r}", detail=text)
    return int(cleaned)
