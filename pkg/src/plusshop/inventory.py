"""Stock control.

The guard rule every consumer goes through: duplicate lines are summed per
item first, then the whole line set is checked against on-hand levels, and
only if every line passes is anything applied. A failed consume therefore
never touches any item, and on-hand can never go negative.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import InsufficientStock, UnknownItem, ValidationError
from .state import ShopState


def merge_lines(lines: Iterable[tuple[str, int]]) -> dict[str, int]:
    """Sum duplicate item codes, preserving first-seen order."""
    merged: dict[str, int] = {}
    for item_code, qty in lines:
        if qty < 1:
            raise ValidationError(f"qty must be >= 1, got {qty}", detail=item_code)
        merged[item_code] = merged.get(item_code, 0) + qty
    return merged


def check_consume(levels: Mapping[str, int], lines: Iterable[tuple[str, int]]) -> dict[str, int]:
    """Guard a consumption against levels; returns the merged demand.

    Raises UNKNOWN_ITEM / INSUFFICIENT_STOCK without any side effect.
    """
    merged = merge_lines(lines)
    for item_code, qty in merged.items():
        if item_code not in levels:
            raise UnknownItem(f"unknown item {item_code}", detail=item_code)
        if levels[item_code] < qty:
            raise InsufficientStock(
                f"insufficient stock for {item_code}: have {levels[item_code]}, need {qty}",
                detail=item_code,
            )
    return merged


def consume_stock(levels: Mapping[str, int], lines: Iterable[tuple[str, int]]) -> dict[str, int]:
    """Updated levels after an atomic consumption (pure; input unchanged)."""
    merged = check_consume(levels, lines)
    updated = dict(levels)
    for item_code, qty in merged.items():
        updated[item_code] -= qty
    return updated


def receive_stock(levels: Mapping[str, int], item_code: str, qty: int) -> dict[str, int]:
    """Updated levels after receiving ``qty`` of one item (pure)."""
    if qty < 1:
        raise ValidationError(f"qty must be >= 1, got {qty}", detail=item_code)
    if item_code not in levels:
        raise UnknownItem(f"unknown item {item_code}", detail=item_code)
    updated = dict(levels)
    updated[item_code] += qty
    return updated


def stock_available(state: ShopState, item_code: str, qty: int) -> bool:
    """True iff on-hand covers ``qty``. Read-only."""
    if qty < 1:
        raise ValidationError(f"qty must be >= 1, got {qty}", detail=item_code)
    item = state.items.get(item_code)
    if item is None:
        raise UnknownItem(f"unknown item {item_code}", detail=item_code)
    return item.stock_qty >= qty


def stock_level(state: ShopState, item_code: str) -> int:
    item = state.items.get(item_code)
    if item is None:
        raise UnknownItem(f"unknown item {item_code}", detail=item_code)
    return item.stock_qty
