"""Trade documents: purchases from suppliers and sales to customers.

A document code is only issued when the whole document validates, so the
visible numbering stays gap-free: a rejected sale costs no invoice number.
Line names and prices are frozen into the document at entry time.
"""

from __future__ import annotations

import datetime as dt
from typing import Sequence

from .codes import DOCUMENT_CODE_WIDTH
from .errors import EmptyDocument, UnknownItem, ValidationError
from .events import PurchaseRecorded, SaleRecorded
from .inventory import check_consume
from .master import get_party, issue_code
from .models import DocumentLine, PartyKind, PurchaseOrder, SalesInvoice
from .money import check_amount
from .state import ShopState
from .store import LedgerStore

# sale line: (item_code, qty) or (item_code, qty, price_override)
SaleLine = tuple
PurchaseLine = tuple  # (item_code, qty, unit_price)


def build_purchase(
    state: ShopState,
    prefix: str,
    supplier_code: str,
    date: dt.date,
    lines: Sequence[PurchaseLine],
) -> PurchaseRecorded:
    supplier = get_party(state, supplier_code, PartyKind.SUPPLIER)
    if not lines:
        raise EmptyDocument("purchase needs at least one line")
    doc_lines = []
    for item_code, qty, unit_price in lines:
        if qty < 1:
            raise ValidationError(f"qty must be >= 1, got {qty}", detail=item_code)
        check_amount(unit_price, what="unit_price")
        item = state.items.get(item_code)
        if item is None:
            raise UnknownItem(f"unknown item {item_code}", detail=item_code)
        doc_lines.append(DocumentLine.make(item_code, item.name, qty, unit_price))
    code = issue_code(state, prefix, DOCUMENT_CODE_WIDTH)
    return PurchaseRecorded(
        code=code.render(),
        supplier_code=supplier.code,
        supplier_name=supplier.name,
        date=date,
        lines=tuple(doc_lines),
        grand_total=sum(line.subtotal for line in doc_lines),
    )


def record_purchase(
    store: LedgerStore,
    supplier_code: str,
    date: dt.date,
    lines: Sequence[PurchaseLine],
    at: dt.datetime | None = None,
) -> PurchaseOrder:
    prefix = store.config.prefix_for("purchase")
    event = store.append(
        lambda state: build_purchase(state, prefix, supplier_code, date, lines), at=at
    )
    return store.read(lambda s: s.purchases[event.payload.code])


def build_sale(
    state: ShopState,
    prefix: str,
    customer_code: str,
    date: dt.date,
    lines: Sequence[SaleLine],
) -> SaleRecorded:
    customer = get_party(state, customer_code, PartyKind.CUSTOMER)
    if not lines:
        raise EmptyDocument("sale needs at least one line")

    normalized: list[tuple[str, int, int | None]] = []
    for line in lines:
        item_code, qty = line[0], line[1]
        override = line[2] if len(line) > 2 else None
        normalized.append((item_code, qty, override))

    # whole-document stock guard, duplicates merged, before any effect
    check_consume(state.stock_levels(), [(c, q) for c, q, _ in normalized])

    doc_lines = []
    for item_code, qty, override in normalized:
        item = state.items[item_code]
        unit_price = item.unit_price if override is None else override
        check_amount(unit_price, what="unit_price")
        doc_lines.append(DocumentLine.make(item_code, item.name, qty, unit_price))
    code = issue_code(state, prefix, DOCUMENT_CODE_WIDTH)
    return SaleRecorded(
        code=code.render(),
        customer_code=customer.code,
        customer_name=customer.name,
        date=date,
        lines=tuple(doc_lines),
        grand_total=sum(line.subtotal for line in doc_lines),
    )


def record_sale(
    store: LedgerStore,
    customer_code: str,
    date: dt.date,
    lines: Sequence[SaleLine],
    at: dt.datetime | None = None,
) -> SalesInvoice:
    """Record a sale; prices default to the catalog, overridable per line."""
    prefix = store.config.prefix_for("sale")
    event = store.append(
        lambda state: build_sale(state, prefix, customer_code, date, lines), at=at
    )
    return store.read(lambda s: s.sales[event.payload.code])
