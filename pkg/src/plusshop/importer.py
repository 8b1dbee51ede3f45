"""Legacy ledger import.

A comma-separated file with a header row whose first column is ``kind``;
every data row becomes one journal event. Row layouts by kind:

    customer|supplier|technician, name, address, city, phone
    item,     category, name, unit_price, initial_qty
    purchase, supplier_code, date, item, qty, price [, item, qty, price ...]
    sale,     customer_code, date, item, qty, price [, ...]
                (blank sale price = catalog price at import time)

The import is all-or-nothing: every row is validated (in order, each
seeing the effect of earlier rows) before anything is appended. Unknown
references and unparsable cells are IMPORT_PARSE_ERROR with the offending
row number; stock/state guard failures propagate with the row number.
"""

from __future__ import annotations

import csv
import datetime as dt
from pathlib import Path

from .errors import ImportParseError, ShopError
from .models import PartyKind
from .state import ShopState
from .store import LedgerStore
from . import master, trade

PARTY_KINDS = {
    "customer": PartyKind.CUSTOMER,
    "supplier": PartyKind.SUPPLIER,
    "technician": PartyKind.TECHNICIAN,
}


def _cell(row: list[str], idx: int, what: str, rowno: int) -> str:
    if idx >= len(row) or not row[idx].strip():
        raise ImportParseError(f"row {rowno}: missing {what}", row=rowno, detail=what)
    return row[idx].strip()


def _int_cell(row: list[str], idx: int, what: str, rowno: int) -> int:
    text = _cell(row, idx, what, rowno)
    try:
        return int(text)
    except ValueError:
        raise ImportParseError(
            f"row {rowno}: {what} is not an integer: {text!r}", row=rowno, detail=what
        ) from None


def _date_cell(row: list[str], idx: int, what: str, rowno: int) -> dt.date:
    text = _cell(row, idx, what, rowno)
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise ImportParseError(
            f"row {rowno}: {what} is not a YYYY-MM-DD date: {text!r}",
            row=rowno, detail=what,
        ) from None


def _doc_lines(row: list[str], start: int, rowno: int, *, price_optional: bool):
    """Parse repeated (item, qty, price) column groups from ``start`` on."""
    cells = [c.strip() for c in row[start:]]
    # ragged trailing commas are fine, but a blank price cell that completes
    # a triple must survive (it means "use the catalog price")
    while cells and cells[-1] == "" and len(cells) % 3 != 0:
        cells.pop()
    while len(cells) >= 3 and all(c == "" for c in cells[-3:]):
        del cells[-3:]
    if not cells:
        raise ImportParseError(f"row {rowno}: document has no lines", row=rowno)
    if len(cells) % 3 != 0:
        raise ImportParseError(
            f"row {rowno}: line columns must come in (item,qty,price) triples",
            row=rowno,
        )
    lines = []
    for i in range(0, len(cells), 3):
        item_code = cells[i]
        if not item_code:
            raise ImportParseError(f"row {rowno}: blank item code", row=rowno)
        try:
            qty = int(cells[i + 1])
        except ValueError:
            raise ImportParseError(
                f"row {rowno}: qty is not an integer: {cells[i + 1]!r}", row=rowno
            ) from None
        price_text = cells[i + 2]
        if price_text == "":
            if not price_optional:
                raise ImportParseError(f"row {rowno}: missing price", row=rowno)
            price = None
        else:
            try:
                price = int(price_text)
            except ValueError:
                raise ImportParseError(
                    f"row {rowno}: price is not an integer: {price_text!r}", row=rowno
                ) from None
        lines.append((item_code, qty, price))
    return lines


def _resolve_party(state: ShopState, code: str, kind: PartyKind, rowno: int) -> str:
    party = state.parties.get(code)
    if party is None or party.kind != kind:
        raise ImportParseError(
            f"row {rowno}: unknown {kind.value.lower()} code {code!r}",
            row=rowno, detail=code,
        )
    return code


def _check_items_known(state: ShopState, lines, rowno: int) -> None:
    for item_code, _, _ in lines:
        if item_code not in state.items:
            raise ImportParseError(
                f"row {rowno}: unknown item code {item_code!r}",
                row=rowno, detail=item_code,
            )


def import_legacy(store: LedgerStore, path: str | Path, at: dt.datetime | None = None) -> int:
    """Import a legacy ledger file; returns the number of events appended."""
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = [(reader.line_num, row) for row in reader]

    rows = [(n, row) for n, row in rows if any(cell.strip() for cell in row)]
    if not rows:
        return 0

    header_no, header = rows[0]
    if not header or header[0].strip().lower() != "kind":
        raise ImportParseError(
            f"row {header_no}: header row must start with 'kind'", row=header_no
        )

    builders = []
    for rowno, row in rows[1:]:
        kind = row[0].strip().lower()
        if kind in PARTY_KINDS:
            party_kind = PARTY_KINDS[kind]
            name = _cell(row, 1, "name", rowno)
            address = row[2].strip() if len(row) > 2 else ""
            city = row[3].strip() if len(row) > 3 else ""
            phone = row[4].strip() if len(row) > 4 else ""
            prefix = store.config.prefix_for(kind)
            builders.append(_party_builder(prefix, party_kind, name, address, city, phone))
        elif kind == "item":
            category = _cell(row, 1, "category", rowno)
            name = _cell(row, 2, "name", rowno)
            unit_price = _int_cell(row, 3, "unit_price", rowno)
            initial_qty = _int_cell(row, 4, "initial_qty", rowno) if len(row) > 4 and row[4].strip() else 0
            builders.append(_item_builder(category, name, unit_price, initial_qty, rowno))
        elif kind == "purchase":
            supplier_code = _cell(row, 1, "supplier_code", rowno)
            date = _date_cell(row, 2, "date", rowno)
            lines = _doc_lines(row, 3, rowno, price_optional=False)
            prefix = store.config.prefix_for("purchase")
            builders.append(_purchase_builder(prefix, supplier_code, date, lines, rowno))
        elif kind == "sale":
            customer_code = _cell(row, 1, "customer_code", rowno)
            date = _date_cell(row, 2, "date", rowno)
            lines = _doc_lines(row, 3, rowno, price_optional=True)
            prefix = store.config.prefix_for("sale")
            builders.append(_sale_builder(prefix, customer_code, date, lines, rowno))
        else:
            raise ImportParseError(
                f"row {rowno}: unknown kind {row[0]!r}", row=rowno, detail=row[0]
            )

    events = store.append_batch(builders, at=at)
    return len(events)


def _wrap_guard(fn, rowno: int):
    def build(state: ShopState):
        try:
            return fn(state)
        except ImportParseError:
            raise
        except ShopError as exc:
            raise exc.with_row(rowno) from exc
    return build


def _party_builder(prefix, party_kind, name, address, city, phone):
    from .codes import PARTY_CODE_WIDTH
    from .events import PartyRegistered
    from .models import require_text

    def build(state: ShopState) -> PartyRegistered:
        code = master.issue_code(state, prefix, PARTY_CODE_WIDTH)
        return PartyRegistered(
            code=code.render(), party_kind=party_kind,
            name=require_text(name, "name"), address=address, city=city, phone=phone,
        )

    return build


def _item_builder(category, name, unit_price, initial_qty, rowno):
    from .codes import ITEM_CODE_WIDTH
    from .events import ItemAdded
    from .models import require_text
    from .money import check_amount

    def build(state: ShopState) -> ItemAdded:
        check_amount(unit_price, what="unit_price")
        check_amount(initial_qty, what="initial_qty")
        code = master.issue_code(state, category, ITEM_CODE_WIDTH)
        return ItemAdded(
            code=code.render(), name=require_text(name, "name"),
            unit_price=unit_price, initial_qty=initial_qty,
        )

    return _wrap_guard(build, rowno)


def _purchase_builder(prefix, supplier_code, date, lines, rowno):
    def build(state: ShopState):
        _resolve_party(state, supplier_code, PartyKind.SUPPLIER, rowno)
        _check_items_known(state, lines, rowno)
        return trade.build_purchase(state, prefix, supplier_code, date, lines)

    return _wrap_guard(build, rowno)


def _sale_builder(prefix, customer_code, date, lines, rowno):
    def build(state: ShopState):
        _resolve_party(state, customer_code, PartyKind.CUSTOMER, rowno)
        _check_items_known(state, lines, rowno)
        return trade.build_sale(state, prefix, customer_code, date, lines)

    return _wrap_guard(build, rowno)
