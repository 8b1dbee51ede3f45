"""Report building and text rendering.

Three surfaces: the sales report (one row per invoice line, grand total),
the per-order service report, and the stock listing. Builders read a
consistent state and return plain values; renderers are pure functions of
those values, so the same report always renders to identical bytes.

Text layout: fixed-width columns sized to the longest rendered cell (or
header), two spaces between columns, numeric columns right-aligned.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from .config import DEFAULT_CITY, DEFAULT_LETTERHEAD
from .dates import format_date_id, format_date_slash
from .errors import InvalidRange
from .models import DocumentLine, PickupReceipt, ServiceOrder
from .money import format_rupiah
from .servicedesk import get_order
from .state import ShopState


@dataclass(frozen=True)
class SalesReportRow:
    invoice_code: str
    customer_name: str
    date: dt.date
    item_code: str
    item_name: str
    unit_price: int
    qty: int
    subtotal: int

    def to_dict(self) -> dict:
        return {
            "invoice_code": self.invoice_code,
            "customer_name": self.customer_name,
            "date": self.date.isoformat(),
            "item_code": self.item_code,
            "item_name": self.item_name,
            "unit_price": self.unit_price,
            "qty": self.qty,
            "subtotal": self.subtotal,
        }


@dataclass(frozen=True)
class SalesReport:
    period_from: dt.date
    period_to: dt.date
    rows: tuple[SalesReportRow, ...]
    grand_total: int

    def to_dict(self) -> dict:
        return {
            "period_from": self.period_from.isoformat(),
            "period_to": self.period_to.isoformat(),
            "rows": [row.to_dict() for row in self.rows],
            "grand_total": self.grand_total,
        }


@dataclass(frozen=True)
class ServiceReport:
    """Per-order report; sourced solely from the order record, so it prints
    the same even after catalog or party edits."""

    service_code: str
    received_date: dt.date
    customer_name: str
    customer_phone: str
    item_group: str
    fault_description: str
    replaced_parts: tuple[DocumentLine, ...]
    labor_fee: int
    return_date: dt.date | None

    def to_dict(self) -> dict:
        return {
            "service_code": self.service_code,
            "received_date": self.received_date.isoformat(),
            "customer_name": self.customer_name,
            "customer_phone": self.customer_phone,
            "item_group": self.item_group,
            "fault_description": self.fault_description,
            "replaced_parts": [line.to_dict() for line in self.replaced_parts],
            "labor_fee": self.labor_fee,
            "return_date": self.return_date.isoformat() if self.return_date else None,
        }


@dataclass(frozen=True)
class InventoryRow:
    item_code: str
    name: str
    unit_price: int
    on_hand: int

    def to_dict(self) -> dict:
        return {
            "item_code": self.item_code,
            "name": self.name,
            "unit_price": self.unit_price,
            "on_hand": self.on_hand,
        }


# --- builders ---

def sales_report(state: ShopState, date_from: dt.date, date_to: dt.date) -> SalesReport:
    """Every sale line with invoice date in [from, to], ordered by invoice
    code then line order; grand total over the included lines."""
    if date_from > date_to:
        raise InvalidRange(f"from {date_from} is after to {date_to}")
    rows: list[SalesReportRow] = []
    for invoice in sorted(state.sales.values(), key=lambda inv: inv.code):
        if not (date_from <= invoice.date <= date_to):
            continue
        for line in invoice.lines:
            rows.append(
                SalesReportRow(
                    invoice_code=invoice.code,
                    customer_name=invoice.customer_name,
                    date=invoice.date,
                    item_code=line.item_code,
                    item_name=line.item_name,
                    unit_price=line.unit_price,
                    qty=line.qty,
                    subtotal=line.subtotal,
                )
            )
    return SalesReport(
        period_from=date_from,
        period_to=date_to,
        rows=tuple(rows),
        grand_total=sum(row.subtotal for row in rows),
    )


def service_report(state: ShopState, service_code: str) -> ServiceReport:
    order = get_order(state, service_code)
    return ServiceReport(
        service_code=order.code,
        received_date=order.received_date,
        customer_name=order.customer_name,
        customer_phone=order.customer_phone,
        item_group=order.item_group,
        fault_description=order.fault_description,
        replaced_parts=tuple(order.replaced_parts),
        labor_fee=order.labor_fee,
        return_date=order.return_date,
    )


def inventory_report(state: ShopState) -> tuple[InventoryRow, ...]:
    return tuple(
        InventoryRow(item.code, item.name, item.unit_price, item.stock_qty)
        for item in sorted(state.items.values(), key=lambda i: i.code)
    )


# --- text rendering ---

def _table(headers: list[str], rows: list[list[str]], right_cols: set[int]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def fmt(cells: list[str]) -> str:
        parts = []
        for i, cell in enumerate(cells):
            if i in right_cols:
                parts.append(cell.rjust(widths[i]))
            else:
                parts.append(cell.ljust(widths[i]))
        return "  ".join(parts).rstrip()

    return [fmt(headers)] + [fmt(row) for row in rows]


def _customer_line(name: str, phone: str) -> str:
    return f"Pelanggan : {name} / {phone}" if phone else f"Pelanggan : {name}"


def _parts_lines(parts: tuple[DocumentLine, ...]) -> list[str]:
    return [
        f"  - {p.item_name}  {p.qty} x {format_rupiah(p.unit_price)}"
        f" = {format_rupiah(p.subtotal)}"
        for p in parts
    ]


def render_sales_text(report: SalesReport, city: str = DEFAULT_CITY) -> str:
    headers = ["Kode Faktur", "Pelanggan", "Tanggal", "Kode Barang",
               "Nama Barang", "Harga Barang", "Jumlah", "Sub Total"]
    rows = [
        [
            row.invoice_code,
            row.customer_name,
            format_date_id(row.date),
            row.item_code,
            row.item_name,
            format_rupiah(row.unit_price),
            str(row.qty),
            format_rupiah(row.subtotal),
        ]
        for row in report.rows
    ]
    lines = [
        "LAPORAN PENJUALAN",
        f"Periode : {format_date_id(report.period_from)}"
        f" s/d {format_date_id(report.period_to)}",
        "",
    ]
    lines.extend(_table(headers, rows, right_cols={5, 6, 7}))
    lines.append("")
    lines.append(f"Grand Total : Rp. {format_rupiah(report.grand_total)}")
    lines.extend([
        "",
        f"{city}, {format_date_slash(report.period_to)}",
        "Yang Membuat",
        "",
        "",
        "",
        f"{city},",
        "Yang Menerima",
    ])
    return "\n".join(lines) + "\n"


def render_service_text(report: ServiceReport, letterhead: str = DEFAULT_LETTERHEAD) -> str:
    lines = [
        letterhead,
        "",
        "LAPORAN SERVICE",
        "",
        f"Kode Service : {report.service_code}",
        f"Tanggal Terima : {format_date_id(report.received_date)}",
        _customer_line(report.customer_name, report.customer_phone),
        f"Kel. Barang : {report.item_group}",
        f"Kerusakaan : {report.fault_description}",
        "Aht yang diganti :",
        *_parts_lines(report.replaced_parts),
        "Tanggal Kembali :"
        + (f" {format_date_id(report.return_date)}" if report.return_date else ""),
        f"Biaya Service : {format_rupiah(report.labor_fee)}",
    ]
    return "\n".join(lines) + "\n"


def render_inventory_text(rows: tuple[InventoryRow, ...]) -> str:
    headers = ["Kode Barang", "Nama Barang", "Harga", "Stok"]
    cells = [
        [row.item_code, row.name, format_rupiah(row.unit_price), str(row.on_hand)]
        for row in rows
    ]
    lines = ["LAPORAN PERSEDIAAN BARANG", ""]
    lines.extend(_table(headers, cells, right_cols={2, 3}))
    return "\n".join(lines) + "\n"


def render_intake_receipt_text(order: ServiceOrder, letterhead: str = DEFAULT_LETTERHEAD) -> str:
    """Receipt printed at intake; carries the code the customer presents at
    pickup."""
    lines = [
        letterhead,
        "",
        "KWITANSI SERVICE",
        "",
        f"Kode Service : {order.code}",
        f"Tanggal Terima : {format_date_id(order.received_date)}",
        _customer_line(order.customer_name, order.customer_phone),
        f"Kel. Barang : {order.item_group}",
        f"Kerusakaan : {order.fault_description}",
        "",
        "Simpan kwitansi ini; kode service diperlukan saat pengambilan barang.",
    ]
    return "\n".join(lines) + "\n"


def render_pickup_receipt_text(receipt: PickupReceipt, letterhead: str = DEFAULT_LETTERHEAD) -> str:
    lines = [
        letterhead,
        "",
        "KWITANSI PEMBAYARAN SERVICE",
        "",
        f"Kode Service : {receipt.service_code}",
        _customer_line(receipt.customer_name, receipt.customer_phone),
        f"Tanggal Terima : {format_date_id(receipt.received_date)}",
        f"Tanggal Kembali : {format_date_id(receipt.return_date)}",
        "Aht yang diganti :",
        *_parts_lines(receipt.replaced_parts),
        f"Total Aht : {format_rupiah(receipt.parts_total)}",
        f"Biaya Service : {format_rupiah(receipt.labor_fee)}",
        f"Jumlah Bayar : Rp. {format_rupiah(receipt.amount_due)}",
    ]
    return "\n".join(lines) + "\n"


def render_text(report, *, city: str = DEFAULT_CITY, letterhead: str = DEFAULT_LETTERHEAD) -> str:
    """Render any report value to its text document."""
    if isinstance(report, SalesReport):
        return render_sales_text(report, city=city)
    if isinstance(report, ServiceReport):
        return render_service_text(report, letterhead=letterhead)
    if isinstance(report, PickupReceipt):
        return render_pickup_receipt_text(report, letterhead=letterhead)
    if isinstance(report, tuple) and all(isinstance(r, InventoryRow) for r in report):
        return render_inventory_text(report)
    raise TypeError(f"no text rendering for {type(report).__name__}")
