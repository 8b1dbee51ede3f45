"""Domain records: parties, catalog items, trade documents, work orders.

Codes are stored in rendered text form (``FK00001``); dates as
``datetime.date``; money as integer rupiah. Each record serializes to a
plain dict (ISO dates) for the journal, snapshots and the API.
"""

from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass, field

from .errors import EmptyField, ValidationError
from .money import check_amount


class PartyKind(str, enum.Enum):
    CUSTOMER = "CUSTOMER"
    SUPPLIER = "SUPPLIER"
    TECHNICIAN = "TECHNICIAN"


class ServiceState(str, enum.Enum):
    RECEIVED = "RECEIVED"
    IN_REPAIR = "IN_REPAIR"
    COMPLETED = "COMPLETED"
    PICKED_UP = "PICKED_UP"


SERVICE_STATE_ORDER = [
    ServiceState.RECEIVED,
    ServiceState.IN_REPAIR,
    ServiceState.COMPLETED,
    ServiceState.PICKED_UP,
]


def require_text(value: str, what: str) -> str:
    """Trim and reject empty required text fields."""
    if not isinstance(value, str) or not value.strip():
        raise EmptyField(f"{what} must be non-empty", detail=what)
    return value.strip()


@dataclass
class PartyRecord:
    code: str
    kind: PartyKind
    name: str
    address: str = ""
    city: str = ""
    phone: str = ""

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "kind": self.kind.value,
            "name": self.name,
            "address": self.address,
            "city": self.city,
            "phone": self.phone,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PartyRecord":
        return cls(
            code=d["code"],
            kind=PartyKind(d["kind"]),
            name=d["name"],
            address=d.get("address", ""),
            city=d.get("city", ""),
            phone=d.get("phone", ""),
        )


@dataclass
class CatalogItem:
    code: str
    name: str
    unit_price: int
    stock_qty: int = 0

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "name": self.name,
            "unit_price": self.unit_price,
            "stock_qty": self.stock_qty,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogItem":
        return cls(
            code=d["code"],
            name=d["name"],
            unit_price=d["unit_price"],
            stock_qty=d.get("stock_qty", 0),
        )


@dataclass(frozen=True)
class DocumentLine:
    """One trade-document or replaced-part line, denormalized at document
    time so history keeps the price and name then in force."""

    item_code: str
    item_name: str
    qty: int
    unit_price: int
    subtotal: int

    def __post_init__(self):
        if self.qty < 1:
            raise ValidationError(f"line qty must be >= 1, got {self.qty}", detail=self.item_code)
        check_amount(self.unit_price, what="unit_price")
        if self.subtotal != self.qty * self.unit_price:
            raise ValidationError(
                f"line subtotal {self.subtotal} != {self.qty} x {self.unit_price}",
                detail=self.item_code,
            )

    @classmethod
    def make(cls, item_code: str, item_name: str, qty: int, unit_price: int) -> "DocumentLine":
        return cls(item_code, item_name, qty, unit_price, qty * unit_price)

    def to_dict(self) -> dict:
        return {
            "item_code": self.item_code,
            "item_name": self.item_name,
            "qty": self.qty,
            "unit_price": self.unit_price,
            "subtotal": self.subtotal,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DocumentLine":
        return cls(d["item_code"], d["item_name"], d["qty"], d["unit_price"], d["subtotal"])


def lines_total(lines: list[DocumentLine]) -> int:
    return sum(line.subtotal for line in lines)


@dataclass
class SalesInvoice:
    code: str
    customer_code: str
    customer_name: str
    date: dt.date
    lines: list[DocumentLine]
    grand_total: int

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "customer_code": self.customer_code,
            "customer_name": self.customer_name,
            "date": self.date.isoformat(),
            "lines": [line.to_dict() for line in self.lines],
            "grand_total": self.grand_total,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SalesInvoice":
        return cls(
            code=d["code"],
            customer_code=d["customer_code"],
            customer_name=d["customer_name"],
            date=dt.date.fromisoformat(d["date"]),
            lines=[DocumentLine.from_dict(x) for x in d["lines"]],
            grand_total=d["grand_total"],
        )


@dataclass
class PurchaseOrder:
    code: str
    supplier_code: str
    supplier_name: str
    date: dt.date
    lines: list[DocumentLine]
    grand_total: int

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "supplier_code": self.supplier_code,
            "supplier_name": self.supplier_name,
            "date": self.date.isoformat(),
            "lines": [line.to_dict() for line in self.lines],
            "grand_total": self.grand_total,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PurchaseOrder":
        return cls(
            code=d["code"],
            supplier_code=d["supplier_code"],
            supplier_name=d["supplier_name"],
            date=dt.date.fromisoformat(d["date"]),
            lines=[DocumentLine.from_dict(x) for x in d["lines"]],
            grand_total=d["grand_total"],
        )


@dataclass
class ServiceOrder:
    """Repair work order. Lifecycle only ever advances:
    RECEIVED -> IN_REPAIR -> COMPLETED -> PICKED_UP."""

    code: str
    customer_code: str
    customer_name: str
    customer_phone: str
    received_date: dt.date
    item_group: str
    fault_description: str
    state: ServiceState = ServiceState.RECEIVED
    technician_code: str | None = None
    technician_name: str | None = None
    replaced_parts: list[DocumentLine] = field(default_factory=list)
    labor_fee: int = 0
    return_date: dt.date | None = None

    @property
    def parts_total(self) -> int:
        return lines_total(self.replaced_parts)

    @property
    def amount_due(self) -> int:
        return self.parts_total + self.labor_fee

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "customer_code": self.customer_code,
            "customer_name": self.customer_name,
            "customer_phone": self.customer_phone,
            "received_date": self.received_date.isoformat(),
            "item_group": self.item_group,
            "fault_description": self.fault_description,
            "state": self.state.value,
            "technician_code": self.technician_code,
            "technician_name": self.technician_name,
            "replaced_parts": [line.to_dict() for line in self.replaced_parts],
            "labor_fee": self.labor_fee,
            "return_date": self.return_date.isoformat() if self.return_date else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ServiceOrder":
        return cls(
            code=d["code"],
            customer_code=d["customer_code"],
            customer_name=d["customer_name"],
            customer_phone=d.get("customer_phone", ""),
            received_date=dt.date.fromisoformat(d["received_date"]),
            item_group=d["item_group"],
            fault_description=d["fault_description"],
            state=ServiceState(d["state"]),
            technician_code=d.get("technician_code"),
            technician_name=d.get("technician_name"),
            replaced_parts=[DocumentLine.from_dict(x) for x in d.get("replaced_parts", [])],
            labor_fee=d.get("labor_fee", 0),
            return_date=(
                dt.date.fromisoformat(d["return_date"]) if d.get("return_date") else None
            ),
        )


@dataclass(frozen=True)
class PickupReceipt:
    """Payment receipt handed over at pickup; amount_due = parts + labor."""

    service_code: str
    customer_name: str
    customer_phone: str
    received_date: dt.date
    return_date: dt.date
    replaced_parts: tuple[DocumentLine, ...]
    parts_total: int
    labor_fee: int
    amount_due: int

    def to_dict(self) -> dict:
        return {
            "service_code": self.service_code,
            "customer_name": self.customer_name,
            "customer_phone": self.customer_phone,
            "received_date": self.received_date.isoformat(),
            "return_date": self.return_date.isoformat(),
            "replaced_parts": [line.to_dict() for line in self.replaced_parts],
            "parts_total": self.parts_total,
            "labor_fee": self.labor_fee,
            "amount_due": self.amount_due,
        }


def receipt_for(order: ServiceOrder) -> PickupReceipt:
    if order.return_date is None:
        raise ValidationError(f"order {order.code} has no return date yet", detail=order.code)
    return PickupReceipt(
        service_code=order.code,
        customer_name=order.customer_name,
        customer_phone=order.customer_phone,
        received_date=order.received_date,
        return_date=order.return_date,
        replaced_parts=tuple(order.replaced_parts),
        parts_total=order.parts_total,
        labor_fee=order.labor_fee,
        amount_due=order.parts_total + order.labor_fee,
    )
