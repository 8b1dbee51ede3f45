"""Journal event payloads.

Eight payload kinds cover everything the shop records; there are no update
or delete kinds, which is what makes the journal append-only in spirit and
not just in file mode. Payloads embed denormalized line data (item name and
unit price at document time) so historical documents survive later catalog
changes.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

from .errors import CorruptJournal
from .models import DocumentLine, PartyKind


@dataclass(frozen=True)
class PartyRegistered:
    kind = "party_registered"
    code: str
    party_kind: PartyKind
    name: str
    address: str
    city: str
    phone: str

    def to_data(self) -> dict:
        return {
            "code": self.code,
            "party_kind": self.party_kind.value,
            "name": self.name,
            "address": self.address,
            "city": self.city,
            "phone": self.phone,
        }

    @classmethod
    def from_data(cls, d: dict) -> "PartyRegistered":
        return cls(d["code"], PartyKind(d["party_kind"]), d["name"],
                   d.get("address", ""), d.get("city", ""), d.get("phone", ""))


@dataclass(frozen=True)
class ItemAdded:
    kind = "item_added"
    code: str
    name: str
    unit_price: int
    initial_qty: int = 0

    def to_data(self) -> dict:
        return {
            "code": self.code,
            "name": self.name,
            "unit_price": self.unit_price,
            "initial_qty": self.initial_qty,
        }

    @classmethod
    def from_data(cls, d: dict) -> "ItemAdded":
        return cls(d["code"], d["name"], d["unit_price"], d.get("initial_qty", 0))


def _lines_to_data(lines: tuple[DocumentLine, ...]) -> list[dict]:
    return [line.to_dict() for line in lines]


def _lines_from_data(raw: list[dict]) -> tuple[DocumentLine, ...]:
    return tuple(DocumentLine.from_dict(x) for x in raw)


@dataclass(frozen=True)
class PurchaseRecorded:
    kind = "purchase_recorded"
    code: str
    supplier_code: str
    supplier_name: str
    date: dt.date
    lines: tuple[DocumentLine, ...]
    grand_total: int

    def to_data(self) -> dict:
        return {
            "code": self.code,
            "supplier_code": self.supplier_code,
            "supplier_name": self.supplier_name,
            "date": self.date.isoformat(),
            "lines": _lines_to_data(self.lines),
            "grand_total": self.grand_total,
        }

    @classmethod
    def from_data(cls, d: dict) -> "PurchaseRecorded":
        return cls(d["code"], d["supplier_code"], d["supplier_name"],
                   dt.date.fromisoformat(d["date"]), _lines_from_data(d["lines"]),
                   d["grand_total"])


@dataclass(frozen=True)
class SaleRecorded:
    kind = "sale_recorded"
    code: str
    customer_code: str
    customer_name: str
    date: dt.date
    lines: tuple[DocumentLine, ...]
    grand_total: int

    def to_data(self) -> dict:
        return {
            "code": self.code,
            "customer_code": self.customer_code,
            "customer_name": self.customer_name,
            "date": self.date.isoformat(),
            "lines": _lines_to_data(self.lines),
            "grand_total": self.grand_total,
        }

    @classmethod
    def from_data(cls, d: dict) -> "SaleRecorded":
        return cls(d["code"], d["customer_code"], d["customer_name"],
                   dt.date.fromisoformat(d["date"]), _lines_from_data(d["lines"]),
                   d["grand_total"])


@dataclass(frozen=True)
class ServiceReceived:
    kind = "service_received"
    code: str
    customer_code: str
    customer_name: str
    customer_phone: str
    received_date: dt.date
    item_group: str
    fault_description: str

    def to_data(self) -> dict:
        return {
            "code": self.code,
            "customer_code": self.customer_code,
            "customer_name": self.customer_name,
            "customer_phone": self.customer_phone,
            "received_date": self.received_date.isoformat(),
            "item_group": self.item_group,
            "fault_description": self.fault_description,
        }

    @classmethod
    def from_data(cls, d: dict) -> "ServiceReceived":
        return cls(d["code"], d["customer_code"], d["customer_name"],
                   d.get("customer_phone", ""), dt.date.fromisoformat(d["received_date"]),
                   d["item_group"], d["fault_description"])


@dataclass(frozen=True)
class TechnicianAssigned:
    kind = "technician_assigned"
    service_code: str
    technician_code: str
    technician_name: str

    def to_data(self) -> dict:
        return {
            "service_code": self.service_code,
            "technician_code": self.technician_code,
            "technician_name": self.technician_name,
        }

    @classmethod
    def from_data(cls, d: dict) -> "TechnicianAssigned":
        return cls(d["service_code"], d["technician_code"], d["technician_name"])


@dataclass(frozen=True)
class ServiceCompleted:
    kind = "service_completed"
    service_code: str
    parts: tuple[DocumentLine, ...]
    labor_fee: int

    def to_data(self) -> dict:
        return {
            "service_code": self.service_code,
            "parts": _lines_to_data(self.parts),
            "labor_fee": self.labor_fee,
        }

    @classmethod
    def from_data(cls, d: dict) -> "ServiceCompleted":
        return cls(d["service_code"], _lines_from_data(d["parts"]), d["labor_fee"])


@dataclass(frozen=True)
class ServicePickedUp:
    kind = "service_picked_up"
    service_code: str
    return_date: dt.date
    amount_due: int

    def to_data(self) -> dict:
        return {
            "service_code": self.service_code,
            "return_date": self.return_date.isoformat(),
            "amount_due": self.amount_due,
        }

    @classmethod
    def from_data(cls, d: dict) -> "ServicePickedUp":
        return cls(d["service_code"], dt.date.fromisoformat(d["return_date"]),
                   d["amount_due"])


EventPayload = (
    PartyRegistered | ItemAdded | PurchaseRecorded | SaleRecorded
    | ServiceReceived | TechnicianAssigned | ServiceCompleted | ServicePickedUp
)

EVENT_KINDS: dict[str, type] = {
    cls.kind: cls
    for cls in (
        PartyRegistered, ItemAdded, PurchaseRecorded, SaleRecorded,
        ServiceReceived, TechnicianAssigned, ServiceCompleted, ServicePickedUp,
    )
}


@dataclass(frozen=True)
class LedgerEvent:
    """One journal record: contiguous seq, civil timestamp, typed payload."""

    seq: int
    at: str  # ISO timestamp with explicit UTC offset
    payload: EventPayload

    def to_record(self) -> dict:
        return {"seq": self.seq, "at": self.at,
                "kind": self.payload.kind, "data": self.payload.to_data()}

    @classmethod
    def from_record(cls, rec: dict) -> "LedgerEvent":
        try:
            kind = rec["kind"]
            payload_cls = EVENT_KINDS[kind]
        except (KeyError, TypeError):
            raise CorruptJournal(f"unknown event kind in record: {rec!r}") from None
        try:
            payload = payload_cls.from_data(rec["data"])
            return cls(seq=int(rec["seq"]), at=str(rec["at"]), payload=payload)
        except (KeyError, TypeError, ValueError) as exc:
            raise CorruptJournal(f"undecodable event record: {exc}") from None


def now_stamp(at: dt.datetime | None = None) -> str:
    """Civil timestamp with explicit UTC offset, second precision."""
    moment = at if at is not None else dt.datetime.now().astimezone()
    if moment.tzinfo is None:
        moment = moment.astimezone()
    return moment.isoformat(timespec="seconds")
