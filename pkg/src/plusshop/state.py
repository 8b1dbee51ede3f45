"""Materialized shop state and the event fold.

State is never edited directly by callers: commands validate against it,
append an event, and ``apply_event`` advances it. Replaying the same
journal always rebuilds the same state; ``serialize`` is canonical (sorted
keys, compact separators) so equality can be checked byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .codes import parse_code
from .events import (
    EventPayload,
    ItemAdded,
    LedgerEvent,
    PartyRegistered,
    PurchaseRecorded,
    SaleRecorded,
    ServiceCompleted,
    ServicePickedUp,
    ServiceReceived,
    TechnicianAssigned,
)
from .models import (
    CatalogItem,
    PartyRecord,
    PurchaseOrder,
    SalesInvoice,
    ServiceOrder,
    ServiceState,
)


@dataclass
class ShopState:
    parties: dict[str, PartyRecord] = field(default_factory=dict)
    items: dict[str, CatalogItem] = field(default_factory=dict)
    purchases: dict[str, PurchaseOrder] = field(default_factory=dict)
    sales: dict[str, SalesInvoice] = field(default_factory=dict)
    services: dict[str, ServiceOrder] = field(default_factory=dict)
    # next counter to issue, per code prefix; untouched prefixes start at 1
    sequences: dict[str, int] = field(default_factory=dict)

    def next_counter(self, prefix: str) -> int:
        return self.sequences.get(prefix, 1)

    def stock_levels(self) -> dict[str, int]:
        return {code: item.stock_qty for code, item in self.items.items()}

    def to_dict(self) -> dict:
        return {
            "parties": {code: p.to_dict() for code, p in self.parties.items()},
            "items": {code: i.to_dict() for code, i in self.items.items()},
            "purchases": {code: d.to_dict() for code, d in self.purchases.items()},
            "sales": {code: d.to_dict() for code, d in self.sales.items()},
            "services": {code: s.to_dict() for code, s in self.services.items()},
            "sequences": dict(self.sequences),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ShopState":
        return cls(
            parties={c: PartyRecord.from_dict(v) for c, v in d.get("parties", {}).items()},
            items={c: CatalogItem.from_dict(v) for c, v in d.get("items", {}).items()},
            purchases={c: PurchaseOrder.from_dict(v) for c, v in d.get("purchases", {}).items()},
            sales={c: SalesInvoice.from_dict(v) for c, v in d.get("sales", {}).items()},
            services={c: ServiceOrder.from_dict(v) for c, v in d.get("services", {}).items()},
            sequences={k: int(v) for k, v in d.get("sequences", {}).items()},
        )

    def serialize(self) -> bytes:
        """Canonical byte form; identical states serialize identically."""
        return json.dumps(
            self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False
        ).encode("utf-8")


def _bump_sequence(state: ShopState, code_text: str) -> None:
    code = parse_code(code_text)
    current = state.sequences.get(code.prefix, 1)
    if code.counter + 1 > current:
        state.sequences[code.prefix] = code.counter + 1


def apply_event(state: ShopState, payload: EventPayload) -> ShopState:
    """Advance the materialized state by one event, in place.

    The fold trusts the journal: guards ran when the event was appended,
    so this only does the bookkeeping arithmetic.
    """
    if isinstance(payload, PartyRegistered):
        state.parties[payload.code] = PartyRecord(
            code=payload.code,
            kind=payload.party_kind,
            name=payload.name,
            address=payload.address,
            city=payload.city,
            phone=payload.phone,
        )
        _bump_sequence(state, payload.code)

    elif isinstance(payload, ItemAdded):
        state.items[payload.code] = CatalogItem(
            code=payload.code,
            name=payload.name,
            unit_price=payload.unit_price,
            stock_qty=payload.initial_qty,
        )
        _bump_sequence(state, payload.code)

    elif isinstance(payload, PurchaseRecorded):
        state.purchases[payload.code] = PurchaseOrder(
            code=payload.code,
            supplier_code=payload.supplier_code,
            supplier_name=payload.supplier_name,
            date=payload.date,
            lines=list(payload.lines),
            grand_total=payload.grand_total,
        )
        for line in payload.lines:
            state.items[line.item_code].stock_qty += line.qty
        _bump_sequence(state, payload.code)

    elif isinstance(payload, SaleRecorded):
        state.sales[payload.code] = SalesInvoice(
            code=payload.code,
            customer_code=payload.customer_code,
            customer_name=payload.customer_name,
            date=payload.date,
            lines=list(payload.lines),
            grand_total=payload.grand_total,
        )
        for line in payload.lines:
            state.items[line.item_code].stock_qty -= line.qty
        _bump_sequence(state, payload.code)

    elif isinstance(payload, ServiceReceived):
        state.services[payload.code] = ServiceOrder(
            code=payload.code,
            customer_code=payload.customer_code,
            customer_name=payload.customer_name,
            customer_phone=payload.customer_phone,
            received_date=payload.received_date,
            item_group=payload.item_group,
            fault_description=payload.fault_description,
            state=ServiceState.RECEIVED,
        )
        _bump_sequence(state, payload.code)

    elif isinstance(payload, TechnicianAssigned):
        order = state.services[payload.service_code]
        order.technician_code = payload.technician_code
        order.technician_name = payload.technician_name
        order.state = ServiceState.IN_REPAIR

    elif isinstance(payload, ServiceCompleted):
        order = state.services[payload.service_code]
        order.replaced_parts = list(payload.parts)
        order.labor_fee = payload.labor_fee
        order.state = ServiceState.COMPLETED
        for line in payload.parts:
            state.items[line.item_code].stock_qty -= line.qty

    elif isinstance(payload, ServicePickedUp):
        order = state.services[payload.service_code]
        order.return_date = payload.return_date
        order.state = ServiceState.PICKED_UP

    else:  # pragma: no cover - the payload union is closed
        raise TypeError(f"unknown payload type: {type(payload).__name__}")

    return state


def replay_events(events: list[LedgerEvent], base: ShopState | None = None) -> ShopState:
    """Fold a (tail of a) journal into a state. Deterministic."""
    state = base if base is not None else ShopState()
    for event in events:
        apply_event(state, event.payload)
    return state
