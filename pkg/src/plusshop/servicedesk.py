"""Repair work-order lifecycle.

Intake hands the customer a service code; the order then only moves
forward: RECEIVED -> IN_REPAIR (technician assigned) -> COMPLETED (parts
consumed, labor fee set) -> PICKED_UP (payment receipt). Any other
transition is INVALID_STATE and changes nothing. Once picked up an order
is immutable.
"""

from __future__ import annotations

import datetime as dt
from typing import Sequence

from .codes import DOCUMENT_CODE_WIDTH
from .errors import InvalidState, UnknownService
from .events import ServiceCompleted, ServicePickedUp, ServiceReceived, TechnicianAssigned
from .inventory import check_consume
from .master import get_party, issue_code
from .models import (
    DocumentLine,
    PartyKind,
    PickupReceipt,
    ServiceOrder,
    ServiceState,
    receipt_for,
    require_text,
)
from .money import check_amount
from .state import ShopState
from .store import LedgerStore


def get_order(state: ShopState, service_code: str) -> ServiceOrder:
    order = state.services.get(service_code)
    if order is None:
        raise UnknownService(f"unknown service order {service_code}", detail=service_code)
    return order


def _require_state(order: ServiceOrder, wanted: ServiceState, action: str) -> None:
    if order.state != wanted:
        raise InvalidState(
            f"cannot {action} {order.code} in state {order.state.value}",
            current_state=order.state.value,
        )


def intake_service(
    store: LedgerStore,
    customer_code: str,
    date: dt.date,
    item_group: str,
    fault_description: str,
    at: dt.datetime | None = None,
) -> ServiceOrder:
    prefix = store.config.prefix_for("service")

    def build(state: ShopState) -> ServiceReceived:
        customer = get_party(state, customer_code, PartyKind.CUSTOMER)
        code = issue_code(state, prefix, DOCUMENT_CODE_WIDTH)
        return ServiceReceived(
            code=code.render(),
            customer_code=customer.code,
            customer_name=customer.name,
            customer_phone=customer.phone,
            received_date=date,
            item_group=require_text(item_group, "item_group"),
            fault_description=require_text(fault_description, "fault_description"),
        )

    event = store.append(build, at=at)
    return store.read(lambda s: s.services[event.payload.code])


def assign_technician(
    store: LedgerStore,
    service_code: str,
    technician_code: str,
    at: dt.datetime | None = None,
) -> ServiceOrder:
    def build(state: ShopState) -> TechnicianAssigned:
        order = get_order(state, service_code)
        technician = get_party(state, technician_code, PartyKind.TECHNICIAN)
        _require_state(order, ServiceState.RECEIVED, "assign technician to")
        return TechnicianAssigned(
            service_code=order.code,
            technician_code=technician.code,
            technician_name=technician.name,
        )

    store.append(build, at=at)
    return store.read(lambda s: s.services[service_code])


def complete_service(
    store: LedgerStore,
    service_code: str,
    parts: Sequence[tuple[str, int]],
    labor_fee: int,
    at: dt.datetime | None = None,
) -> ServiceOrder:
    """Finish the repair: consume replaced parts (catalog prices frozen in)
    and record the labor fee. Parts may be empty for labor-only repairs."""
    check_amount(labor_fee, what="labor_fee")

    def build(state: ShopState) -> ServiceCompleted:
        order = get_order(state, service_code)
        _require_state(order, ServiceState.IN_REPAIR, "complete")
        merged = check_consume(state.stock_levels(), parts)
        part_lines = tuple(
            DocumentLine.make(code, state.items[code].name, qty, state.items[code].unit_price)
            for code, qty in merged.items()
        )
        return ServiceCompleted(
            service_code=order.code, parts=part_lines, labor_fee=labor_fee
        )

    store.append(build, at=at)
    return store.read(lambda s: s.services[service_code])


def pickup_service(
    store: LedgerStore,
    service_code: str,
    date: dt.date,
    at: dt.datetime | None = None,
) -> PickupReceipt:
    def build(state: ShopState) -> ServicePickedUp:
        order = get_order(state, service_code)
        _require_state(order, ServiceState.COMPLETED, "pick up")
        return ServicePickedUp(
            service_code=order.code,
            return_date=date,
            amount_due=order.parts_total + order.labor_fee,
        )

    store.append(build, at=at)
    return store.read(lambda s: receipt_for(s.services[service_code]))


def list_orders(state: ShopState, service_state: ServiceState | None = None) -> list[ServiceOrder]:
    orders = [
        o for o in state.services.values()
        if service_state is None or o.state == service_state
    ]
    return sorted(orders, key=lambda o: o.code)
