"""Master-data entry: customers, suppliers, technicians, catalog items.

Codes come out of the per-prefix sequences automatically; the operator
never types one. Kind-to-prefix mapping lives in configuration.
"""

from __future__ import annotations

import datetime as dt

from .codes import ITEM_CODE_WIDTH, PARTY_CODE_WIDTH, EntityCode, IdSequence, next_code
from .errors import UnknownParty
from .events import ItemAdded, PartyRegistered
from .models import CatalogItem, PartyKind, PartyRecord, require_text
from .money import check_amount
from .state import ShopState
from .store import LedgerStore


def issue_code(state: ShopState, prefix: str, width: int) -> EntityCode:
    """Next code for a prefix, computed from materialized sequence state."""
    seq = IdSequence(prefix=prefix, width=width, next=state.next_counter(prefix))
    code, _ = next_code(seq)
    return code


def register_party(
    store: LedgerStore,
    kind: PartyKind,
    name: str,
    address: str = "",
    city: str = "",
    phone: str = "",
    at: dt.datetime | None = None,
) -> PartyRecord:
    prefix = store.config.prefix_for(kind.value.lower())

    def build(state: ShopState) -> PartyRegistered:
        code = issue_code(state, prefix, PARTY_CODE_WIDTH)
        return PartyRegistered(
            code=code.render(),
            party_kind=kind,
            name=require_text(name, "name"),
            address=(address or "").strip(),
            city=(city or "").strip(),
            phone=(phone or "").strip(),
        )

    event = store.append(build, at=at)
    return store.read(lambda s: s.parties[event.payload.code])


def add_item(
    store: LedgerStore,
    category: str,
    name: str,
    unit_price: int,
    initial_qty: int = 0,
    at: dt.datetime | None = None,
) -> CatalogItem:
    """Add a catalog item under a 2-letter category tag (FS, MS, MT...)."""
    check_amount(unit_price, what="unit_price")
    check_amount(initial_qty, what="initial_qty")

    def build(state: ShopState) -> ItemAdded:
        code = issue_code(state, category, ITEM_CODE_WIDTH)
        return ItemAdded(
            code=code.render(),
            name=require_text(name, "name"),
            unit_price=unit_price,
            initial_qty=initial_qty,
        )

    event = store.append(build, at=at)
    return store.read(lambda s: s.items[event.payload.code])


def get_party(state: ShopState, code: str, kind: PartyKind | None = None) -> PartyRecord:
    """Look up a party, optionally requiring a kind; UNKNOWN_PARTY otherwise."""
    party = state.parties.get(code)
    if party is None or (kind is not None and party.kind != kind):
        wanted = kind.value.lower() if kind else "party"
        raise UnknownParty(f"unknown {wanted} {code}", detail=code)
    return party


def list_parties(state: ShopState, kind: PartyKind | None = None) -> list[PartyRecord]:
    parties = [p for p in state.parties.values() if kind is None or p.kind == kind]
    return sorted(parties, key=lambda p: p.code)


def list_items(state: ShopState) -> list[CatalogItem]:
    return sorted(state.items.values(), key=lambda i: i.code)
