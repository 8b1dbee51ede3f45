"""Demo scenario seeding.

Loads the shop's desk-scale reference data set: the five suppliers, the
five technicians, the flashdisk/mouse/monitor catalog, one stocking
purchase, the three sales of 2008-08-05 (invoice FK00002 alone totals
605.000) and one fresh monitor repair intake (SR00001). With a pinned
timestamp two seedings produce byte-identical journals.
"""

from __future__ import annotations

import datetime as dt

from .master import add_item, register_party
from .models import PartyKind
from .servicedesk import intake_service
from .store import LedgerStore
from .trade import record_purchase, record_sale

SUPPLIERS = [
    ("Mustacom", "Dempo Luar", "Palembang", "0711323232"),
    ("MDP", "Dempo", "Palembang", "0711757575"),
    ("Risa Kencana Urugu", "Plaju", "Palembang", "0711898989"),
    ("Bobsa Komputer", "Lembang", "Palembang", "0711515151"),
    ("Mustacom", "Bukit Besar", "Palembang", "0711953595"),
]

TECHNICIANS = [
    ("Arianto", "Leluan Bunga", "Palembang", "0711252525"),
    ("Fiqih", "Lebak Malang", "Palembang", "08127802429"),
    ("Gestia", "Puzi", "Palembang", "07113538115"),
    ("Parto", "Perumnas", "Palembang", "0711442451"),
    ("Anandillah", "Gandus", "Palembang", "07117879585"),
]

CUSTOMERS = [
    ("Syaprina", "Jl. Madang", "Palembang", "07117919386"),
    ("Hakim", "Jl. Sudirman", "Palembang", "0711616161"),
    ("Mimi", "Jl. Merdeka", "Palembang", "0711717171"),
]

# (category, name, retail price, stocking qty, cost price)
ITEMS = [
    ("FS", "Flashdisk 128", 50_000, 10, 40_000),
    ("FS", "Flashdisk 512", 75_000, 10, 60_000),
    ("FS", "Flashdisk 1", 100_000, 10, 80_000),
    ("MS", "Mouse Optik", 25_000, 10, 15_000),   # MS001, so the scroll mouse lands on MS002
    ("MS", "Mouse Scrol", 30_000, 10, 20_000),
    ("MT", "Monitor LCD 10 I", 500_000, 5, 400_000),
]

STOCKING_DATE = dt.date(2008, 8, 1)
SALES_DATE = dt.date(2008, 8, 5)


def seed_demo(store: LedgerStore, at: dt.datetime | None = None) -> dict:
    """Populate a fresh store with the demo scenario; returns a summary."""
    customers = [
        register_party(store, PartyKind.CUSTOMER, *row, at=at) for row in CUSTOMERS
    ]
    suppliers = [
        register_party(store, PartyKind.SUPPLIER, *row, at=at) for row in SUPPLIERS
    ]
    for row in TECHNICIANS:
        register_party(store, PartyKind.TECHNICIAN, *row, at=at)

    items = [
        add_item(store, category, name, price, at=at)
        for category, name, price, _, _ in ITEMS
    ]

    stocking_lines = [
        (item.code, qty, cost)
        for item, (_, _, _, qty, cost) in zip(items, ITEMS)
    ]
    purchase = record_purchase(
        store, suppliers[0].code, STOCKING_DATE, stocking_lines, at=at
    )

    by_name = {item.name: item.code for item in items}
    sales = [
        record_sale(store, customers[0].code, SALES_DATE,
                    [(by_name["Flashdisk 128"], 1)], at=at),
        record_sale(store, customers[1].code, SALES_DATE,
                    [(by_name["Flashdisk 512"], 1),
                     (by_name["Mouse Scrol"], 1),
                     (by_name["Monitor LCD 10 I"], 1)], at=at),
        record_sale(store, customers[2].code, SALES_DATE,
                    [(by_name["Flashdisk 1"], 1)], at=at),
    ]

    order = intake_service(
        store,
        customers[0].code,
        SALES_DATE,
        "Monitor tanpa kabel",
        "Layar tidak terang (redup)",
        at=at,
    )

    return {
        "customers": [c.code for c in customers],
        "suppliers": [s.code for s in suppliers],
        "items": [i.code for i in items],
        "purchase": purchase.code,
        "sales": [s.code for s in sales],
        "service": order.code,
        "events": store.last_seq,
    }
