"""Purchases and sales: stock effects, pricing, gap-free document codes."""

import datetime as dt

import pytest

from plusshop.errors import (
    EmptyDocument,
    InsufficientStock,
    UnknownParty,
    ValidationError,
)
from plusshop.inventory import stock_level
from plusshop.master import add_item, register_party
from plusshop.models import PartyKind
from plusshop.trade import record_purchase, record_sale

DAY = dt.date(2008, 8, 5)


@pytest.fixture
def shop(store):
    register_party(store, PartyKind.CUSTOMER, "Syaprina", phone="07117919386")
    register_party(store, PartyKind.SUPPLIER, "Mustacom", "Dempo Luar", "Palembang",
                   "0711323232")
    add_item(store, "FS", "Flashdisk 128", 50000)
    add_item(store, "MT", "Monitor LCD 10 I", 500000)
    return store


def test_party_codes_by_kind(shop):
    parties = shop.read(lambda s: dict(s.parties))
    assert set(parties) == {"KP00001", "K500001"}
    assert parties["KP00001"].kind == PartyKind.CUSTOMER
    assert parties["K500001"].kind == PartyKind.SUPPLIER


def test_purchase_receives_stock(shop):
    order = record_purchase(shop, "K500001", DAY, [("FS001", 10, 40000), ("MT001", 2, 400000)])
    assert order.code == "PB00001"
    assert order.supplier_name == "Mustacom"
    assert order.grand_total == 10 * 40000 + 2 * 400000
    assert shop.read(lambda s: stock_level(s, "FS001")) == 10
    assert shop.read(lambda s: stock_level(s, "MT001")) == 2


def test_purchase_rejects_unknown_supplier(shop):
    with pytest.raises(UnknownParty):
        record_purchase(shop, "K599999", DAY, [("FS001", 1, 40000)])
    # a customer code is not a supplier
    with pytest.raises(UnknownParty):
        record_purchase(shop, "KP00001", DAY, [("FS001", 1, 40000)])


def test_sale_consumes_stock_and_prices_from_catalog(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 10, 40000)])
    invoice = record_sale(shop, "KP00001", DAY, [("FS001", 2)])
    assert invoice.code == "FK00001"
    assert invoice.customer_name == "Syaprina"
    assert invoice.lines[0].unit_price == 50000
    assert invoice.lines[0].subtotal == 100000
    assert invoice.grand_total == 100000
    assert shop.read(lambda s: stock_level(s, "FS001")) == 8


def test_sale_price_override(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 10, 40000)])
    invoice = record_sale(shop, "KP00001", DAY, [("FS001", 1, 45000)])
    assert invoice.lines[0].unit_price == 45000
    assert invoice.grand_total == 45000
    with pytest.raises(ValidationError):
        record_sale(shop, "KP00001", DAY, [("FS001", 1, -1)])


def test_sale_denormalizes_item_name(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 5, 40000)])
    invoice = record_sale(shop, "KP00001", DAY, [("FS001", 1)])
    assert invoice.lines[0].item_name == "Flashdisk 128"


def test_empty_documents_rejected(shop):
    with pytest.raises(EmptyDocument):
        record_sale(shop, "KP00001", DAY, [])
    with pytest.raises(EmptyDocument):
        record_purchase(shop, "K500001", DAY, [])


def test_oversell_is_total_noop(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 3, 40000), ("MT001", 1, 400000)])
    with pytest.raises(InsufficientStock):
        # first line alone would fit; the document must be atomic
        record_sale(shop, "KP00001", DAY, [("MT001", 1), ("FS001", 5)])
    assert shop.read(lambda s: stock_level(s, "FS001")) == 3
    assert shop.read(lambda s: stock_level(s, "MT001")) == 1


def test_failed_sale_does_not_burn_a_code(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 2, 40000)])
    with pytest.raises(InsufficientStock):
        record_sale(shop, "KP00001", DAY, [("FS001", 99)])
    invoice = record_sale(shop, "KP00001", DAY, [("FS001", 1)])
    assert invoice.code == "FK00001"


def test_sale_to_unknown_customer(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 2, 40000)])
    with pytest.raises(UnknownParty):
        record_sale(shop, "KP99999", DAY, [("FS001", 1)])
    # a supplier cannot buy on a customer invoice
    with pytest.raises(UnknownParty):
        record_sale(shop, "K500001", DAY, [("FS001", 1)])


def test_subtotals_are_exact_integers(shop):
    record_purchase(shop, "K500001", DAY, [("FS001", 10, 40000), ("MT001", 3, 400000)])
    invoice = record_sale(shop, "KP00001", DAY, [("FS001", 3), ("MT001", 2)])
    assert [l.subtotal for l in invoice.lines] == [150000, 1000000]
    assert invoice.grand_total == 1150000
