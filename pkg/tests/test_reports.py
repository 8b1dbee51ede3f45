"""Report builders and text rendering against the pinned golden files."""

import datetime as dt

import pytest

from plusshop.errors import InvalidRange, UnknownService
from plusshop.reports import (
    inventory_report,
    render_inventory_text,
    render_sales_text,
    render_service_text,
    sales_report,
    service_report,
)
from plusshop.seed import seed_demo
from plusshop.servicedesk import assign_technician, complete_service, pickup_service

from conftest import golden

DAY = dt.date(2008, 8, 5)


def test_sales_report_rows_and_total(seeded):
    rpt = seeded.read(lambda s: sales_report(s, DAY, DAY))
    assert len(rpt.rows) == 5
    assert [r.invoice_code for r in rpt.rows] == [
        "FK00001", "FK00002", "FK00002", "FK00002", "FK00003",
    ]
    assert [r.subtotal for r in rpt.rows] == [50000, 75000, 30000, 500000, 100000]
    assert rpt.grand_total == 755000


def test_sales_report_empty_day(seeded):
    day = dt.date(2008, 8, 6)
    rpt = seeded.read(lambda s: sales_report(s, day, day))
    assert rpt.rows == ()
    assert rpt.grand_total == 0


def test_sales_report_invalid_range(seeded):
    with pytest.raises(InvalidRange):
        seeded.read(lambda s: sales_report(s, DAY, dt.date(2008, 8, 4)))


def test_sales_report_golden(seeded):
    rpt = seeded.read(lambda s: sales_report(s, DAY, DAY))
    assert render_sales_text(rpt) == golden("sales_2008-08-05.txt")


def test_service_report_golden(seeded):
    rpt = seeded.read(lambda s: service_report(s, "SR00001"))
    assert render_service_text(rpt) == golden("service_SR00001.txt")


def test_service_report_unknown(seeded):
    with pytest.raises(UnknownService):
        seeded.read(lambda s: service_report(s, "SR99999"))


def test_service_report_after_pickup_fills_fields(seeded):
    assign_technician(seeded, "SR00001", "KT00001")
    complete_service(seeded, "SR00001", [("MS001", 1)], labor_fee=20000)
    pickup_service(seeded, "SR00001", dt.date(2008, 8, 9))
    rpt = seeded.read(lambda s: service_report(s, "SR00001"))
    text = render_service_text(rpt)
    assert "Tanggal Kembali : 09-Agustus-2008" in text
    assert "Biaya Service : 20.000" in text
    assert "Mouse Optik" in text


def test_rendering_is_pure(seeded):
    rpt = seeded.read(lambda s: sales_report(s, DAY, DAY))
    assert render_sales_text(rpt) == render_sales_text(rpt)


def test_structured_and_text_agree(seeded):
    rpt = seeded.read(lambda s: sales_report(s, DAY, DAY))
    doc = rpt.to_dict()
    assert doc["grand_total"] == 755000
    assert len(doc["rows"]) == 5
    text = render_sales_text(rpt)
    for row in doc["rows"]:
        assert row["invoice_code"] in text
        assert row["item_name"] in text
    assert "Rp. 755.000" in text


def test_inventory_report_after_scenario(seeded):
    rows = seeded.read(inventory_report)
    by_code = {r.item_code: r for r in rows}
    # purchased 10, one sold on FK00001
    assert by_code["FS001"].on_hand == 9
    assert by_code["MT001"].on_hand == 4
    assert [r.item_code for r in rows] == sorted(r.item_code for r in rows)
    text = render_inventory_text(rows)
    assert "LAPORAN PERSEDIAAN BARANG" in text
    assert "FS001" in text


def test_inventory_report_empty(store):
    assert store.read(inventory_report) == ()


def test_footer_uses_report_to_date(seeded):
    rpt = seeded.read(lambda s: sales_report(s, dt.date(2008, 8, 1), DAY))
    text = render_sales_text(rpt)
    assert "Palembang, 05/08/2008" in text
    assert "Yang Membuat" in text
    assert "Yang Menerima" in text
