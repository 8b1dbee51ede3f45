"""HTTP surface: roles, errors, idempotency, reports over the wire."""

from conftest import golden

ADMIN = {"X-Role": "admin"}


def post_json(client, path, payload, role="admin", **extra_headers):
    headers = {"X-Role": role, **extra_headers}
    return client.post(path, json=payload, headers=headers)


def test_health_is_open(client):
    r = client.get("/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["last_seq"] == 0


def test_missing_role_header_forbidden(seeded_client):
    r = seeded_client.get("/items")
    assert r.status_code == 403
    assert r.json()["error"]["code"] == "FORBIDDEN"


def test_unknown_role_forbidden(seeded_client):
    r = seeded_client.get("/items", headers={"X-Role": "hacker"})
    assert r.status_code == 403


def test_pimpinan_reads_but_cannot_write(seeded_client):
    assert seeded_client.get("/items", headers={"X-Role": "pimpinan"}).status_code == 200
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP00001", "date": "2008-08-05",
                   "lines": [{"item_code": "FS001", "qty": 1}]},
                  role="pimpinan")
    assert r.status_code == 403
    assert r.json()["error"]["code"] == "FORBIDDEN"


def test_teknisi_service_but_not_sale(seeded_client):
    r = post_json(seeded_client, "/services/SR00001/assign",
                  {"technician_code": "KT00001"}, role="teknisi")
    assert r.status_code == 200
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP00001", "date": "2008-08-05",
                   "lines": [{"item_code": "FS001", "qty": 1}]},
                  role="teknisi")
    assert r.status_code == 403


def test_gudang_purchase_but_not_master(seeded_client):
    r = post_json(seeded_client, "/purchases",
                  {"supplier_code": "K500001", "date": "2008-08-06",
                   "lines": [{"item_code": "FS001", "qty": 5, "unit_price": 40000}]},
                  role="gudang")
    assert r.status_code == 201
    r = post_json(seeded_client, "/items",
                  {"category": "PR", "name": "Printer", "unit_price": 900000},
                  role="gudang")
    assert r.status_code == 403


def test_party_and_item_creation(client):
    r = post_json(client, "/parties",
                  {"kind": "CUSTOMER", "name": "Syaprina", "phone": "07117919386"})
    assert r.status_code == 201
    assert r.json()["code"] == "KP00001"

    r = post_json(client, "/items",
                  {"category": "FS", "name": "Flashdisk 128", "unit_price": 50000,
                   "initial_qty": 3})
    assert r.status_code == 201
    assert r.json() == {
        "code": "FS001", "name": "Flashdisk 128", "unit_price": 50000, "stock_qty": 3,
    }

    r = client.get("/parties", params={"kind": "CUSTOMER"}, headers=ADMIN)
    assert [p["code"] for p in r.json()] == ["KP00001"]


def test_stock_availability_query(seeded_client):
    r = seeded_client.get("/stock/FS001/available", params={"qty": 9}, headers=ADMIN)
    assert r.json() == {"item_code": "FS001", "qty": 9, "on_hand": 9, "available": True}
    r = seeded_client.get("/stock/FS001/available", params={"qty": 10}, headers=ADMIN)
    assert r.json()["available"] is False
    r = seeded_client.get("/stock/ZZ999/available", headers=ADMIN)
    assert r.status_code == 404
    assert r.json()["error"]["code"] == "UNKNOWN_ITEM"


def test_sale_fk00002_totals_605000(seeded_client):
    # the seeded journal already holds three invoices; this posts the same
    # line set as FK00002 again, as a new document
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP00002", "date": "2008-08-05",
                   "lines": [{"item_code": "FS002", "qty": 1},
                             {"item_code": "MS002", "qty": 1},
                             {"item_code": "MT001", "qty": 1}]})
    assert r.status_code == 201
    body = r.json()
    assert body["grand_total"] == 605000
    assert body["code"] == "FK00004"


def test_insufficient_stock_is_409(seeded_client):
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP00001", "date": "2008-08-05",
                   "lines": [{"item_code": "MT001", "qty": 99}]})
    assert r.status_code == 409
    assert r.json()["error"]["code"] == "INSUFFICIENT_STOCK"


def test_unknown_party_is_404(seeded_client):
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP99999", "date": "2008-08-05",
                   "lines": [{"item_code": "FS001", "qty": 1}]})
    assert r.status_code == 404
    assert r.json()["error"]["code"] == "UNKNOWN_PARTY"


def test_malformed_payload_is_400(seeded_client):
    r = post_json(seeded_client, "/sales", {"customer_code": "KP00001"})
    assert r.status_code == 400
    assert r.json()["error"]["code"] == "PAYLOAD_INVALID"


def test_empty_sale_is_422(seeded_client):
    r = post_json(seeded_client, "/sales",
                  {"customer_code": "KP00001", "date": "2008-08-05", "lines": []})
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "EMPTY_DOCUMENT"


def test_service_lifecycle_over_http(seeded_client):
    c = seeded_client
    # pickup straight from RECEIVED must be refused
    r = post_json(c, "/services/SR00001/pickup", {"date": "2008-08-09"})
    assert r.status_code == 409
    err = r.json()["error"]
    assert err["code"] == "INVALID_STATE"
    assert "RECEIVED" in (err["detail"] or "") or "RECEIVED" in err["message"]

    r = post_json(c, "/services/SR00001/assign", {"technician_code": "KT00001"})
    assert r.status_code == 200
    assert r.json()["state"] == "IN_REPAIR"

    r = post_json(c, "/services/SR00001/complete",
                  {"parts": [{"item_code": "MS001", "qty": 1}], "labor_fee": 20000})
    assert r.status_code == 200
    assert r.json()["state"] == "COMPLETED"

    r = post_json(c, "/services/SR00001/pickup", {"date": "2008-08-09"})
    assert r.status_code == 200
    body = r.json()
    assert body["amount_due"] == 25000 + 20000
    assert body["return_date"] == "2008-08-09"

    r = c.get("/services/SR00001", headers=ADMIN)
    assert r.json()["state"] == "PICKED_UP"

    r = c.get("/receipts/service/SR00001/pickup", headers=ADMIN)
    assert r.status_code == 200
    assert "KWITANSI PEMBAYARAN SERVICE" in r.text
    assert "Jumlah Bayar : Rp. 45.000" in r.text


def test_intake_receipt_carries_service_code(seeded_client):
    r = seeded_client.get("/receipts/service/SR00001/intake", headers=ADMIN)
    assert r.status_code == 200
    assert "KWITANSI SERVICE" in r.text
    assert "SR00001" in r.text


def test_pickup_receipt_before_pickup_is_409(seeded_client):
    r = seeded_client.get("/receipts/service/SR00001/pickup", headers=ADMIN)
    assert r.status_code == 409
    assert r.json()["error"]["code"] == "INVALID_STATE"


def test_sales_report_json_and_text(seeded_client):
    r = seeded_client.get("/reports/sales",
                          params={"from": "2008-08-05", "to": "2008-08-05"},
                          headers=ADMIN)
    assert r.status_code == 200
    assert r.json()["grand_total"] == 755000

    r = seeded_client.get("/reports/sales",
                          params={"from": "2008-08-05", "to": "2008-08-05",
                                  "format": "text"},
                          headers=ADMIN)
    assert r.headers["content-type"].startswith("text/plain")
    assert r.text == golden("sales_2008-08-05.txt")


def test_service_report_text_matches_golden(seeded_client):
    r = seeded_client.get("/reports/service/SR00001", params={"format": "text"},
                          headers=ADMIN)
    assert r.text == golden("service_SR00001.txt")


def test_inventory_report_routes(seeded_client):
    r = seeded_client.get("/reports/inventory", headers=ADMIN)
    by_code = {row["item_code"]: row for row in r.json()}
    assert by_code["FS001"]["on_hand"] == 9
    r = seeded_client.get("/reports/inventory", params={"format": "text"}, headers=ADMIN)
    assert "LAPORAN PERSEDIAAN BARANG" in r.text


def test_invalid_report_range_is_422(seeded_client):
    r = seeded_client.get("/reports/sales",
                          params={"from": "2008-08-06", "to": "2008-08-05"},
                          headers=ADMIN)
    assert r.status_code == 422
    assert r.json()["error"]["code"] == "INVALID_RANGE"


def test_idempotent_resubmission_returns_original(seeded_client):
    payload = {"customer_code": "KP00001", "date": "2008-08-05",
               "lines": [{"item_code": "FS001", "qty": 1}]}
    key = {"Idempotency-Key": "retry-123"}
    first = post_json(seeded_client, "/sales", payload, **key)
    assert first.status_code == 201
    seq_after = seeded_client.get("/health").json()["last_seq"]

    again = post_json(seeded_client, "/sales", payload, **key)
    assert again.status_code == 201
    assert again.json() == first.json()
    # no new event, no new code
    assert seeded_client.get("/health").json()["last_seq"] == seq_after

    # a different key is a different business request
    other = post_json(seeded_client, "/sales", payload,
                      **{"Idempotency-Key": "retry-456"})
    assert other.json()["code"] != first.json()["code"]


def test_failed_requests_are_not_replayed(seeded_client):
    payload = {"customer_code": "KP00001", "date": "2008-08-05",
               "lines": [{"item_code": "MT001", "qty": 99}]}
    key = {"Idempotency-Key": "retry-789"}
    assert post_json(seeded_client, "/sales", payload, **key).status_code == 409
    # after restocking, the same key may succeed: failures are not cached
    post_json(seeded_client, "/purchases",
              {"supplier_code": "K500001", "date": "2008-08-06",
               "lines": [{"item_code": "MT001", "qty": 200, "unit_price": 400000}]})
    assert post_json(seeded_client, "/sales", payload, **key).status_code == 201
