"""CLI behavior: outputs, exit codes, parity with the API text reports."""

import json

from click.testing import CliRunner

from plusshop.cli import main

from conftest import golden

AT = "2008-08-05T08:00:00+07:00"


def run(*args):
    return CliRunner().invoke(main, list(args))


def seed(journal):
    res = run("--journal", str(journal), "seed-demo", "--at", AT)
    assert res.exit_code == 0, res.output
    return res


def test_seed_demo_summary(tmp_path):
    res = seed(tmp_path / "j.plusledger")
    summary = json.loads(res.stdout)
    assert summary["sales"] == ["FK00001", "FK00002", "FK00003"]
    assert summary["service"] == "SR00001"
    assert summary["events"] == 24


def test_seed_demo_is_deterministic(tmp_path):
    a = tmp_path / "a.plusledger"
    b = tmp_path / "b.plusledger"
    seed(a)
    seed(b)
    assert a.read_bytes() == b.read_bytes()


def test_report_sales_matches_golden(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "report", "sales",
              "--from", "2008-08-05", "--to", "2008-08-05")
    assert res.exit_code == 0
    assert res.stdout == golden("sales_2008-08-05.txt")


def test_report_service_matches_golden(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "report", "service", "SR00001")
    assert res.exit_code == 0
    assert res.stdout == golden("service_SR00001.txt")


def test_cli_bytes_equal_api_bytes(tmp_path):
    from fastapi.testclient import TestClient

    from plusshop.api import create_app
    from plusshop.store import LedgerStore

    journal = tmp_path / "j.plusledger"
    seed(journal)

    cli_sales = run("--journal", str(journal), "report", "sales",
                    "--from", "2008-08-05", "--to", "2008-08-05").stdout
    cli_service = run("--journal", str(journal), "report", "service", "SR00001").stdout
    cli_inventory = run("--journal", str(journal), "report", "inventory").stdout

    with LedgerStore(journal) as store:
        with TestClient(create_app(store)) as client:
            h = {"X-Role": "pimpinan"}
            api_sales = client.get(
                "/reports/sales",
                params={"from": "2008-08-05", "to": "2008-08-05", "format": "text"},
                headers=h).text
            api_service = client.get(
                "/reports/service/SR00001", params={"format": "text"}, headers=h).text
            api_inventory = client.get(
                "/reports/inventory", params={"format": "text"}, headers=h).text

    assert cli_sales == api_sales
    assert cli_service == api_service
    assert cli_inventory == api_inventory


def test_report_json_mode(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "report", "sales",
              "--from", "2008-08-05", "--to", "2008-08-05", "--json")
    doc = json.loads(res.stdout)
    assert doc["grand_total"] == 755000


def test_import_command(tmp_path):
    journal = tmp_path / "j.plusledger"
    legacy = tmp_path / "legacy.csv"
    legacy.write_text(
        "kind,name,address,city,phone\n"
        "supplier,Mustacom,Dempo Luar,Palembang,0711323232\n",
        encoding="utf-8",
    )
    res = run("--journal", str(journal), "import", str(legacy))
    assert res.exit_code == 0
    assert res.stdout.strip() == "1 events"


def test_import_empty_file(tmp_path):
    journal = tmp_path / "j.plusledger"
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    res = run("--journal", str(journal), "import", str(empty))
    assert res.exit_code == 0
    assert res.stdout.strip() == "0 events"


def test_guard_failure_exits_3(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "report", "service", "SR99999")
    assert res.exit_code == 3
    assert "UNKNOWN_SERVICE" in res.stderr
    assert res.stdout == ""


def test_parse_failure_exits_2(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "report", "sales",
              "--from", "soon", "--to", "2008-08-05")
    assert res.exit_code == 2
    assert "VALIDATION_ERROR" in res.stderr


def test_import_parse_failure_exits_2(tmp_path):
    journal = tmp_path / "j.plusledger"
    bad = tmp_path / "bad.csv"
    bad.write_text("kind,name\ngadget,Thing\n", encoding="utf-8")
    res = run("--journal", str(journal), "import", str(bad))
    assert res.exit_code == 2
    assert "IMPORT_PARSE_ERROR" in res.stderr


def test_corrupt_journal_exits_4(tmp_path):
    journal = tmp_path / "j.plusledger"
    journal.write_text("NOT A LEDGER\n", encoding="utf-8")
    res = run("--journal", str(journal), "report", "inventory")
    assert res.exit_code == 4
    assert "CORRUPT_JOURNAL" in res.stderr


def test_snapshot_command(tmp_path):
    journal = tmp_path / "j.plusledger"
    seed(journal)
    res = run("--journal", str(journal), "snapshot")
    assert res.exit_code == 0
    from pathlib import Path

    snap = Path(res.stdout.strip())
    assert snap.exists()
    assert snap.name == "snap-000000024.json"
