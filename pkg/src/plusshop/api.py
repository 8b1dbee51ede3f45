"""HTTP facade over one LedgerStore.

Auth is a static role table: clients send X-Role, the role grants scopes
(read/master/purchase/sale/service) and each route requires one. Mutating
routes honor an Idempotency-Key header: a replay with the same key on the
same path returns the originally issued document instead of a new one.
"""

from __future__ import annotations

import datetime as dt
import threading
from typing import Any

from fastapi import Depends, FastAPI, Header, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from . import __version__
from .config import ShopConfig
from .errors import InvalidState, ShopError
from .inventory import stock_level
from .master import add_item, get_party, list_items, list_parties, register_party
from .models import PartyKind, ServiceState, receipt_for
from .reports import (
    inventory_report,
    render_intake_receipt_text,
    render_inventory_text,
    render_pickup_receipt_text,
    render_sales_text,
    render_service_text,
    sales_report,
    service_report,
)
from .servicedesk import (
    assign_technician,
    complete_service,
    get_order,
    intake_service,
    list_orders,
    pickup_service,
)
from .store import LedgerStore
from .trade import record_purchase, record_sale

# HTTP status per error code; validation problems are the client's fault,
# storage problems are ours.
STATUS_BY_CODE = {
    "MALFORMED_CODE": 400,
    "PAYLOAD_INVALID": 400,
    "EMPTY_DOCUMENT": 422,
    "EMPTY_FIELD": 422,
    "VALIDATION_ERROR": 422,
    "INVALID_RANGE": 422,
    "IMPORT_PARSE_ERROR": 422,
    "UNKNOWN_ITEM": 404,
    "UNKNOWN_PARTY": 404,
    "UNKNOWN_SERVICE": 404,
    "INSUFFICIENT_STOCK": 409,
    "INVALID_STATE": 409,
    "SEQUENCE_EXHAUSTED": 409,
    "FORBIDDEN": 403,
    "STORAGE_FAILURE": 500,
    "CORRUPT_JOURNAL": 500,
}


def error_body(code: str, message: str, detail: Any = None) -> dict:
    return {"error": {"code": code, "message": message, "detail": detail}}


class Forbidden(ShopError):
    code = "FORBIDDEN"


# --- request bodies ---


class PartyIn(BaseModel):
    kind: PartyKind
    name: str
    address: str = ""
    city: str = ""
    phone: str = ""


class ItemIn(BaseModel):
    category: str
    name: str
    unit_price: int
    initial_qty: int = 0


class LineIn(BaseModel):
    item_code: str
    qty: int
    unit_price: int | None = None


class PurchaseIn(BaseModel):
    supplier_code: str
    date: dt.date
    lines: list[LineIn] = Field(default_factory=list)


class SaleIn(BaseModel):
    customer_code: str
    date: dt.date
    lines: list[LineIn] = Field(default_factory=list)


class ServiceIn(BaseModel):
    customer_code: str
    date: dt.date
    item_group: str
    fault_description: str


class AssignIn(BaseModel):
    technician_code: str


class PartIn(BaseModel):
    item_code: str
    qty: int


class CompleteIn(BaseModel):
    parts: list[PartIn] = Field(default_factory=list)
    labor_fee: int = 0


class PickupIn(BaseModel):
    date: dt.date


class IdempotencyCache:
    """Remembers successful responses per (path, key) for replay.

    In-memory only: a restart forgets keys, which is acceptable because the
    journal itself is the durable record; the cache guards against network
    retries within one server run.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._seen: dict[tuple[str, str], tuple[int, Any]] = {}

    def get(self, path: str, key: str) -> tuple[int, Any] | None:
        with self._lock:
            return self._seen.get((path, key))

    def put(self, path: str, key: str, status: int, body: Any) -> None:
        with self._lock:
            self._seen[(path, key)] = (status, body)


def create_app(store: LedgerStore, config: ShopConfig | None = None) -> FastAPI:
    cfg = config or store.config
    app = FastAPI(title="plusshop", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    idem = IdempotencyCache()

    @app.exception_handler(ShopError)
    async def shop_error_handler(_request: Request, exc: ShopError):
        status = STATUS_BY_CODE.get(exc.code, 422)
        return JSONResponse(
            status_code=status,
            content=error_body(exc.code, exc.message, exc.detail),
        )

    @app.exception_handler(RequestValidationError)
    async def payload_handler(_request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content=error_body("PAYLOAD_INVALID", "request body or query invalid",
                               exc.errors()),
        )

    def require(scope: str):
        def check(x_role: str | None = Header(default=None)):
            if not x_role:
                raise Forbidden("missing X-Role header")
            scopes = cfg.scopes_for_role(x_role)
            if scopes is None:
                raise Forbidden(f"unknown role {x_role!r}")
            if scope not in scopes:
                raise Forbidden(f"role {x_role!r} lacks {scope!r} scope",
                                detail={"role": x_role, "scope": scope})
            return x_role

        return Depends(check)

    def replayed(request: Request) -> tuple[str, tuple[int, Any] | None]:
        key = request.headers.get("Idempotency-Key", "")
        if not key:
            return "", None
        return key, idem.get(request.url.path, key)

    def remember(request: Request, key: str, status: int, body: Any) -> None:
        if key and 200 <= status < 300:
            idem.put(request.url.path, key, status, body)

    def created(request: Request, response: Response, body: dict, key: str) -> dict:
        response.status_code = 201
        remember(request, key, 201, body)
        return body

    # --- health ---

    @app.get("/health")
    def health():
        return {
            "status": "ok",
            "version": __version__,
            "last_seq": store.last_seq,
        }

    # --- master data ---

    @app.post("/parties", status_code=201)
    def create_party(body: PartyIn, request: Request, response: Response,
                     _role: str = require("master")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        party = register_party(store, body.kind, body.name, body.address,
                               body.city, body.phone)
        return created(request, response, party.to_dict(), key)

    @app.get("/parties")
    def parties(kind: PartyKind | None = None, _role: str = require("read")):
        return [p.to_dict() for p in store.read(lambda s: list_parties(s, kind))]

    @app.get("/parties/{code}")
    def party_detail(code: str, _role: str = require("read")):
        return store.read(lambda s: get_party(s, code)).to_dict()

    @app.post("/items", status_code=201)
    def create_item(body: ItemIn, request: Request, response: Response,
                    _role: str = require("master")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        item = add_item(store, body.category, body.name, body.unit_price,
                        body.initial_qty)
        return created(request, response, item.to_dict(), key)

    @app.get("/items")
    def items(_role: str = require("read")):
        return [i.to_dict() for i in store.read(list_items)]

    @app.get("/stock/{item_code}/available")
    def stock_available_route(item_code: str, qty: int = Query(default=1, ge=1),
                              _role: str = require("read")):
        on_hand = store.read(lambda s: stock_level(s, item_code))
        return {"item_code": item_code, "qty": qty, "on_hand": on_hand,
                "available": on_hand >= qty}

    # --- trade documents ---

    @app.post("/purchases", status_code=201)
    def create_purchase(body: PurchaseIn, request: Request, response: Response,
                        _role: str = require("purchase")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        lines = [(l.item_code, l.qty, l.unit_price if l.unit_price is not None else 0)
                 for l in body.lines]
        order = record_purchase(store, body.supplier_code, body.date, lines)
        return created(request, response, order.to_dict(), key)

    @app.get("/purchases")
    def purchases(_role: str = require("read")):
        return store.read(
            lambda s: [s.purchases[c].to_dict() for c in sorted(s.purchases)]
        )

    @app.post("/sales", status_code=201)
    def create_sale(body: SaleIn, request: Request, response: Response,
                    _role: str = require("sale")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        lines = [
            (l.item_code, l.qty) if l.unit_price is None
            else (l.item_code, l.qty, l.unit_price)
            for l in body.lines
        ]
        invoice = record_sale(store, body.customer_code, body.date, lines)
        return created(request, response, invoice.to_dict(), key)

    @app.get("/sales")
    def sales(_role: str = require("read")):
        return store.read(lambda s: [s.sales[c].to_dict() for c in sorted(s.sales)])

    # --- service desk ---

    @app.post("/services", status_code=201)
    def create_service(body: ServiceIn, request: Request, response: Response,
                       _role: str = require("service")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        order = intake_service(store, body.customer_code, body.date,
                               body.item_group, body.fault_description)
        return created(request, response, order.to_dict(), key)

    @app.get("/services")
    def services(state: ServiceState | None = None, _role: str = require("read")):
        return [o.to_dict() for o in store.read(lambda s: list_orders(s, state))]

    @app.get("/services/{code}")
    def service_detail(code: str, _role: str = require("read")):
        return store.read(lambda s: get_order(s, code)).to_dict()

    @app.post("/services/{code}/assign")
    def assign(code: str, body: AssignIn, request: Request,
               _role: str = require("service")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        order = assign_technician(store, code, body.technician_code)
        doc = order.to_dict()
        remember(request, key, 200, doc)
        return doc

    @app.post("/services/{code}/complete")
    def complete(code: str, body: CompleteIn, request: Request,
                 _role: str = require("service")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        parts = [(p.item_code, p.qty) for p in body.parts]
        order = complete_service(store, code, parts, body.labor_fee)
        doc = order.to_dict()
        remember(request, key, 200, doc)
        return doc

    @app.post("/services/{code}/pickup")
    def pickup(code: str, body: PickupIn, request: Request,
               _role: str = require("service")):
        key, prior = replayed(request)
        if prior:
            return JSONResponse(status_code=prior[0], content=prior[1])
        receipt = pickup_service(store, code, body.date)
        doc = receipt.to_dict()
        remember(request, key, 200, doc)
        return doc

    # --- reports (structured by default, format=text for the printable form) ---

    @app.get("/reports/sales")
    def report_sales(date_from: dt.date = Query(alias="from"),
                     date_to: dt.date = Query(alias="to"),
                     format: str = "json", _role: str = require("read")):
        rpt = store.read(lambda s: sales_report(s, date_from, date_to))
        if format == "text":
            return PlainTextResponse(render_sales_text(rpt, city=cfg.city))
        return rpt.to_dict()

    @app.get("/reports/service/{code}")
    def report_service(code: str, format: str = "json", _role: str = require("read")):
        rpt = store.read(lambda s: service_report(s, code))
        if format == "text":
            return PlainTextResponse(render_service_text(rpt, letterhead=cfg.letterhead))
        return rpt.to_dict()

    @app.get("/reports/inventory")
    def report_inventory(format: str = "json", _role: str = require("read")):
        rows = store.read(inventory_report)
        if format == "text":
            return PlainTextResponse(render_inventory_text(rows))
        return [row.to_dict() for row in rows]

    # --- printable receipts ---

    @app.get("/receipts/service/{code}/intake")
    def intake_receipt(code: str, _role: str = require("read")):
        order = store.read(lambda s: get_order(s, code))
        return PlainTextResponse(render_intake_receipt_text(order, cfg.letterhead))

    @app.get("/receipts/service/{code}/pickup")
    def pickup_receipt(code: str, _role: str = require("read")):
        def fetch(s):
            order = get_order(s, code)
            if order.state != ServiceState.PICKED_UP:
                raise InvalidState(
                    f"service {code} has no pickup receipt yet",
                    current_state=order.state.value,
                )
            return receipt_for(order)

        receipt = store.read(fetch)
        return PlainTextResponse(render_pickup_receipt_text(receipt, cfg.letterhead))

    if cfg.ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=cfg.ui_dir, html=True), name="ui")

    return app
