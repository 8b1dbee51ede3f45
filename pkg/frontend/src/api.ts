// HTTP client for the plusshop API. All money fields are integer rupiah,
// all dates are ISO yyyy-mm-dd strings; both are passed through untouched.

export type PartyKind = "CUSTOMER" | "SUPPLIER" | "TECHNICIAN";
export type ServiceState = "RECEIVED" | "IN_REPAIR" | "COMPLETED" | "PICKED_UP";

export interface Party {
  code: string;
  kind: PartyKind;
  name: string;
  address: string;
  city: string;
  phone: string;
}

export interface Item {
  code: string;
  name: string;
  unit_price: number;
  stock_qty: number;
}

export interface DocLine {
  item_code: string;
  item_name: string;
  qty: number;
  unit_price: number;
  subtotal: number;
}

export interface Invoice {
  code: string;
  customer_code: string;
  customer_name: string;
  date: string;
  lines: DocLine[];
  grand_total: number;
}

export interface Purchase {
  code: string;
  supplier_code: string;
  supplier_name: string;
  date: string;
  lines: DocLine[];
  grand_total: number;
}

export interface ServiceOrder {
  code: string;
  customer_code: string;
  customer_name: string;
  customer_phone: string;
  received_date: string;
  item_group: string;
  fault_description: string;
  state: ServiceState;
  technician_code: string | null;
  technician_name: string | null;
  replaced_parts: DocLine[];
  labor_fee: number;
  return_date: string | null;
}

export interface PickupReceipt {
  service_code: string;
  customer_name: string;
  customer_phone: string;
  received_date: string;
  return_date: string;
  replaced_parts: DocLine[];
  parts_total: number;
  labor_fee: number;
  amount_due: number;
}

export interface StockProbe {
  item_code: string;
  qty: number;
  on_hand: number;
  available: boolean;
}

export interface Health {
  status: string;
  version: string;
  last_seq: number;
}

export interface SaleLineIn {
  item_code: string;
  qty: number;
  unit_price?: number;
}

export interface PurchaseLineIn {
  item_code: string;
  qty: number;
  unit_price: number;
}

/** Server-side rejection; `code` is the machine code from the error body. */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail: unknown;

  constructor(status: number, code: string, message: string, detail: unknown) {
    super(message);
    this.name = "ApiError";
    this.status = status;
    this.code = code;
    this.detail = detail;
  }
}

export const ROLES = ["admin", "clerk", "teknisi", "gudang", "pimpinan"] as const;
export type Role = (typeof ROLES)[number];

export interface ClientOptions {
  baseUrl?: string;
  role?: Role;
}

function freshKey(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
    return crypto.randomUUID();
  }
  return `${Date.now()}-${Math.random().toString(36).slice(2)}`;
}

export class Client {
  baseUrl: string;
  role: Role;

  constructor(opts: ClientOptions = {}) {
    this.baseUrl = (opts.baseUrl ?? "").replace(/\/+$/, "");
    this.role = opts.role ?? "admin";
  }

  private async send(
    method: string,
    path: string,
    body?: unknown,
    idempotencyKey?: string,
  ): Promise<Response> {
    const headers: Record<string, string> = { "X-Role": this.role };
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      headers["Content-Type"] = "application/json";
      init.body = JSON.stringify(body);
    }
    if (idempotencyKey) headers["Idempotency-Key"] = idempotencyKey;
    const resp = await fetch(this.baseUrl + path, init);
    if (!resp.ok) {
      let code = "HTTP_ERROR";
      let message = `${resp.status} ${resp.statusText}`;
      let detail: unknown = null;
      try {
        const parsed = await resp.json();
        if (parsed && parsed.error) {
          code = parsed.error.code ?? code;
          message = parsed.error.message ?? message;
          detail = parsed.error.detail ?? null;
        }
      } catch {
        // non-JSON body, keep the status line
      }
      throw new ApiError(resp.status, code, message, detail);
    }
    return resp;
  }

  private async getJson<T>(path: string): Promise<T> {
    return (await this.send("GET", path)).json() as Promise<T>;
  }

  private async postJson<T>(path: string, body: unknown, key?: string): Promise<T> {
    return (await this.send("POST", path, body, key ?? freshKey())).json() as Promise<T>;
  }

  private async getText(path: string): Promise<string> {
    return (await this.send("GET", path)).text();
  }

  health(): Promise<Health> {
    return this.getJson("/health");
  }

  listParties(kind?: PartyKind): Promise<Party[]> {
    return this.getJson(kind ? `/parties?kind=${kind}` : "/parties");
  }

  createParty(
    kind: PartyKind,
    fields: { name: string; address: string; city: string; phone: string },
    key?: string,
  ): Promise<Party> {
    return this.postJson("/parties", { kind, ...fields }, key);
  }

  listItems(): Promise<Item[]> {
    return this.getJson("/items");
  }

  createItem(
    fields: { category: string; name: string; unit_price: number; initial_qty: number },
    key?: string,
  ): Promise<Item> {
    return this.postJson("/items", fields, key);
  }

  stockAvailable(itemCode: string, qty: number): Promise<StockProbe> {
    return this.getJson(`/stock/${encodeURIComponent(itemCode)}/available?qty=${qty}`);
  }

  recordPurchase(
    supplierCode: string,
    date: string,
    lines: PurchaseLineIn[],
    key?: string,
  ): Promise<Purchase> {
    return this.postJson("/purchases", { supplier_code: supplierCode, date, lines }, key);
  }

  recordSale(
    customerCode: string,
    date: string,
    lines: SaleLineIn[],
    key?: string,
  ): Promise<Invoice> {
    return this.postJson("/sales", { customer_code: customerCode, date, lines }, key);
  }

  intakeService(
    fields: {
      customer_code: string;
      date: string;
      item_group: string;
      fault_description: string;
    },
    key?: string,
  ): Promise<ServiceOrder> {
    return this.postJson("/services", fields, key);
  }

  listServices(state?: ServiceState): Promise<ServiceOrder[]> {
    return this.getJson(state ? `/services?state=${state}` : "/services");
  }

  getService(code: string): Promise<ServiceOrder> {
    return this.getJson(`/services/${encodeURIComponent(code)}`);
  }

  assignTechnician(code: string, technicianCode: string, key?: string): Promise<ServiceOrder> {
    return this.postJson(
      `/services/${encodeURIComponent(code)}/assign`,
      { technician_code: technicianCode },
      key,
    );
  }

  completeService(
    code: string,
    parts: { item_code: string; qty: number }[],
    laborFee: number,
    key?: string,
  ): Promise<ServiceOrder> {
    return this.postJson(
      `/services/${encodeURIComponent(code)}/complete`,
      { parts, labor_fee: laborFee },
      key,
    );
  }

  pickupService(code: string, date: string, key?: string): Promise<PickupReceipt> {
    return this.postJson(`/services/${encodeURIComponent(code)}/pickup`, { date }, key);
  }

  salesReportText(from: string, to: string): Promise<string> {
    return this.getText(`/reports/sales?from=${from}&to=${to}&format=text`);
  }

  serviceReportText(code: string): Promise<string> {
    return this.getText(`/reports/service/${encodeURIComponent(code)}?format=text`);
  }

  inventoryReportText(): Promise<string> {
    return this.getText("/reports/inventory?format=text");
  }

  intakeReceiptText(code: string): Promise<string> {
    return this.getText(`/receipts/service/${encodeURIComponent(code)}/intake`);
  }

  pickupReceiptText(code: string): Promise<string> {
    return this.getText(`/receipts/service/${encodeURIComponent(code)}/pickup`);
  }
}

export { freshKey };
