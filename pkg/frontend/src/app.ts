// Application shell: top bar, hash router, error banner, print sheet.
// Every screen is a plain async function that fills the host element.

import { ApiError, Client, ROLES, type Role } from "./api.js";
import { clear, el, option } from "./dom.js";
import { renderMenu } from "./screens/menu.js";
import { renderParties } from "./screens/parties.js";
import { renderItems } from "./screens/items.js";
import { renderPurchase } from "./screens/purchase.js";
import { renderSale } from "./screens/sale.js";
import { renderIntake } from "./screens/intake.js";
import { renderBoard } from "./screens/board.js";
import { renderPickup } from "./screens/pickup.js";
import { renderReports } from "./screens/reports.js";

export interface AppOptions {
  baseUrl?: string;
  role?: Role;
}

const BASE_URL_KEY = "plusshop.apiBase";

function storedBaseUrl(): string | null {
  try {
    return typeof localStorage !== "undefined" ? localStorage.getItem(BASE_URL_KEY) : null;
  } catch {
    return null;
  }
}

declare global {
  interface Window {
    PLUSSHOP_API?: string;
  }
}

export class App {
  readonly client: Client;
  readonly root: HTMLElement;
  readonly screenHost: HTMLElement;
  private readonly flash: HTMLElement;
  private readonly printSheet: HTMLPreElement;

  constructor(root: HTMLElement, opts: AppOptions = {}) {
    this.root = root;
    const base = opts.baseUrl ?? window.PLUSSHOP_API ?? storedBaseUrl() ?? "";
    this.client = new Client({ baseUrl: base, role: opts.role ?? "admin" });

    clear(root);
    root.append(this.buildTopBar());
    this.flash = el("div", { id: "flash" });
    root.append(this.flash);
    this.screenHost = el("div", { id: "screen" });
    root.append(this.screenHost);
    this.printSheet = el("pre", { id: "print-sheet" });
    root.append(this.printSheet);

    window.addEventListener("hashchange", () => {
      void this.goto(location.hash);
    });
  }

  private buildTopBar(): HTMLElement {
    const brand = el("a", { href: "#/", class: "brand" }, "Computer Plus!");

    const roleSelect = el("select", { id: "role-select", title: "Peran (header X-Role)" });
    for (const r of ROLES) roleSelect.append(option(r, r));
    roleSelect.value = this.client.role;
    roleSelect.addEventListener("change", () => {
      this.client.role = roleSelect.value as Role;
    });

    const baseInput = el("input", {
      id: "api-base",
      type: "text",
      placeholder: "API: origin ini",
      title: "Alamat server API; kosongkan untuk origin yang sama",
    });
    baseInput.value = this.client.baseUrl;
    baseInput.addEventListener("change", () => {
      this.client.baseUrl = baseInput.value.trim().replace(/\/+$/, "");
      try {
        if (typeof localStorage !== "undefined") {
          localStorage.setItem(BASE_URL_KEY, this.client.baseUrl);
        }
      } catch {
        // storage may be unavailable, the session value still applies
      }
    });

    return el(
      "header",
      { id: "topbar" },
      brand,
      el("span", { class: "spacer" }),
      el("label", { class: "bar-field" }, "Peran ", roleSelect),
      el("label", { class: "bar-field" }, "Server ", baseInput),
    );
  }

  /** Route and render. Returns when the screen has finished loading. */
  async goto(hash: string): Promise<void> {
    const parts = hash.replace(/^#\/?/, "").split("/").filter((p) => p !== "");
    this.clearFlash();
    clear(this.screenHost);
    try {
      if (parts.length === 0) {
        renderMenu(this, this.screenHost);
      } else if (parts[0] === "parties" && parts[1]) {
        await renderParties(this, this.screenHost, parts[1]);
      } else if (parts[0] === "items") {
        await renderItems(this, this.screenHost);
      } else if (parts[0] === "purchases") {
        await renderPurchase(this, this.screenHost);
      } else if (parts[0] === "sales") {
        await renderSale(this, this.screenHost);
      } else if (parts[0] === "service" && parts[1] === "intake") {
        await renderIntake(this, this.screenHost);
      } else if (parts[0] === "service" && parts[1] === "board") {
        await renderBoard(this, this.screenHost);
      } else if (parts[0] === "service" && parts[1] === "pickup") {
        await renderPickup(this, this.screenHost, parts[2]);
      } else if (parts[0] === "reports") {
        await renderReports(this, this.screenHost);
      } else {
        renderMenu(this, this.screenHost);
      }
    } catch (err) {
      this.showError(err);
    }
  }

  /**
   * Surface a failure. ApiError codes are shown verbatim; when the error
   * names a field, the matching input inside `scope` is highlighted.
   */
  showError(err: unknown, scope?: HTMLElement): void {
    clear(this.flash);
    const banner = el("div", { class: "banner error" });
    if (err instanceof ApiError) {
      banner.append(el("code", {}, err.code), ` ${err.message}`);
      if (scope) {
        for (const name of fieldNamesFrom(err.detail)) {
          const input = scope.querySelector(`[name="${name}"]`);
          if (input) input.classList.add("field-error");
        }
      }
    } else {
      banner.append(err instanceof Error ? err.message : String(err));
    }
    this.flash.append(banner);
  }

  showNotice(text: string): void {
    clear(this.flash);
    this.flash.append(el("div", { class: "banner notice" }, text));
  }

  clearFlash(): void {
    clear(this.flash);
  }

  /** Put the server's fixed-width text on the print sheet and print it. */
  printText(text: string): void {
    this.printSheet.textContent = text;
    if (typeof window.print === "function") window.print();
  }
}

/** Pull field names out of an ApiError detail for input highlighting. */
export function fieldNamesFrom(detail: unknown): string[] {
  if (typeof detail === "string") return [detail];
  if (Array.isArray(detail)) {
    const names: string[] = [];
    for (const entry of detail) {
      const loc = (entry as { loc?: unknown })?.loc;
      if (Array.isArray(loc) && loc.length > 0) {
        names.push(String(loc[loc.length - 1]));
      }
    }
    return names;
  }
  return [];
}

/** Drop any previous highlight inside a form before revalidating. */
export function clearFieldErrors(scope: HTMLElement): void {
  for (const node of scope.querySelectorAll(".field-error")) {
    node.classList.remove("field-error");
  }
}

export function initApp(root: HTMLElement, opts: AppOptions = {}): App {
  const app = new App(root, opts);
  void app.goto(location.hash || "#/");
  return app;
}

export function todayIso(): string {
  return new Date().toISOString().slice(0, 10);
}
