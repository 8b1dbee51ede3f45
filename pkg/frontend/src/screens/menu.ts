import type { App } from "../app.js";
import { el } from "../dom.js";

function section(title: string, links: [string, string][]): HTMLElement {
  const list = el("ul", {});
  for (const [href, label] of links) {
    list.append(el("li", {}, el("a", { href }, label)));
  }
  return el("section", { class: "menu-section" }, el("h2", {}, title), list);
}

export function renderMenu(_app: App, host: HTMLElement): void {
  host.append(
    el("h1", {}, "Menu Utama"),
    el(
      "div",
      { class: "menu-grid" },
      section("Master Data", [
        ["#/parties/customer", "Pelanggan"],
        ["#/parties/supplier", "Supplier"],
        ["#/parties/technician", "Teknisi"],
        ["#/items", "Barang & Stok"],
      ]),
      section("Transaksi", [
        ["#/sales/new", "Penjualan"],
        ["#/purchases/new", "Pembelian"],
      ]),
      section("Service", [
        ["#/service/intake", "Terima Service"],
        ["#/service/board", "Papan Service"],
        ["#/service/pickup", "Pengambilan"],
      ]),
      section("Laporan", [["#/reports", "Laporan"]]),
    ),
  );
}
