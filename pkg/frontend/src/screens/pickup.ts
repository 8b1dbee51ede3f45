import type { ServiceOrder } from "../api.js";
import { freshKey } from "../api.js";
import { todayIso, type App } from "../app.js";
import { clear, el } from "../dom.js";
import { formatRupiah } from "../money.js";

export async function renderPickup(app: App, host: HTMLElement, codeArg?: string): Promise<void> {
  host.append(el("h1", {}, "Pengambilan Service"));

  const lookupForm = el("form", { class: "card" });
  const codeIn = el("input", { name: "service_code", type: "text", placeholder: "SR00001" });
  const findBtn = el("button", { type: "submit" }, "Cari");
  lookupForm.append(el("label", {}, "Kode Service", codeIn), findBtn);

  const panel = el("div", { id: "pickup-panel" });
  host.append(lookupForm, panel);

  async function showOrder(code: string): Promise<void> {
    clear(panel);
    const order = await app.client.getService(code);
    const head = el(
      "div",
      { class: "card" },
      el("h2", {}, order.code),
      el("p", {}, `${order.customer_name} — ${order.item_group}`),
      el("p", { class: "hint" }, `Status: ${order.state}`),
    );
    panel.append(head);

    if (order.state === "PICKED_UP") {
      head.append(el("p", {}, `Sudah diambil ${order.return_date ?? ""}`));
      const receipt = await app.client.pickupReceiptText(order.code);
      const printBtn = el("button", { type: "button", class: "print" }, "Cetak");
      printBtn.addEventListener("click", () => app.printText(receipt));
      panel.append(el("div", { class: "card" }, el("pre", { class: "server-text" }, receipt), printBtn));
      return;
    }

    if (order.state !== "COMPLETED") {
      // not done yet: say so and offer no payment control at all
      head.append(
        el("p", { class: "blocked" }, `Belum dapat diambil — pekerjaan masih ${order.state}`),
      );
      return;
    }

    panel.append(paymentCard(order));
  }

  function paymentCard(order: ServiceOrder): HTMLElement {
    const partsTable = el("table", {});
    partsTable.append(
      el(
        "tr",
        {},
        el("th", {}, "Part"),
        el("th", { class: "num" }, "Jumlah"),
        el("th", { class: "num" }, "Harga"),
        el("th", { class: "num" }, "Sub Total"),
      ),
    );
    for (const line of order.replaced_parts) {
      partsTable.append(
        el(
          "tr",
          {},
          el("td", {}, line.item_name),
          el("td", { class: "num" }, String(line.qty)),
          el("td", { class: "num" }, formatRupiah(line.unit_price)),
          el("td", { class: "num" }, formatRupiah(line.subtotal)),
        ),
      );
    }
    // figures below come from the order record; the receipt the server
    // issues at confirmation must agree with what was quoted here
    const quoted =
      order.replaced_parts.reduce((sum, line) => sum + line.subtotal, 0) + order.labor_fee;

    const dateIn = el("input", { name: "date", type: "date", value: todayIso() });
    const confirmBtn = el("button", { type: "button", id: "confirm-payment" }, "Konfirmasi Pembayaran");

    const card = el(
      "div",
      { class: "card payment" },
      partsTable,
      el("div", {}, `Ongkos Kerja : Rp. ${formatRupiah(order.labor_fee)}`),
      el("div", { id: "amount-due", class: "total-line" }, `Jumlah Bayar : Rp. ${formatRupiah(quoted)}`),
      el("label", {}, "Tanggal Ambil", dateIn),
      confirmBtn,
    );

    const draftKey = freshKey();
    confirmBtn.addEventListener("click", () => {
      void (async () => {
        try {
          const receipt = await app.client.pickupService(order.code, dateIn.value, draftKey);
          if (receipt.amount_due !== quoted) {
            app.showError(
              new Error(
                `Selisih total: layar Rp. ${formatRupiah(quoted)}, ` +
                  `server Rp. ${formatRupiah(receipt.amount_due)}`,
              ),
            );
          } else {
            app.showNotice(`${order.code} diambil, Rp. ${formatRupiah(receipt.amount_due)} dibayar`);
          }
          const text = await app.client.pickupReceiptText(order.code);
          clear(panel);
          const printBtn = el("button", { type: "button", class: "print" }, "Cetak");
          printBtn.addEventListener("click", () => app.printText(text));
          panel.append(
            el(
              "div",
              { class: "card", id: "pickup-receipt" },
              el("pre", { class: "server-text" }, text),
              printBtn,
            ),
          );
        } catch (err) {
          app.showError(err);
        }
      })();
    });
    return card;
  }

  lookupForm.addEventListener("submit", (ev) => {
    ev.preventDefault();
    const code = codeIn.value.trim().toUpperCase();
    if (code === "") return;
    void showOrder(code).catch((err) => app.showError(err, lookupForm));
  });

  if (codeArg) {
    codeIn.value = codeArg;
    await showOrder(codeArg).catch((err) => app.showError(err, lookupForm));
  }
}
