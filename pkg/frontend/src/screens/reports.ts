import { todayIso, type App } from "../app.js";
import { el } from "../dom.js";

export async function renderReports(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Laporan"));

  const output = el("pre", { id: "report-output", class: "server-text" });
  const printBtn = el("button", { type: "button", class: "print", disabled: "" }, "Cetak");
  printBtn.addEventListener("click", () => {
    if (output.textContent) app.printText(output.textContent);
  });

  function show(text: string): void {
    output.textContent = text;
    printBtn.removeAttribute("disabled");
  }

  // sales over a period
  const salesForm = el("form", { class: "card report-picker" });
  const fromIn = el("input", { name: "from", type: "date", value: todayIso() });
  const toIn = el("input", { name: "to", type: "date", value: todayIso() });
  salesForm.append(
    el("h2", {}, "Laporan Penjualan"),
    el("label", {}, "Dari", fromIn),
    el("label", {}, "Sampai", toIn),
    el("button", { type: "submit" }, "Tampilkan"),
  );
  salesForm.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void app.client
      .salesReportText(fromIn.value, toIn.value)
      .then(show)
      .catch((err) => app.showError(err, salesForm));
  });

  // one service order
  const serviceForm = el("form", { class: "card report-picker" });
  const codeIn = el("input", { name: "service_code", type: "text", placeholder: "SR00001" });
  serviceForm.append(
    el("h2", {}, "Laporan Service"),
    el("label", {}, "Kode", codeIn),
    el("button", { type: "submit" }, "Tampilkan"),
  );
  serviceForm.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void app.client
      .serviceReportText(codeIn.value.trim().toUpperCase())
      .then(show)
      .catch((err) => app.showError(err, serviceForm));
  });

  // stock levels right now
  const invForm = el("form", { class: "card report-picker" });
  invForm.append(el("h2", {}, "Laporan Stok"), el("button", { type: "submit" }, "Tampilkan"));
  invForm.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void app.client
      .inventoryReportText()
      .then(show)
      .catch((err) => app.showError(err));
  });

  host.append(
    el("div", { class: "report-pickers" }, salesForm, serviceForm, invForm),
    el("div", { class: "card" }, output, printBtn),
  );
}
