import type { Item, Party, ServiceOrder, ServiceState } from "../api.js";
import { freshKey } from "../api.js";
import type { App } from "../app.js";
import { clear, el, option } from "../dom.js";
import { parseRupiah } from "../money.js";

const COLUMNS: { state: ServiceState; label: string }[] = [
  { state: "RECEIVED", label: "Diterima" },
  { state: "IN_REPAIR", label: "Dikerjakan" },
  { state: "COMPLETED", label: "Selesai" },
  { state: "PICKED_UP", label: "Diambil" },
];

export async function renderBoard(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Papan Service"));

  const [technicians, itemList] = await Promise.all([
    app.client.listParties("TECHNICIAN"),
    app.client.listItems(),
  ]);

  const columnsHost = el("div", { class: "board" });
  host.append(columnsHost);

  async function refresh(): Promise<void> {
    const orders = await app.client.listServices();
    clear(columnsHost);
    for (const { state, label } of COLUMNS) {
      const column = el("section", { class: "board-column", "data-state": state });
      column.append(el("h2", {}, label));
      for (const order of orders.filter((o) => o.state === state)) {
        column.append(buildCard(order));
      }
      columnsHost.append(column);
    }
  }

  function buildCard(order: ServiceOrder): HTMLElement {
    const card = el(
      "div",
      { class: "card service-card", "data-code": order.code },
      el("h3", {}, order.code),
      el("p", {}, `${order.customer_name} — ${order.item_group}`),
      el("p", { class: "fault" }, order.fault_description),
    );
    if (order.technician_name) {
      card.append(el("p", { class: "hint" }, `Teknisi: ${order.technician_name}`));
    }
    if (order.state === "RECEIVED") card.append(assignControls(order));
    if (order.state === "IN_REPAIR") card.append(completeControls(order));
    if (order.state === "COMPLETED") {
      card.append(el("a", { href: `#/service/pickup/${order.code}` }, "Ke Pengambilan →"));
    }
    if (order.state === "PICKED_UP" && order.return_date) {
      card.append(el("p", { class: "hint" }, `Diambil ${order.return_date}`));
    }
    return card;
  }

  function assignControls(order: ServiceOrder): HTMLElement {
    const techSel = el("select", { name: "technician_code" });
    techSel.append(option("", "-- teknisi --"));
    for (const t of technicians as Party[]) techSel.append(option(t.code, `${t.code} ${t.name}`));
    const btn = el("button", { type: "button", class: "assign" }, "Tugaskan");
    btn.addEventListener("click", () => {
      void (async () => {
        try {
          await app.client.assignTechnician(order.code, techSel.value, freshKey());
          app.showNotice(`${order.code} ditugaskan`);
          await refresh();
        } catch (err) {
          app.showError(err);
        }
      })();
    });
    return el("div", { class: "card-actions" }, techSel, btn);
  }

  function completeControls(order: ServiceOrder): HTMLElement {
    const parts: { item_code: string; qty: number }[] = [];
    const partsList = el("ul", { class: "parts" });

    const itemSel = el("select", { name: "part_item" });
    itemSel.append(option("", "-- part --"));
    for (const it of itemList as Item[]) {
      itemSel.append(option(it.code, `${it.code} ${it.name}`));
    }
    const qtyIn = el("input", { name: "part_qty", type: "number", min: "1", value: "1" });
    const addBtn = el("button", { type: "button", class: "add-part" }, "Tambah Part");
    addBtn.addEventListener("click", () => {
      const code = itemSel.value;
      const qty = Number(qtyIn.value);
      if (code === "" || !Number.isInteger(qty) || qty < 1) return;
      parts.push({ item_code: code, qty });
      partsList.append(el("li", {}, `${code} × ${qty}`));
    });

    const laborIn = el("input", { name: "labor_fee", type: "text", placeholder: "0" });
    const doneBtn = el("button", { type: "button", class: "complete" }, "Selesai");
    doneBtn.addEventListener("click", () => {
      const labor = parseRupiah(laborIn.value || "0");
      if (labor === null) {
        laborIn.classList.add("field-error");
        return;
      }
      void (async () => {
        try {
          await app.client.completeService(order.code, parts, labor, freshKey());
          app.showNotice(`${order.code} selesai dikerjakan`);
          await refresh();
        } catch (err) {
          app.showError(err);
        }
      })();
    });

    return el(
      "div",
      { class: "card-actions" },
      el("div", {}, itemSel, qtyIn, addBtn),
      partsList,
      el("label", {}, "Ongkos ", laborIn),
      doneBtn,
    );
  }

  await refresh();
}
