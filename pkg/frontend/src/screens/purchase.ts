import type { Item, PurchaseLineIn } from "../api.js";
import { freshKey } from "../api.js";
import { clearFieldErrors, todayIso, type App } from "../app.js";
import { clear, el, option } from "../dom.js";
import { formatRupiah, parseRupiah } from "../money.js";

interface LineRow {
  tr: HTMLTableRowElement;
  itemSel: HTMLSelectElement;
  qtyIn: HTMLInputElement;
  priceIn: HTMLInputElement;
  subtotalCell: HTMLTableCellElement;
}

export async function renderPurchase(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Transaksi Pembelian"));

  const [suppliers, itemList] = await Promise.all([
    app.client.listParties("SUPPLIER"),
    app.client.listItems(),
  ]);
  const items = new Map<string, Item>(itemList.map((it) => [it.code, it]));

  const form = el("form", { class: "card" });
  const supplierSel = el("select", { name: "supplier_code" });
  supplierSel.append(option("", "-- pilih supplier --"));
  for (const s of suppliers) supplierSel.append(option(s.code, `${s.code} ${s.name}`));
  const dateIn = el("input", { name: "date", type: "date", value: todayIso() });

  const linesTable = el("table", { class: "lines" });
  linesTable.append(
    el(
      "tr",
      {},
      el("th", {}, "Barang"),
      el("th", {}, "Jumlah"),
      el("th", {}, "Harga Beli"),
      el("th", { class: "num" }, "Sub Total"),
      el("th", {}, ""),
    ),
  );

  const rows: LineRow[] = [];
  const totalEl = el("div", { id: "running-total", class: "total-line" });
  const submit = el("button", { type: "submit" }, "Simpan");
  const addRowBtn = el("button", { type: "button", class: "add-row" }, "+ Baris");

  function recompute(): void {
    let total = 0;
    let valid = supplierSel.value !== "" && rows.length > 0;
    for (const row of rows) {
      const code = row.itemSel.value;
      const qty = Number(row.qtyIn.value);
      const price = parseRupiah(row.priceIn.value || "0");
      if (code === "" || !Number.isInteger(qty) || qty < 1 || price === null) {
        valid = false;
        row.subtotalCell.textContent = "";
        continue;
      }
      const sub = qty * price;
      total += sub;
      row.subtotalCell.textContent = formatRupiah(sub);
    }
    totalEl.textContent = `Total : Rp. ${formatRupiah(total)}`;
    submit.disabled = !valid;
  }

  function addRow(): void {
    const itemSel = el("select", { name: "item_code" });
    itemSel.append(option("", "-- barang --"));
    for (const it of items.values()) {
      itemSel.append(option(it.code, `${it.code} ${it.name}`));
    }
    const qtyIn = el("input", { name: "qty", type: "number", min: "1", value: "1" });
    // buy cost, not the catalog sale price; starts blank = 0
    const priceIn = el("input", { name: "unit_price", type: "text", placeholder: "0" });
    const subtotalCell = el("td", { class: "num subtotal" });
    const removeBtn = el("button", { type: "button", class: "remove" }, "×");

    const tr = el(
      "tr",
      { class: "line-row" },
      el("td", {}, itemSel),
      el("td", {}, qtyIn),
      el("td", {}, priceIn),
      subtotalCell,
      el("td", {}, removeBtn),
    );
    const row: LineRow = { tr, itemSel, qtyIn, priceIn, subtotalCell };

    itemSel.addEventListener("change", recompute);
    qtyIn.addEventListener("input", recompute);
    priceIn.addEventListener("input", recompute);
    removeBtn.addEventListener("click", () => {
      rows.splice(rows.indexOf(row), 1);
      tr.remove();
      recompute();
    });

    rows.push(row);
    linesTable.append(tr);
    recompute();
  }

  addRowBtn.addEventListener("click", addRow);
  supplierSel.addEventListener("change", recompute);

  const resultHost = el("div", { id: "purchase-result" });

  form.append(
    el("label", {}, "Supplier", supplierSel),
    el("label", {}, "Tanggal", dateIn),
    linesTable,
    addRowBtn,
    totalEl,
    submit,
  );
  host.append(form, resultHost);
  addRow();

  let draftKey = freshKey();

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    clearFieldErrors(form);
    const shownTotal = parseRupiah(totalEl.textContent!.replace("Total : Rp. ", ""));
    const lines: PurchaseLineIn[] = rows.map((row) => ({
      item_code: row.itemSel.value,
      qty: Number(row.qtyIn.value),
      unit_price: parseRupiah(row.priceIn.value || "0") ?? 0,
    }));
    void (async () => {
      try {
        const po = await app.client.recordPurchase(supplierSel.value, dateIn.value, lines, draftKey);
        draftKey = freshKey();
        clear(resultHost);
        resultHost.append(
          el(
            "div",
            { class: "card" },
            el("h2", {}, `Pembelian ${po.code}`),
            el("p", {}, `${po.supplier_name} — ${po.date}`),
            el("div", { class: "total-line" }, `Grand Total : Rp. ${formatRupiah(po.grand_total)}`),
          ),
        );
        if (shownTotal !== po.grand_total) {
          app.showError(
            new Error(
              `Selisih total: layar Rp. ${formatRupiah(shownTotal ?? 0)}, ` +
                `server Rp. ${formatRupiah(po.grand_total)}`,
            ),
          );
        } else {
          app.showNotice(`Pembelian ${po.code} tersimpan`);
        }
        for (const it of await app.client.listItems()) items.set(it.code, it);
        for (const row of [...rows]) row.tr.remove();
        rows.length = 0;
        addRow();
      } catch (err) {
        app.showError(err, form);
      }
    })();
  });
}
