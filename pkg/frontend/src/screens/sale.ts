import type { Item, SaleLineIn } from "../api.js";
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
  hintCell: HTMLTableCellElement;
}

export async function renderSale(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Transaksi Penjualan"));

  const [customers, itemList] = await Promise.all([
    app.client.listParties("CUSTOMER"),
    app.client.listItems(),
  ]);
  const items = new Map<string, Item>(itemList.map((it) => [it.code, it]));

  const form = el("form", { class: "card" });
  const customerSel = el("select", { name: "customer_code" });
  customerSel.append(option("", "-- pilih pelanggan --"));
  for (const c of customers) customerSel.append(option(c.code, `${c.code} ${c.name}`));
  const dateIn = el("input", { name: "date", type: "date", value: todayIso() });

  const linesTable = el("table", { class: "lines" });
  linesTable.append(
    el(
      "tr",
      {},
      el("th", {}, "Barang"),
      el("th", {}, "Jumlah"),
      el("th", {}, "Harga"),
      el("th", { class: "num" }, "Sub Total"),
      el("th", {}, "Stok"),
      el("th", {}, ""),
    ),
  );

  const rows: LineRow[] = [];
  const totalEl = el("div", { id: "running-total", class: "total-line" });
  const submit = el("button", { type: "submit", id: "sale-submit" }, "Simpan");
  const addRowBtn = el("button", { type: "button", class: "add-row" }, "+ Baris");

  function onHand(code: string): number {
    return items.get(code)?.stock_qty ?? 0;
  }

  function recompute(): void {
    let total = 0;
    let valid = customerSel.value !== "" && rows.length > 0;
    const wanted = new Map<string, number>();

    for (const row of rows) {
      row.tr.classList.remove("over-stock");
      const code = row.itemSel.value;
      const qty = Number(row.qtyIn.value);
      const price = parseRupiah(row.priceIn.value);
      if (code === "" || !Number.isInteger(qty) || qty < 1 || price === null) {
        valid = false;
        row.subtotalCell.textContent = "";
        row.hintCell.textContent = code === "" ? "" : `stok ${onHand(code)}`;
        continue;
      }
      const sub = qty * price;
      total += sub;
      row.subtotalCell.textContent = formatRupiah(sub);
      wanted.set(code, (wanted.get(code) ?? 0) + qty);
      row.hintCell.textContent = `stok ${onHand(code)}`;
    }

    // the guard on the server merges duplicate lines, so check the summed
    // quantity per item, not each line alone
    for (const row of rows) {
      const code = row.itemSel.value;
      if (code !== "" && (wanted.get(code) ?? 0) > onHand(code)) {
        row.tr.classList.add("over-stock");
        row.hintCell.textContent = `stok ${onHand(code)} — melebihi stok`;
        valid = false;
      }
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
    const priceIn = el("input", { name: "unit_price", type: "text" });
    const subtotalCell = el("td", { class: "num subtotal" });
    const hintCell = el("td", { class: "hint" });
    const removeBtn = el("button", { type: "button", class: "remove" }, "×");

    const tr = el(
      "tr",
      { class: "line-row" },
      el("td", {}, itemSel),
      el("td", {}, qtyIn),
      el("td", {}, priceIn),
      subtotalCell,
      hintCell,
      el("td", {}, removeBtn),
    );
    const row: LineRow = { tr, itemSel, qtyIn, priceIn, subtotalCell, hintCell };

    itemSel.addEventListener("change", () => {
      const it = items.get(itemSel.value);
      priceIn.value = it ? formatRupiah(it.unit_price) : "";
      recompute();
    });
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
  customerSel.addEventListener("change", recompute);

  const resultHost = el("div", { id: "sale-result" });

  form.append(
    el("label", {}, "Pelanggan", customerSel),
    el("label", {}, "Tanggal", dateIn),
    linesTable,
    addRowBtn,
    totalEl,
    submit,
  );
  host.append(form, resultHost);
  addRow();

  let draftKey = freshKey();

  function showInvoicePanel(inv: {
    code: string;
    customer_name: string;
    date: string;
    lines: { item_name: string; qty: number; unit_price: number; subtotal: number }[];
    grand_total: number;
  }): void {
    clear(resultHost);
    const table = el("table", {});
    table.append(
      el(
        "tr",
        {},
        el("th", {}, "Nama Barang"),
        el("th", { class: "num" }, "Jumlah"),
        el("th", { class: "num" }, "Harga"),
        el("th", { class: "num" }, "Sub Total"),
      ),
    );
    for (const line of inv.lines) {
      table.append(
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
    resultHost.append(
      el(
        "div",
        { class: "card invoice-panel" },
        el("h2", {}, `Faktur ${inv.code}`),
        el("p", {}, `${inv.customer_name} — ${inv.date}`),
        table,
        el("div", { class: "total-line" }, `Grand Total : Rp. ${formatRupiah(inv.grand_total)}`),
      ),
    );
  }

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    clearFieldErrors(form);
    // what the screen is showing right now; the server must agree with it
    const shownTotal = parseRupiah(totalEl.textContent!.replace("Total : Rp. ", ""));
    const lines: SaleLineIn[] = [];
    for (const row of rows) {
      const line: SaleLineIn = {
        item_code: row.itemSel.value,
        qty: Number(row.qtyIn.value),
      };
      const price = parseRupiah(row.priceIn.value);
      const catalog = items.get(row.itemSel.value);
      if (price !== null && catalog && price !== catalog.unit_price) {
        line.unit_price = price;
      }
      lines.push(line);
    }
    void (async () => {
      try {
        const invoice = await app.client.recordSale(customerSel.value, dateIn.value, lines, draftKey);
        draftKey = freshKey();
        showInvoicePanel(invoice);
        if (shownTotal !== invoice.grand_total) {
          app.showError(
            new Error(
              `Selisih total: layar Rp. ${formatRupiah(shownTotal ?? 0)}, ` +
                `server Rp. ${formatRupiah(invoice.grand_total)}`,
            ),
          );
        } else {
          app.showNotice(`Faktur ${invoice.code} tersimpan`);
        }
        // stock moved; refresh the hints
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
