import { freshKey } from "../api.js";
import { clearFieldErrors, type App } from "../app.js";
import { clear, el } from "../dom.js";
import { formatRupiah, parseRupiah } from "../money.js";

export async function renderItems(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Master Barang & Stok"));

  const form = el("form", { class: "card" });
  const categoryIn = el("input", {
    name: "category",
    type: "text",
    maxlength: "2",
    placeholder: "FS",
    title: "Dua huruf/angka kapital, jadi awalan kode barang",
  });
  const nameIn = el("input", { name: "name", type: "text" });
  const priceIn = el("input", { name: "unit_price", type: "text", placeholder: "0" });
  const qtyIn = el("input", { name: "initial_qty", type: "number", min: "0", value: "0" });
  const submit = el("button", { type: "submit" }, "Simpan");

  form.append(
    el("label", {}, "Kategori", categoryIn),
    el("label", {}, "Nama Barang", nameIn),
    el("label", {}, "Harga Jual", priceIn),
    el("label", {}, "Stok Awal", qtyIn),
    submit,
  );

  const tableHost = el("div", { class: "table-wrap" });
  host.append(form, el("h2", {}, "Katalog"), tableHost);

  async function refreshList(): Promise<void> {
    const items = await app.client.listItems();
    clear(tableHost);
    const table = el("table", {});
    table.append(
      el(
        "tr",
        {},
        el("th", {}, "Kode Barang"),
        el("th", {}, "Nama Barang"),
        el("th", { class: "num" }, "Harga"),
        el("th", { class: "num" }, "Stok"),
      ),
    );
    for (const it of items) {
      table.append(
        el(
          "tr",
          {},
          el("td", {}, it.code),
          el("td", {}, it.name),
          el("td", { class: "num" }, formatRupiah(it.unit_price)),
          el("td", { class: "num" }, String(it.stock_qty)),
        ),
      );
    }
    tableHost.append(table);
  }

  let draftKey = freshKey();

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    clearFieldErrors(form);
    const price = parseRupiah(priceIn.value);
    if (price === null) {
      priceIn.classList.add("field-error");
      app.showError(new Error("Harga harus berupa angka"));
      return;
    }
    void (async () => {
      try {
        const created = await app.client.createItem(
          {
            category: categoryIn.value.trim().toUpperCase(),
            name: nameIn.value.trim(),
            unit_price: price,
            initial_qty: Number(qtyIn.value || "0"),
          },
          draftKey,
        );
        draftKey = freshKey();
        app.showNotice(`Tersimpan: ${created.code} ${created.name}`);
        form.reset();
        qtyIn.value = "0";
        await refreshList();
      } catch (err) {
        app.showError(err, form);
      }
    })();
  });

  await refreshList();
}
