import { freshKey } from "../api.js";
import { clearFieldErrors, todayIso, type App } from "../app.js";
import { clear, el, option } from "../dom.js";

export async function renderIntake(app: App, host: HTMLElement): Promise<void> {
  host.append(el("h1", {}, "Terima Service"));

  const customers = await app.client.listParties("CUSTOMER");

  const form = el("form", { class: "card" });
  const customerSel = el("select", { name: "customer_code" });
  customerSel.append(option("", "-- pilih pelanggan --"));
  for (const c of customers) customerSel.append(option(c.code, `${c.code} ${c.name}`));
  const dateIn = el("input", { name: "date", type: "date", value: todayIso() });
  const groupIn = el("input", { name: "item_group", type: "text", placeholder: "Monitor, printer, ..." });
  const faultIn = el("textarea", { name: "fault_description", rows: "3" });
  const submit = el("button", { type: "submit" }, "Terima");

  form.append(
    el("label", {}, "Pelanggan", customerSel),
    el("label", {}, "Tanggal Terima", dateIn),
    el("label", {}, "Kel. Barang", groupIn),
    el("label", {}, "Kerusakan", faultIn),
    submit,
  );

  const resultHost = el("div", { id: "intake-result" });
  host.append(form, resultHost);

  let draftKey = freshKey();

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    clearFieldErrors(form);
    void (async () => {
      try {
        const order = await app.client.intakeService(
          {
            customer_code: customerSel.value,
            date: dateIn.value,
            item_group: groupIn.value.trim(),
            fault_description: faultIn.value.trim(),
          },
          draftKey,
        );
        draftKey = freshKey();
        app.showNotice(`Service ${order.code} diterima`);

        // the shop hands the customer a claim slip right away
        const receipt = await app.client.intakeReceiptText(order.code);
        clear(resultHost);
        const printBtn = el("button", { type: "button", class: "print" }, "Cetak");
        printBtn.addEventListener("click", () => app.printText(receipt));
        resultHost.append(
          el(
            "div",
            { class: "card" },
            el("h2", { id: "intake-code" }, order.code),
            el("pre", { class: "server-text" }, receipt),
            printBtn,
          ),
        );
        form.reset();
        dateIn.value = todayIso();
      } catch (err) {
        app.showError(err, form);
      }
    })();
  });
}
