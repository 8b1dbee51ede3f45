import type { PartyKind } from "../api.js";
import { freshKey } from "../api.js";
import { clearFieldErrors, type App } from "../app.js";
import { clear, el } from "../dom.js";

const KIND_LABEL: Record<PartyKind, string> = {
  CUSTOMER: "Pelanggan",
  SUPPLIER: "Supplier",
  TECHNICIAN: "Teknisi",
};

// route slugs are lowercase, the wire value is upper
function kindFromSlug(slug: string): PartyKind | null {
  const upper = slug.toUpperCase();
  return upper in KIND_LABEL ? (upper as PartyKind) : null;
}

export async function renderParties(app: App, host: HTMLElement, kindArg: string): Promise<void> {
  const maybeKind = kindFromSlug(kindArg);
  if (maybeKind === null) {
    host.append(el("p", {}, `Jenis tidak dikenal: ${kindArg}`));
    return;
  }
  const kind: PartyKind = maybeKind;

  host.append(el("h1", {}, `Master ${KIND_LABEL[kind]}`));

  const form = el("form", { class: "card" });
  const nameIn = el("input", { name: "name", type: "text", required: "" });
  const addressIn = el("input", { name: "address", type: "text" });
  const cityIn = el("input", { name: "city", type: "text" });
  const phoneIn = el("input", { name: "phone", type: "text" });
  const submit = el("button", { type: "submit" }, "Simpan");

  form.append(
    el("label", {}, "Nama", nameIn),
    el("label", {}, "Alamat", addressIn),
    el("label", {}, "Kota", cityIn),
    el("label", {}, "Telepon", phoneIn),
    submit,
  );

  const tableHost = el("div", { class: "table-wrap" });
  host.append(form, el("h2", {}, `Daftar ${KIND_LABEL[kind]}`), tableHost);

  async function refreshList(): Promise<void> {
    const parties = await app.client.listParties(kind);
    clear(tableHost);
    const table = el("table", {});
    table.append(
      el(
        "tr",
        {},
        el("th", {}, "Kode"),
        el("th", {}, "Nama"),
        el("th", {}, "Alamat"),
        el("th", {}, "Kota"),
        el("th", {}, "Telepon"),
      ),
    );
    for (const p of parties) {
      table.append(
        el(
          "tr",
          {},
          el("td", {}, p.code),
          el("td", {}, p.name),
          el("td", {}, p.address),
          el("td", {}, p.city),
          el("td", {}, p.phone),
        ),
      );
    }
    tableHost.append(table);
  }

  // one key per draft: a retry after a network hiccup must not create twins
  let draftKey = freshKey();

  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    clearFieldErrors(form);
    void (async () => {
      try {
        const created = await app.client.createParty(
          kind,
          {
            name: nameIn.value.trim(),
            address: addressIn.value.trim(),
            city: cityIn.value.trim(),
            phone: phoneIn.value.trim(),
          },
          draftKey,
        );
        draftKey = freshKey();
        app.showNotice(`Tersimpan: ${created.code} ${created.name}`);
        form.reset();
        await refreshList();
      } catch (err) {
        app.showError(err, form);
      }
    })();
  });

  await refreshList();
}
