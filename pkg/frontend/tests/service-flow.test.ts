// Scripted repair lifecycle against a live server: intake prints a claim
// slip, the board advances the order, pickup stays blocked until the work
// is done and then collects the amount the server confirms.

import { afterAll, beforeAll, expect, it } from "vitest";
import { initApp, type App } from "../src/app.js";
import { fire, startSeededServer, waitFor, type TestServer } from "./server.js";

let server: TestServer;
let app: App;
let root: HTMLElement;

beforeAll(async () => {
  server = await startSeededServer();
  document.body.innerHTML = '<div id="app"></div>';
  root = document.querySelector<HTMLElement>("#app")!;
  app = initApp(root, { baseUrl: server.base, role: "admin" });
});

afterAll(() => {
  server?.stop();
});

function column(state: string): HTMLElement {
  return root.querySelector<HTMLElement>(`.board-column[data-state="${state}"]`)!;
}

function cardIn(state: string, code: string): HTMLElement | null {
  return column(state).querySelector<HTMLElement>(`.service-card[data-code="${code}"]`);
}

it("intake issues a server-assigned code and a printable claim slip", async () => {
  await app.goto("#/service/intake");

  const customer = root.querySelector<HTMLSelectElement>('select[name="customer_code"]')!;
  customer.value = "KP00003";
  fire(customer, "change");
  const group = root.querySelector<HTMLInputElement>('input[name="item_group"]')!;
  group.value = "Printer Canon";
  fire(group, "input");
  const fault = root.querySelector<HTMLTextAreaElement>('textarea[name="fault_description"]')!;
  fault.value = "Tidak menarik kertas";
  fire(fault, "input");

  root.querySelector<HTMLButtonElement>('button[type="submit"]')!.click();

  const slip = await waitFor(() => root.querySelector("#intake-result pre"));
  // the demo day already holds SR00001, so this order gets the next code
  expect(root.querySelector("#intake-code")!.textContent).toBe("SR00002");
  expect(slip.textContent).toContain("KWITANSI SERVICE");
  expect(slip.textContent).toContain("SR00002");
});

it("refuses pickup while the order is still RECEIVED", async () => {
  await app.goto("#/service/pickup/SR00002");

  const panel = root.querySelector("#pickup-panel")!;
  expect(panel.textContent).toContain("Status: RECEIVED");
  expect(panel.textContent).toContain("Belum dapat diambil");
  // no payment control is offered at all
  expect(panel.querySelector("#confirm-payment")).toBeNull();
});

it("assigning a technician moves the card to IN_REPAIR", async () => {
  await app.goto("#/service/board");

  const card = cardIn("RECEIVED", "SR00002")!;
  expect(card).not.toBeNull();
  const tech = card.querySelector<HTMLSelectElement>('select[name="technician_code"]')!;
  tech.value = "KT00001";
  fire(tech, "change");
  card.querySelector<HTMLButtonElement>("button.assign")!.click();

  await waitFor(() => cardIn("IN_REPAIR", "SR00002"));
  expect(cardIn("RECEIVED", "SR00002")).toBeNull();
});

it("completing with a part and labor fee moves the card to COMPLETED", async () => {
  const card = cardIn("IN_REPAIR", "SR00002")!;

  const partSel = card.querySelector<HTMLSelectElement>('select[name="part_item"]')!;
  partSel.value = "MS002";
  fire(partSel, "change");
  card.querySelector<HTMLButtonElement>("button.add-part")!.click();
  expect(card.querySelector("ul.parts")!.textContent).toContain("MS002");

  const labor = card.querySelector<HTMLInputElement>('input[name="labor_fee"]')!;
  labor.value = "20.000";
  fire(labor, "input");
  card.querySelector<HTMLButtonElement>("button.complete")!.click();

  await waitFor(() => cardIn("COMPLETED", "SR00002"));
});

it("pickup quotes the amount due and the server receipt agrees", async () => {
  await app.goto("#/service/pickup/SR00002");

  // Mouse Scrol part 30.000 plus labor 20.000
  const due = await waitFor(() => root.querySelector("#amount-due"));
  expect(due.textContent).toBe("Jumlah Bayar : Rp. 50.000");

  root.querySelector<HTMLButtonElement>("#confirm-payment")!.click();

  const receipt = await waitFor(() => root.querySelector("#pickup-receipt pre"));
  expect(receipt.textContent).toContain("KWITANSI PEMBAYARAN SERVICE");
  expect(receipt.textContent).toContain("Jumlah Bayar : Rp. 50.000");
  expect(root.querySelector(".banner.error")).toBeNull();
  expect(root.querySelector(".banner.notice")!.textContent).toContain("SR00002");
});

it("the board now shows the order as picked up", async () => {
  await app.goto("#/service/board");
  expect(cardIn("PICKED_UP", "SR00002")).not.toBeNull();
});
