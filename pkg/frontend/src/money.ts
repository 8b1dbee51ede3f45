// Rupiah amounts travel as plain non-negative integers. Rendering matches
// the server's style: dot thousands separators, no decimals, no currency
// sign (callers prepend "Rp. " where the layout wants it).

export function formatRupiah(amount: number): string {
  if (!Number.isInteger(amount) || amount < 0) {
    throw new Error(`not a rupiah amount: ${amount}`);
  }
  const digits = String(amount);
  let out = "";
  for (let i = 0; i < digits.length; i++) {
    if (i > 0 && (digits.length - i) % 3 === 0) out += ".";
    out += digits[i];
  }
  return out;
}

/** Parse a user-typed amount; accepts dot separators. Returns null when invalid. */
export function parseRupiah(text: string): number | null {
  const cleaned = text.trim().replace(/\./g, "");
  if (cleaned === "" || !/^\d+$/.test(cleaned)) return null;
  const n = Number(cleaned);
  return Number.isSafeInteger(n) ? n : null;
}
