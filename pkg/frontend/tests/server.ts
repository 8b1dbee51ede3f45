// Boots the real plusshop API for a test file: fresh temp journal, demo
// seed, uvicorn on a free port. Tests talk to it exactly like a browser.

import { spawn, spawnSync, type ChildProcessWithoutNullStreams } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { get } from "node:http";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { join } from "node:path";

export interface TestServer {
  base: string;
  stop: () => void;
}

const SEED_AT = "2008-08-05T08:00:00+07:00";

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const srv = createServer();
    srv.listen(0, "127.0.0.1", () => {
      const addr = srv.address();
      if (addr && typeof addr === "object") {
        const port = addr.port;
        srv.close(() => resolve(port));
      } else {
        srv.close(() => reject(new Error("no port")));
      }
    });
  });
}

// poll with node:http, not the page's fetch: happy-dom logs every refused
// connection to the console and the boot retries would drown the output
function probeHealth(base: string): Promise<boolean> {
  return new Promise((resolve) => {
    const req = get(`${base}/health`, (res) => {
      res.resume();
      resolve(res.statusCode === 200);
    });
    req.on("error", () => resolve(false));
  });
}

async function waitHealthy(base: string, proc: ChildProcessWithoutNullStreams): Promise<void> {
  const deadline = Date.now() + 20000;
  while (Date.now() < deadline) {
    if (proc.exitCode !== null) {
      throw new Error(`server exited early with ${proc.exitCode}`);
    }
    if (await probeHealth(base)) return;
    await new Promise((r) => setTimeout(r, 50));
  }
  throw new Error("server never became healthy");
}

export async function startSeededServer(): Promise<TestServer> {
  const dir = mkdtempSync(join(tmpdir(), "plusshop-ui-"));
  const journal = join(dir, "journal.ndjson");

  const seed = spawnSync(
    "python3",
    ["-m", "plusshop.cli", "--journal", journal, "seed-demo", "--at", SEED_AT],
    { encoding: "utf8" },
  );
  if (seed.status !== 0) {
    throw new Error(`seed-demo failed (${seed.status}): ${seed.stderr}`);
  }

  const port = await freePort();
  const proc = spawn(
    "python3",
    ["-m", "plusshop.cli", "--journal", journal, "serve", "--port", String(port)],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  const base = `http://127.0.0.1:${port}`;
  try {
    await waitHealthy(base, proc);
  } catch (err) {
    proc.kill("SIGKILL");
    rmSync(dir, { recursive: true, force: true });
    throw err;
  }

  return {
    base,
    stop: () => {
      proc.kill("SIGKILL");
      rmSync(dir, { recursive: true, force: true });
    },
  };
}

/** Poll until `fn` returns something truthy; throws after `timeoutMs`. */
export async function waitFor<T>(fn: () => T | null | undefined | false, timeoutMs = 10000): Promise<T> {
  const start = Date.now();
  for (;;) {
    const value = fn();
    if (value) return value;
    if (Date.now() - start > timeoutMs) {
      throw new Error("waitFor: condition not met in time");
    }
    await new Promise((r) => setTimeout(r, 15));
  }
}

export function fire(target: EventTarget, type: string): void {
  target.dispatchEvent(new Event(type, { bubbles: true, cancelable: true }));
}
