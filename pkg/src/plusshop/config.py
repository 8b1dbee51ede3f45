"""Shop configuration: storage paths, code prefix table, report letterhead,
API listen address and the static role table.

Sources, lowest to highest precedence: built-in defaults, a YAML config
file, ``PLUSSHOP_*`` environment variables, explicit CLI flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .errors import ValidationError

# Prefixes seen on the shop's own paperwork; the rest are chosen by analogy
# and kept configurable rather than hard-coded guesses.
DEFAULT_PREFIXES = {
    "customer": "KP",
    "supplier": "K5",
    "technician": "KT",
    "sale": "FK",
    "purchase": "PB",
    "service": "SR",
}

# Scopes: read (lists, reports, stock queries), master (party/item entry),
# purchase, sale, service (work-order transitions).
DEFAULT_ROLES = {
    "admin": ["read", "master", "purchase", "sale", "service"],
    "clerk": ["read", "master", "purchase", "sale", "service"],
    "teknisi": ["read", "service"],
    "gudang": ["read", "purchase"],
    "pimpinan": ["read"],
}

DEFAULT_LETTERHEAD = "COMPUTER Plus! IT Education Center"
DEFAULT_CITY = "Palembang"

ENV_CONFIG = "PLUSSHOP_CONFIG"
ENV_JOURNAL = "PLUSSHOP_JOURNAL"
ENV_SNAPSHOTS = "PLUSSHOP_SNAPSHOTS"
ENV_HOST = "PLUSSHOP_HOST"
ENV_PORT = "PLUSSHOP_PORT"


@dataclass
class ShopConfig:
    journal_path: Path = Path("data/journal.plusledger")
    snapshot_dir: Path | None = None  # default: <journal dir>/snapshots
    host: str = "127.0.0.1"
    port: int = 8000
    letterhead: str = DEFAULT_LETTERHEAD
    city: str = DEFAULT_CITY
    prefixes: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_PREFIXES))
    roles: dict[str, list[str]] = field(
        default_factory=lambda: {k: list(v) for k, v in DEFAULT_ROLES.items()}
    )
    ui_dir: Path | None = None  # static frontend assets, served at /ui when set

    def prefix_for(self, kind: str) -> str:
        try:
            return self.prefixes[kind]
        except KeyError:
            raise ValidationError(f"no code prefix configured for {kind!r}", detail=kind)

    def resolved_snapshot_dir(self) -> Path:
        if self.snapshot_dir is not None:
            return self.snapshot_dir
        return self.journal_path.parent / "snapshots"

    def scopes_for_role(self, role: str) -> set[str] | None:
        """Scope set for a role name, or None when the role is unknown."""
        scopes = self.roles.get(role)
        return set(scopes) if scopes is not None else None


def load_config(path: str | Path | None = None, env: dict | None = None) -> ShopConfig:
    """Build a ShopConfig from an optional YAML file plus environment overrides.

    ``path=None`` falls back to $PLUSSHOP_CONFIG; no file at all means
    defaults + environment.
    """
    env = os.environ if env is None else env
    cfg = ShopConfig()

    file_path = path or env.get(ENV_CONFIG)
    if file_path:
        raw = yaml.safe_load(Path(file_path).read_text(encoding="utf-8")) or {}
        if not isinstance(raw, dict):
            raise ValidationError(f"config file {file_path} must hold a mapping")
        storage = raw.get("storage", {})
        if "journal" in storage:
            cfg.journal_path = Path(storage["journal"])
        if "snapshots" in storage:
            cfg.snapshot_dir = Path(storage["snapshots"])
        server = raw.get("server", {})
        if "host" in server:
            cfg.host = str(server["host"])
        if "port" in server:
            cfg.port = int(server["port"])
        if "ui_dir" in server:
            cfg.ui_dir = Path(server["ui_dir"])
        shop = raw.get("shop", {})
        if "letterhead" in shop:
            cfg.letterhead = str(shop["letterhead"])
        if "city" in shop:
            cfg.city = str(shop["city"])
        if "prefixes" in raw:
            cfg.prefixes.update({k: str(v) for k, v in raw["prefixes"].items()})
        if "roles" in raw:
            cfg.roles = {k: [str(s) for s in v] for k, v in raw["roles"].items()}

    if env.get(ENV_JOURNAL):
        cfg.journal_path = Path(env[ENV_JOURNAL])
    if env.get(ENV_SNAPSHOTS):
        cfg.snapshot_dir = Path(env[ENV_SNAPSHOTS])
    if env.get(ENV_HOST):
        cfg.host = env[ENV_HOST]
    if env.get(ENV_PORT):
        cfg.port = int(env[ENV_PORT])
    return cfg
