"""The ledger store: single source of truth for one shop.

One writer lock serializes every mutation (validate-then-append runs as a
unit under it), so gap-free numbering and stock guards hold under
concurrent callers. Reads go through the same lock and therefore always
see whole events, never a half-applied one.

Snapshots are plain JSON accelerators next to the journal; deleting them
is always safe, the journal alone rebuilds everything.
"""

from __future__ import annotations

import copy
import datetime as dt
import json
import logging
import os
import re
import threading
from pathlib import Path
from typing import Callable, TypeVar

from .config import ShopConfig
from .errors import StorageFailure
from .events import EventPayload, LedgerEvent, now_stamp
from .journal import Journal, read_journal
from .state import ShopState, apply_event, replay_events

log = logging.getLogger(__name__)

T = TypeVar("T")

SNAPSHOT_HEADER = "PLUSSNAP v1"
_SNAP_RE = re.compile(r"^snap-(\d{9})\.json$")

# A builder inspects current state and returns the payload to append, or
# raises a guard error (in which case nothing is appended).
PayloadBuilder = Callable[[ShopState], EventPayload]


class LedgerStore:
    def __init__(self, journal_path: str | Path, config: ShopConfig | None = None):
        self.config = config or ShopConfig(journal_path=Path(journal_path))
        self.journal = Journal(journal_path)
        self._lock = threading.RLock()
        self._state = self._recover()

    # --- recovery / replay ---

    def _recover(self) -> ShopState:
        snapshot = load_latest_snapshot(self.snapshot_dir())
        if snapshot is not None:
            as_of, state = snapshot
            tail = [e for e in self.journal.events if e.seq > as_of]
            if as_of <= self.journal.last_seq:
                return replay_events(tail, base=state)
            log.warning("snapshot ahead of journal (as_of %d); full replay", as_of)
        return replay_events(self.journal.events)

    def snapshot_dir(self) -> Path:
        return self.config.resolved_snapshot_dir()

    # --- reads ---

    def read(self, fn: Callable[[ShopState], T]) -> T:
        """Run a read-only function against a consistent state view."""
        with self._lock:
            return fn(self._state)

    def state_copy(self) -> ShopState:
        with self._lock:
            return copy.deepcopy(self._state)

    @property
    def last_seq(self) -> int:
        with self._lock:
            return self.journal.last_seq

    # --- writes ---

    def append(self, build: PayloadBuilder, at: dt.datetime | None = None) -> LedgerEvent:
        """Validate-and-append one event atomically.

        ``build`` runs under the writer lock against current state; if it
        raises, the journal and state are untouched.
        """
        with self._lock:
            payload = build(self._state)
            event = LedgerEvent(
                seq=self.journal.last_seq + 1, at=now_stamp(at), payload=payload
            )
            self.journal.append([event])
            apply_event(self._state, payload)
            return event

    def append_batch(
        self, builds: list[PayloadBuilder], at: dt.datetime | None = None
    ) -> list[LedgerEvent]:
        """All-or-nothing append of a dependent sequence of events.

        Every builder is validated against a scratch copy of the state
        (each seeing the effect of the previous ones); only when all pass
        is the whole batch written, with a single sync.
        """
        with self._lock:
            scratch = copy.deepcopy(self._state)
            payloads: list[EventPayload] = []
            for build in builds:
                payload = build(scratch)
                apply_event(scratch, payload)
                payloads.append(payload)
            stamp = now_stamp(at)
            base = self.journal.last_seq
            events = [
                LedgerEvent(seq=base + i + 1, at=stamp, payload=p)
                for i, p in enumerate(payloads)
            ]
            self.journal.append(events)
            self._state = scratch
            return events

    # --- snapshots ---

    def write_snapshot(self) -> Path:
        """Persist current state; returns the snapshot file path."""
        with self._lock:
            as_of = self.journal.last_seq
            doc = {
                "format": SNAPSHOT_HEADER,
                "as_of_seq": as_of,
                "state": self._state.to_dict(),
            }
        directory = self.snapshot_dir()
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / f"snap-{as_of:09d}.json"
        tmp = path.with_suffix(".json.tmp")
        try:
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageFailure(f"cannot write snapshot {path}: {exc}") from exc
        return path

    def close(self) -> None:
        self.journal.close()

    def __enter__(self) -> "LedgerStore":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def load_latest_snapshot(directory: str | Path) -> tuple[int, ShopState] | None:
    """Newest loadable snapshot in ``directory`` or None.

    Snapshots are never authoritative: anything unreadable is skipped with
    a warning and recovery falls back to older snapshots or full replay.
    """
    directory = Path(directory)
    if not directory.is_dir():
        return None
    candidates = sorted(
        (p for p in directory.iterdir() if _SNAP_RE.match(p.name)),
        key=lambda p: p.name,
        reverse=True,
    )
    for path in candidates:
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
            if doc.get("format") != SNAPSHOT_HEADER:
                raise ValueError(f"bad snapshot header in {path.name}")
            return int(doc["as_of_seq"]), ShopState.from_dict(doc["state"])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.warning("skipping unusable snapshot %s: %s", path.name, exc)
    return None


def replay_journal_file(path: str | Path) -> tuple[int, ShopState]:
    """Independent full replay of a journal file (no snapshots involved)."""
    events = read_journal(path)
    return (events[-1].seq if events else 0), replay_events(events)
