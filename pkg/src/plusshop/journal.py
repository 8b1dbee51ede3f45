"""Append-only journal file.

Layout: first line is the format header ``PLUSLEDGER v1``; every further
line is one JSON event record with seq, timestamp, kind and data. Records
are flushed and fsynced before an append is acknowledged, so acknowledged
events survive a process kill.

A file that ends without a trailing newline lost its last write mid-crash;
that torn tail was never acknowledged and is dropped on recovery. Any
other damage (bad header, gap, duplicate seq, undecodable line) raises
CORRUPT_JOURNAL.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .errors import CorruptJournal, StorageFailure
from .events import LedgerEvent

log = logging.getLogger(__name__)

JOURNAL_HEADER = "PLUSLEDGER v1"


def encode_event(event: LedgerEvent) -> str:
    return json.dumps(
        event.to_record(), sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )


def decode_event(line: str, lineno: int) -> LedgerEvent:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError:
        raise CorruptJournal(f"line {lineno}: undecodable record") from None
    if not isinstance(rec, dict):
        raise CorruptJournal(f"line {lineno}: record is not an object")
    return LedgerEvent.from_record(rec)


def _check_contiguous(events: list[LedgerEvent]) -> None:
    expected = 1
    for event in events:
        if event.seq != expected:
            kind = "duplicate" if event.seq < expected else "gap before"
            raise CorruptJournal(f"{kind} seq {event.seq}, expected {expected}")
        expected += 1


def read_journal(path: str | Path, *, drop_torn_tail: bool = False) -> list[LedgerEvent]:
    """Read and validate a whole journal file.

    ``drop_torn_tail`` is the recovery mode used when reopening for
    writing: a final line with no newline terminator is discarded.
    """
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise
    except OSError as exc:
        raise StorageFailure(f"cannot read journal {path}: {exc}") from exc

    if raw == "":
        raise CorruptJournal(f"{path} is empty, missing header {JOURNAL_HEADER!r}")

    torn = not raw.endswith("\n")
    lines = raw.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if torn:
        if not drop_torn_tail:
            raise CorruptJournal("journal ends mid-record (no trailing newline)")
        dropped = lines.pop()
        log.warning("dropping torn journal tail (%d bytes)", len(dropped))

    if not lines or lines[0] != JOURNAL_HEADER:
        raise CorruptJournal(f"bad journal header, expected {JOURNAL_HEADER!r}")

    events = [decode_event(line, i + 2) for i, line in enumerate(lines[1:])]
    _check_contiguous(events)
    return events


class Journal:
    """Writer handle over the journal file (single writer per file)."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._fh = None
        self._recover_and_open()

    def _recover_and_open(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if not self.path.exists() or self.path.stat().st_size == 0:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(JOURNAL_HEADER + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self.events: list[LedgerEvent] = []
        else:
            self.events = read_journal(self.path, drop_torn_tail=True)
            # physically drop a torn tail so the next append starts clean
            self._truncate_to_valid()
        self._fh = open(self.path, "a", encoding="utf-8")

    def _truncate_to_valid(self) -> None:
        raw = self.path.read_bytes()
        if raw.endswith(b"\n"):
            return
        keep = raw.rfind(b"\n") + 1
        with open(self.path, "rb+") as fh:
            fh.truncate(keep)
            fh.flush()
            os.fsync(fh.fileno())

    @property
    def last_seq(self) -> int:
        return self.events[-1].seq if self.events else 0

    def append(self, events: list[LedgerEvent]) -> None:
        """Durably append one or more already-sequenced events.

        The batch is written with a single write and one fsync; the events
        become visible in ``self.events`` only after the sync succeeds.
        """
        if not events:
            return
        expected = self.last_seq + 1
        for event in events:
            if event.seq != expected:
                raise StorageFailure(
                    f"append out of order: seq {event.seq}, expected {expected}"
                )
            expected += 1
        block = "".join(encode_event(event) + "\n" for event in events)
        try:
            self._fh.write(block)
            self._fh.flush()
            os.fsync(self._fh.fileno())
        except OSError as exc:
            raise StorageFailure(f"journal append failed: {exc}") from exc
        self.events.extend(events)

    def close(self) -> None:
        if self._fh is not None:
            self._fh.close()
            self._fh = None

    def __enter__(self) -> "Journal":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
