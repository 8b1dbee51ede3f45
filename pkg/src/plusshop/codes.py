"""Entity and document codes: a 2-character tag plus a zero-padded counter.

Parties and documents use 5 counter digits (``KT00001``, ``FK00001``);
catalog items use a 2-letter category tag with 3 digits (``FS001``).
Codes are issued strictly sequentially per tag, so the visible numbering
is gap-free as long as a code is only issued for an accepted record.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .errors import MalformedCode, SequenceExhausted

PREFIX_RE = re.compile(r"^[A-Z0-9]{2}$")
CODE_RE = re.compile(r"^([A-Z0-9]{2})([0-9]+)$")

PARTY_CODE_WIDTH = 5
DOCUMENT_CODE_WIDTH = 5
ITEM_CODE_WIDTH = 3


def _check_prefix(prefix: str) -> None:
    if not PREFIX_RE.match(prefix):
        raise MalformedCode(
            f"code prefix must be 2 uppercase alphanumeric characters, got {prefix!r}",
            detail=prefix,
        )


@dataclass(frozen=True)
class EntityCode:
    """A rendered-form-stable identifier like ``FK00001`` or ``FS001``."""

    prefix: str
    counter: int
    width: int

    def __post_init__(self):
        _check_prefix(self.prefix)
        if self.width < 1:
            raise MalformedCode(f"code width must be >= 1, got {self.width}")
        if self.counter < 1:
            raise MalformedCode(f"code counter must be >= 1, got {self.counter}")
        if self.counter > 10 ** self.width - 1:
            raise MalformedCode(
                f"counter {self.counter} does not fit in {self.width} digits",
                detail=self.prefix,
            )

    def render(self) -> str:
        return f"{self.prefix}{self.counter:0{self.width}d}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class IdSequence:
    """Issue state for one code tag; ``next`` is the counter to hand out."""

    prefix: str
    width: int
    next: int = 1


def next_code(seq: IdSequence) -> tuple[EntityCode, IdSequence]:
    """Issue the next code from ``seq``.

    Pure: returns the issued code together with the advanced sequence.
    Raises SequenceExhausted once the counter no longer fits the width.
    """
    if seq.next > 10 ** seq.width - 1:
        raise SequenceExhausted(
            f"sequence {seq.prefix} exhausted at {seq.next} (width {seq.width})",
            detail=seq.prefix,
        )
    code = EntityCode(prefix=seq.prefix, counter=seq.next, width=seq.width)
    return code, replace(seq, next=seq.next + 1)


def parse_code(
    text: str,
    *,
    prefix: str | None = None,
    width: int | None = None,
) -> EntityCode:
    """Parse a rendered code back into its parts (exact inverse of render).

    ``prefix`` / ``width`` optionally pin what the caller expects; a
    mismatch is MALFORMED_CODE, same as any lexical problem.
    """
    if not isinstance(text, str):
        raise MalformedCode(f"code must be text, got {type(text).__name__}")
    m = CODE_RE.match(text)
    if not m:
        raise MalformedCode(f"malformed code {text!r}", detail=text)
    got_prefix, digits = m.group(1), m.group(2)
    if prefix is not None and got_prefix != prefix:
        raise MalformedCode(
            f"code {text!r} does not carry expected prefix {prefix!r}", detail=text
        )
    if width is not None and len(digits) != width:
        raise MalformedCode(
            f"code {text!r} counter width {len(digits)} != expected {width}", detail=text
        )
    counter = int(digits)
    if counter < 1:
        raise MalformedCode(f"code {text!r} has zero counter", detail=text)
    return EntityCode(prefix=got_prefix, counter=counter, width=len(digits))
