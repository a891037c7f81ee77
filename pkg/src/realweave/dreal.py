"""DREAL v1 textual format for finitely specified digit streams.

Layout::

    DREAL 1 base=<B> sign=<+|-> int=<n> len=<k>
    d1 d2 ... dk

Digits beyond the listed prefix are implicitly zero.
"""
from __future__ import annotations

from .core_reals import DigitStream
from .errors import FormatError

MAGIC = "DREAL"
VERSION = 1


def dumps(stream: DigitStream, prefix_len: int | None = None) -> str:
    """Serialize the first ``prefix_len`` digits (default: the known prefix)."""
    k = stream.known_prefix_len if prefix_len is None else prefix_len
    digits = stream.prefix(k)
    sign = "-" if stream.sign < 0 else "+"
    header = f"{MAGIC} {VERSION} base={stream.base} sign={sign} int={stream.int_part} len={k}"
    return header + "\n" + " ".join(map(str, digits)) + "\n"


def loads(text: str) -> DigitStream:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty DREAL document")
    fields = lines[0].split()
    if len(fields) != 6 or fields[0] != MAGIC:
        raise FormatError(f"bad DREAL header: {lines[0]!r}")
    if fields[1] != str(VERSION):
        raise FormatError(f"unsupported DREAL version {fields[1]!r}")
    try:
        keyed = dict(item.split("=", 1) for item in fields[2:])
        base = int(keyed["base"])
        sign = {"+": 1, "-": -1}[keyed["sign"]]
        int_part = int(keyed["int"])
        length = int(keyed["len"])
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad DREAL header: {lines[0]!r}") from exc
    body = lines[1].split() if len(lines) > 1 else []
    if len(body) != length:
        raise FormatError(f"expected {length} digits, found {len(body)}")
    try:
        digits = [int(d) for d in body]
    except ValueError as exc:
        raise FormatError("non-integer digit in DREAL body") from exc
    try:
        return DigitStream.from_digits(base, digits, sign=sign, int_part=int_part)
    except Exception as exc:
        raise FormatError(str(exc)) from exc


def dump(stream: DigitStream, path, prefix_len: int | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(stream, prefix_len))


def load(path) -> DigitStream:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())
