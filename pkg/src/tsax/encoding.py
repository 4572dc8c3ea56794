"""Compact byte encodings for SAX/TSAX representations.

Record layout (all integers little-endian)::

    magic   b"TSX1"
    flags   u8       bit 0 set: trend part is run-length framed
    alpha   u8
    n       u32
    m       u32
    symbols m bytes, one symbol index per byte
    trends  ceil(m/8) packed bytes (flags bit 0 clear)
            or u32 run count + runs (flags bit 0 set)

A run is a single unsigned LEB128 varint holding ``count << 1 | bit``.
"""

import io
import struct

import numpy as np

from .exceptions import InvalidInputError
from .representation import SaxWord, TrendBits, TsaxRepresentation

MAGIC = b"TSX1"
FLAG_RLE = 0x01
_HEADER = struct.Struct("<4sBBII")


def rle_encode(trends):
    """Run-length encode trend bits into ``[(bit, count), ...]``.

    Adjacent runs always have different bits and counts sum to ``m``.
    """
    bits = trends.bits if isinstance(trends, TrendBits) else np.asarray(trends, dtype=bool)
    if bits.size == 0:
        return []
    change = np.flatnonzero(bits[1:] != bits[:-1]) + 1
    starts = np.concatenate([[0], change])
    counts = np.diff(np.concatenate([starts, [bits.size]]))
    return [(bool(bits[s]), int(c)) for s, c in zip(starts, counts)]


def rle_decode(runs):
    """Inverse of :func:`rle_encode`."""
    parts = []
    for bit, count in runs:
        if count < 1:
            raise InvalidInputError(f"run count must be positive, got {count}")
        parts.append(np.full(count, bool(bit)))
    bits = np.concatenate(parts) if parts else np.zeros(0, dtype=bool)
    return TrendBits.from_bools(bits)


def write_varint(value, out):
    if value < 0:
        raise InvalidInputError("varint must be non-negative")
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.write(bytes([byte | 0x80]))
        else:
            out.write(bytes([byte]))
            return


def read_varint(stream):
    shift = result = 0
    while True:
        b = stream.read(1)
        if not b:
            raise InvalidInputError("truncated varint")
        result |= (b[0] & 0x7F) << shift
        if not b[0] & 0x80:
            return result
        shift += 7


def encode_runs(runs, out):
    out.write(struct.pack("<I", len(runs)))
    for bit, count in runs:
        write_varint((count << 1) | int(bit), out)


def decode_runs(stream):
    (count,) = struct.unpack("<I", _read_exact(stream, 4))
    runs = []
    for _ in range(count):
        v = read_varint(stream)
        runs.append((bool(v & 1), v >> 1))
    return runs


def _read_exact(stream, size):
    data = stream.read(size)
    if len(data) != size:
        raise InvalidInputError(f"truncated record: wanted {size} bytes, got {len(data)}")
    return data


def write_representation(rep, out, *, rle=False):
    """Append one representation record to a binary stream.

    ``rep`` may be a :class:`TsaxRepresentation` or a bare :class:`SaxWord`;
    a bare word is stored with an empty trend part (m zero bits).
    """
    word = rep.word if isinstance(rep, TsaxRepresentation) else rep
    trends = rep.trends if isinstance(rep, TsaxRepresentation) else TrendBits.from_bools(
        np.zeros(word.m, dtype=bool)
    )
    flags = FLAG_RLE if rle else 0
    out.write(_HEADER.pack(MAGIC, flags, word.alpha, word.n, word.m))
    out.write(word.data)
    if rle:
        encode_runs(rle_encode(trends), out)
    else:
        out.write(trends.packed)


def read_representation(stream):
    magic, flags, alpha, n, m = _HEADER.unpack(_read_exact(stream, _HEADER.size))
    if magic != MAGIC:
        raise InvalidInputError(f"bad record magic {magic!r}")
    word = SaxWord(_read_exact(stream, m), n, alpha)
    if flags & FLAG_RLE:
        trends = rle_decode(decode_runs(stream))
        if trends.m != m:
            raise InvalidInputError(f"run lengths sum to {trends.m}, expected {m}")
    else:
        # Re-pack so stray padding bits cannot break equality.
        trends = TrendBits.from_bools(TrendBits(_read_exact(stream, (m + 7) // 8), m).bits)
    return TsaxRepresentation(word, trends)


def dumps(rep, *, rle=False):
    buf = io.BytesIO()
    write_representation(rep, buf, rle=rle)
    return buf.getvalue()


def loads(data):
    stream = io.BytesIO(data)
    rep = read_representation(stream)
    if stream.read(1):
        raise InvalidInputError("trailing bytes after record")
    return rep
