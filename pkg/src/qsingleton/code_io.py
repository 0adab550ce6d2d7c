"""Text format for codes, vectors and qubit sets.

A code file is ASCII, line oriented; ``#`` starts a comment::

    p 2
    n 4
    P XXXX          # Pauli letters, p = 2 only
    g 0 0 0 0 1 1 1 1   # 2n integers: x block then z block

``p`` must be the first non-comment line and ``n`` the second.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

from qsingleton.errors import (
    CodeSyntaxError,
    IndexOutOfRange,
    LetterRequiresP2,
    NotIsotropic,
    NotPrime,
    WrongLength,
)
from qsingleton.field_linalg import check_prime
from qsingleton.stabilizer_core import StabilizerCode, make_code
from qsingleton.symplectic_space import LETTERS, PauliVector, QubitSet

_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"^[0-9]+$")


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns, comment stripped."""
    body = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]


def _int(tok: str, lineno: int, col: int) -> int:
    if not _INT.match(tok):
        raise CodeSyntaxError(f"expected a nonnegative integer, got {tok!r}", lineno, col)
    return int(tok)


def _header(toks: list[tuple[int, str]], key: str, lineno: int) -> int:
    col, head = toks[0]
    if head != key:
        raise CodeSyntaxError(f"expected '{key} <value>', got {head!r}", lineno, col)
    if len(toks) != 2:
        col = toks[2][0] if len(toks) > 2 else col + len(head)
        raise CodeSyntaxError(f"'{key}' takes exactly one value", lineno, col)
    return _int(toks[1][1], lineno, toks[1][0])


def parse_code(text: str) -> StabilizerCode:
    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if not ch.isascii())
        lineno = text.count("\n", 0, bad) + 1
        col = bad - (text.rfind("\n", 0, bad) + 1) + 1
        raise CodeSyntaxError("non-ASCII character", lineno, col)
    p = n = None
    generators: list[PauliVector] = []
    lines: list[int] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        if p is None:
            p = _header(toks, "p", lineno)
            try:
                check_prime(p)
            except NotPrime as exc:
                raise CodeSyntaxError(str(exc), lineno, toks[1][0]) from None
            continue
        if n is None:
            n = _header(toks, "n", lineno)
            continue
        col, head = toks[0]
        args = toks[1:]
        if head == "g":
            if len(args) != 2 * n:
                raise WrongLength(f"'g' line needs {2 * n} integers, got {len(args)}", lineno, col)
            values = []
            for c, tok in args:
                x = _int(tok, lineno, c)
                if x >= p:
                    raise CodeSyntaxError(f"entry {x} is not in [0, {p})", lineno, c)
                values.append(x)
            generators.append(PauliVector.from_flat(p, values))
        elif head == "P":
            if p != 2:
                raise LetterRequiresP2(f"Pauli letters need p = 2, got p = {p}", lineno, col)
            if len(args) != 1:
                raise CodeSyntaxError("'P' takes one Pauli string", lineno, col)
            c, word = args[0]
            for offset, ch in enumerate(word):
                if ch not in LETTERS:
                    raise CodeSyntaxError(f"invalid Pauli letter {ch!r}", lineno, c + offset)
            if len(word) != n:
                raise WrongLength(f"Pauli string of length {len(word)}, expected {n}", lineno, c)
            generators.append(PauliVector.from_pauli(word))
        else:
            raise CodeSyntaxError(f"unknown line type {head!r}; expected 'g' or 'P'", lineno, col)
        lines.append(lineno)
    if p is None:
        raise CodeSyntaxError("missing 'p' header", 1, 1)
    if n is None:
        raise CodeSyntaxError("missing 'n' header", len(text.split("\n")), 1)
    try:
        return make_code(p, n, generators)
    except NotIsotropic as exc:
        i, j = exc.pair
        a, b = lines[i], lines[j]
        err = NotIsotropic(
            (i, j), exc.value, f"generators on lines {a} and {b} have symplectic form {exc.value} != 0"
        )
        err.lines = (a, b)
        raise err from None


def format_row(row: Iterable[int]) -> str:
    return " ".join(map(str, row))


def serialize_code(code: StabilizerCode, comments: Iterable[str] = ()) -> str:
    """Header plus one ``g`` line per canonical basis row; p = 2 adds ``# P`` comments."""
    out = [f"# {c}" if c else "#" for c in comments]
    out += [f"p {code.p}", f"n {code.n}"]
    for g in code.generators:
        out.append("g " + format_row(g.flat()))
        if code.p == 2:
            out.append(f"# P {g.pauli()}")
    return "\n".join(out) + "\n"


def parse_qubit_set(text: str, n: int) -> QubitSet:
    """Comma-separated 1-based indices and ``a-b`` ranges, or ``empty``."""
    text = text.strip()
    if text == "empty" or text == "":
        return QubitSet(n)
    members: list[int] = []
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"([0-9]+)(?:\s*-\s*([0-9]+))?", part)
        if not m:
            raise CodeSyntaxError(f"bad qubit set item {part!r}")
        lo = int(m.group(1))
        hi = int(m.group(2)) if m.group(2) else lo
        if lo > hi:
            raise CodeSyntaxError(f"empty range {part!r}")
        for i in (lo, hi):
            if not 1 <= i <= n:
                raise IndexOutOfRange(f"qubit index {i} outside [1, {n}]")
        members.extend(range(lo, hi + 1))
    return QubitSet(n, tuple(members))


def parse_vector(text: str, p: int, n: int) -> PauliVector:
    """A Pauli string (p = 2) or 2n integers separated by spaces or commas."""
    text = text.strip()
    if text and all(ch in LETTERS for ch in text):
        if p != 2:
            raise LetterRequiresP2(f"Pauli letters need p = 2, got p = {p}")
        if len(text) != n:
            raise WrongLength(f"Pauli string of length {len(text)}, expected {n}")
        return PauliVector.from_pauli(text)
    parts = [t for t in re.split(r"[\s,]+", text) if t]
    if text.startswith("g "):
        parts = parts[1:]
    if not all(_INT.match(t) for t in parts):
        raise CodeSyntaxError(f"cannot read {text!r} as a vector")
    if len(parts) != 2 * n:
        raise WrongLength(f"vector needs {2 * n} integers, got {len(parts)}")
    return PauliVector.from_flat(p, [int(t) for t in parts])


def format_vector(v: PauliVector) -> str:
    """Integer row, plus the Pauli string when p = 2."""
    row = format_row(v.flat())
    return f"{row} ({v.pauli()})" if v.p == 2 else row
