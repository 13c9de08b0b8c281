"""Line-oriented text formats.

``.fham`` (second-quantized Hamiltonian)::

    # comment
    modes 4
    term (-1, 0) 1+ 2-
    term (4, 0) 1+ 1- 4+ 4-

Factors are ``<mode>+`` (creation) or ``<mode>-`` (annihilation), 1-based,
multiplied in written order.

``.psum`` (Pauli sum)::

    qubits 2
    (-1, 0) XI
    (2, 0) ZZ

Letter ``j`` from the left acts on qubit ``j``.  Serialized terms are sorted
by letter string and coefficients carry 17 significant digits, so equal sums
serialize to identical bytes.
"""

from __future__ import annotations

import math
import os
import re
import tempfile
from dataclasses import dataclass

from .errors import ParseError
from .fermion import FermionFactor, FermionHamiltonian, FermionTerm
from .pauli import PauliSum

__all__ = [
    "FhamDocument",
    "parse_fham",
    "serialize_fham",
    "parse_psum",
    "serialize_psum",
    "detect_format",
    "write_atomic",
]

_COMPLEX = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)")
_FACTOR = re.compile(r"([0-9]+)([+-])$")
_DIRECTIVE = re.compile(r"[^\s(]+")
_UINT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class FhamDocument:
    n_modes: int
    terms: tuple[FermionTerm, ...]
    lines: tuple[int, ...]  # source line of each term

    @property
    def hamiltonian(self) -> FermionHamiltonian:
        return FermionHamiltonian(self.n_modes, self.terms)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _parse_float(token: str, lineno: int, col: int) -> float:
    try:
        v = float(token)
    except ValueError:
        raise ParseError(f"malformed number {token!r} in complex literal", lineno, col) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite number {token!r} in complex literal", lineno, col)
    return v


def _parse_complex(text: str, start: int, lineno: int) -> tuple[complex, int]:
    """Complex literal ``(re, im)`` at ``text[start:]``; returns value and end offset."""
    m = _COMPLEX.match(text, start)
    if not m:
        raise ParseError("malformed complex literal, expected '(<re>, <im>)'", lineno, start + 1)
    re_part = _parse_float(m.group(1), lineno, m.start(1) + 1)
    im_part = _parse_float(m.group(2), lineno, m.start(2) + 1)
    return complex(re_part, im_part), m.end()


def _tokens(text: str, start: int):
    for m in re.finditer(r"\S+", text[start:]):
        yield m.group(), start + m.start()


def parse_fham(text: str) -> FhamDocument:
    n_modes = None
    terms, where = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        body_start = len(line) - len(line.lstrip())
        m = _DIRECTIVE.match(line, body_start)
        directive = m.group() if m else line[body_start]
        if directive == "modes":
            if n_modes is not None:
                raise ParseError("duplicate 'modes' line", lineno, body_start + 1)
            rest = list(_tokens(line, body_start + len("modes")))
            if len(rest) != 1:
                raise ParseError("expected 'modes <K>'", lineno, body_start + 1)
            token, col = rest[0]
            if not _UINT.fullmatch(token) or int(token) < 1:
                raise ParseError(f"mode count must be a positive integer, got {token!r}", lineno, col + 1)
            n_modes = int(token)
        elif directive == "term":
            if n_modes is None:
                raise ParseError("'term' before 'modes'", lineno, body_start + 1)
            pos = body_start + len("term")
            while pos < len(line) and line[pos].isspace():
                pos += 1
            coeff, end = _parse_complex(line, pos, lineno)
            factors = []
            for token, col in _tokens(line, end):
                m = _FACTOR.match(token)
                if not m:
                    raise ParseError(f"malformed factor {token!r}, expected '<mode>+' or '<mode>-'", lineno, col + 1)
                mode = int(m.group(1))
                if not 1 <= mode <= n_modes:
                    raise ParseError(f"mode out of range: {mode} not in 1..{n_modes}", lineno, col + 1)
                factors.append(FermionFactor(mode, m.group(2) == "+"))
            terms.append(FermionTerm(coeff, tuple(factors)))
            where.append(lineno)
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno, body_start + 1)
    if n_modes is None:
        raise ParseError("missing 'modes' line", max(1, len(text.splitlines())), 1)
    return FhamDocument(n_modes, tuple(terms), tuple(where))


def _num(v: float) -> str:
    if v == 0:
        return "0"
    return f"{v:.17g}"


def _fmt_complex(c: complex) -> str:
    return f"({_num(c.real)}, {_num(c.imag)})"


def serialize_fham(h: FermionHamiltonian) -> str:
    out = [f"modes {h.n_modes}\n"]
    for term in h.terms:
        factors = "".join(f" {f}" for f in term.factors)
        out.append(f"term {_fmt_complex(term.coefficient)}{factors}\n")
    return "".join(out)


def parse_psum(text: str) -> PauliSum:
    n_qubits = None
    acc = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        start = len(line) - len(line.lstrip())
        if n_qubits is None:
            parts = line.split()
            if parts[0] != "qubits":
                raise ParseError(f"expected 'qubits <K>' header, got {parts[0]!r}", lineno, start + 1)
            if len(parts) != 2 or not _UINT.fullmatch(parts[1]) or int(parts[1]) < 1:
                raise ParseError("expected 'qubits <K>' with positive K", lineno, start + 1)
            n_qubits = int(parts[1])
            continue
        coeff, end = _parse_complex(line, start, lineno)
        rest = list(_tokens(line, end))
        if len(rest) != 1:
            raise ParseError("expected exactly one letter string after the coefficient", lineno, end + 1)
        letters, col = rest[0]
        for k, ch in enumerate(letters):
            if ch not in "IXYZ":
                raise ParseError(f"bad Pauli letter {ch!r}", lineno, col + k + 1)
        if len(letters) != n_qubits:
            raise ParseError(
                f"letter string has {len(letters)} letters, header declares {n_qubits} qubits", lineno, col + 1
            )
        acc.append((coeff, letters))
    if n_qubits is None:
        raise ParseError("missing 'qubits' header", max(1, len(text.splitlines())), 1)
    return PauliSum.from_terms(n_qubits, acc)


def serialize_psum(h: PauliSum) -> str:
    out = [f"qubits {h.n_qubits}\n"]
    for label, c in h.labeled_terms():
        out.append(f"{_fmt_complex(c)} {label}\n")
    return "".join(out)


def detect_format(text: str) -> str:
    """``"fham"`` or ``"psum"`` from the first directive in the text."""
    for raw in text.splitlines():
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head = line.split()[0]
        if head in ("modes", "term"):
            return "fham"
        if head == "qubits":
            return "psum"
        break
    raise ParseError("cannot tell input format: expected a 'modes' or 'qubits' line", 1, 1)


def write_atomic(path: str, text: str):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
