"""Sparse algebra of Pauli strings and Pauli sums.

A Pauli string on ``n`` qubits is stored in symplectic form: two integer
bitmasks ``x`` and ``z`` (bit ``j-1`` refers to qubit ``j``) plus a phase
``i**k``.  The per-qubit letter is decoded as

    (x, z) = (0, 0) -> I, (1, 0) -> X, (1, 1) -> Y, (0, 1) -> Z

so that ``Y`` is a letter in its own right rather than ``X Z``.

A :class:`PauliSum` maps phase-free strings, keyed by ``(x, z)``, to complex
coefficients.  Construction always canonicalizes: coefficients with magnitude
at or below ``eps_drop`` are removed, which makes equality of operators a
comparison of small dictionaries.

Basis convention used by :func:`apply_to_basis_state` and everything built on
it: a computational basis index is ``sum_j occ_j * 2**(j-1)``, so qubit 1 is
the least significant bit, and ``Z|0> = +|0>``.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import DimensionError, ReductionError, SizeLimitError

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOLERANCE",
    "DEFAULT_MATRIX_LIMIT",
    "PauliString",
    "PauliSum",
    "multiply_strings",
    "combine",
    "multiply_sums",
    "conjugate_sandwich",
    "apply_to_basis_state",
    "support_set",
    "acts_trivially_on",
    "drop_qubit",
]

_PHASES = (1, 1j, -1, -1j)
_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

DEFAULT_MATRIX_LIMIT = 14


@dataclass(frozen=True)
class ToleranceConfig:
    eps_drop: float = 1e-12
    eps_eig: float = 1e-10

    def __post_init__(self):
        if not 0 < self.eps_drop < self.eps_eig < 1:
            raise ValueError("tolerances must satisfy 0 < eps_drop < eps_eig < 1")


DEFAULT_TOLERANCE = ToleranceConfig()


def _product_phase(x1: int, z1: int, x2: int, z2: int) -> int:
    """Power of ``i`` picked up when multiplying two phase-free letter strings."""
    ax, ay, az = x1 & ~z1, x1 & z1, z1 & ~x1
    bx, by, bz = x2 & ~z2, x2 & z2, z2 & ~x2
    # XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i
    plus = ((ax & by) | (ay & bz) | (az & bx)).bit_count()
    minus = ((ay & bx) | (az & by) | (ax & bz)).bit_count()
    return (plus - minus) & 3


def _label(n_qubits: int, x: int, z: int) -> str:
    return "".join(_LETTERS[((x >> j) & 1, (z >> j) & 1)] for j in range(n_qubits))


def _parse_label(label: str, n_qubits: int) -> tuple[int, int]:
    """Decode a dense ("XIZ") or sparse ("X1 Z3") label into masks."""
    text = label.replace(" ", "")
    x = z = 0
    if any(ch.isdigit() for ch in text):
        pos = 0
        while pos < len(text):
            letter = text[pos].upper()
            if letter not in _BITS:
                raise ValueError(f"bad Pauli letter {text[pos]!r} in {label!r}")
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == pos + 1:
                raise ValueError(f"missing qubit index after {letter!r} in {label!r}")
            qubit = int(text[pos + 1:end])
            if not 1 <= qubit <= n_qubits:
                raise DimensionError(f"qubit {qubit} outside 1..{n_qubits} in {label!r}")
            bit = 1 << (qubit - 1)
            if (x | z) & bit:
                raise ValueError(f"qubit {qubit} repeated in {label!r}")
            bx, bz = _BITS[letter]
            x |= bit * bx
            z |= bit * bz
            pos = end
        return x, z
    if text in ("", "1"):
        return 0, 0
    if len(text) != n_qubits:
        raise DimensionError(f"label {label!r} has {len(text)} letters, expected {n_qubits}")
    for j, ch in enumerate(text.upper()):
        if ch not in _BITS:
            raise ValueError(f"bad Pauli letter {ch!r} in {label!r}")
        bx, bz = _BITS[ch]
        x |= bx << j
        z |= bz << j
    return x, z


@dataclass(frozen=True)
class PauliString:
    """A single tensor product of Pauli letters times ``i**phase``."""

    n_qubits: int
    x_mask: int = 0
    z_mask: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.n_qubits < 1:
            raise DimensionError("a Pauli string needs at least one qubit")
        if (self.x_mask | self.z_mask) >> self.n_qubits:
            raise DimensionError("mask bits set beyond n_qubits")
        if self.x_mask < 0 or self.z_mask < 0:
            raise ValueError("masks must be non-negative")
        object.__setattr__(self, "phase", self.phase & 3)

    @classmethod
    def from_label(cls, label: str, n_qubits: int | None = None) -> PauliString:
        if n_qubits is None:
            n_qubits = len(label)
        x, z = _parse_label(label, n_qubits)
        return cls(n_qubits, x, z)

    @property
    def label(self) -> str:
        return _label(self.n_qubits, self.x_mask, self.z_mask)

    @property
    def weight(self) -> int:
        return (self.x_mask | self.z_mask).bit_count()

    @property
    def factor(self) -> complex:
        return _PHASES[self.phase]

    def key(self) -> tuple[int, int]:
        return self.x_mask, self.z_mask

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply_strings(self, other)

    def __repr__(self):
        sign = ("+", "+i", "-", "-i")[self.phase]
        return f"PauliString({sign}{self.label})"


def multiply_strings(a: PauliString, b: PauliString) -> PauliString:
    if a.n_qubits != b.n_qubits:
        raise DimensionError(f"qubit counts differ: {a.n_qubits} vs {b.n_qubits}")
    k = a.phase + b.phase + _product_phase(a.x_mask, a.z_mask, b.x_mask, b.z_mask)
    return PauliString(a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask, k)


class PauliSum:
    """Canonical linear combination of phase-free Pauli strings.

    Instances are treated as immutable; all arithmetic returns new sums.

    >>> h = PauliSum.from_terms(2, [(0.5, "ZZ"), (0.5, "")])
    >>> len(h)
    2
    """

    __slots__ = ("n_qubits", "_terms")

    def __init__(
        self,
        n_qubits: int,
        terms: Mapping[tuple[int, int], complex] | None = None,
        *,
        eps: float | None = None,
    ):
        if n_qubits < 1:
            raise DimensionError("a Pauli sum needs at least one qubit")
        eps = DEFAULT_TOLERANCE.eps_drop if eps is None else eps
        self.n_qubits = n_qubits
        clean = {}
        if terms:
            limit = 1 << n_qubits
            for (x, z), c in terms.items():
                if x >= limit or z >= limit:
                    raise DimensionError("term acts beyond n_qubits")
                c = complex(c)
                if abs(c) > eps:
                    clean[(x, z)] = c
        self._terms = clean

    # construction helpers

    @classmethod
    def zero(cls, n_qubits: int) -> PauliSum:
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits: int, coeff: complex = 1.0) -> PauliSum:
        return cls(n_qubits, {(0, 0): coeff})

    @classmethod
    def from_string(cls, s: PauliString, coeff: complex = 1.0) -> PauliSum:
        return cls(s.n_qubits, {s.key(): coeff * s.factor})

    @classmethod
    def from_terms(cls, n_qubits: int, terms: Iterable[tuple[complex, str]]) -> PauliSum:
        """Build a sum from ``(coeff, label)`` pairs; repeated labels accumulate.

        Labels are either dense, one letter per qubit with qubit 1 leftmost
        (``"XIZ"``), or sparse with 1-based qubit numbers (``"X1 Z3"``).  The
        empty label is the identity.
        """
        acc: dict[tuple[int, int], complex] = {}
        for coeff, label in terms:
            key = _parse_label(label, n_qubits)
            acc[key] = acc.get(key, 0) + coeff
        return cls(n_qubits, acc)

    # read access

    @property
    def terms(self) -> Mapping[tuple[int, int], complex]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[PauliString, complex]]:
        for (x, z), c in self._terms.items():
            yield PauliString(self.n_qubits, x, z), c

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, label: str) -> complex:
        return self._terms.get(_parse_label(label, self.n_qubits), 0j)

    def labeled_terms(self) -> list[tuple[str, complex]]:
        """Terms as ``(label, coeff)`` sorted lexicographically by label."""
        return sorted(
            ((_label(self.n_qubits, x, z), c) for (x, z), c in self._terms.items()),
            key=lambda item: item[0],
        )

    @property
    def max_weight(self) -> int:
        return max(((x | z).bit_count() for x, z in self._terms), default=0)

    # algebra

    def adjoint(self) -> PauliSum:
        # keys are Hermitian letter strings, so only coefficients conjugate
        return PauliSum(self.n_qubits, {k: c.conjugate() for k, c in self._terms.items()})

    dag = adjoint

    def is_hermitian(self, atol: float | None = None) -> bool:
        atol = DEFAULT_TOLERANCE.eps_drop if atol is None else atol
        return all(abs(c.imag) <= atol for c in self._terms.values())

    def equals(self, other: PauliSum, atol: float | None = None) -> bool:
        atol = DEFAULT_TOLERANCE.eps_drop if atol is None else atol
        if self.n_qubits != other.n_qubits:
            return False
        a, b = self._terms, other._terms
        return all(abs(a.get(k, 0) - b.get(k, 0)) <= atol for k in a.keys() | b.keys())

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = PauliSum.identity(self.n_qubits, other)
        if not isinstance(other, PauliSum):
            return NotImplemented
        return combine([(1, self), (1, other)])

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if isinstance(other, numbers.Number):
            other = PauliSum.identity(self.n_qubits, other)
        if not isinstance(other, PauliSum):
            return NotImplemented
        return combine([(1, self), (-1, other)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return PauliSum(self.n_qubits, {k: c * other for k, c in self._terms.items()})
        if isinstance(other, PauliSum):
            return multiply_sums(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return self * (1 / other)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"PauliSum({self.n_qubits}, 0)"
        body = " + ".join(f"({c:.6g}) {label}" for label, c in self.labeled_terms())
        return f"PauliSum({self.n_qubits}, {body})"


def _check_same(a: PauliSum, b: PauliSum):
    if a.n_qubits != b.n_qubits:
        raise DimensionError(f"qubit counts differ: {a.n_qubits} vs {b.n_qubits}")


def combine(parts: Iterable[tuple[complex, PauliSum]]) -> PauliSum:
    """Linear combination ``sum(scale * part)``, canonicalized."""
    acc: dict[tuple[int, int], complex] = {}
    n = None
    for scale, part in parts:
        if n is None:
            n = part.n_qubits
        elif part.n_qubits != n:
            raise DimensionError(f"qubit counts differ: {n} vs {part.n_qubits}")
        for k, c in part._terms.items():
            acc[k] = acc.get(k, 0) + scale * c
    if n is None:
        raise ValueError("combine needs at least one part")
    return PauliSum(n, acc)


def multiply_sums(a: PauliSum, b: PauliSum) -> PauliSum:
    _check_same(a, b)
    acc: dict[tuple[int, int], complex] = {}
    bt = list(b._terms.items())
    for (x1, z1), c1 in a._terms.items():
        for (x2, z2), c2 in bt:
            key = (x1 ^ x2, z1 ^ z2)
            c = c1 * c2 * _PHASES[_product_phase(x1, z1, x2, z2)]
            acc[key] = acc.get(key, 0) + c
    return PauliSum(a.n_qubits, acc)


def conjugate_sandwich(a: PauliSum, h: PauliSum) -> PauliSum:
    """Return ``a^dagger h a``."""
    _check_same(a, h)
    return multiply_sums(multiply_sums(a.adjoint(), h), a)


def _check_matrix_limit(n_qubits: int, max_qubits: int | None):
    limit = DEFAULT_MATRIX_LIMIT if max_qubits is None else max_qubits
    if n_qubits > limit:
        raise SizeLimitError(f"{n_qubits} qubits exceeds the matrix-realization limit of {limit}")


def apply_to_basis_state(h: PauliSum, index: int) -> dict[int, complex]:
    """Amplitudes of ``h|index>``; zero amplitudes (after cancellation) are omitted."""
    if not 0 <= index < (1 << h.n_qubits):
        raise DimensionError(f"basis index {index} outside [0, {1 << h.n_qubits})")
    out: dict[int, complex] = {}
    for (x, z), c in h._terms.items():
        # Y|b> = i(-1)^b |b^1>, Z|b> = (-1)^b |b>
        k = (x & z).bit_count() + 2 * (z & index).bit_count()
        target = index ^ x
        out[target] = out.get(target, 0) + c * _PHASES[k & 3]
    return {j: a for j, a in out.items() if abs(a) > DEFAULT_TOLERANCE.eps_drop}


def support_set(h: PauliSum, max_qubits: int | None = None) -> set[int]:
    """Basis indices touched by ``h`` as a column or as a row."""
    _check_matrix_limit(h.n_qubits, max_qubits)
    support: set[int] = set()
    if not h:
        return support
    for j in range(1 << h.n_qubits):
        column = apply_to_basis_state(h, j)
        if column:
            support.add(j)
            support.update(column)
    return support


def acts_trivially_on(h: PauliSum, qubit: int) -> bool:
    if not 1 <= qubit <= h.n_qubits:
        raise DimensionError(f"qubit {qubit} outside 1..{h.n_qubits}")
    bit = 1 << (qubit - 1)
    return not any((x | z) & bit for x, z in h._terms)


def drop_qubit(h: PauliSum, qubit: int) -> PauliSum:
    """Remove a qubit on which ``h`` acts as the identity; higher labels shift down."""
    if h.n_qubits < 2:
        raise DimensionError("cannot drop the only qubit")
    if not acts_trivially_on(h, qubit):
        bit = 1 << (qubit - 1)
        offending = [_label(h.n_qubits, x, z) for x, z in h._terms if (x | z) & bit]
        raise ReductionError(f"operator acts nontrivially on qubit {qubit}", offending)
    low = (1 << (qubit - 1)) - 1

    def squeeze(m):
        return (m & low) | ((m >> qubit) << (qubit - 1))

    return PauliSum(h.n_qubits - 1, {(squeeze(x), squeeze(z)): c for (x, z), c in h._terms.items()})
