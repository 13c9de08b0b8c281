"""Dense realization of Pauli sums for desk-scale spectral checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import DimensionError
from .pauli import DEFAULT_TOLERANCE, PauliSum, _check_matrix_limit

__all__ = [
    "Spectrum",
    "IsospectralReport",
    "SectorMap",
    "to_matrix",
    "from_matrix",
    "spectrum",
    "isospectral_check",
    "sector_map",
]

_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
}


def _parity(values: np.ndarray) -> np.ndarray:
    """Parity of the popcount of each entry of a non-negative int array."""
    out = np.zeros_like(values)
    v = values.copy()
    while v.any():
        out ^= v & 1
        v >>= 1
    return out


def to_matrix(h: PauliSum, max_qubits: int | None = None) -> np.ndarray:
    """Dense matrix with qubit 1 as the least significant tensor factor."""
    n = h.n_qubits
    _check_matrix_limit(n, max_qubits)
    out = np.zeros((1 << n, 1 << n), dtype=complex)
    for (x, z), c in h.terms.items():
        # kron(M_K, ..., M_1)
        mats = [_SINGLE[((x >> j) & 1, (z >> j) & 1)] for j in reversed(range(n))]
        out += c * reduce(np.kron, mats)
    return out


def from_matrix(m, max_qubits: int | None = None) -> PauliSum:
    """Pauli decomposition, ``coeff(P) = tr(P m) / 2**K``.

    For each X-mask the traces over all Z-masks form a Walsh-Hadamard
    transform of the diagonal ``k -> m[k, k ^ x]``.
    """
    m = np.asarray(m, dtype=complex)
    dim = m.shape[0]
    if m.ndim != 2 or m.shape[1] != dim or dim < 2 or dim & (dim - 1):
        raise DimensionError(f"matrix of shape {m.shape} is not 2**K square")
    n = dim.bit_length() - 1
    _check_matrix_limit(n, max_qubits)
    idx = np.arange(dim)
    signs = 1 - 2 * _parity(idx[:, None] & idx[None, :])  # signs[z, k] = (-1)^|z & k|
    y_count = np.array([[bin(x & z).count("1") for z in range(dim)] for x in range(dim)])
    i_pow = (1j) ** y_count
    terms = {}
    for x in range(dim):
        traces = signs @ m[idx, idx ^ x] / dim
        for z in np.flatnonzero(np.abs(traces) > DEFAULT_TOLERANCE.eps_drop):
            terms[(x, int(z))] = i_pow[x, z] * traces[z]
    return PauliSum(n, terms)


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    tolerance: float = DEFAULT_TOLERANCE.eps_eig

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def format(self, digits: int = 10) -> str:
        def fmt(v):
            v = round(v, digits)
            return f"{v + 0.0:.{digits}g}" if v != 0 else "0"

        return " ".join(fmt(v) for v in self.values)


def spectrum(h: PauliSum, max_qubits: int | None = None) -> Spectrum:
    if not h.is_hermitian():
        raise ValueError("spectrum requires a Hermitian operator")
    values = np.linalg.eigvalsh(to_matrix(h, max_qubits))
    return Spectrum(tuple(float(v) for v in np.sort(values)))


@dataclass
class IsospectralReport:
    ok: bool
    full_qubits: int
    reduced_qubits: int
    zero_padding: int
    max_deviation: float
    unmatched_full: list[float] = field(default_factory=list)
    unmatched_reduced: list[float] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def render(self) -> str:
        lines = [
            f"isospectral: {'yes' if self.ok else 'no'}",
            f"qubits: {self.full_qubits} -> {self.reduced_qubits} (zero padding {self.zero_padding})",
            f"max deviation: {self.max_deviation:.3e}",
        ]
        if self.unmatched_full:
            lines.append("unmatched in full: " + " ".join(f"{v:.12g}" for v in self.unmatched_full))
        if self.unmatched_reduced:
            lines.append("unmatched in reduced: " + " ".join(f"{v:.12g}" for v in self.unmatched_reduced))
        return "\n".join(lines) + "\n"


def isospectral_check(
    full: PauliSum,
    reduced: PauliSum,
    tol: float | None = None,
    max_qubits: int | None = None,
) -> IsospectralReport:
    """Compare ``spec(full)`` with ``spec(reduced)`` plus ``2**K - 2**k`` zeros."""
    tol = DEFAULT_TOLERANCE.eps_eig if tol is None else tol
    if reduced.n_qubits > full.n_qubits:
        raise DimensionError("reduced operator has more qubits than the full one")
    a = spectrum(full, max_qubits).values
    padding = (1 << full.n_qubits) - (1 << reduced.n_qubits)
    b = tuple(sorted(spectrum(reduced, max_qubits).values + (0.0,) * padding))
    max_dev = max(abs(u - v) for u, v in zip(a, b))
    # greedy merge of the two sorted lists
    miss_a, miss_b = [], []
    i = j = 0
    while i < len(a) and j < len(b):
        if abs(a[i] - b[j]) <= tol:
            i += 1
            j += 1
        elif a[i] < b[j]:
            miss_a.append(a[i])
            i += 1
        else:
            miss_b.append(b[j])
            j += 1
    miss_a.extend(a[i:])
    miss_b.extend(b[j:])
    return IsospectralReport(
        ok=not miss_a and not miss_b,
        full_qubits=full.n_qubits,
        reduced_qubits=reduced.n_qubits,
        zero_padding=padding,
        max_deviation=max_dev,
        unmatched_full=miss_a,
        unmatched_reduced=miss_b,
    )


@dataclass(frozen=True)
class SectorMap:
    """Electron count shared by row and column states, ``None`` where they differ."""

    n_qubits: int
    cells: tuple[tuple[int | None, ...], ...]

    def filtered(self, states) -> SectorMap:
        keep = set(states)
        cells = tuple(
            tuple(v if (r in keep and c in keep) else None for c, v in enumerate(row))
            for r, row in enumerate(self.cells)
        )
        return SectorMap(self.n_qubits, cells)

    def render(self, forbidden: str = "o") -> str:
        return "".join(
            " ".join(forbidden if v is None else str(v) for v in row) + "\n" for row in self.cells
        )


def sector_map(n_qubits: int, max_qubits: int | None = None) -> SectorMap:
    _check_matrix_limit(n_qubits, max_qubits)
    counts = [j.bit_count() for j in range(1 << n_qubits)]
    cells = tuple(tuple(r if r == c else None for c in counts) for r in counts)
    return SectorMap(n_qubits, cells)
