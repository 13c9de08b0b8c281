"""Particle-number and spin-sector projectors built in Pauli space.

The projector onto ``N`` particles among a set of modes is the Lagrange
polynomial in the number operator that is 1 at ``N`` and 0 at every other
attainable occupation.  With ``n_j = (1 - Z_j)/2`` the idempotency ``n_j**2 =
n_j`` is realized by ``Z_j**2 = 1`` during canonicalization, so the result has
at most ``2**|modes|`` terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DimensionError
from .fermion import number_operator
from .pauli import PauliSum, conjugate_sandwich, multiply_sums

__all__ = [
    "TotalNumber",
    "SpinResolved",
    "SectorSpec",
    "number_projector_factors",
    "number_projector",
    "sector_projector_factors",
    "sector_projector",
    "project",
    "project_factorwise",
    "reduced_qubit_bound",
]


@dataclass(frozen=True)
class TotalNumber:
    n: int

    def validate(self, n_qubits: int):
        if not 0 <= self.n <= n_qubits:
            raise ValueError(f"electron count {self.n} outside 0..{n_qubits}")


@dataclass(frozen=True)
class SpinResolved:
    up_modes: tuple[int, ...]
    n_up: int
    down_modes: tuple[int, ...]
    n_down: int

    def __post_init__(self):
        object.__setattr__(self, "up_modes", tuple(sorted(set(self.up_modes))))
        object.__setattr__(self, "down_modes", tuple(sorted(set(self.down_modes))))

    def validate(self, n_qubits: int):
        if set(self.up_modes) & set(self.down_modes):
            raise ValueError("spin-up and spin-down mode sets overlap")
        for j in self.up_modes + self.down_modes:
            if not 1 <= j <= n_qubits:
                raise ValueError(f"mode {j} outside 1..{n_qubits}")
        if not 0 <= self.n_up <= len(self.up_modes):
            raise ValueError(f"N_up={self.n_up} outside 0..{len(self.up_modes)}")
        if not 0 <= self.n_down <= len(self.down_modes):
            raise ValueError(f"N_down={self.n_down} outside 0..{len(self.down_modes)}")

    @classmethod
    def halves(cls, n_qubits: int, n_up: int, n_down: int) -> SpinResolved:
        """Spin-up on the first half of the modes, spin-down on the second."""
        half = n_qubits // 2
        return cls(tuple(range(1, half + 1)), n_up, tuple(range(half + 1, n_qubits + 1)), n_down)


SectorSpec = Union[TotalNumber, SpinResolved]


def number_projector_factors(
    n_qubits: int, n: int, modes: Iterable[int] | None = None
) -> list[PauliSum]:
    """Factors ``(N_modes - j) / (n - j)`` for ``j != n``, in ascending ``j``."""
    modes = list(range(1, n_qubits + 1)) if modes is None else sorted(set(modes))
    if not 0 <= n <= len(modes):
        raise ValueError(f"particle number {n} outside 0..{len(modes)}")
    if not modes:
        return []
    count = number_operator(n_qubits, modes)
    return [(count - j) / (n - j) for j in range(len(modes) + 1) if j != n]


def number_projector(n_qubits: int, n: int, modes: Iterable[int] | None = None) -> PauliSum:
    factors = number_projector_factors(n_qubits, n, modes)
    return reduce(multiply_sums, factors, PauliSum.identity(n_qubits))


def sector_projector_factors(n_qubits: int, spec: SectorSpec) -> list[PauliSum]:
    spec.validate(n_qubits)
    if isinstance(spec, TotalNumber):
        return number_projector_factors(n_qubits, spec.n)
    return number_projector_factors(n_qubits, spec.n_up, spec.up_modes) + number_projector_factors(
        n_qubits, spec.n_down, spec.down_modes
    )


def sector_projector(n_qubits: int, spec: SectorSpec) -> PauliSum:
    spec.validate(n_qubits)
    if isinstance(spec, TotalNumber):
        return number_projector(n_qubits, spec.n)
    up = number_projector(n_qubits, spec.n_up, spec.up_modes)
    down = number_projector(n_qubits, spec.n_down, spec.down_modes)
    return multiply_sums(up, down)


def project(h: PauliSum, p: PauliSum) -> PauliSum:
    """``p^dagger h p`` for a Hermitian idempotent ``p``."""
    if h.n_qubits != p.n_qubits:
        raise DimensionError(f"qubit counts differ: {h.n_qubits} vs {p.n_qubits}")
    if not p.is_hermitian():
        raise ValueError("projector is not Hermitian")
    if not multiply_sums(p, p).equals(p, atol=1e-10):
        raise ValueError("projector is not idempotent")
    return conjugate_sandwich(p, h)


def project_factorwise(h: PauliSum, factors: Sequence[PauliSum]) -> PauliSum:
    """Conjugate by commuting Hermitian factors one at a time, innermost first.

    Canonicalizing after every factor keeps intermediate sums small; the
    result equals ``project(h, prod(factors))``.
    """
    for f in factors:
        if not f.is_hermitian():
            raise ValueError("projector factor is not Hermitian")
    for i, f in enumerate(factors):
        for g in factors[i + 1:]:
            if not multiply_sums(f, g).equals(multiply_sums(g, f)):
                raise ValueError("projector factors do not commute")
    for f in factors:
        h = conjugate_sandwich(f, h)
    return h


def reduced_qubit_bound(n_orbitals: int, n_electrons: int) -> int:
    """Qubits needed to index a fixed-number sector: ``ceil(log2(C(K, N)))``."""
    if not 0 <= n_electrons <= n_orbitals:
        raise ValueError("need 0 <= N <= K")
    return (math.comb(n_orbitals, n_electrons) - 1).bit_length()
