"""Second-quantized operators and their Jordan-Wigner image."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

from .pauli import PauliSum, combine, multiply_sums

__all__ = [
    "FermionFactor",
    "FermionTerm",
    "FermionHamiltonian",
    "create",
    "annihilate",
    "jordan_wigner",
    "number_operator",
]


@dataclass(frozen=True)
class FermionFactor:
    mode: int
    dagger: bool

    def __post_init__(self):
        if self.mode < 1:
            raise ValueError(f"modes are 1-based, got {self.mode}")

    def __str__(self):
        return f"{self.mode}{'+' if self.dagger else '-'}"


def create(mode: int) -> FermionFactor:
    return FermionFactor(mode, True)


def annihilate(mode: int) -> FermionFactor:
    return FermionFactor(mode, False)


@dataclass(frozen=True)
class FermionTerm:
    """``coefficient`` times the product of ``factors`` in written order."""

    coefficient: complex
    factors: tuple[FermionFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficient", complex(self.coefficient))
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def conserves_number(self) -> bool:
        n_create = sum(f.dagger for f in self.factors)
        return 2 * n_create == len(self.factors)


@dataclass(frozen=True)
class FermionHamiltonian:
    n_modes: int
    terms: tuple[FermionTerm, ...] = field(default=())

    def __post_init__(self):
        if self.n_modes < 1:
            raise ValueError("need at least one mode")
        object.__setattr__(self, "terms", tuple(self.terms))
        for term in self.terms:
            for f in term.factors:
                if f.mode > self.n_modes:
                    raise ValueError(f"mode {f.mode} exceeds declared mode count {self.n_modes}")


def _ladder(n_qubits: int, factor: FermionFactor) -> PauliSum:
    # Z_1 ... Z_{j-1} (X_j -/+ i Y_j) / 2; creation takes the minus sign
    bit = 1 << (factor.mode - 1)
    chain = bit - 1
    y_sign = -1 if factor.dagger else 1
    return PauliSum(n_qubits, {(bit, chain): 0.5, (bit, chain | bit): 0.5j * y_sign})


def jordan_wigner(h: FermionHamiltonian) -> PauliSum:
    k = h.n_modes
    cache: dict[FermionFactor, PauliSum] = {}
    parts = []
    for term in h.terms:
        ops = []
        for f in term.factors:
            if f not in cache:
                cache[f] = _ladder(k, f)
            ops.append(cache[f])
        image = reduce(multiply_sums, ops, PauliSum.identity(k))
        parts.append((term.coefficient, image))
    if not parts:
        return PauliSum.zero(k)
    return combine(parts)


def number_operator(n_qubits: int, modes: Iterable[int] | None = None) -> PauliSum:
    """``sum_j (1 - Z_j) / 2`` over the given modes (all modes by default)."""
    modes = range(1, n_qubits + 1) if modes is None else sorted(set(modes))
    if not modes:
        raise ValueError("number operator needs at least one mode")
    terms = {(0, 0): 0.5 * len(modes)}
    for j in modes:
        if not 1 <= j <= n_qubits:
            raise ValueError(f"mode {j} outside 1..{n_qubits}")
        terms[(0, 1 << (j - 1))] = -0.5
    return PauliSum(n_qubits, terms)
