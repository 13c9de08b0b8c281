"""Bundled model Hamiltonians and the projector term-growth benchmark.

Mode/qubit mapping for both four-mode models: 1 = spin-up on site (orbital)
1, 2 = spin-up on site 2, 3 = spin-down on site 1, 4 = spin-down on site 2.
"""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass

from .fermion import FermionHamiltonian, FermionTerm, annihilate, create
from .pauli import PauliSum
from .projectors import number_projector

__all__ = [
    "HubbardParams",
    "H2Integrals",
    "H2Coefficients",
    "hubbard2",
    "h2_hamiltonian",
    "build_model",
    "bench_projector_growth",
    "MODEL_PARAMETERS",
]


@dataclass(frozen=True)
class HubbardParams:
    t: float
    U: float

    def __post_init__(self):
        if not (math.isfinite(self.t) and math.isfinite(self.U)):
            raise ValueError("Hubbard parameters must be finite")


@dataclass(frozen=True)
class H2Integrals:
    h11: float
    h22: float
    h1212: float
    h1221: float
    h1441: float
    h2332: float


@dataclass(frozen=True)
class H2Coefficients:
    f1: float
    f2: float
    f3: float
    f4: float
    f5: float
    f6: float
    f7: float
    f8: float

    @classmethod
    def from_integrals(cls, ints: H2Integrals) -> H2Coefficients:
        h11, h22, h1212, h1221, h1441, h2332 = astuple(ints)
        return cls(
            f1=h11 - h1212 / 2 + h1221 + h1441 / 4 + h22 + h2332 / 4,
            f2=h1221 / 4 - h1212 / 4,
            f3=h1221 / 4,
            f4=h2332 / 4,
            f5=h1441 / 4,
            f6=h1212 / 4,
            f7=-h11 / 2 + h1212 / 4 - h1221 / 2 - h1441 / 4,
            f8=h1212 / 4 - h1221 / 2 - h22 / 2 - h2332 / 4,
        )

    def pauli_sum(self) -> PauliSum:
        f1, f2, f3, f4, f5, f6, f7, f8 = astuple(self)
        return PauliSum.from_terms(
            4,
            [
                (f1, ""),
                (f2, "Z1 Z2"),
                (f2, "Z3 Z4"),
                (f3, "Z1 Z3"),
                (f3, "Z2 Z4"),
                (f4, "Z2 Z3"),
                (f5, "Z1 Z4"),
                (f6, "XXXX"),
                (f6, "XXYY"),
                (f6, "YYXX"),
                (f6, "YYYY"),
                (f7, "Z1"),
                (f7, "Z4"),
                (f8, "Z2"),
                (f8, "Z3"),
            ],
        )


def hubbard2(params: HubbardParams) -> FermionHamiltonian:
    """Two-site Hubbard model: hopping within each spin species, ``U n1 n4 + U n2 n3``."""
    t, u = params.t, params.U
    terms = [
        FermionTerm(-t, (create(1), annihilate(2))),
        FermionTerm(-t, (create(2), annihilate(1))),
        FermionTerm(-t, (create(3), annihilate(4))),
        FermionTerm(-t, (create(4), annihilate(3))),
        FermionTerm(u, (create(1), annihilate(1), create(4), annihilate(4))),
        FermionTerm(u, (create(2), annihilate(2), create(3), annihilate(3))),
    ]
    return FermionHamiltonian(4, terms)


def h2_hamiltonian(ints: H2Integrals) -> PauliSum:
    return H2Coefficients.from_integrals(ints).pauli_sum()


MODEL_PARAMETERS = {
    "hubbard2": ("t", "U"),
    "h2": ("h11", "h22", "h1212", "h1221", "h1441", "h2332"),
}


def build_model(name: str, **params) -> FermionHamiltonian | PauliSum:
    if name not in MODEL_PARAMETERS:
        raise ValueError(f"unknown model {name!r}; choose from {sorted(MODEL_PARAMETERS)}")
    wanted = MODEL_PARAMETERS[name]
    missing = [p for p in wanted if params.get(p) is None]
    if missing:
        raise ValueError(f"model {name!r} is missing parameter(s): {', '.join(missing)}")
    extra = set(params) - set(wanted)
    if extra:
        raise ValueError(f"model {name!r} does not take: {', '.join(sorted(extra))}")
    values = {p: float(params[p]) for p in wanted}
    if name == "hubbard2":
        return hubbard2(HubbardParams(**values))
    return h2_hamiltonian(H2Integrals(**values))


def bench_projector_growth(max_k: int) -> list[tuple[int, int, int, int]]:
    """Rows ``(K, N, projector terms, 2**K)`` for ``1 <= K <= max_k``, all ``N``."""
    if not 1 <= max_k <= 16:
        raise ValueError("max_k must lie in 1..16")
    rows = []
    for k in range(1, max_k + 1):
        for n in range(k + 1):
            count = len(number_projector(k, n))
            assert count <= 2**k, f"projector K={k} N={n} has {count} > 2**K terms"
            rows.append((k, n, count, 2**k))
    return rows
