import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from sectortaper import FermionFactor, FermionHamiltonian, FermionTerm, PauliSum  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def fermion_matrix(h: FermionHamiltonian) -> np.ndarray:
    """Dense matrix of ``h`` built directly on occupation-number states.

    ``c_j |n> = (-1)**(n_1 + ... + n_{j-1}) |n - e_j>``; basis index
    ``sum_j n_j 2**(j-1)``.  Independent of any Pauli algebra.
    """
    dim = 1 << h.n_modes
    out = np.zeros((dim, dim), dtype=complex)
    for term in h.terms:
        for col in range(dim):
            state, amp = col, term.coefficient
            for f in reversed(term.factors):  # rightmost acts first
                bit = 1 << (f.mode - 1)
                occupied = bool(state & bit)
                if occupied == f.dagger:
                    amp = 0
                    break
                if (state & (bit - 1)).bit_count() % 2:
                    amp = -amp
                state ^= bit
            if amp != 0:
                out[state, col] += amp
    return out


@st.composite
def pauli_sums(draw, n_qubits=None, max_terms=6, hermitian=False, max_n=4):
    n = draw(st.integers(1, max_n)) if n_qubits is None else n_qubits
    keys = st.tuples(st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))
    real = st.floats(-2, 2, allow_nan=False).map(lambda v: round(v, 3))
    if hermitian:
        coeff = real
    else:
        coeff = st.builds(complex, real, real)
    terms = draw(st.dictionaries(keys, coeff, max_size=max_terms))
    return PauliSum(n, terms)


@st.composite
def number_conserving_hamiltonians(draw, n_modes=None, max_terms=5, max_n=5):
    """Random Hermitian number-conserving Hamiltonians (each term plus its adjoint)."""
    k = draw(st.integers(2, max_n)) if n_modes is None else n_modes
    mode = st.integers(1, k)
    terms = []
    for _ in range(draw(st.integers(1, max_terms))):
        order = draw(st.sampled_from([1, 2]))
        creators = [draw(mode) for _ in range(order)]
        annihilators = [draw(mode) for _ in range(order)]
        c = complex(draw(st.floats(-2, 2, allow_nan=False)), draw(st.floats(-1, 1, allow_nan=False)))
        factors = tuple(FermionFactor(m, True) for m in creators) + tuple(FermionFactor(m, False) for m in annihilators)
        adjoint = tuple(FermionFactor(f.mode, not f.dagger) for f in reversed(factors))
        terms.append(FermionTerm(c, factors))
        terms.append(FermionTerm(c.conjugate(), adjoint))
    return FermionHamiltonian(k, terms)


def random_number_conserving(rng: np.random.Generator, k: int, n_terms: int = 6) -> FermionHamiltonian:
    terms = []
    for _ in range(n_terms):
        order = int(rng.integers(1, 3))
        cre = [int(m) for m in rng.integers(1, k + 1, size=order)]
        ann = [int(m) for m in rng.integers(1, k + 1, size=order)]
        c = complex(rng.normal(), rng.normal() * 0.5)
        factors = tuple(FermionFactor(m, True) for m in cre) + tuple(FermionFactor(m, False) for m in ann)
        adjoint = tuple(FermionFactor(f.mode, not f.dagger) for f in reversed(factors))
        terms.append(FermionTerm(c, factors))
        terms.append(FermionTerm(c.conjugate(), adjoint))
    return FermionHamiltonian(k, terms)


@pytest.fixture
def rng():
    return np.random.default_rng(20161011)
