"""Qubit-count reduction of second-quantized Hamiltonians.

Pipeline: Jordan-Wigner lowering, projection onto a particle-number (or
spin-resolved) sector in operator space, then repeated elimination of the
most significant qubit with shift operators, reordering basis states where
needed.  A dense verifier checks that every step preserves the spectrum.
"""

from .errors import (
    DimensionError,
    NotReducibleError,
    ParseError,
    ReductionError,
    SectorTaperError,
    SizeLimitError,
)
from .fermion import (
    FermionFactor,
    FermionHamiltonian,
    FermionTerm,
    annihilate,
    create,
    jordan_wigner,
    number_operator,
)
from .formats import parse_fham, parse_psum, serialize_fham, serialize_psum
from .models import H2Coefficients, H2Integrals, HubbardParams, bench_projector_growth, build_model
from .pauli import (
    DEFAULT_TOLERANCE,
    PauliString,
    PauliSum,
    ToleranceConfig,
    acts_trivially_on,
    apply_to_basis_state,
    combine,
    conjugate_sandwich,
    drop_qubit,
    multiply_strings,
    multiply_sums,
    support_set,
)
from .projectors import (
    SpinResolved,
    TotalNumber,
    number_projector,
    project,
    project_factorwise,
    reduced_qubit_bound,
    sector_projector,
)
from .reduction import (
    ReductionTrace,
    ReorderOperator,
    middle_half_test,
    paper_reorder_3q,
    reduce_full,
    reduce_once,
    shift_operators,
    synthesize_reorder,
)
from .verification import from_matrix, isospectral_check, sector_map, spectrum, to_matrix

__version__ = "0.1.0"
