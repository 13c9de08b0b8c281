"""Qubit elimination: shift operators, reorder operators and the full pipeline.

An operator on ``K`` qubits whose matrix lives entirely on the middle half of
the basis (indices ``[2**(K-2), 3*2**(K-2))``, i.e. where qubits ``K-1`` and
``K`` disagree) is turned into ``1 (x) H'`` by

    T = S+^dagger h S+ + S-^dagger h S-

where ``S+`` cyclically shifts basis states up by a quarter of the space and
``S- = S+^dagger``.  Dropping the idle top qubit leaves ``H'`` on ``K-1``
qubits with the same nonzero spectrum.  When the support is not in the
middle half, a permutation ("reorder") operator relocates it first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import DimensionError, NotReducibleError, ReductionError
from .fermion import FermionHamiltonian, jordan_wigner
from .pauli import (
    DEFAULT_MATRIX_LIMIT,
    PauliSum,
    acts_trivially_on,
    combine,
    conjugate_sandwich,
    drop_qubit,
    multiply_sums,
    support_set,
)
from .projectors import SectorSpec, project, sector_projector

__all__ = [
    "ReorderOperator",
    "StageRecord",
    "ReductionTrace",
    "shift_operators",
    "middle_half_projector",
    "middle_half_test",
    "reduce_once",
    "paper_reorder_3q",
    "basis_outer",
    "synthesize_reorder",
    "reduce_full",
]


@dataclass(frozen=True)
class ReorderOperator:
    operator: PauliSum
    permutation: tuple[tuple[int, int], ...] = ()

    def apply(self, h: PauliSum) -> PauliSum:
        if h.n_qubits != self.operator.n_qubits:
            raise DimensionError(
                f"reorder operator acts on {self.operator.n_qubits} qubits, operator on {h.n_qubits}"
            )
        return conjugate_sandwich(self.operator, h)


@dataclass(frozen=True)
class StageRecord:
    label: str
    qubits: int
    term_count: int
    max_weight: int
    operator: PauliSum | None = field(default=None, repr=False, compare=False)

    @classmethod
    def of(cls, label: str, h: PauliSum) -> StageRecord:
        return cls(label, h.n_qubits, len(h), h.max_weight, h)

    def line(self) -> str:
        return f"stage={self.label} qubits={self.qubits} terms={self.term_count} max_weight={self.max_weight}"


@dataclass
class ReductionTrace:
    stages: list[StageRecord] = field(default_factory=list)
    stop_reason: str | None = None

    def record(self, label: str, h: PauliSum):
        self.stages.append(StageRecord.of(label, h))

    @property
    def qubits_removed(self) -> int:
        return sum(1 for s in self.stages if s.label == "shift-reduce")

    @property
    def final(self) -> StageRecord:
        return self.stages[-1]

    def render(self) -> str:
        return "".join(s.line() + "\n" for s in self.stages)


def shift_operators(n_qubits: int) -> tuple[PauliSum, PauliSum]:
    """Quarter-block cyclic shifts acting on qubits ``K-1`` and ``K``.

    ``S+|j> = |j + 2**(K-2) mod 2**K>``; ``S-`` is its adjoint.
    """
    if n_qubits < 2:
        raise ValueError("shift operators need at least two qubits")
    lo = 1 << (n_qubits - 2)
    hi = 1 << (n_qubits - 1)
    s_plus = PauliSum(
        n_qubits,
        {
            (lo, 0): 0.5,
            (lo | hi, 0): 0.5,
            (lo, lo): -0.5j,
            (lo | hi, lo): 0.5j,
        },
    )
    return s_plus, s_plus.adjoint()


def middle_half_projector(n_qubits: int) -> PauliSum:
    """``(1 - Z_{K-1} Z_K) / 2``."""
    zz = (1 << (n_qubits - 2)) | (1 << (n_qubits - 1))
    return PauliSum(n_qubits, {(0, 0): 0.5, (0, zz): -0.5})


def middle_half_test(h: PauliSum) -> bool:
    if h.n_qubits < 2:
        raise ValueError("middle-half test needs at least two qubits")
    if not h:
        return True
    mid = middle_half_projector(h.n_qubits)
    return multiply_sums(multiply_sums(mid, h), mid).equals(h)


def reduce_once(h: PauliSum) -> PauliSum:
    """Remove the most significant qubit of a middle-half supported operator."""
    if not middle_half_test(h):
        mid = middle_half_projector(h.n_qubits)
        leak = h - multiply_sums(multiply_sums(mid, h), mid)
        raise ReductionError(
            "operator is not supported on the middle half of the basis",
            [label for label, _ in leak.labeled_terms()],
        )
    s_plus, s_minus = shift_operators(h.n_qubits)
    t = conjugate_sandwich(s_plus, h) + conjugate_sandwich(s_minus, h)
    if not acts_trivially_on(t, h.n_qubits):
        offending = [label for label, _ in t.labeled_terms() if label[-1] != "I"]
        raise ReductionError("shifted operator still acts on the top qubit", offending)
    return drop_qubit(t, h.n_qubits)


def paper_reorder_3q() -> ReorderOperator:
    """Fixed three-qubit reorder ``(1 + Z1 Z3 - Z1 X2 Z3 + X2) / 2``.

    Flips qubit 2 whenever qubits 1 and 3 differ, so it exchanges basis
    states 1 <-> 3 and 4 <-> 6.
    """
    op = PauliSum.from_terms(3, [(0.5, ""), (0.5, "Z1 Z3"), (-0.5, "Z1 X2 Z3"), (0.5, "X2")])
    return ReorderOperator(op, ((1, 3), (4, 6)))


# |0><0|, |0><1|, |1><0|, |1><1| on a single qubit as {(x, z): coeff}
_ELEMENTARY = {
    (0, 0): {(0, 0): 0.5, (0, 1): 0.5},
    (0, 1): {(1, 0): 0.5, (1, 1): 0.5j},
    (1, 0): {(1, 0): 0.5, (1, 1): -0.5j},
    (1, 1): {(0, 0): 0.5, (0, 1): -0.5},
}


def basis_outer(n_qubits: int, a: int, b: int) -> PauliSum:
    """``|a><b|`` as a product of per-qubit elementary factors."""
    factors = []
    for j in range(n_qubits):
        local = _ELEMENTARY[((a >> j) & 1, (b >> j) & 1)]
        factors.append(
            PauliSum(n_qubits, {(x << j, z << j): c for (x, z), c in local.items()})
        )
    return reduce(multiply_sums, factors)


def synthesize_reorder(h: PauliSum, max_qubits: int | None = None) -> ReorderOperator:
    """Permutation operator that moves the support of ``h`` into the middle half.

    Support states outside the middle half are paired, in ascending order,
    with unused middle-half states.  Each pair becomes a transposition
    ``1 - |a><a| - |b><b| + |a><b| + |b><a|``.
    """
    k = h.n_qubits
    if k < 2:
        raise NotReducibleError("a single qubit cannot be reduced further")
    support = support_set(h, max_qubits)
    half = 1 << (k - 1)
    if len(support) > half:
        raise NotReducibleError(
            f"support of {len(support)} states exceeds half of the {2 * half}-state space"
        )
    lo, hi = 1 << (k - 2), 3 << (k - 2)
    outside = sorted(j for j in support if not lo <= j < hi)
    free = [j for j in range(lo, hi) if j not in support]
    pairs = tuple(zip(outside, free))
    if not pairs:
        return ReorderOperator(PauliSum.identity(k), ())
    # disjoint transpositions: their product is the identity plus the sum of
    # the individual corrections, since corrections of different pairs annihilate
    parts = [(1, PauliSum.identity(k))]
    for a, b in pairs:
        parts += [
            (-1, basis_outer(k, a, a)),
            (-1, basis_outer(k, b, b)),
            (1, basis_outer(k, a, b)),
            (1, basis_outer(k, b, a)),
        ]
    return ReorderOperator(combine(parts), pairs)


def reduce_full(
    h: FermionHamiltonian | PauliSum,
    spec: SectorSpec,
    *,
    paper_exact_reorder: bool = False,
    max_qubits: int | None = None,
) -> tuple[PauliSum, ReductionTrace]:
    """Lower, project and shrink ``h`` until no further qubit can be removed.

    A :class:`PauliSum` input skips the Jordan-Wigner stage.  With
    ``paper_exact_reorder`` the fixed three-qubit reorder operator is used
    whenever a three-qubit operator needs reordering.

    Errors raised by a stage carry the partial trace as ``exc.trace``.
    """
    trace = ReductionTrace()
    limit = DEFAULT_MATRIX_LIMIT if max_qubits is None else max_qubits
    try:
        if isinstance(h, FermionHamiltonian):
            h = jordan_wigner(h)
            trace.record("jw", h)
        h = project(h, sector_projector(h.n_qubits, spec))
        trace.record("project", h)
        while True:
            if h.n_qubits == 1:
                trace.stop_reason = "single-qubit"
                break
            if not middle_half_test(h):
                if paper_exact_reorder and h.n_qubits == 3:
                    reorder = paper_reorder_3q()
                else:
                    try:
                        reorder = synthesize_reorder(h, limit)
                    except NotReducibleError:
                        trace.stop_reason = "not-reducible"
                        break
                h = reorder.apply(h)
                trace.record("reorder", h)
            h = reduce_once(h)
            trace.record("shift-reduce", h)
    except ReductionError as exc:
        exc.trace = trace
        raise
    return h, trace

