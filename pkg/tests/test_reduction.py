import numpy as np
import pytest

from conftest import random_number_conserving
from reference import (
    SHIFT_DOWN_2,
    SHIFT_UP_2,
    h2_full,
    h2_reordered,
    h2_three_qubit,
    h2_two_qubit,
    hubbard_projected,
    hubbard_reordered,
    hubbard_three_qubit,
    hubbard_two_qubit,
)
from sectortaper import (
    DimensionError,
    NotReducibleError,
    PauliSum,
    ReductionError,
    SpinResolved,
    TotalNumber,
    isospectral_check,
    jordan_wigner,
    middle_half_test,
    multiply_sums,
    paper_reorder_3q,
    reduce_full,
    reduce_once,
    shift_operators,
    support_set,
    synthesize_reorder,
    to_matrix,
)
from sectortaper.models import HubbardParams, hubbard2
from sectortaper.reduction import basis_outer, middle_half_projector


@pytest.mark.parametrize("k", range(2, 7))
def test_shift_operators_are_unitary_inverses(k):
    s_plus, s_minus = shift_operators(k)
    one = PauliSum.identity(k)
    assert multiply_sums(s_plus, s_minus) == one
    assert multiply_sums(s_minus, s_plus) == one
    assert s_minus == s_plus.adjoint()


@pytest.mark.parametrize("k", range(2, 6))
def test_shift_moves_by_a_quarter(k):
    s_plus, s_minus = shift_operators(k)
    dim = 1 << k
    m = to_matrix(s_plus)
    expected = np.zeros((dim, dim))
    for j in range(dim):
        expected[(j + dim // 4) % dim, j] = 1
    np.testing.assert_array_equal(m, expected)
    np.testing.assert_array_equal(to_matrix(s_minus), expected.T)


def test_two_qubit_shift_matrices():
    s_plus, s_minus = shift_operators(2)
    np.testing.assert_array_equal(to_matrix(s_plus), SHIFT_UP_2)
    np.testing.assert_array_equal(to_matrix(s_minus), SHIFT_DOWN_2)


def test_shift_needs_two_qubits():
    with pytest.raises(ValueError):
        shift_operators(1)


def test_middle_half_projector_diagonal():
    np.testing.assert_array_equal(np.diag(to_matrix(middle_half_projector(3))).real, [0, 0, 1, 1, 1, 1, 0, 0])


def test_middle_half_examples():
    assert middle_half_test(hubbard_projected(1, 4))
    assert not middle_half_test(hubbard_three_qubit(1, 4))
    assert middle_half_test(hubbard_reordered(1, 4))
    assert middle_half_test(PauliSum.zero(3))
    assert not middle_half_test(PauliSum.identity(2))


def test_reduce_once_on_hubbard():
    for t, u in [(1, 4), (-2.2, 0.6)]:
        assert reduce_once(hubbard_projected(t, u)) == hubbard_three_qubit(t, u)
        assert reduce_once(hubbard_reordered(t, u)) == hubbard_two_qubit(t, u)


def test_reduce_once_rejects_outside_support():
    with pytest.raises(ReductionError) as err:
        reduce_once(hubbard_three_qubit(1, 4))
    assert err.value.terms


def test_reduce_once_preserves_spectrum(rng):
    for _ in range(5):
        h = jordan_wigner(random_number_conserving(rng, 4))
        mid = middle_half_projector(4)
        h = multiply_sums(multiply_sums(mid, h), mid)
        reduced = reduce_once(h)
        assert reduced.n_qubits == 3
        assert isospectral_check(h, reduced, tol=1e-9)


def test_paper_reorder():
    r = paper_reorder_3q()
    assert len(r.operator) == 4
    assert multiply_sums(r.operator, r.operator) == PauliSum.identity(3)
    assert r.operator.is_hermitian()
    perm = np.real(to_matrix(r.operator)).astype(int)
    expected = np.eye(8, dtype=int)[[0, 3, 2, 1, 6, 5, 4, 7]]
    np.testing.assert_array_equal(perm, expected)
    assert r.permutation == ((1, 3), (4, 6))


def test_paper_reorder_on_hubbard():
    assert paper_reorder_3q().apply(hubbard_three_qubit(1, 4)) == hubbard_reordered(1, 4)
    with pytest.raises(DimensionError):
        paper_reorder_3q().apply(hubbard_projected(1, 4))


def test_basis_outer():
    m = to_matrix(basis_outer(3, 5, 2))
    expected = np.zeros((8, 8))
    expected[5, 2] = 1
    np.testing.assert_array_equal(m, expected)


def test_synthesized_reorder_on_hubbard():
    h = hubbard_three_qubit(1, 4)
    r = synthesize_reorder(h)
    assert r.permutation == ((1, 3), (6, 4))
    out = r.apply(h)
    assert middle_half_test(out)
    assert multiply_sums(r.operator, r.operator) == PauliSum.identity(3)
    assert isospectral_check(h, out)


def test_synthesize_identity_when_already_middle():
    r = synthesize_reorder(hubbard_reordered(1, 4))
    assert r.permutation == ()
    assert r.operator == PauliSum.identity(3)


def test_synthesize_rejects_full_support():
    with pytest.raises(NotReducibleError):
        synthesize_reorder(hubbard_two_qubit(1, 4))
    with pytest.raises(NotReducibleError):
        synthesize_reorder(PauliSum.identity(1))


def test_hubbard_pipeline_paper_exact():
    h, trace = reduce_full(hubbard2(HubbardParams(1, 4)), TotalNumber(2), paper_exact_reorder=True)
    assert h == hubbard_two_qubit(1, 4)
    assert [s.label for s in trace.stages] == ["jw", "project", "shift-reduce", "reorder", "shift-reduce"]
    assert [s.term_count for s in trace.stages] == [11, 16, 8, 8, 4]
    assert trace.stop_reason == "not-reducible"
    assert trace.qubits_removed == 2
    assert trace.final.max_weight == 2
    assert trace.stages[3].operator == hubbard_reordered(1, 4)
    assert trace.render().splitlines()[0] == "stage=jw qubits=4 terms=11 max_weight=2"


def test_hubbard_pipeline_synthesized_reorder_is_isospectral():
    h, trace = reduce_full(hubbard2(HubbardParams(0.8, 2.5)), TotalNumber(2))
    assert h.n_qubits == 2
    assert isospectral_check(trace.stages[1].operator, h)


def test_h2_pipeline_paper_exact():
    f = (0.7, -0.3, 0.2, 0.11, -0.05, 0.09, -0.4, 0.25)
    h, trace = reduce_full(h2_full(f), SpinResolved.halves(4, 1, 1), paper_exact_reorder=True)
    labels = [s.label for s in trace.stages]
    assert labels == ["project", "shift-reduce", "reorder", "shift-reduce"]
    assert trace.stages[1].operator.equals(h2_three_qubit(f), atol=1e-12)
    assert trace.stages[2].operator.equals(h2_reordered(f), atol=1e-12)
    assert h.equals(h2_two_qubit(f), atol=1e-12)


def test_vacuum_sector_reduces_to_one_qubit():
    h, trace = reduce_full(hubbard2(HubbardParams(1, 4)), TotalNumber(0))
    assert h.n_qubits == 1
    assert trace.stop_reason == "single-qubit"
    assert len(h) == 0


def test_random_pipelines_are_isospectral(rng):
    for k in (4, 5):
        ham = random_number_conserving(rng, k)
        n = int(rng.integers(0, k + 1))
        h, trace = reduce_full(ham, TotalNumber(n))
        projected = trace.stages[1].operator
        assert isospectral_check(projected, h, tol=1e-9)
        if trace.stop_reason == "not-reducible":
            assert len(support_set(h)) > 1 << (h.n_qubits - 1)


def test_pipeline_error_carries_trace(monkeypatch):
    import sectortaper.reduction as red

    def broken(h):
        raise ReductionError("boom", ["ZZZ"])

    monkeypatch.setattr(red, "reduce_once", broken)
    with pytest.raises(ReductionError) as err:
        red.reduce_full(hubbard2(HubbardParams(1, 4)), TotalNumber(2))
    assert [s.label for s in err.value.trace.stages] == ["jw", "project"]
