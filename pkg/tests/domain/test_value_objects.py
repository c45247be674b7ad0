import numpy as np
import pytest

from src.domain.exceptions import InputError
from src.domain.models.betti_method import BettiMethod
from src.domain.models.bound_direction import BoundDirection
from src.domain.services.complex_builder import clique_complex
from src.domain.value_objects.betti_vector import BettiVector, Connectivity
from src.domain.value_objects.bound_report import BoundReport
from src.domain.value_objects.certificate import Certificate, VectorRepresentation
from src.domain.value_objects.face_weights import FaceWeights
from src.domain.value_objects.spectrum import KSumSpectrum, Spectrum
from src.domain.value_objects.subset_index import SubsetIndex
from src.domain.value_objects.weight_function import WeightFunction, zero_limit_weights


def test_lower_bound_report():
    report = BoundReport("independence_eigenvalues", BoundDirection.LOWER,
                         (1.0, 2.0, 3.0), (1.5, 1.9, 3.0), 0.05)
    assert report.slack == pytest.approx(-0.1)
    assert report.worst_index == 2
    assert not report.holds
    data = report.to_dict()
    assert data['direction'] == "lower" and data['holds'] is False


def test_upper_and_equality_reports():
    upper = BoundReport("degree_sum", BoundDirection.UPPER, (2.0,), (1.0,), 0.0)
    assert upper.slack == pytest.approx(1.0) and upper.holds
    equal = BoundReport("affine_identity", BoundDirection.EQUAL, (2.0, 2.0), (2.0, 2.5), 0.1)
    assert equal.slack == pytest.approx(-0.5) and not equal.holds


def test_report_lengths_must_agree():
    with pytest.raises(InputError):
        BoundReport("x", BoundDirection.LOWER, (1.0,), (), 0.0)


def test_spectrum_is_sorted_and_indexed_from_one():
    spectrum = Spectrum(np.array([3.0, 1.0, 2.0]), 3, 3.0)
    assert spectrum.smallest(1) == 1.0 and spectrum.largest(1) == 3.0
    assert list(spectrum.descending()) == [3.0, 2.0, 1.0]
    with pytest.raises(InputError):
        Spectrum(np.array([1.0]), 2, 1.0)


def test_k_sum_spectrum():
    sums = KSumSpectrum(2, np.array([5.0, 3.0, 4.0]))
    assert (sums.nu(1), sums.mu(1)) == (3.0, 5.0)
    assert sums.to_dict() == {'k': 2, 'values': [3.0, 4.0, 5.0]}


def test_weight_function_validation():
    with pytest.raises(InputError):
        WeightFunction.of([1.0, -0.5])
    with pytest.raises(InputError):
        WeightFunction.of([float("nan")])
    w = WeightFunction.of([0.0, 2.0])
    assert not w.is_positive() and not w.is_zero()
    assert zero_limit_weights(w, 1e-3).values == (1e-3, 2.0)
    assert w.squared().values == (0.0, 4.0)
    assert w.total == 2.0


def test_subset_index_rank_follows_lexicographic_order():
    index = SubsetIndex(6, 3)
    assert len(index) == 20
    assert index.rank((0, 1, 2)) == 0
    assert index.rank((3, 4, 5)) == 19
    assert index.unrank(index.rank((1, 3, 4))) == (1, 3, 4)
    with pytest.raises(InputError):
        index.rank((2, 1, 0))


def test_face_weights(triangle):
    x = clique_complex(triangle, 2)
    weights = FaceWeights.from_values(x, [[1.0, 2.0, 3.0], [1.0, 1.0, 4.0], [2.0]])
    assert weights.weight(x, (1, 2)) == 4.0
    assert list(weights.level(-1)) == [1.0]
    assert len(FaceWeights.uniform(x).level(1)) == 3
    with pytest.raises(InputError):
        FaceWeights.from_values(x, [[1.0, 2.0, 0.0], [1.0, 1.0, 1.0], [1.0]])
    with pytest.raises(InputError):
        FaceWeights.from_values(x, [[1.0, 2.0, 3.0], [1.0], [1.0]])


def test_betti_vector_and_connectivity():
    betti = BettiVector((0, 0, 2), BettiMethod.HODGE, 2)
    assert betti.first_nonzero() == 2
    assert BettiVector((0, 0), BettiMethod.RANK_ORACLE, 1).first_nonzero() == -1
    assert Connectivity(3, True).to_dict() == {'value': 3, 'exact': True}
    with pytest.raises(InputError):
        BettiVector((0,), BettiMethod.HODGE, 2)


def test_certificate_and_vector_representation():
    assert not Certificate(False, -0.5, 2, 1.0)
    p = VectorRepresentation(np.array([[1.0, 0.0], [1.0, 1.0]]))
    assert (len(p), p.dimension) == (2, 2)
    assert np.allclose(p.gram(), [[1.0, 1.0], [1.0, 2.0]])
    assert np.allclose(p.scores([1.0, 0.0]), [1.0, 1.0])
    with pytest.raises(InputError):
        VectorRepresentation(np.array([[np.inf]]))
