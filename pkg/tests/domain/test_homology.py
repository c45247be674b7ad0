from fractions import Fraction

import numpy as np
import pytest

from src.domain.exceptions import InputError
from src.domain.models.betti_method import BettiMethod
from src.domain.services.complex_builder import clique_complex, independence_complex
from src.domain.services.graph_generator import generate
from src.domain.services.homology import (
    betti_degenerate_upper, betti_hodge, betti_rank_oracle, euler_characteristic, exact_rank,
    homological_connectivity
)
from src.domain.value_objects.weight_function import WeightFunction


def test_exact_rank():
    assert exact_rank(np.array([[1, 2], [2, 4]])) == 1
    assert exact_rank(np.eye(5, dtype=int)) == 5
    assert exact_rank(np.zeros((3, 4), dtype=int)) == 0
    assert exact_rank(np.zeros((0, 3), dtype=int)) == 0
    assert exact_rank(np.array([[Fraction(1, 3), 1], [1, 3]], dtype=object)) == 1


def test_exact_rank_is_not_fooled_by_near_cancellation():
    m = np.array([[3, 1, 2], [6, 2, 4], [1, 1, 1]])
    assert exact_rank(m) == 2


def test_square_has_one_hole(matching2):
    x = independence_complex(matching2, 2)
    betti = betti_rank_oracle(x, 1)
    assert betti.values == (0, 1)
    assert betti.method is BettiMethod.RANK_ORACLE


def test_three_points_have_reduced_zeroth_homology(triangle):
    assert betti_rank_oracle(independence_complex(triangle, 1), 0).values == (2,)


def test_full_simplex_is_acyclic():
    x = independence_complex(generate("empty", 4), 4)
    assert betti_rank_oracle(x, 3).values == (0, 0, 0, 0)
    eta = homological_connectivity(x, 3)
    assert (eta.value, eta.exact) == (4, False)


def test_cutoff_needs_next_dimension(matching2):
    x = independence_complex(generate("complete", 5).complement(), 1)
    with pytest.raises(InputError):
        betti_rank_oracle(x, 1)
    with pytest.raises(InputError):
        betti_rank_oracle(independence_complex(matching2, 1), -1)


def test_hodge_matches_rank_oracle(rng):
    for seed in range(10):
        g = generate("random", 7, 0.5, seed=seed)
        x = independence_complex(g, 4)
        w = WeightFunction.of(rng.uniform(0.3, 2.0, size=7))
        cutoff = min(3, x.top_dim)
        assert betti_hodge(x, w, cutoff).values == betti_rank_oracle(x, cutoff).values


def test_hodge_requires_positive_weights(matching2):
    x = independence_complex(matching2, 2)
    with pytest.raises(InputError):
        betti_hodge(x, WeightFunction.of([1.0, 0.0, 1.0, 1.0]), 1)


def test_zero_weights_only_bound_betti_numbers(rng):
    for seed in range(10):
        g = generate("random", 7, 0.4, seed=seed)
        x = independence_complex(g, 4)
        values = rng.uniform(0.3, 2.0, size=7)
        values[rng.random(7) < 0.4] = 0.0
        cutoff = min(3, x.top_dim)
        upper = betti_degenerate_upper(x, WeightFunction.of(values), cutoff)
        exact = betti_rank_oracle(x, cutoff)
        assert all(u >= e for u, e in zip(upper.values, exact.values))


@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_connectivity(n):
    x = independence_complex(generate("cycle", n), 4)
    eta = homological_connectivity(x, 3)
    assert eta.exact
    assert eta.value == (n + 1) // 3


def test_connectivity_of_empty_complex_is_undefined():
    with pytest.raises(InputError):
        homological_connectivity(independence_complex(generate("empty", 0), 1), 0)


def test_reduced_euler_characteristic(matching2, triangle):
    assert euler_characteristic(independence_complex(matching2, 3)) == -1
    assert euler_characteristic(clique_complex(triangle, 3)) == 0
    with pytest.raises(InputError):
        euler_characteristic(clique_complex(generate("complete", 5), 1))


def test_euler_characteristic_matches_betti_numbers():
    for seed in range(6):
        x = independence_complex(generate("random", 8, 0.5, seed=seed), 8)
        top = max(x.top_dim, 0)
        betti = betti_rank_oracle(x, top)
        assert euler_characteristic(x) == sum((-1) ** k * b for k, b in enumerate(betti.values))
