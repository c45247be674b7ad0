import itertools

import numpy as np
import pytest

from src.domain.entities.simplicial_complex import simplex_neighbors
from src.domain.exceptions import InputError, ResourceLimitError
from src.domain.services.complex_builder import clique_complex, coboundary, independence_complex
from src.domain.services.graph_generator import generate


def _independent_sets(g, size):
    return sum(
        1 for s in itertools.combinations(range(g.n), size)
        if not any(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))
    )


def test_clique_complex_of_triangle(triangle):
    x = clique_complex(triangle, 2)
    assert x.f_vector() == [3, 3, 1]
    assert x.faces(2) == ((0, 1, 2),)
    assert not x.truncated


def test_clique_complex_without_edges():
    x = clique_complex(generate("empty", 4), 2)
    assert x.f(0) == 4 and x.f(1) == 0 and x.f(2) == 0


def test_clique_complex_of_five_cycle():
    assert clique_complex(generate("cycle", 5), 2).f_vector() == [5, 5]


def test_independence_complex_of_matching(matching2):
    x = independence_complex(matching2, 1)
    assert x.faces(1) == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert not x.truncated


def test_independence_complex_of_complete_graph():
    x = independence_complex(generate("complete", 5), 3)
    assert x.f_vector() == [5]


def test_face_counts_match_subset_enumeration():
    for seed in range(12):
        g = generate("random", 8, 0.4, seed=seed)
        x = independence_complex(g, 7)
        for k in range(8):
            assert x.f(k) == _independent_sets(g, k + 1)


def test_truncation_is_reported():
    x = clique_complex(generate("complete", 5), 2)
    assert x.truncated
    assert x.is_known(2) and not x.is_known(3)
    with pytest.raises(InputError):
        x.faces(3)


def test_face_cap_raises_resource_error():
    with pytest.raises(ResourceLimitError) as error:
        clique_complex(generate("complete", 8), 6, max_faces=50)
    assert error.value.limit == 50


def test_simplex_neighbors(triangle, matching2):
    assert clique_complex(triangle, 2).neighbors((0, 1)) == (2,)
    x = independence_complex(matching2, 1)
    assert x.neighbors((0,)) == (2, 3)
    assert x.neighbors(()) == (0, 1, 2, 3)


def test_flag_property_on_random_graphs():
    for seed in range(6):
        g = generate("random", 7, 0.5, seed=seed)
        x = clique_complex(g, 3)
        for k in range(3):
            for sigma in x.faces(k):
                for tau in x.faces(k):
                    common = set(sigma) & set(tau)
                    if len(common) != k:
                        continue
                    i, = set(sigma) - common
                    j, = set(tau) - common
                    assert x.contains(set(sigma) | {j}) == g.has_edge(i, j)


def test_coboundary_squares_to_zero():
    for seed in range(6):
        x = independence_complex(generate("random", 8, 0.3, seed=seed), 5)
        for k in range(-1, 4):
            product = coboundary(x, k + 1) @ coboundary(x, k)
            assert not np.any(product)


def test_empty_face_coboundary(matching2):
    x = independence_complex(matching2, 2)
    assert np.array_equal(coboundary(x, -1), np.ones((4, 1), dtype=np.int64))


def test_simplex_neighbors_in_independence_complex(matching2):
    x = independence_complex(matching2, 1)
    assert simplex_neighbors(x, (0,)) == (2, 3)
    assert simplex_neighbors(x, (0, 2)) == ()
    assert simplex_neighbors(x, ()) == (0, 1, 2, 3)
    with pytest.raises(InputError):
        simplex_neighbors(x, (0, 1))
