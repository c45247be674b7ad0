"""
Laplacianos k-dimensionales con pesos, ensamblados de tres formas:
fórmula explícita con pesos en los vértices, fórmula general con pesos en
las caras y composición de cofronteras con sus adjuntos.
"""
import logging
from typing import Iterator, NamedTuple

import numpy as np

from ..entities.simplicial_complex import SimplicialComplex
from ..exceptions import InputError
from ..value_objects.face_weights import FaceWeights
from ..value_objects.weight_function import WeightFunction
from .complex_builder import coboundary
from .compound import swap_sign

logger = logging.getLogger(__name__)


class AdjacentPair(NamedTuple):
    """sigma y tau de dimensión k con sigma \\ tau = {i} y tau \\ sigma = {j}"""
    row: int
    col: int
    sign: int
    i: int
    j: int
    union_is_face: bool


def adjacent_pairs(x: SimplicialComplex, k: int) -> Iterator[AdjacentPair]:
    """
    Recorre los pares ordenados de caras de dimensión k que comparten k
    vértices, con el signo (-1)^eps(sigma, tau).
    """
    x.require_known(k + 1)
    for row, sigma in enumerate(x.faces(k)):
        members = set(sigma)
        for i in sigma:
            rest = tuple(c for c in sigma if c != i)
            for j in range(x.n):
                if j in members:
                    continue
                col = x.index_of(tuple(sorted(rest + (j,))))
                if col is None:
                    continue
                union = tuple(sorted(sigma + (j,)))
                yield AdjacentPair(
                    row, col, swap_sign(rest, i, j), i, j, x.index_of(union) is not None
                )


def _check_dimension(x: SimplicialComplex, k: int):
    if k < 0:
        raise InputError(f"k debe ser >= 0 (k={k})")
    x.require_known(k + 1)


def neighbor_weight_sums(x: SimplicialComplex, w: np.ndarray, k: int) -> np.ndarray:
    """Para cada cara sigma de dimensión k, la suma de w sobre N_X(sigma)"""
    sums = np.zeros(x.f(k))
    for rho in x.faces(k + 1):
        for position, v in enumerate(rho):
            sums[x.index_of(rho[:position] + rho[position + 1:])] += w[v]
    return sums


def _vertex_weighted_diagonal(x: SimplicialComplex, w: np.ndarray, k: int) -> np.ndarray:
    faces = x.faces(k)
    own = np.array([w[list(sigma)].sum() for sigma in faces]) if faces else np.zeros(0)
    return neighbor_weight_sums(x, w, k) + own


def vertex_weighted_k_laplacian(x: SimplicialComplex, w: WeightFunction, k: int) -> np.ndarray:
    """
    L_k^w(X) con pesos en los vértices (w >= 0):
    diagonal sum_{N_X(sigma)} w + sum_sigma w; (sigma, tau) = (-1)^eps w(j)
    cuando sigma ∪ tau no es cara, con tau \\ sigma = {j}.
    """
    _check_dimension(x, k)
    w.require_length(x.n)
    weights = w.as_array()
    result = np.diag(_vertex_weighted_diagonal(x, weights, k))
    for pair in adjacent_pairs(x, k):
        if not pair.union_is_face:
            result[pair.row, pair.col] = pair.sign * weights[pair.j]
    return result


def sym_vertex_weighted_k_laplacian(x: SimplicialComplex, w: WeightFunction,
                                    k: int) -> np.ndarray:
    """
    Conjugación de L_k^w(X) por la raíz de los pesos de las caras:
    fuera de la diagonal (-1)^eps sqrt(w(i) w(j)). Admite pesos nulos.
    """
    _check_dimension(x, k)
    w.require_length(x.n)
    weights = w.as_array()
    roots = np.sqrt(weights)
    result = np.diag(_vertex_weighted_diagonal(x, weights, k))
    for pair in adjacent_pairs(x, k):
        if not pair.union_is_face:
            result[pair.row, pair.col] = pair.sign * roots[pair.i] * roots[pair.j]
    return result


def extend_vertex_weights(x: SimplicialComplex, w: WeightFunction) -> FaceWeights:
    """w(sigma) = producto de w(v) para v en sigma"""
    w.require_length(x.n)
    w.require_positive()
    weights = w.as_array()
    levels = []
    for faces in x.faces_by_dim:
        if faces:
            levels.append(np.prod(weights[np.array(faces, dtype=np.intp)], axis=1))
        else:
            levels.append(np.zeros(0))
    return FaceWeights(tuple(levels))


def horak_jost_k_laplacian(x: SimplicialComplex, fw: FaceWeights, k: int) -> np.ndarray:
    """Matriz de L_k^w(X) para pesos positivos arbitrarios en las caras"""
    _check_dimension(x, k)
    fw.require_matches(x)
    own = fw.level(k)
    up = fw.level(k + 1)
    down = fw.level(k - 1)
    faces = x.faces(k)
    diagonal = np.zeros(len(faces))

    for position_up, rho in enumerate(x.faces(k + 1)):
        for position in range(len(rho)):
            s = x.index_of(rho[:position] + rho[position + 1:])
            diagonal[s] += up[position_up] / own[s]
    for s, sigma in enumerate(faces):
        for position in range(len(sigma)):
            below = x.index_of(sigma[:position] + sigma[position + 1:])
            diagonal[s] += own[s] / down[below]

    result = np.diag(diagonal)
    for pair in adjacent_pairs(x, k):
        sigma = faces[pair.row]
        common = x.index_of(tuple(c for c in sigma if c != pair.i))
        value = own[pair.col] / down[common]
        if pair.union_is_face:
            value -= up[x.index_of(tuple(sorted(sigma + (pair.j,))))] / own[pair.row]
        result[pair.row, pair.col] = pair.sign * value
    return result


def k_laplacian_from_coboundaries(x: SimplicialComplex, fw: FaceWeights, k: int) -> np.ndarray:
    """
    d_k* d_k + d_{k-1} d_{k-1}*, con el adjunto respecto del producto interno
    <e_sigma, e_sigma> = w(sigma): d* = W_k^{-1} d^T W_{k+1}.
    """
    _check_dimension(x, k)
    fw.require_matches(x)
    d_up = coboundary(x, k).astype(float)
    d_down = coboundary(x, k - 1).astype(float)
    own = fw.level(k)
    up = fw.level(k + 1)
    down = fw.level(k - 1)
    upper = (d_up.T * up[np.newaxis, :]) @ d_up / own[:, np.newaxis]
    lower = (d_down / down[np.newaxis, :]) @ d_down.T * own[np.newaxis, :]
    return upper + lower
