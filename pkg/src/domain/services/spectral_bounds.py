"""
Cotas espectrales para complejos de independencia y de cliques, y las
comprobaciones internas de su demostración (descomposición L + R, lema de
sumas de grados e identidad afín).
"""
import logging
from typing import Optional, Tuple

import numpy as np

from ..entities.graph import Graph
from ..exceptions import InputError, NumericError
from ..models.bound_direction import BoundDirection
from ..value_objects.bound_report import BoundReport, ConnectivityBound, GraphMerrisBounds
from ..value_objects.spectrum import Spectrum
from ..value_objects.subset_index import SubsetIndex
from ..value_objects.weight_function import WeightFunction
from .complex_builder import DEFAULT_MAX_FACES, clique_complex, independence_complex
from .compound import DEFAULT_SUBSET_CAP, additive_compound, k_sum_spectrum, subset_chunks, subset_sums
from .eigen_solver import JacobiEigenSolver, nonsym_eigenvalues_real
from .graph_matrices import adjacency_matrix, graph_laplacian, sym_weighted_laplacian, weighted_laplacian
from .laplacian_assembler import (
    neighbor_weight_sums, sym_vertex_weighted_k_laplacian, vertex_weighted_k_laplacian
)

logger = logging.getLogger(__name__)

DEFAULT_REPORT_TOLERANCE = 1e-7
DEFAULT_COUNT_TOLERANCE = 1e-9


def graph_spectrum(g: Graph, w: WeightFunction, solver: JacobiEigenSolver = None) -> Spectrum:
    """Espectro de L^w(G), calculado a través de su forma simétrica"""
    w.require_length(g.n)
    return nonsym_eigenvalues_real(
        weighted_laplacian(g, w), sym_weighted_laplacian(g, w), solver or JacobiEigenSolver()
    )


def _check_k(k: int):
    if k < 0:
        raise InputError(f"k debe ser >= 0 (k={k})")


def main_independence_bounds(g: Graph, w: WeightFunction, k: int,
                             solver: JacobiEigenSolver = None,
                             max_faces: int = DEFAULT_MAX_FACES,
                             subset_cap: int = DEFAULT_SUBSET_CAP,
                             report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """
    lambda_i(L_k^w(I(G))) >= sum(w) - mu_{k+1,i}(L^w(G)) para 1 <= i <= f_k(I(G)).
    """
    _check_k(k)
    w.require_length(g.n)
    solver = solver or JacobiEigenSolver()
    x = independence_complex(g, k + 1, max_faces)
    parameters = {'k': k, 'n': g.n, 'weight_total': w.total}
    if x.f(k) == 0:
        return BoundReport("independence_eigenvalues", BoundDirection.LOWER, (), (),
                           report_tolerance, parameters)

    actual = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k))
    spectrum = graph_spectrum(g, w, solver)
    sums = k_sum_spectrum(spectrum, k + 1, subset_cap)
    bounds = [w.total - sums.mu(i) for i in range(1, x.f(k) + 1)]
    scale = max(actual.scale, spectrum.scale)
    return BoundReport(
        "independence_eigenvalues", BoundDirection.LOWER, tuple(bounds),
        tuple(actual.values), report_tolerance * (1 + scale), parameters
    )


def main_clique_bounds(g: Graph, w: WeightFunction, k: int,
                       solver: JacobiEigenSolver = None,
                       max_faces: int = DEFAULT_MAX_FACES,
                       subset_cap: int = DEFAULT_SUBSET_CAP,
                       report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """
    lambda_i(L_k^w(X(G))) >= nu_{k+1,i}(L_0^w(X(G))) - k sum(w) para 1 <= i <= f_k(X(G)).
    """
    _check_k(k)
    w.require_length(g.n)
    solver = solver or JacobiEigenSolver()
    x = clique_complex(g, k + 1, max_faces)
    parameters = {'k': k, 'n': g.n, 'weight_total': w.total}
    if x.f(k) == 0:
        return BoundReport("clique_eigenvalues", BoundDirection.LOWER, (), (),
                           report_tolerance, parameters)

    actual = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k))
    base = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, w, 0))
    sums = k_sum_spectrum(base, k + 1, subset_cap)
    bounds = [sums.nu(i) - k * w.total for i in range(1, x.f(k) + 1)]
    scale = max(actual.scale, base.scale)
    return BoundReport(
        "clique_eigenvalues", BoundDirection.LOWER, tuple(bounds),
        tuple(actual.values), report_tolerance * (1 + scale), parameters
    )


def betti_upper_bound(g: Graph, w: WeightFunction, k: int,
                      solver: JacobiEigenSolver = None,
                      subset_cap: int = DEFAULT_SUBSET_CAP,
                      count_tolerance: float = DEFAULT_COUNT_TOLERANCE) -> int:
    """
    Número de (k+1)-subconjuntos I con sum_{i in I} lambda_i(L^w(G)) >= sum(w).
    Acota dim H̃_k(I(G); R). Los empates cuentan.
    """
    _check_k(k)
    w.require_length(g.n)
    if k + 1 > g.n:
        return 0
    spectrum = graph_spectrum(g, w, solver)
    threshold = w.total - count_tolerance * (1 + spectrum.scale)
    return int(np.count_nonzero(subset_sums(spectrum.values, k + 1, subset_cap) >= threshold))


def connectivity_lower_bound(g: Graph, w: WeightFunction,
                             solver: JacobiEigenSolver = None,
                             count_tolerance: float = DEFAULT_COUNT_TOLERANCE) -> ConnectivityBound:
    """eta(I(G)) >= min {m : suma de los m mayores autovalores de L^w(G) >= sum(w)}"""
    w.require_length(g.n)
    if w.is_zero():
        raise InputError("Con w idénticamente nula la cota de conectividad es vacía")
    spectrum = graph_spectrum(g, w, solver)
    threshold = w.total - count_tolerance * (1 + spectrum.scale)
    partial = np.cumsum(spectrum.descending())
    reached = np.flatnonzero(partial >= threshold)
    if reached.size == 0:
        logger.warning(
            f"Ninguna suma de autovalores alcanza sum(w)={w.total}: cota de conectividad vacía"
        )
        return ConnectivityBound(g.n + 1, True)
    return ConnectivityBound(int(reached[0]) + 1)


def abm_eigenvalue_bounds(g: Graph, k: int, solver: JacobiEigenSolver = None,
                          max_faces: int = DEFAULT_MAX_FACES,
                          report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """Caso sin pesos: lambda_1(L_k(I(G))) >= n - (k+1) lambda_max(L(G))"""
    _check_k(k)
    solver = solver or JacobiEigenSolver()
    ones = WeightFunction.uniform(g.n)
    x = independence_complex(g, k + 1, max_faces)
    parameters = {'k': k, 'n': g.n}
    if x.f(k) == 0:
        return BoundReport("classical_eigenvalue", BoundDirection.LOWER, (), (),
                           report_tolerance, parameters)
    actual = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, ones, k))
    spectrum = solver.eigenvalues(graph_laplacian(g))
    top = spectrum.largest(1) if g.n else 0.0
    return BoundReport(
        "classical_eigenvalue", BoundDirection.LOWER, (g.n - (k + 1) * top,),
        (actual.smallest(1),), report_tolerance * (1 + max(actual.scale, spectrum.scale)),
        parameters
    )


def abm_connectivity_bound(g: Graph, solver: JacobiEigenSolver = None) -> Optional[float]:
    """n / lambda_max(L(G)), o None si L(G) = 0"""
    if g.edge_count == 0:
        return None
    top = (solver or JacobiEigenSolver()).eigenvalues(graph_laplacian(g)).largest(1)
    return g.n / top


def degree_sum_report(g: Graph, w: WeightFunction, k: int,
                      max_faces: int = DEFAULT_MAX_FACES,
                      report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """
    Para cada cara sigma de dimensión k de X(G):
    sum_{v in sigma} sum_{u in N_G(v)} w(u) - sum_{N_X(sigma)} w <= k sum(w).
    """
    _check_k(k)
    w.require_length(g.n)
    x = clique_complex(g, k + 1, max_faces)
    weights = w.as_array()
    degrees = adjacency_matrix(g) @ weights
    faces = x.faces(k)
    own = np.array([degrees[list(sigma)].sum() for sigma in faces]) if faces else np.zeros(0)
    actuals = own - neighbor_weight_sums(x, weights, k)
    bound = k * w.total
    return BoundReport(
        "degree_sum", BoundDirection.UPPER, (bound,) * len(faces), tuple(actuals),
        report_tolerance * (1 + (k + 1) * w.total), {'k': k, 'n': g.n}
    )


def clique_laplacian_decomposition(g: Graph, w: WeightFunction, k: int,
                                   max_faces: int = DEFAULT_MAX_FACES
                                   ) -> Tuple[np.ndarray, np.ndarray]:
    """
    L_k^w(X(G)) = L + R, con L la submatriz principal de (L_0^w(X(G)))^[k+1]
    en las caras de dimensión k y R diagonal.
    """
    _check_k(k)
    w.require_length(g.n)
    x = clique_complex(g, k + 1, max_faces)
    faces = x.faces(k)
    if not faces:
        return np.zeros((0, 0)), np.zeros((0, 0))

    compound = additive_compound(vertex_weighted_k_laplacian(x, w, 0), k + 1)
    index = SubsetIndex(g.n, k + 1)
    rows = [index.rank(sigma) for sigma in faces]
    principal = compound[np.ix_(rows, rows)]
    remainder = vertex_weighted_k_laplacian(x, w, k) - principal
    diagonal = np.diag(np.diag(remainder))
    deviation = float(np.abs(remainder - diagonal).max())
    if deviation > 1e-9 * (1 + float(np.abs(principal).max())):
        raise NumericError(f"L_k - L no es diagonal (desviación {deviation:.3e})")
    return principal, diagonal


def affine_identity_report(g: Graph, w: WeightFunction, k: int,
                           solver: JacobiEigenSolver = None,
                           max_faces: int = DEFAULT_MAX_FACES,
                           subset_cap: int = DEFAULT_SUBSET_CAP,
                           report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """nu_{k+1,i}(L_0^w(I(G))) + mu_{k+1,i}(L^w(G)) = (k+1) sum(w) para todo i"""
    _check_k(k)
    w.require_length(g.n)
    solver = solver or JacobiEigenSolver()
    parameters = {'k': k, 'n': g.n, 'weight_total': w.total}
    if k + 1 > g.n:
        return BoundReport("affine_identity", BoundDirection.EQUAL, (), (),
                           report_tolerance, parameters)
    x = independence_complex(g, 1, max_faces)
    base = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, w, 0))
    spectrum = graph_spectrum(g, w, solver)
    low = k_sum_spectrum(base, k + 1, subset_cap)
    high = k_sum_spectrum(spectrum, k + 1, subset_cap)
    actuals = [low.nu(i) + high.mu(i) for i in range(1, len(low) + 1)]
    return BoundReport(
        "affine_identity", BoundDirection.EQUAL, ((k + 1) * w.total,) * len(actuals),
        tuple(actuals), report_tolerance * (1 + max(base.scale, spectrum.scale)), parameters
    )


def merris_ksum_bound(m: np.ndarray, k: int, subset_cap: int = DEFAULT_SUBSET_CAP) -> float:
    """
    max sobre k-subconjuntos sigma de
    sum_{i in sigma} M_ii + sum_{i in sigma, j fuera} |M_ij|.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"Se esperaba una matriz cuadrada, no {m.shape}")
    if not np.allclose(m, m.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.abs(m).max(initial=0.0)))):
        raise InputError("La cota de Merris requiere una matriz simétrica")
    n = m.shape[0]
    if not 1 <= k <= n:
        raise InputError(f"k={k} fuera de rango para una matriz {n}x{n}")

    diagonal = np.diag(m)
    outside = np.abs(m)
    np.fill_diagonal(outside, 0.0)
    row_sums = outside.sum(axis=1)
    best = -np.inf
    for block in subset_chunks(n, k, subset_cap):
        inner = outside[block[:, :, np.newaxis], block[:, np.newaxis, :]].sum(axis=(1, 2))
        values = diagonal[block].sum(axis=1) + row_sums[block].sum(axis=1) - inner
        best = max(best, float(values.max()))
    return best


def graph_merris_bounds(g: Graph, k: int, subset_cap: int = DEFAULT_SUBSET_CAP) -> GraphMerrisBounds:
    """
    mu_k(L(G)) <= 2 max_sigma |{e : e ∩ sigma no vacío}| y
    mu_k(A(G)) <= max_sigma |{e : |e ∩ sigma| = 1}|.
    """
    if not 1 <= k <= g.n:
        raise InputError(f"k={k} fuera de rango para n={g.n}")
    if g.edge_count == 0:
        return GraphMerrisBounds(0.0, 0.0)
    edges = np.array(g.edges, dtype=np.intp)
    touching = 0
    boundary = 0
    for block in subset_chunks(g.n, k, subset_cap):
        members = np.zeros((len(block), g.n), dtype=np.int8)
        np.put_along_axis(members, block, 1, axis=1)
        inside = members[:, edges[:, 0]] + members[:, edges[:, 1]]
        touching = max(touching, int((inside > 0).sum(axis=1).max()))
        boundary = max(boundary, int((inside == 1).sum(axis=1).max()))
    return GraphMerrisBounds(2.0 * touching, float(boundary))


def graph_merris_report(g: Graph, k: int, solver: JacobiEigenSolver = None,
                        subset_cap: int = DEFAULT_SUBSET_CAP,
                        report_tolerance: float = DEFAULT_REPORT_TOLERANCE) -> BoundReport:
    """Compara las dos cotas con las sumas de los k mayores autovalores de L(G) y A(G)"""
    solver = solver or JacobiEigenSolver()
    bounds = graph_merris_bounds(g, k, subset_cap)
    laplacian = solver.eigenvalues(graph_laplacian(g))
    adjacency = solver.eigenvalues(adjacency_matrix(g))
    actuals = (float(laplacian.descending()[:k].sum()), float(adjacency.descending()[:k].sum()))
    return BoundReport(
        "graph_merris", BoundDirection.UPPER, (bounds.laplacian, bounds.adjacency), actuals,
        report_tolerance * (1 + max(laplacian.scale, adjacency.scale)), {'k': k, 'n': g.n}
    )
