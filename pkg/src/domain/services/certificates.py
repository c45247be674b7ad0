"""
Certificados de empaquetamiento y dominación que acotan la conectividad
homológica de I(G): se verifican funciones dadas, nunca se optimizan.
"""
import logging
import math
from math import comb
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from ..entities.graph import Graph
from ..exceptions import InputError, NumericError, ResourceLimitError
from ..value_objects.certificate import Certificate, VectorRepresentation
from ..value_objects.weight_function import WeightFunction
from .compound import DEFAULT_SUBSET_CAP, subset_sums
from .eigen_solver import gershgorin_bound
from .graph_matrices import adjacency_matrix, sym_weighted_laplacian, weighted_laplacian

logger = logging.getLogger(__name__)

DEFAULT_CERTIFICATE_TOLERANCE = 1e-9
DEFAULT_PACKING_VERTEX_CAP = 24
# margen para redondear hacia arriba sumas que deberían ser enteras
CEILING_MARGIN = 1e-9

VertexFunction = Union[WeightFunction, Sequence[float]]


def _as_function(g: Graph, f: VertexFunction) -> WeightFunction:
    f = f if isinstance(f, WeightFunction) else WeightFunction.of(f)
    f.require_length(g.n)
    return f


def _certificate(slacks: np.ndarray, value: float, tolerance: float) -> Certificate:
    if slacks.size == 0:
        return Certificate(True, math.inf, -1, value)
    worst = int(np.argmin(slacks))
    return Certificate(bool(slacks[worst] >= -tolerance), float(slacks[worst]), worst, value)


def _ceiling(value: float) -> int:
    return max(0, math.ceil(value - CEILING_MARGIN))


def verify_quadratic_packing(g: Graph, f: VertexFunction,
                             tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> Certificate:
    """sum_{u in N(v)} f(u)(f(u) + f(v)) <= 1 en cada vértice; valor sum f^2"""
    f = _as_function(g, f)
    values = f.as_array()
    a = adjacency_matrix(g)
    load = a @ (values * values) + values * (a @ values)
    return _certificate(1.0 - load, float(np.sum(values * values)), tolerance)


def cycle_packing_function(n: int) -> WeightFunction:
    """
    En C_n: f = 0 en los vértices v con v ≡ 0 (mod 3) y 1/sqrt(2) en el resto.
    sum f^2 = n // 3, más 1/2 si n ≡ 2 (mod 3).
    """
    if n < 3:
        raise InputError(f"Un ciclo necesita n >= 3 (n={n})")
    root = 1.0 / math.sqrt(2.0)
    return WeightFunction(tuple(0.0 if v % 3 == 0 else root for v in range(n)))


def quadratic_packing_eta_bound(g: Graph, f: VertexFunction,
                                tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> int:
    """
    eta(I(G)) >= ceil(sum f^2) para un empaquetamiento cuadrático fraccionario f.
    Se comprueba además que Gershgorin acota L^{f^2}(G) por 1.
    """
    f = _as_function(g, f)
    certificate = verify_quadratic_packing(g, f, tolerance)
    if not certificate:
        raise InputError(
            f"No es un empaquetamiento cuadrático: holgura {certificate.min_slack:.3e} "
            f"en el vértice {certificate.worst_vertex}"
        )
    radius = gershgorin_bound(sym_weighted_laplacian(g, f.squared()))
    if radius > 1.0 + tolerance:
        raise NumericError(f"Gershgorin de L^(f^2) vale {radius} > 1")
    return _ceiling(certificate.value)


def verify_star_dominating_dual(g: Graph, f: VertexFunction,
                                tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> Certificate:
    """deg(v) f(v) + sum_{u in N(v)} f(u) <= 1 en cada vértice; valor sum f"""
    f = _as_function(g, f)
    values = f.as_array()
    a = adjacency_matrix(g)
    load = a.sum(axis=1) * values + a @ values
    return _certificate(1.0 - load, f.total, tolerance)


def uniform_star_dominating_function(g: Graph) -> WeightFunction:
    """f = 1/(2 Delta), o f = 1 si el grafo no tiene aristas"""
    top = g.max_degree()
    return WeightFunction.uniform(g.n, 1.0 if top == 0 else 1.0 / (2 * top))


def star_dominating_eta_bound(g: Graph, f: VertexFunction,
                              tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> int:
    """
    eta(I(G)) >= ceil(sum f) para f dual de una función estrella-dominante.
    Las sumas por columnas de L^f(G) son exactamente las restricciones duales.
    """
    f = _as_function(g, f)
    certificate = verify_star_dominating_dual(g, f, tolerance)
    if not certificate:
        raise InputError(
            f"No es dual de una función estrella-dominante: holgura "
            f"{certificate.min_slack:.3e} en el vértice {certificate.worst_vertex}"
        )
    radius = gershgorin_bound(weighted_laplacian(g, f))
    if radius > 1.0 + tolerance:
        raise NumericError(f"Gershgorin de L^f vale {radius} > 1")
    return _ceiling(certificate.value)


def _representation_slacks(g: Graph, p: VectorRepresentation) -> np.ndarray:
    if len(p) != g.n:
        raise InputError(f"La representación tiene {len(p)} vectores y el grafo {g.n} vértices")
    gram = p.gram()
    required = adjacency_matrix(g)
    off_diagonal = ~np.eye(g.n, dtype=bool)
    return (gram - required)[off_diagonal]


def verify_vector_representation(g: Graph, p: VectorRepresentation,
                                 tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> bool:
    """P(u)·P(v) >= 1 si {u,v} es arista y >= 0 en otro caso"""
    slacks = _representation_slacks(g, p)
    valid = slacks.size == 0 or float(slacks.min()) >= -tolerance
    if not valid:
        logger.debug(f"Representación vectorial inválida: holgura mínima {slacks.min():.3e}")
    return bool(valid)


def matching_vector_representation(g: Graph) -> VectorRepresentation:
    """
    Para un grafo de aristas disjuntas: los extremos de la arista i reciben
    e_i y los vértices aislados el vector nulo.
    """
    if g.max_degree() > 1:
        raise InputError("Las aristas del grafo no son disjuntas dos a dos")
    vectors = np.zeros((g.n, g.edge_count))
    for i, (u, v) in enumerate(g.edges):
        vectors[u, i] = vectors[v, i] = 1.0
    return VectorRepresentation(vectors)


def verify_dually_dominating(p: VectorRepresentation, f: VertexFunction,
                             tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> Certificate:
    """sum_v f(v) P(v)·P(u) <= 1 para todo u; valor sum f, que acota |P|"""
    f = f if isinstance(f, WeightFunction) else WeightFunction.of(f)
    f.require_length(len(p))
    return _certificate(1.0 - p.scores(f.as_array()), f.total, tolerance)


def vector_rep_eta_bound(g: Graph, p: VectorRepresentation, f: VertexFunction,
                         tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> int:
    """eta(I(G)) >= ceil(sum f) para f dualmente dominante de una representación P"""
    if not verify_vector_representation(g, p, tolerance):
        raise InputError("P no es una representación vectorial del grafo")
    certificate = verify_dually_dominating(p, f, tolerance)
    if not certificate:
        raise InputError(
            f"f no es dualmente dominante: holgura {certificate.min_slack:.3e} "
            f"en el vértice {certificate.worst_vertex}"
        )
    return _ceiling(certificate.value)


def vector_rep_betti_bound(g: Graph, p: VectorRepresentation, f: VertexFunction, k: int,
                           subset_cap: int = DEFAULT_SUBSET_CAP,
                           tolerance: float = DEFAULT_CERTIFICATE_TOLERANCE) -> int:
    """
    Número de (k+1)-subconjuntos I con sum_{u in I} P(u)·s >= sum f,
    donde s = sum_v f(v) P(v). Acota dim H̃_k(I(G); R); los empates cuentan.
    """
    if k < 0:
        raise InputError(f"k debe ser >= 0 (k={k})")
    if not verify_vector_representation(g, p, tolerance):
        raise InputError("P no es una representación vectorial del grafo")
    f = _as_function(g, f)
    if f.total <= 0:
        raise InputError("La función f debe tener suma positiva")
    if k + 1 > g.n:
        return 0
    scores = p.scores(f.as_array())
    threshold = f.total - tolerance * (1 + f.total)
    return int(np.count_nonzero(subset_sums(scores, k + 1, subset_cap) >= threshold))


def _closed_neighborhoods(g: Graph) -> Tuple[frozenset, ...]:
    return tuple(g.adjacency[v] | {v} for v in range(g.n))


def verify_neighborhood_packing(g: Graph, s: Iterable[int]) -> bool:
    """Los entornos cerrados de los vértices de s son disjuntos dos a dos"""
    s = sorted(set(s))
    if any(not 0 <= v < g.n for v in s):
        raise InputError(f"Vértices fuera de rango en {s}")
    seen = set()
    closed = _closed_neighborhoods(g)
    for v in s:
        if seen & closed[v]:
            return False
        seen |= closed[v]
    return True


def max_neighborhood_packing(g: Graph,
                             vertex_cap: int = DEFAULT_PACKING_VERTEX_CAP) -> Tuple[int, Tuple[int, ...]]:
    """
    rho(G) exacto por ramificación y poda: conjunto independiente máximo del
    grafo de conflictos (vértices a distancia <= 2).
    """
    if g.n > vertex_cap:
        raise ResourceLimitError(
            f"Búsqueda exhaustiva con n={g.n} > {vertex_cap} vértices",
            quantity="packing_vertices", value=g.n, limit=vertex_cap
        )
    closed = _closed_neighborhoods(g)
    conflicts = []
    for v in range(g.n):
        mask = 0
        for u in closed[v]:
            for t in closed[u]:
                mask |= 1 << t
        conflicts.append(mask)

    best = [0, 0]

    def search(candidates: int, chosen: int, size: int):
        if size + bin(candidates).count("1") <= best[0]:
            return
        if not candidates:
            best[0], best[1] = size, chosen
            return
        v = (candidates & -candidates).bit_length() - 1
        bit = 1 << v
        search(candidates & ~conflicts[v], chosen | bit, size + 1)
        search(candidates & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    witness = tuple(v for v in range(g.n) if best[1] >> v & 1)
    logger.debug(f"Empaquetamiento de entornos máximo: {witness}")
    return best[0], witness


def packing_indicator(g: Graph, s: Iterable[int]) -> WeightFunction:
    """Indicatriz de un empaquetamiento de entornos (es un empaquetamiento cuadrático)"""
    s = set(s)
    if not verify_neighborhood_packing(g, s):
        raise InputError(f"{sorted(s)} no es un empaquetamiento de entornos")
    return WeightFunction(tuple(1.0 if v in s else 0.0 for v in range(g.n)))


def packing_betti_bound(g: Graph, s: Iterable[int], k: int) -> int:
    """
    dim H̃_k(I(G); R) <= sum_{m=|S|}^{k+1} C(deg S, m) C(n - deg S, k+1-m),
    con deg S la suma de los grados de S.
    """
    s = set(s)
    if k < 0:
        raise InputError(f"k debe ser >= 0 (k={k})")
    if not verify_neighborhood_packing(g, s):
        raise InputError(f"{sorted(s)} no es un empaquetamiento de entornos")
    degree = sum(g.degree(v) for v in s)
    return sum(
        comb(degree, m) * comb(g.n - degree, k + 1 - m) for m in range(len(s), k + 2)
    )
