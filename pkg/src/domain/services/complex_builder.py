import logging
from typing import FrozenSet, List, Tuple

import numpy as np

from ..entities.graph import Graph
from ..entities.simplicial_complex import Face, SimplicialComplex
from ..exceptions import InputError, ResourceLimitError

logger = logging.getLogger(__name__)

DEFAULT_MAX_DIM = 6
DEFAULT_MAX_FACES = 2_000_000


def clique_complex(g: Graph, max_dim: int = DEFAULT_MAX_DIM,
                   max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """
    Complejo de cliques X(G) hasta dimensión max_dim.

    Cada cara de dimensión k se extiende con los vértices mayores que su
    último vértice y adyacentes a todos sus miembros; así cada nivel sale
    ya en orden lexicográfico.
    """
    if max_dim < 0:
        raise InputError(f"max_dim debe ser >= 0 (max_dim={max_dim})")

    # (cara, candidatos a extenderla)
    level: List[Tuple[Face, FrozenSet[int]]] = [
        ((v,), frozenset(u for u in g.adjacency[v] if u > v)) for v in range(g.n)
    ]
    faces_by_dim = [tuple(face for face, _ in level)]
    total = len(level)
    _check_cap(total, max_faces, 0)

    for k in range(1, max_dim + 1):
        next_level = []
        for face, candidates in level:
            for v in sorted(candidates):
                next_level.append(
                    (face + (v,), frozenset(u for u in candidates & g.adjacency[v] if u > v))
                )
        total += len(next_level)
        _check_cap(total, max_faces, k)
        faces_by_dim.append(tuple(face for face, _ in next_level))
        level = next_level

    truncated = any(candidates for _, candidates in level)
    logger.info(
        f"Complejo de cliques: n={g.n}, f={[len(f) for f in faces_by_dim]}, truncado={truncated}"
    )
    return SimplicialComplex(g.n, max_dim, tuple(faces_by_dim), truncated)


def independence_complex(g: Graph, max_dim: int = DEFAULT_MAX_DIM,
                         max_faces: int = DEFAULT_MAX_FACES) -> SimplicialComplex:
    """I(G) = X(complemento de G)"""
    return clique_complex(g.complement(), max_dim, max_faces)


def _check_cap(total: int, max_faces: int, k: int):
    if total > max_faces:
        raise ResourceLimitError(
            f"Demasiadas caras al enumerar la dimensión {k}: {total} > {max_faces}",
            quantity=f"faces[dim={k}]", value=total, limit=max_faces
        )


def coboundary(x: SimplicialComplex, k: int) -> np.ndarray:
    """
    Operador de cofrontera d_k como matriz entera f_{k+1} x f_k.

    La columna de sigma tiene, para cada j en N_X(sigma), la entrada
    (-1)^(posición de j en tau) en la fila tau = sigma ∪ {j}.
    """
    if k < -1:
        raise InputError(f"k fuera de rango: {k}")
    x.require_known(k + 1)
    rows = x.faces(k + 1)
    cols = x.faces(k)
    d = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if k == -1:
        d[:, 0] = 1
        return d
    for row, tau in enumerate(rows):
        for position in range(len(tau)):
            sigma = tau[:position] + tau[position + 1:]
            d[row, x.index_of(sigma)] = -1 if position % 2 else 1
    return d
