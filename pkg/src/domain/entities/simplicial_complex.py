from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..exceptions import InputError

Face = Tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Complejo simplicial enumerado hasta la dimensión max_dim.

    faces_by_dim[k] contiene las caras de dimensión k como tuplas crecientes,
    en orden lexicográfico. La cara vacía (dimensión -1) no se almacena y
    f_{-1} = 1. truncated indica que existen caras de dimensión max_dim + 1
    que no se enumeraron.
    """
    n: int
    max_dim: int
    faces_by_dim: Tuple[Tuple[Face, ...], ...]
    truncated: bool = False
    _index: Tuple[Dict[Face, int], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.max_dim < 0:
            raise InputError(f"max_dim debe ser >= 0 (max_dim={self.max_dim})")
        if len(self.faces_by_dim) != self.max_dim + 1:
            raise InputError("faces_by_dim debe tener max_dim + 1 niveles")
        index = tuple(
            {face: i for i, face in enumerate(faces)} for faces in self.faces_by_dim
        )
        object.__setattr__(self, "_index", index)

    def is_known(self, k: int) -> bool:
        """Las caras de dimensión k están completamente enumeradas"""
        return k >= -1 and (k <= self.max_dim or not self.truncated)

    def require_known(self, k: int):
        if not self.is_known(k):
            raise InputError(
                f"Las caras de dimensión {k} no están enumeradas (max_dim={self.max_dim})"
            )

    def faces(self, k: int) -> Tuple[Face, ...]:
        self.require_known(k)
        if k == -1:
            return ((),)
        if k > self.max_dim:
            return ()
        return self.faces_by_dim[k]

    def f(self, k: int) -> int:
        return len(self.faces(k))

    def f_vector(self) -> List[int]:
        """(f_0, ..., f_d) hasta la última dimensión con caras"""
        return [len(faces) for faces in self.faces_by_dim[:self.top_dim + 1]]

    @property
    def top_dim(self) -> int:
        """Mayor dimensión almacenada con caras (-1 si no hay vértices)"""
        for k in range(self.max_dim, -1, -1):
            if self.faces_by_dim[k]:
                return k
        return -1

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(face[0] for face in self.faces_by_dim[0])

    def index_of(self, face: Iterable[int]) -> Optional[int]:
        """Posición de la cara en la base estándar de su dimensión, o None"""
        face = tuple(face)
        k = len(face) - 1
        if k == -1:
            return 0
        if k > self.max_dim:
            if not self.truncated:
                return None
            raise InputError(f"La dimensión {k} supera max_dim={self.max_dim}")
        return self._index[k].get(face)

    def contains(self, face: Iterable[int]) -> bool:
        return self.index_of(tuple(sorted(face))) is not None

    def neighbors(self, sigma: Iterable[int]) -> Tuple[int, ...]:
        """N_X(sigma): vértices v fuera de sigma con sigma ∪ {v} en X"""
        sigma = tuple(sorted(sigma))
        if sigma and self.index_of(sigma) is None:
            raise InputError(f"{sigma} no es una cara del complejo")
        self.require_known(len(sigma))
        result = []
        for v in self.vertices:
            if v in sigma:
                continue
            if self.index_of(tuple(sorted(sigma + (v,)))) is not None:
                result.append(v)
        return tuple(result)

    def is_fully_enumerated(self) -> bool:
        return not self.truncated


def simplex_neighbors(x: SimplicialComplex, sigma: Iterable[int]) -> Tuple[int, ...]:
    return x.neighbors(sigma)
