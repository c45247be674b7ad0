from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from ..entities.simplicial_complex import SimplicialComplex
from ..exceptions import InputError


@dataclass(frozen=True, eq=False)
class FaceWeights:
    """
    Pesos positivos por cara, alineados con la base estándar del complejo:
    levels[k][i] es el peso de la i-ésima cara de dimensión k.
    La cara vacía pesa 1.
    """
    levels: Tuple[np.ndarray, ...]

    def __post_init__(self):
        frozen = []
        for k, values in enumerate(self.levels):
            array = np.asarray(values, dtype=float).copy()
            if array.size and (not np.all(np.isfinite(array)) or np.any(array <= 0)):
                raise InputError(f"Los pesos de las caras de dimensión {k} deben ser positivos")
            array.setflags(write=False)
            frozen.append(array)
        object.__setattr__(self, "levels", tuple(frozen))

    @classmethod
    def uniform(cls, x: SimplicialComplex, value: float = 1.0) -> 'FaceWeights':
        return cls(tuple(np.full(len(faces), float(value)) for faces in x.faces_by_dim))

    @classmethod
    def from_values(cls, x: SimplicialComplex,
                    values_by_dim: Sequence[Iterable[float]]) -> 'FaceWeights':
        """Un vector de pesos por dimensión, con tantas entradas como caras"""
        values_by_dim = [np.asarray(list(v), dtype=float) for v in values_by_dim]
        if len(values_by_dim) != len(x.faces_by_dim):
            raise InputError(
                f"Se esperaban pesos para {len(x.faces_by_dim)} dimensiones, "
                f"se recibieron {len(values_by_dim)}"
            )
        for k, values in enumerate(values_by_dim):
            if len(values) != x.f(k):
                raise InputError(
                    f"Faltan pesos en dimensión {k}: {len(values)} de {x.f(k)} caras"
                )
        return cls(tuple(values_by_dim))

    def level(self, k: int) -> np.ndarray:
        if k == -1:
            return np.ones(1)
        if k < -1:
            raise InputError(f"Dimensión fuera de rango: {k}")
        if k >= len(self.levels):
            return np.zeros(0)
        return self.levels[k]

    def require_matches(self, x: SimplicialComplex):
        for k, faces in enumerate(x.faces_by_dim):
            if k >= len(self.levels) or len(self.levels[k]) != len(faces):
                raise InputError(f"Los pesos no cubren las caras de dimensión {k}")

    def weight(self, x: SimplicialComplex, face: Iterable[int]) -> float:
        face = tuple(face)
        position = x.index_of(face)
        if position is None:
            raise InputError(f"{face} no es una cara del complejo")
        return float(self.level(len(face) - 1)[position])
