from dataclasses import dataclass
from typing import Dict

import numpy as np

from ..exceptions import InputError


@dataclass(frozen=True)
class Certificate:
    """
    Verificación de una función certificado vértice a vértice.

    min_slack es la menor holgura de las desigualdades (negativa si alguna
    falla), worst_vertex el vértice donde se alcanza y value el valor que
    certifica la función (sum f^2 o sum f según el caso).
    """
    valid: bool
    min_slack: float
    worst_vertex: int
    value: float

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> Dict:
        return {
            'valid': self.valid,
            'min_slack': self.min_slack,
            'worst_vertex': self.worst_vertex,
            'value': self.value
        }


@dataclass(frozen=True, eq=False)
class VectorRepresentation:
    """
    Un vector P(v) en R^l por vértice, como filas de una matriz n x l.
    Es representación de G si P(u)·P(v) >= 1 en las aristas y >= 0 fuera.
    """
    vectors: np.ndarray

    def __post_init__(self):
        array = np.array(self.vectors, dtype=float, ndmin=2)
        if array.ndim != 2:
            raise InputError(f"Se esperaba una matriz n x l, no {array.shape}")
        if not np.all(np.isfinite(array)):
            raise InputError("La representación contiene valores no finitos")
        array.setflags(write=False)
        object.__setattr__(self, "vectors", array)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def dimension(self) -> int:
        return self.vectors.shape[1]

    def gram(self) -> np.ndarray:
        return self.vectors @ self.vectors.T

    def scores(self, f: np.ndarray) -> np.ndarray:
        """P(u) · sum_v f(v) P(v) para cada u"""
        return self.vectors @ (np.asarray(f, dtype=float) @ self.vectors)

    def to_dict(self) -> Dict:
        return {'dimension': self.dimension, 'vectors': self.vectors.tolist()}
