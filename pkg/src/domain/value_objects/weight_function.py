import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from ..exceptions import InputError


@dataclass(frozen=True)
class WeightFunction:
    """Pesos reales no negativos por vértice, w: V -> R>=0"""
    values: Tuple[float, ...]

    def __post_init__(self):
        for v, value in enumerate(self.values):
            if not math.isfinite(value):
                raise InputError(f"Peso no finito en el vértice {v}: {value}")
            if value < 0:
                raise InputError(f"Peso negativo en el vértice {v}: {value}")

    @classmethod
    def of(cls, values: Iterable[float]) -> 'WeightFunction':
        return cls(tuple(float(x) for x in values))

    @classmethod
    def uniform(cls, n: int, value: float = 1.0) -> 'WeightFunction':
        return cls((float(value),) * n)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> float:
        return self.values[v]

    @property
    def total(self) -> float:
        return math.fsum(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.values)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.values)

    def require_length(self, n: int):
        if len(self.values) != n:
            raise InputError(
                f"La función de pesos tiene {len(self.values)} entradas y el grafo {n} vértices"
            )

    def require_positive(self):
        if not self.is_positive():
            raise InputError("Se requieren pesos estrictamente positivos")

    def perturbed(self, epsilon: float) -> 'WeightFunction':
        """w_eps: los pesos nulos se sustituyen por epsilon"""
        if epsilon <= 0:
            raise InputError("epsilon debe ser positivo")
        return WeightFunction(tuple(x if x > 0 else epsilon for x in self.values))

    def squared(self) -> 'WeightFunction':
        return WeightFunction(tuple(x * x for x in self.values))


def zero_limit_weights(w: WeightFunction, epsilon: float) -> WeightFunction:
    return w.perturbed(epsilon)
