from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from ..exceptions import InputError


def _frozen(values) -> np.ndarray:
    array = np.sort(np.asarray(values, dtype=float))
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    Autovalores ordenados de menor a mayor.
    smallest(i) es el i-ésimo menor y largest(i) el i-ésimo mayor (i desde 1).
    scale guarda la norma infinito de la matriz de origen.
    """
    values: np.ndarray
    source_dim: int
    scale: float

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        if len(self.values) != self.source_dim:
            raise InputError("El espectro no tiene source_dim autovalores")

    def __len__(self) -> int:
        return self.source_dim

    def smallest(self, i: int) -> float:
        return float(self.values[i - 1])

    def largest(self, i: int) -> float:
        return float(self.values[self.source_dim - i])

    def descending(self) -> np.ndarray:
        return self.values[::-1]

    def to_list(self) -> List[float]:
        return [float(x) for x in self.values]


@dataclass(frozen=True, eq=False)
class KSumSpectrum:
    """
    Multiconjunto S_k(M) de todas las sumas de k autovalores, ordenado.
    nu(i) es el i-ésimo menor y mu(i) el i-ésimo mayor.
    """
    k: int
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def nu(self, i: int) -> float:
        return float(self.values[i - 1])

    def mu(self, i: int) -> float:
        return float(self.values[len(self.values) - i])

    def to_dict(self) -> Dict:
        return {'k': self.k, 'values': [float(x) for x in self.values]}
