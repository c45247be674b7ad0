from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from ..exceptions import InputError
from ..models.bound_direction import BoundDirection


@dataclass(frozen=True)
class BoundReport:
    """
    Resultado de comprobar una cota índice a índice.

    slack es el mínimo, sobre los índices, de (actual - cota) para cotas
    inferiores y de (cota - actual) para superiores; holds equivale a
    slack >= -tolerance. Un informe sin índices se cumple trivialmente.
    """
    theorem: str
    direction: BoundDirection
    bounds: Tuple[float, ...]
    actuals: Tuple[float, ...]
    tolerance: float
    parameters: Dict[str, Any] = field(default_factory=dict)
    vacuous: bool = False

    def __post_init__(self):
        if len(self.bounds) != len(self.actuals):
            raise InputError(
                f"{self.theorem}: {len(self.bounds)} cotas para {len(self.actuals)} valores"
            )
        object.__setattr__(self, "bounds", tuple(float(b) for b in self.bounds))
        object.__setattr__(self, "actuals", tuple(float(a) for a in self.actuals))

    def __len__(self) -> int:
        return len(self.bounds)

    def slacks(self) -> np.ndarray:
        bounds = np.asarray(self.bounds, dtype=float)
        actuals = np.asarray(self.actuals, dtype=float)
        if self.direction is BoundDirection.LOWER:
            return actuals - bounds
        if self.direction is BoundDirection.UPPER:
            return bounds - actuals
        return -np.abs(actuals - bounds)

    @property
    def slack(self) -> Optional[float]:
        if not self.bounds:
            return None
        return float(self.slacks().min())

    @property
    def worst_index(self) -> Optional[int]:
        """Índice (desde 1) con menor holgura"""
        if not self.bounds:
            return None
        return int(np.argmin(self.slacks())) + 1

    @property
    def holds(self) -> bool:
        slack = self.slack
        return slack is None or slack >= -self.tolerance

    def to_dict(self) -> Dict:
        return {
            'theorem': self.theorem,
            'direction': self.direction.value,
            'parameters': dict(self.parameters),
            'bounds': list(self.bounds),
            'actuals': list(self.actuals),
            'slack': self.slack,
            'worst_index': self.worst_index,
            'holds': self.holds,
            'tolerance': self.tolerance,
            'vacuous': self.vacuous
        }


@dataclass(frozen=True)
class ConnectivityBound:
    """
    Menor m cuya suma de los m mayores autovalores alcanza sum(w).
    Si ningún m <= n lo consigue, value = n + 1 y vacuous = True.
    """
    value: int
    vacuous: bool = False

    def to_dict(self) -> Dict:
        return {'value': self.value, 'vacuous': self.vacuous}


@dataclass(frozen=True)
class GraphMerrisBounds:
    """Cotas superiores de mu_k para el laplaciano y la adyacencia de un grafo"""
    laplacian: float
    adjacency: float

    def to_dict(self) -> Dict:
        return {'laplacian': self.laplacian, 'adjacency': self.adjacency}
