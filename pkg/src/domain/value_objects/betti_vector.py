from dataclasses import dataclass
from typing import Dict, Tuple

from ..exceptions import InputError
from ..models.betti_method import BettiMethod


@dataclass(frozen=True)
class BettiVector:
    """dim H̃_k(X; R) para k = 0..cutoff, calculados con el método indicado"""
    values: Tuple[int, ...]
    method: BettiMethod
    cutoff: int

    def __post_init__(self):
        if len(self.values) != self.cutoff + 1:
            raise InputError("Se esperaba un número de Betti por dimensión hasta el corte")
        if any(v < 0 for v in self.values):
            raise InputError(f"Números de Betti negativos: {self.values}")

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def first_nonzero(self) -> int:
        """Primera dimensión con homología no nula, o -1 si todas se anulan"""
        for k, value in enumerate(self.values):
            if value:
                return k
        return -1

    def to_dict(self) -> Dict:
        return {
            'values': list(self.values),
            'method': self.method.value,
            'cutoff': self.cutoff
        }


@dataclass(frozen=True)
class Connectivity:
    """
    Conectividad homológica eta. Si exact es False solo se sabe que
    eta >= value, porque toda la homología calculada se anula.
    """
    value: int
    exact: bool

    def to_dict(self) -> Dict:
        return {'value': self.value, 'exact': self.exact}
