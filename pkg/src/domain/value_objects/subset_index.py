from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Tuple

from ..exceptions import InputError

Subset = Tuple[int, ...]


@dataclass(frozen=True)
class SubsetIndex:
    """
    Los k-subconjuntos de {0,...,n-1} en orden lexicográfico.
    El rango se calcula con el sistema combinatorio de numeración.
    """
    n: int
    k: int
    subsets: Tuple[Subset, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.k <= self.n:
            raise InputError(f"k={self.k} fuera de rango para n={self.n}")
        object.__setattr__(self, "subsets", tuple(combinations(range(self.n), self.k)))

    def __len__(self) -> int:
        return comb(self.n, self.k)

    def rank(self, subset: Iterable[int]) -> int:
        """Posición lexicográfica: C(n,k) - 1 - sum_i C(n-1-c_i, k-i)"""
        subset = tuple(subset)
        if len(subset) != self.k:
            raise InputError(f"Se esperaba un subconjunto de tamaño {self.k}")
        if any(a >= b for a, b in zip(subset, subset[1:])) or (
                subset and not 0 <= subset[0] <= subset[-1] < self.n):
            raise InputError(f"Subconjunto no creciente o fuera de rango: {subset}")
        result = comb(self.n, self.k) - 1
        for i, c in enumerate(subset):
            result -= comb(self.n - 1 - c, self.k - i)
        return result

    def unrank(self, rank: int) -> Subset:
        return self.subsets[rank]
