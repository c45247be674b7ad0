"""Matrices compuestas aditivas M^[k] y espectros de k-sumas."""
from itertools import combinations, islice
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from ..exceptions import InputError, ResourceLimitError
from ..value_objects.spectrum import KSumSpectrum, Spectrum
from ..value_objects.subset_index import SubsetIndex

DEFAULT_SUBSET_CAP = 5_000_000
CHUNK_SIZE = 100_000


def epsilon_sign(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """
    (-1)^eps(sigma, tau), con eps el número de elementos comunes
    estrictamente entre i (de sigma, no de tau) y j (de tau, no de sigma).
    """
    sigma_set, tau_set = set(sigma), set(tau)
    if len(sigma_set) != len(sigma) or len(tau_set) != len(tau) or len(sigma) != len(tau):
        raise InputError(f"{sigma} y {tau} deben ser conjuntos del mismo tamaño")
    only_sigma = sigma_set - tau_set
    only_tau = tau_set - sigma_set
    if len(only_sigma) != 1:
        raise InputError(f"{sigma} y {tau} deben diferir en exactamente un elemento")
    i, = only_sigma
    j, = only_tau
    return swap_sign(sigma_set & tau_set, i, j)


def swap_sign(common: Iterable[int], i: int, j: int) -> int:
    """Signo de sustituir i por j: paridad de los comunes entre ambos"""
    low, high = (i, j) if i < j else (j, i)
    between = sum(1 for c in common if low < c < high)
    return -1 if between % 2 else 1


def additive_compound(m: np.ndarray, k: int) -> np.ndarray:
    """
    k-ésima compuesta aditiva, indexada por los k-subconjuntos en orden
    lexicográfico. Se recorre cada sigma y cada intercambio i -> j, de modo
    que el coste es C(n,k) k (n-k).
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"Se esperaba una matriz cuadrada, no {m.shape}")
    n = m.shape[0]
    if not 1 <= k <= n:
        raise InputError(f"k={k} fuera de rango para una matriz {n}x{n}")

    index = SubsetIndex(n, k)
    result = np.zeros((len(index), len(index)))
    diagonal = np.diag(m)
    for row, sigma in enumerate(index.subsets):
        result[row, row] = diagonal[list(sigma)].sum()
        members = set(sigma)
        for i in sigma:
            rest = [c for c in sigma if c != i]
            for j in range(n):
                if j in members:
                    continue
                tau = tuple(sorted(rest + [j]))
                result[row, index.rank(tau)] = swap_sign(rest, i, j) * m[i, j]
    return result


def subset_chunks(n: int, k: int, cap: int = DEFAULT_SUBSET_CAP,
                  chunk_size: int = CHUNK_SIZE) -> Iterator[np.ndarray]:
    """
    Recorre los k-subconjuntos de {0..n-1} en orden lexicográfico, en bloques
    de hasta chunk_size filas (matrices de índices de forma (filas, k)).
    """
    if not 0 <= k <= n:
        raise InputError(f"k={k} fuera de rango para n={n}")
    total = comb(n, k)
    if total > cap:
        raise ResourceLimitError(
            f"C({n},{k}) = {total} subconjuntos supera el límite {cap}",
            quantity="subsets", value=total, limit=cap
        )
    source = combinations(range(n), k)
    while True:
        block = list(islice(source, chunk_size))
        if not block:
            return
        yield np.array(block, dtype=np.intp).reshape(len(block), k)


def subset_sums(values: Sequence[float], k: int,
                cap: int = DEFAULT_SUBSET_CAP) -> np.ndarray:
    """Todas las sumas de k elementos distintos (por posición), en orden lexicográfico"""
    values = np.asarray(values, dtype=float)
    parts = [values[block].sum(axis=1) for block in subset_chunks(len(values), k, cap)]
    return np.concatenate(parts) if parts else np.zeros(0)


def k_sum_spectrum(spectrum: Spectrum, k: int, cap: int = DEFAULT_SUBSET_CAP) -> KSumSpectrum:
    """S_k(M) a partir de los autovalores de M"""
    if not 1 <= k <= len(spectrum):
        raise InputError(f"k={k} fuera de rango para {len(spectrum)} autovalores")
    return KSumSpectrum(k, subset_sums(spectrum.values, k, cap))
