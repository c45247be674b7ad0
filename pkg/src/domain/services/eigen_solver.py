import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from ..exceptions import InputError, NumericError
from ..value_objects.spectrum import Spectrum

logger = logging.getLogger(__name__)

DEFAULT_MAX_SWEEPS = 30
DEFAULT_CONVERGENCE_TOLERANCE = 1e-13
DEFAULT_SYMMETRY_TOLERANCE = 1e-12
DEFAULT_KERNEL_FACTOR = 64


@lru_cache(maxsize=64)
def _round_robin(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """
    Orden cíclico por torneo: n-1 rondas (n par) de pares disjuntos que
    cubren cada par (p, q) exactamente una vez por barrido.
    """
    players = list(range(n + (n % 2)))
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = [
            (min(players[i], players[m - 1 - i]), max(players[i], players[m - 1 - i]))
            for i in range(m // 2)
        ]
        pairs = [(p, q) for p, q in pairs if q < n]
        if pairs:
            rounds.append((
                np.array([p for p, _ in pairs], dtype=np.intp),
                np.array([q for _, q in pairs], dtype=np.intp),
            ))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


class JacobiEigenSolver:
    """
    Método de Jacobi cíclico para matrices simétricas reales.

    Cada ronda aplica a la vez las rotaciones de un conjunto de pares
    disjuntos: no comparten filas ni columnas, así que el resultado coincide
    con aplicarlas una a una.
    """

    def __init__(self, max_sweeps: int = DEFAULT_MAX_SWEEPS,
                 tolerance: float = DEFAULT_CONVERGENCE_TOLERANCE,
                 symmetry_tolerance: float = DEFAULT_SYMMETRY_TOLERANCE):
        self.max_sweeps = max_sweeps
        self.tolerance = tolerance
        self.symmetry_tolerance = symmetry_tolerance

    def check_symmetric(self, m: np.ndarray) -> np.ndarray:
        m = np.asarray(m, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError(f"Se esperaba una matriz cuadrada, no {m.shape}")
        if m.size and not np.all(np.isfinite(m)):
            raise InputError("La matriz contiene valores no finitos")
        scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
        asymmetry = float(np.abs(m - m.T).max()) if m.size else 0.0
        if asymmetry > self.symmetry_tolerance * scale:
            raise InputError(f"La matriz no es simétrica (|M - M^T| = {asymmetry:.3e})")
        return m

    def eigenvalues(self, m: np.ndarray) -> Spectrum:
        m = self.check_symmetric(m)
        n = m.shape[0]
        scale = float(np.abs(m).sum(axis=1).max()) if n else 0.0
        if n <= 1:
            return Spectrum(np.diag(m).copy(), n, scale)

        a = (m + m.T) / 2.0
        norm = float(np.linalg.norm(a))
        threshold = max(self.tolerance, n * np.finfo(float).eps) * norm
        rounds = _round_robin(n)

        for sweep in range(self.max_sweeps + 1):
            off = self._off_norm(a)
            if off <= threshold:
                logger.debug(f"Jacobi convergió en {sweep} barridos (n={n})")
                return Spectrum(np.diag(a).copy(), n, scale)
            if sweep == self.max_sweeps:
                break
            for p, q in rounds:
                self._rotate(a, p, q)

        raise NumericError(
            f"Jacobi no convergió tras {self.max_sweeps} barridos "
            f"(off = {off:.3e}, umbral = {threshold:.3e})"
        )

    @staticmethod
    def _off_norm(a: np.ndarray) -> float:
        upper = a[np.triu_indices(a.shape[0], 1)]
        return float(np.sqrt(2.0) * np.linalg.norm(upper))

    @staticmethod
    def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray):
        apq = a[p, q]
        active = apq != 0.0
        if not np.any(active):
            return
        p, q, apq = p[active], q[active], apq[active]
        # apq subnormal: theta = inf y t = 0, la rotación es la identidad
        with np.errstate(over='ignore'):
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
        c = 1.0 / np.sqrt(t * t + 1.0)
        s = t * c

        col_p = a[:, p].copy()
        col_q = a[:, q].copy()
        a[:, p] = col_p * c - col_q * s
        a[:, q] = col_p * s + col_q * c
        row_p = a[p, :].copy()
        row_q = a[q, :].copy()
        a[p, :] = c[:, np.newaxis] * row_p - s[:, np.newaxis] * row_q
        a[q, :] = s[:, np.newaxis] * row_p + c[:, np.newaxis] * row_q
        a[p, q] = 0.0
        a[q, p] = 0.0


def sym_eigenvalues(m: np.ndarray, solver: JacobiEigenSolver = None) -> Spectrum:
    """Autovalores de una matriz simétrica, en orden creciente"""
    return (solver or JacobiEigenSolver()).eigenvalues(m)


def nonsym_eigenvalues_real(m: np.ndarray, symmetric: np.ndarray,
                            solver: JacobiEigenSolver = None) -> Spectrum:
    """
    Espectro de un laplaciano ponderado no simétrico, calculado a través de
    su contraparte simétrica semejante (o límite de semejantes).
    Se comprueba que ambas matrices compartan forma y diagonal.
    """
    m = np.asarray(m, dtype=float)
    symmetric = np.asarray(symmetric, dtype=float)
    if m.shape != symmetric.shape:
        raise InputError(f"Formas distintas: {m.shape} y {symmetric.shape}")
    if m.size and not np.allclose(np.diag(m), np.diag(symmetric), rtol=1e-12, atol=1e-12):
        raise NumericError("La matriz simétrica no comparte diagonal con la original")
    return sym_eigenvalues(symmetric, solver)


def kernel_tolerance(spectrum: Spectrum, factor: int = DEFAULT_KERNEL_FACTOR) -> float:
    """max(n, 16) * 2^-52 * max(1, escala) * factor"""
    return max(spectrum.source_dim, 16) * 2.0 ** -52 * max(1.0, spectrum.scale) * factor


def kernel_dimension(spectrum: Spectrum, factor: int = DEFAULT_KERNEL_FACTOR) -> int:
    tolerance = kernel_tolerance(spectrum, factor)
    return int(np.sum(np.abs(spectrum.values) <= tolerance))


def gershgorin_bound(m: np.ndarray) -> float:
    """Máximo de las sumas de valores absolutos por columna"""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"Se esperaba una matriz cuadrada, no {m.shape}")
    if m.size == 0:
        return 0.0
    return float(np.abs(m).sum(axis=0).max())


def spectra_deviation(first: Spectrum, second: Spectrum) -> float:
    """Máxima diferencia entre autovalores emparejados por orden"""
    if len(first) != len(second):
        raise InputError("Los espectros tienen tamaños distintos")
    if len(first) == 0:
        return 0.0
    return float(np.abs(first.values - second.values).max())


def spectrum_from_values(values: List[float], scale: float = 0.0) -> Spectrum:
    return Spectrum(np.asarray(values, dtype=float), len(values), scale)
