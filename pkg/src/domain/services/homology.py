"""Números de Betti reducidos: rango exacto sobre Q y núcleos de laplacianos."""
import logging
from fractions import Fraction
from typing import Dict, List

import numpy as np

from ..entities.simplicial_complex import SimplicialComplex
from ..exceptions import InputError
from ..models.betti_method import BettiMethod
from ..value_objects.betti_vector import BettiVector, Connectivity
from ..value_objects.weight_function import WeightFunction
from .complex_builder import coboundary
from .eigen_solver import DEFAULT_KERNEL_FACTOR, JacobiEigenSolver, kernel_dimension
from .laplacian_assembler import sym_vertex_weighted_k_laplacian

logger = logging.getLogger(__name__)


def exact_rank(matrix) -> int:
    """
    Rango sobre Q por eliminación gaussiana con fracciones, guardando las
    filas como diccionarios columna -> valor no nulo.
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise InputError(f"Se esperaba una matriz, no un array de forma {matrix.shape}")
    pivots: Dict[int, Dict[int, Fraction]] = {}
    for line in matrix:
        row = {
            int(c): Fraction(value.item() if isinstance(value, np.generic) else value)
            for c, value in zip(np.flatnonzero(line), line[line != 0])
        }
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = row
                break
            factor = row[col] / pivot[col]
            for c, value in pivot.items():
                updated = row.get(c, 0) - factor * value
                if updated:
                    row[c] = updated
                else:
                    row.pop(c, None)
    return len(pivots)


def _check_cutoff(x: SimplicialComplex, cutoff: int):
    if cutoff < 0:
        raise InputError(f"El corte de dimensión debe ser >= 0 (K={cutoff})")
    if not x.is_known(cutoff + 1):
        raise InputError(
            f"El corte K={cutoff} necesita las caras de dimensión {cutoff + 1} "
            f"(max_dim={x.max_dim})"
        )


def betti_rank_oracle(x: SimplicialComplex, cutoff: int) -> BettiVector:
    """beta_k = f_k - rango d_k - rango d_{k-1}, con d_{-1} incluido"""
    _check_cutoff(x, cutoff)
    ranks = [exact_rank(coboundary(x, k)) for k in range(-1, cutoff + 1)]
    values = tuple(x.f(k) - ranks[k + 1] - ranks[k] for k in range(cutoff + 1))
    logger.debug(f"Betti (rango exacto) hasta K={cutoff}: {values}")
    return BettiVector(values, BettiMethod.RANK_ORACLE, cutoff)


def _kernel_dimensions(x: SimplicialComplex, w: WeightFunction, cutoff: int,
                       solver: JacobiEigenSolver, kernel_factor: int) -> List[int]:
    solver = solver or JacobiEigenSolver()
    return [
        kernel_dimension(solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, w, k)),
                         kernel_factor)
        for k in range(cutoff + 1)
    ]


def betti_hodge(x: SimplicialComplex, w: WeightFunction, cutoff: int,
                solver: JacobiEigenSolver = None,
                kernel_factor: int = DEFAULT_KERNEL_FACTOR) -> BettiVector:
    """dim ker L_k^w(X) con w > 0, que coincide con beta_k"""
    _check_cutoff(x, cutoff)
    w.require_length(x.n)
    w.require_positive()
    values = _kernel_dimensions(x, w, cutoff, solver, kernel_factor)
    return BettiVector(tuple(values), BettiMethod.HODGE, cutoff)


def betti_degenerate_upper(x: SimplicialComplex, w: WeightFunction, cutoff: int,
                           solver: JacobiEigenSolver = None,
                           kernel_factor: int = DEFAULT_KERNEL_FACTOR) -> BettiVector:
    """
    Con w >= 0 (se admiten ceros) el núcleo de L_k^w(X) solo acota beta_k
    por arriba.
    """
    _check_cutoff(x, cutoff)
    w.require_length(x.n)
    values = _kernel_dimensions(x, w, cutoff, solver, kernel_factor)
    return BettiVector(tuple(values), BettiMethod.DEGENERATE, cutoff)


def homological_connectivity(x: SimplicialComplex, cutoff: int) -> Connectivity:
    """
    Mayor k <= K+1 con beta_i = 0 para todo i <= k-2. Si toda la homología
    hasta K se anula, el resultado es solo una cota inferior.
    """
    if x.f(0) == 0:
        raise InputError("La conectividad no está definida para el complejo vacío")
    betti = betti_rank_oracle(x, cutoff)
    first = betti.first_nonzero()
    if first == -1:
        return Connectivity(cutoff + 1, False)
    return Connectivity(first + 1, True)


def euler_characteristic(x: SimplicialComplex) -> int:
    """Característica de Euler reducida: -1 + sum_k (-1)^k f_k"""
    if not x.is_fully_enumerated():
        raise InputError(
            f"El complejo está truncado en max_dim={x.max_dim}; la característica "
            "de Euler no está determinada"
        )
    return -1 + sum((-1) ** k * f for k, f in enumerate(x.f_vector()))
