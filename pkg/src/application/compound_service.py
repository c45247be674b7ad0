from pathlib import Path
from typing import Optional, Tuple
import logging

import numpy as np

from ..domain.repositories.graph_repository import GraphRepository
from ..domain.services.compound import additive_compound, k_sum_spectrum
from ..domain.services.eigen_solver import spectra_deviation, spectrum_from_values
from ..infrastructure.config.settings import get_settings
from .numeric_config import NumericConfig


class CompoundService:
    """Servicio para calcular compuestas aditivas de matrices leídas de fichero"""

    def __init__(self, repository: GraphRepository, tolerance_scale: Optional[float] = None):
        self.repository = repository
        self.settings = get_settings()
        self.config = NumericConfig.from_settings(self.settings.get(), tolerance_scale)
        self.logger = logging.getLogger(__name__)

    def compound(self, matrix: np.ndarray, k: int) -> np.ndarray:
        result = additive_compound(matrix, k)
        self.logger.info(f"Compuesta de orden {k}: {result.shape[0]}x{result.shape[1]}")
        return result

    def check(self, matrix: np.ndarray, compound: np.ndarray, k: int) -> Tuple[float, float]:
        """
        Compara el espectro de M^[k] con las k-sumas de autovalores de M
        (M simétrica). Retorna (desviación máxima, tolerancia).
        """
        solver = self.config.solver()
        base = solver.eigenvalues(matrix)
        actual = solver.eigenvalues(compound)
        expected = k_sum_spectrum(base, k, self.config.subset_cap)
        deviation = spectra_deviation(actual, spectrum_from_values(list(expected.values)))
        tolerance = self.config.report_tolerance * (1 + k * base.scale)
        if deviation > tolerance:
            self.logger.warning(
                f"El espectro de la compuesta se desvía {deviation:.3e} de las k-sumas"
            )
        return deviation, tolerance

    def compound_file(self, path: Path, k: int,
                      check: bool = False) -> Tuple[np.ndarray, Optional[Tuple[float, float]]]:
        matrix = self.repository.load_matrix(path)
        result = self.compound(matrix, k)
        return result, self.check(matrix, result, k) if check else None

    def format(self, matrix: np.ndarray) -> str:
        return self.repository.format_matrix(matrix)
