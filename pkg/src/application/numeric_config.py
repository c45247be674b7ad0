from dataclasses import dataclass
from typing import Dict, Optional

from ..domain.services.eigen_solver import JacobiEigenSolver
from ..infrastructure.config.settings import AppSettings


@dataclass(frozen=True)
class NumericConfig:
    """Parámetros numéricos resueltos a partir de la configuración"""
    max_dim: int
    max_faces: int
    max_sweeps: int
    convergence_tolerance: float
    symmetry_tolerance: float
    kernel_factor: int
    report_tolerance: float
    count_tolerance: float
    certificate_tolerance: float
    subset_cap: int
    packing_vertex_cap: int
    tolerance_scale: float

    @classmethod
    def from_settings(cls, settings: AppSettings,
                      tolerance_scale: Optional[float] = None) -> 'NumericConfig':
        scale = settings.bounds.tolerance_scale if tolerance_scale is None else tolerance_scale
        return cls(
            max_dim=settings.complex.max_dim,
            max_faces=settings.complex.max_faces,
            max_sweeps=settings.spectral.max_sweeps,
            convergence_tolerance=settings.spectral.convergence_tolerance,
            symmetry_tolerance=settings.spectral.symmetry_tolerance,
            kernel_factor=settings.spectral.kernel_factor,
            report_tolerance=settings.bounds.report_tolerance * scale,
            count_tolerance=settings.bounds.count_tolerance * scale,
            certificate_tolerance=settings.bounds.certificate_tolerance * scale,
            subset_cap=settings.bounds.subset_cap,
            packing_vertex_cap=settings.bounds.packing_vertex_cap,
            tolerance_scale=scale
        )

    def solver(self) -> JacobiEigenSolver:
        return JacobiEigenSolver(self.max_sweeps, self.convergence_tolerance,
                                 self.symmetry_tolerance)

    def to_dict(self) -> Dict:
        """Constantes de tolerancia que acompañan a cada informe"""
        return {
            'report_tolerance': self.report_tolerance,
            'count_tolerance': self.count_tolerance,
            'certificate_tolerance': self.certificate_tolerance,
            'kernel_tolerance': "max(n, 16) * 2^-52 * max(1, escala) * factor",
            'kernel_factor': self.kernel_factor,
            'convergence_tolerance': self.convergence_tolerance,
            'tolerance_scale': self.tolerance_scale
        }
