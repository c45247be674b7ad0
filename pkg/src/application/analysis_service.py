from pathlib import Path
from typing import Dict, Optional, Tuple
import logging

from ..domain.entities.graph import Graph
from ..domain.exceptions import InputError, ResourceLimitError
from ..domain.repositories.graph_repository import GraphRepository
from ..domain.services import certificates
from ..domain.services.complex_builder import independence_complex
from ..domain.services.graph_generator import generate
from ..domain.services.homology import betti_rank_oracle, homological_connectivity
from ..domain.services.laplacian_assembler import sym_vertex_weighted_k_laplacian
from ..domain.services.spectral_bounds import (
    abm_connectivity_bound, betti_upper_bound, connectivity_lower_bound,
    graph_spectrum, main_independence_bounds
)
from ..domain.value_objects.weight_function import WeightFunction
from ..infrastructure.config.settings import get_settings
from ..infrastructure.persistence.json_report_writer import JsonReportWriter
from .numeric_config import NumericConfig


class AnalysisService:
    """
    Servicio que analiza un grafo: complejo de independencia, espectros,
    cotas por dimensión, números de Betti exactos y conectividad.
    """

    def __init__(self, repository: GraphRepository, tolerance_scale: Optional[float] = None):
        self.repository = repository
        self.settings = get_settings()
        self.config = NumericConfig.from_settings(self.settings.get(), tolerance_scale)
        self.writer = JsonReportWriter()
        self.logger = logging.getLogger(__name__)

    def analyze_file(self, graph_path: Path, weights_path: Optional[Path] = None,
                     max_dim: Optional[int] = None, packing: bool = False) -> Dict:
        graph = self.repository.load_graph(graph_path)
        weights = self.repository.load_weights(weights_path, graph.n) if weights_path else None
        report = self.analyze(graph, weights, max_dim, packing)
        report['source'] = str(graph_path)
        return report

    def analyze(self, graph: Graph, weights: Optional[WeightFunction] = None,
                max_dim: Optional[int] = None, packing: bool = False) -> Dict:
        """
        Informe completo del grafo. max_dim es el corte K de la homología;
        el complejo se enumera hasta K+1.
        """
        config = self.config
        solver = config.solver()
        weights = weights or WeightFunction.uniform(graph.n)
        weights.require_length(graph.n)
        cutoff = config.max_dim - 1 if max_dim is None else max_dim
        if cutoff < 0:
            raise InputError(f"El corte de dimensión debe ser >= 0 (K={cutoff})")

        x = independence_complex(graph, cutoff + 1, config.max_faces)
        top = min(cutoff, x.top_dim)
        spectrum = graph_spectrum(graph, weights, solver)

        dimensions = []
        for k in range(top + 1):
            laplacian = solver.eigenvalues(sym_vertex_weighted_k_laplacian(x, weights, k))
            bounds = main_independence_bounds(
                graph, weights, k, solver, config.max_faces, config.subset_cap,
                config.report_tolerance
            )
            dimensions.append({
                'k': k,
                'f_k': x.f(k),
                'spectrum': laplacian.to_list(),
                'independence_bounds': bounds.to_dict(),
                'betti_count_bound': betti_upper_bound(
                    graph, weights, k, solver, config.subset_cap, config.count_tolerance
                )
            })
            if not bounds.holds:
                self.logger.warning(
                    f"Cota de autovalores violada en k={k}: holgura {bounds.slack:.3e}"
                )

        report = {
            'graph': graph.to_dict(),
            'weights': list(weights.values),
            'weight_total': weights.total,
            'cutoff': cutoff,
            'f_vector': x.f_vector(),
            'truncated': x.truncated,
            'graph_spectrum': spectrum.to_list(),
            'dimensions': dimensions,
            'tolerances': config.to_dict()
        }

        if top >= 0:
            betti = betti_rank_oracle(x, top)
            report['betti'] = betti.to_dict()
            report['eta'] = homological_connectivity(x, top).to_dict()
        else:
            report['betti'] = None
            report['eta'] = None

        if weights.is_zero():
            report['connectivity_bound'] = None
        else:
            report['connectivity_bound'] = connectivity_lower_bound(
                graph, weights, solver, config.count_tolerance
            ).to_dict()
        report['classical_connectivity_bound'] = abm_connectivity_bound(graph, solver)

        if packing:
            report['packing'] = self.packing_section(graph, top)

        self.logger.info(
            f"Análisis completado: n={graph.n}, f={report['f_vector']}, betti={report['betti']}"
        )
        return report

    def packing_section(self, graph: Graph, top: int = -1) -> Dict:
        """
        Certificados de empaquetamiento y dominación del grafo. Con top >= 0
        se añaden las cotas de Betti del empaquetamiento para k = 0..top.
        """
        config = self.config
        tolerance = config.certificate_tolerance
        section: Dict = {}

        try:
            size, witness = certificates.max_neighborhood_packing(graph, config.packing_vertex_cap)
            section['neighborhood_packing'] = {
                'size': size,
                'witness': list(witness),
                'eta_bound': certificates.quadratic_packing_eta_bound(
                    graph, certificates.packing_indicator(graph, witness), tolerance
                ),
                'betti_bounds': [
                    certificates.packing_betti_bound(graph, witness, k) for k in range(top + 1)
                ]
            }
        except ResourceLimitError as e:
            self.logger.warning(f"Empaquetamiento de entornos omitido: {str(e)}")
            section['neighborhood_packing'] = None

        dual = certificates.uniform_star_dominating_function(graph)
        section['star_dominating'] = {
            'certificate': certificates.verify_star_dominating_dual(graph, dual, tolerance).to_dict(),
            'eta_bound': certificates.star_dominating_eta_bound(graph, dual, tolerance)
        }

        if graph.n >= 3 and graph == generate("cycle", graph.n):
            f = certificates.cycle_packing_function(graph.n)
            section['cycle_packing'] = {
                'function': list(f.values),
                'certificate': certificates.verify_quadratic_packing(graph, f, tolerance).to_dict(),
                'eta_bound': certificates.quadratic_packing_eta_bound(graph, f, tolerance),
                'connectivity_bound': connectivity_lower_bound(
                    graph, f.squared(), config.solver(), config.count_tolerance
                ).to_dict()
            }
        return section

    def export_report(self, report: Dict, path: Path) -> Tuple[bool, str]:
        """
        Guarda el informe en JSON.
        Retorna una tupla (éxito, mensaje).
        """
        return self.writer.write(report, path)
