from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple
import logging

from ..domain.entities.graph import Graph
from ..domain.exceptions import InputError, ResourceLimitError
from ..domain.models.bound_direction import BoundDirection
from ..domain.repositories.graph_repository import GraphRepository
from ..domain.services import certificates
from ..domain.services.complex_builder import independence_complex
from ..domain.services.graph_generator import generate
from ..domain.services.graph_matrices import graph_laplacian
from ..domain.services.homology import (
    betti_degenerate_upper, betti_hodge, betti_rank_oracle, homological_connectivity
)
from ..domain.services.spectral_bounds import (
    abm_connectivity_bound, abm_eigenvalue_bounds, affine_identity_report, betti_upper_bound,
    connectivity_lower_bound, degree_sum_report, graph_merris_report, main_clique_bounds,
    main_independence_bounds, merris_ksum_bound
)
from ..domain.value_objects.betti_vector import Connectivity
from ..domain.value_objects.bound_report import BoundReport
from ..domain.value_objects.weight_function import WeightFunction
from ..infrastructure.config.settings import get_settings
from ..infrastructure.persistence.json_report_writer import JsonReportWriter
from .numeric_config import NumericConfig

DEFAULT_MAX_K = 3


class BoundVerificationService:
    """
    Servicio que contrasta las cotas espectrales con los valores calculados.
    Cada familia de comprobaciones devuelve una lista de BoundReport.
    """

    def __init__(self, repository: GraphRepository, tolerance_scale: Optional[float] = None):
        self.repository = repository
        self.settings = get_settings()
        self.config = NumericConfig.from_settings(self.settings.get(), tolerance_scale)
        self.writer = JsonReportWriter()
        self.logger = logging.getLogger(__name__)
        self._suites: Dict[str, Callable[[Graph, WeightFunction, int], List[BoundReport]]] = {
            'independence': self._independence,
            'clique': self._clique,
            'betti_count': self._betti_count,
            'connectivity': self._connectivity,
            'classical': self._classical,
            'degree_sum': self._degree_sum,
            'affine_identity': self._affine_identity,
            'hodge': self._hodge,
            'merris': self._merris,
            'packing': self._packing
        }

    @property
    def suites(self) -> Tuple[str, ...]:
        return tuple(self._suites)

    def verify(self, graph: Graph, weights: Optional[WeightFunction] = None,
               theorems: Optional[Sequence[str]] = None,
               max_k: int = DEFAULT_MAX_K) -> List[BoundReport]:
        """Ejecuta las familias pedidas (todas si theorems es None)"""
        weights = weights or WeightFunction.uniform(graph.n)
        weights.require_length(graph.n)
        if max_k < 0:
            raise InputError(f"max_k debe ser >= 0 (max_k={max_k})")
        names = list(theorems) if theorems else list(self.suites)
        unknown = [name for name in names if name not in self._suites]
        if unknown:
            raise InputError(
                f"Familias desconocidas: {', '.join(unknown)} "
                f"(disponibles: {', '.join(self.suites)})"
            )

        reports: List[BoundReport] = []
        for name in names:
            suite = self._suites[name](graph, weights, max_k)
            self.logger.debug(f"{name}: {len(suite)} informes")
            reports.extend(suite)

        for report in reports:
            if not report.holds:
                self.logger.warning(
                    f"Cota violada: {report.theorem} {report.parameters} "
                    f"holgura {report.slack:.3e} en el índice {report.worst_index}"
                )
        return reports

    def verify_files(self, paths: Iterable[Path], weights_path: Optional[Path] = None,
                     theorems: Optional[Sequence[str]] = None,
                     max_k: int = DEFAULT_MAX_K) -> Dict:
        """
        Verifica un corpus de grafos en orden de ruta y devuelve un único
        documento con los informes de todos.
        """
        results = []
        for path in sorted(Path(p) for p in paths):
            graph = self.repository.load_graph(path)
            weights = self.repository.load_weights(weights_path, graph.n) if weights_path else None
            reports = self.verify(graph, weights, theorems, max_k)
            results.append({
                'source': str(path),
                'graph': graph.to_dict(),
                'holds': all(r.holds for r in reports),
                'reports': [r.to_dict() for r in reports]
            })
        return {
            'holds': all(entry['holds'] for entry in results),
            'graphs': results,
            'tolerances': self.config.to_dict()
        }

    def export_document(self, document: Dict, path: Path) -> Tuple[bool, str]:
        return self.writer.write(document, path)

    def _dimensions(self, max_k: int) -> range:
        return range(max_k + 1)

    def _independence(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        config = self.config
        solver = config.solver()
        return [
            main_independence_bounds(graph, weights, k, solver, config.max_faces,
                                     config.subset_cap, config.report_tolerance)
            for k in self._dimensions(max_k)
        ]

    def _clique(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        config = self.config
        solver = config.solver()
        return [
            main_clique_bounds(graph, weights, k, solver, config.max_faces,
                               config.subset_cap, config.report_tolerance)
            for k in self._dimensions(max_k)
        ]

    def _exact_betti(self, graph: Graph, max_k: int):
        x = independence_complex(graph, max_k + 1, self.config.max_faces)
        top = min(max_k, x.top_dim)
        return x, top

    def _betti_count(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """beta_k(I(G)) <= número de (k+1)-sumas de autovalores que alcanzan sum(w)"""
        config = self.config
        x, top = self._exact_betti(graph, max_k)
        if top < 0:
            return []
        betti = betti_rank_oracle(x, top)
        counts = [
            betti_upper_bound(graph, weights, k, config.solver(), config.subset_cap,
                              config.count_tolerance)
            for k in range(top + 1)
        ]
        return [BoundReport(
            "betti_count", BoundDirection.UPPER, tuple(counts), betti.values, 0.0,
            {'max_k': top, 'n': graph.n, 'weight_total': weights.total}
        )]

    def _connectivity(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """
        Con m* la cota de conectividad, beta_i(I(G)) = 0 para i <= m* - 2,
        comprobado hasta el corte.
        """
        if weights.is_zero() or graph.n == 0:
            return []
        bound = connectivity_lower_bound(graph, weights, self.config.solver(),
                                         self.config.count_tolerance)
        x, top = self._exact_betti(graph, max_k)
        last = min(bound.value - 2, top)
        parameters = {'bound': bound.value, 'max_k': top, 'n': graph.n}
        if last < 0:
            return [BoundReport("connectivity", BoundDirection.UPPER, (), (), 0.0,
                                parameters, vacuous=bound.vacuous)]
        betti = betti_rank_oracle(x, last)
        return [BoundReport(
            "connectivity", BoundDirection.UPPER, (0.0,) * len(betti), betti.values, 0.0,
            parameters, vacuous=bound.vacuous
        )]

    def _classical(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """Caso sin pesos y su relación con la cota de conectividad con w = 1"""
        config = self.config
        solver = config.solver()
        reports = [
            abm_eigenvalue_bounds(graph, k, solver, config.max_faces, config.report_tolerance)
            for k in self._dimensions(max_k)
        ]
        classical = abm_connectivity_bound(graph, solver)
        if classical is not None:
            refined = connectivity_lower_bound(graph, WeightFunction.uniform(graph.n), solver,
                                               config.count_tolerance)
            reports.append(BoundReport(
                "classical_connectivity", BoundDirection.UPPER, (float(refined.value),),
                (classical,), config.report_tolerance, {'n': graph.n},
                vacuous=refined.vacuous
            ))
        return reports

    def _degree_sum(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        return [
            degree_sum_report(graph, weights, k, self.config.max_faces,
                              self.config.report_tolerance)
            for k in self._dimensions(max_k)
        ]

    def _affine_identity(self, graph: Graph, weights: WeightFunction,
                         max_k: int) -> List[BoundReport]:
        config = self.config
        solver = config.solver()
        return [
            affine_identity_report(graph, weights, k, solver, config.max_faces,
                                   config.subset_cap, config.report_tolerance)
            for k in self._dimensions(max_k)
        ]

    def _hodge(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """
        Núcleos de L_k^w frente al rango exacto: igualdad con pesos positivos,
        cota superior si hay pesos nulos.
        """
        config = self.config
        x, top = self._exact_betti(graph, max_k)
        if top < 0:
            return []
        exact = betti_rank_oracle(x, top)
        parameters = {'max_k': top, 'n': graph.n}
        positive = weights if weights.is_positive() else WeightFunction.uniform(graph.n)
        hodge = betti_hodge(x, positive, top, config.solver(), config.kernel_factor)
        reports = [BoundReport("hodge", BoundDirection.EQUAL, exact.values, hodge.values,
                               0.0, parameters)]
        if not weights.is_positive():
            upper = betti_degenerate_upper(x, weights, top, config.solver(), config.kernel_factor)
            reports.append(BoundReport("hodge_degenerate", BoundDirection.UPPER, upper.values,
                                       exact.values, 0.0, parameters))
        return reports

    def _merris(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """Cota de Merris sobre L(G) y sus dos versiones combinatorias, k = 1..n"""
        config = self.config
        solver = config.solver()
        if graph.n == 0:
            return []
        laplacian = graph_laplacian(graph)
        spectrum = solver.eigenvalues(laplacian)
        sums = spectrum.descending().cumsum()
        ks = range(1, graph.n + 1)
        bounds = tuple(merris_ksum_bound(laplacian, k, config.subset_cap) for k in ks)
        reports = [BoundReport(
            "merris", BoundDirection.UPPER, bounds, tuple(float(sums[k - 1]) for k in ks),
            config.report_tolerance * (1 + spectrum.scale), {'n': graph.n}
        )]
        reports.extend(
            graph_merris_report(graph, k, solver, config.subset_cap, config.report_tolerance)
            for k in ks
        )
        return reports

    def _packing(self, graph: Graph, weights: WeightFunction, max_k: int) -> List[BoundReport]:
        """Cotas de eta por certificados frente a la conectividad exacta"""
        config = self.config
        tolerance = config.certificate_tolerance
        if graph.n == 0:
            return []
        x, top = self._exact_betti(graph, max_k)
        eta = homological_connectivity(x, top)

        bounds: Dict[str, int] = {}
        dual = certificates.uniform_star_dominating_function(graph)
        bounds['star_dominating'] = certificates.star_dominating_eta_bound(graph, dual, tolerance)
        try:
            _, witness = certificates.max_neighborhood_packing(graph, config.packing_vertex_cap)
            bounds['neighborhood_packing'] = certificates.quadratic_packing_eta_bound(
                graph, certificates.packing_indicator(graph, witness), tolerance
            )
        except ResourceLimitError as e:
            self.logger.warning(f"Empaquetamiento de entornos omitido: {str(e)}")
            witness = None
        if graph.n >= 3 and graph == generate("cycle", graph.n):
            bounds['cycle_packing'] = certificates.quadratic_packing_eta_bound(
                graph, certificates.cycle_packing_function(graph.n), tolerance
            )
        if graph.max_degree() <= 1 and graph.edge_count:
            representation = certificates.matching_vector_representation(graph)
            f = WeightFunction(tuple(
                0.5 if graph.degree(v) else 0.0 for v in range(graph.n)
            ))
            bounds['vector_representation'] = certificates.vector_rep_eta_bound(
                graph, representation, f, tolerance
            )

        reports = [self._eta_report(name, value, eta) for name, value in bounds.items()]
        if witness is not None:
            exact = betti_rank_oracle(x, top)
            counts = tuple(
                certificates.packing_betti_bound(graph, witness, k) for k in range(top + 1)
            )
            reports.append(BoundReport(
                "packing_betti", BoundDirection.UPPER, counts, exact.values, 0.0,
                {'packing': list(witness), 'max_k': top, 'n': graph.n}
            ))
        return reports

    @staticmethod
    def _eta_report(certificate: str, bound: int, eta: Connectivity) -> BoundReport:
        """
        Con eta inexacto solo se conoce eta >= valor: el informe es vacío
        cuando ese valor queda por debajo de la cota.
        """
        vacuous = not eta.exact and eta.value < bound
        actual = float(max(eta.value, bound)) if vacuous else float(eta.value)
        return BoundReport(
            "certificate_connectivity", BoundDirection.LOWER, (float(bound),), (actual,), 0.0,
            {'certificate': certificate, 'eta_exact': eta.exact}, vacuous=vacuous
        )
