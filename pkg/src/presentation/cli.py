"""
Interfaz de línea de comandos.

Subcomandos: gen, analyze, verify-bounds y compound. Códigos de salida:
0 correcto, 1 cota violada, 2 entrada inválida, 3 límite de recursos o
fallo numérico.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from ..application.analysis_service import AnalysisService
from ..application.bound_verification_service import DEFAULT_MAX_K, BoundVerificationService
from ..application.compound_service import CompoundService
from ..domain.exceptions import InputError, NumericError, ResourceLimitError
from ..domain.models.graph_kind import GraphKind
from ..domain.services.graph_generator import generate
from ..infrastructure.config.settings import get_settings
from ..infrastructure.persistence.json_report_writer import JsonReportWriter
from ..infrastructure.persistence.text_graph_repository import TextGraphRepository

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

logger = logging.getLogger(__name__)


def _emit(text: str, output: Optional[Path]) -> int:
    if output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(output).write_text(text, encoding='utf-8')
    except OSError as e:
        print(f"Error al escribir {output}: {e.strerror or e}", file=sys.stderr)
        return EXIT_INPUT
    logger.info(f"Salida escrita en {output}")
    return EXIT_OK


def _emit_document(document: Dict, output: Optional[Path],
                   export: Callable[[Dict, Path], Tuple[bool, str]]) -> int:
    """JSON a stdout, o al fichero mediante el exportador del servicio"""
    if output is None:
        sys.stdout.write(JsonReportWriter().dumps(document) + "\n")
        return EXIT_OK
    success, message = export(document, output)
    if not success:
        print(message, file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    repository = TextGraphRepository()
    graph = generate(args.kind, args.size, args.probability, args.seed)
    header = f"generated: {args.kind} {args.size}"
    if args.kind == GraphKind.RANDOM.value:
        header += f" p={args.probability} seed={args.seed}"
    return _emit(repository.format_graph(graph, header), args.output)


def cmd_analyze(args: argparse.Namespace) -> int:
    service = AnalysisService(TextGraphRepository(), args.tolerance_scale)
    report = service.analyze_file(args.graph, args.weights, args.max_dim, args.packing)
    status = _emit_document(report, args.output, service.export_report)
    violated = [
        entry['k'] for entry in report['dimensions']
        if not entry['independence_bounds']['holds']
    ]
    if violated:
        print(f"Cota de autovalores violada en k = {violated}", file=sys.stderr)
        return EXIT_VIOLATED
    return status


def cmd_verify_bounds(args: argparse.Namespace) -> int:
    service = BoundVerificationService(TextGraphRepository(), args.tolerance_scale)
    theorems = None if args.all or not args.theorem else args.theorem
    document = service.verify_files(args.graphs, args.weights, theorems, args.max_dim)
    status = _emit_document(document, args.output, service.export_document)

    for entry in document['graphs']:
        for report in entry['reports']:
            if not report['holds']:
                print(
                    f"{entry['source']}: {report['theorem']} {report['parameters']} "
                    f"violada en el índice {report['worst_index']} "
                    f"(holgura {report['slack']:.3e})",
                    file=sys.stderr
                )
    return status if document['holds'] else EXIT_VIOLATED


def cmd_compound(args: argparse.Namespace) -> int:
    service = CompoundService(TextGraphRepository(), args.tolerance_scale)
    result, check = service.compound_file(args.matrix, args.k, args.check)
    status = _emit(service.format(result), args.output)
    if check is not None:
        deviation, tolerance = check
        print(f"desviación máxima: {deviation:.3e} (tolerancia {tolerance:.3e})", file=sys.stderr)
        if deviation > tolerance:
            return EXIT_VIOLATED
    return status


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", type=Path, help="Fichero de salida (por defecto stdout)")
    common.add_argument("--tolerance-scale", type=float, default=None,
                        help="Factor que multiplica todas las tolerancias de informe")
    common.add_argument("--config", type=Path, help="Fichero de configuración YAML")
    common.add_argument("-v", "--verbose", action="store_true", help="Mensajes de nivel INFO")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="laplacian-bounds",
        description="Laplacianos ponderados de complejos de independencia y sus cotas espectrales"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_gen = subparsers.add_parser("gen", parents=[common], help="Genera un grafo")
    p_gen.add_argument("kind", choices=[kind.value for kind in GraphKind])
    p_gen.add_argument("size", type=int, help="r para matching, número de vértices en el resto")
    p_gen.add_argument("probability", type=float, nargs="?", default=None,
                       help="Probabilidad de arista (solo random)")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.set_defaults(handler=cmd_gen)

    p_analyze = subparsers.add_parser("analyze", parents=[common], help="Informe JSON de un grafo")
    p_analyze.add_argument("graph", type=Path)
    p_analyze.add_argument("--weights", type=Path, default=None)
    p_analyze.add_argument("--max-dim", type=int, default=None,
                           help="Corte K de la homología (por defecto el de la configuración)")
    p_analyze.add_argument("--packing", action="store_true",
                           help="Añade los certificados de empaquetamiento y dominación")
    p_analyze.set_defaults(handler=cmd_analyze)

    p_verify = subparsers.add_parser("verify-bounds", parents=[common],
                                     help="Comprueba las cotas sobre uno o varios grafos")
    p_verify.add_argument("graphs", type=Path, nargs="+")
    p_verify.add_argument("--weights", type=Path, default=None)
    selection = p_verify.add_mutually_exclusive_group()
    selection.add_argument("--all", action="store_true", help="Todas las familias (por defecto)")
    selection.add_argument("--theorem", action="append", metavar="NAME",
                           help="Familia a comprobar; se puede repetir")
    p_verify.add_argument("--max-dim", type=int, default=DEFAULT_MAX_K,
                          help=f"Mayor k comprobado (por defecto {DEFAULT_MAX_K})")
    p_verify.set_defaults(handler=cmd_verify_bounds)

    p_compound = subparsers.add_parser("compound", parents=[common],
                                       help="Compuesta aditiva de una matriz")
    p_compound.add_argument("matrix", type=Path)
    p_compound.add_argument("k", type=int)
    p_compound.add_argument("--check", action="store_true",
                            help="Compara el espectro con las k-sumas de autovalores")
    p_compound.set_defaults(handler=cmd_compound)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    if args.config is not None and not settings.use_file(args.config):
        print(f"No se pudo cargar la configuración {args.config}", file=sys.stderr)
        return EXIT_INPUT
    settings.configure_logging("INFO" if args.verbose else None)

    try:
        return args.handler(args)
    except InputError as e:
        print(f"Error de entrada: {str(e)}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as e:
        print(f"Límite de recursos: {str(e)}", file=sys.stderr)
        return EXIT_RESOURCE
    except NumericError as e:
        print(f"Error numérico: {str(e)}", file=sys.stderr)
        return EXIT_RESOURCE
