import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from ...domain.entities.graph import Graph
from ...domain.exceptions import InputError
from ...domain.repositories.graph_repository import GraphRepository, PathLike
from ...domain.value_objects.weight_function import WeightFunction


class TextGraphRepository(GraphRepository):
    """
    Implementación de GraphRepository sobre ficheros de texto UTF-8:
    - Grafos: primera línea útil "n m", después m líneas "u v"
    - Pesos: líneas "v w_v"
    - Matrices: "filas columnas" y después las filas con 17 cifras significativas
    En todos los formatos '#' inicia un comentario.
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def _read_lines(self, path: PathLike) -> Iterator[Tuple[int, List[str]]]:
        """Líneas no vacías sin comentarios, con su número de línea"""
        path = Path(path)
        try:
            text = path.read_text(encoding='utf-8')
        except OSError as e:
            self.logger.error(f"Error al leer {path}: {str(e)}")
            raise InputError(f"No se puede leer {path}: {e.strerror or e}")
        for number, line in enumerate(text.splitlines(), start=1):
            fields = line.split('#', 1)[0].split()
            if fields:
                yield number, fields

    @staticmethod
    def _integers(path: PathLike, number: int, fields: List[str], count: int) -> List[int]:
        if len(fields) != count:
            raise InputError(f"{path}:{number}: se esperaban {count} enteros")
        try:
            return [int(x) for x in fields]
        except ValueError:
            raise InputError(f"{path}:{number}: valor no entero en '{' '.join(fields)}'")

    def load_graph(self, path: PathLike) -> Graph:
        lines = self._read_lines(path)
        try:
            number, fields = next(lines)
        except StopIteration:
            raise InputError(f"{path}: fichero de grafo vacío")
        n, m = self._integers(path, number, fields, 2)
        if n < 0 or m < 0:
            raise InputError(f"{path}:{number}: n y m deben ser no negativos")

        edges = []
        for number, fields in lines:
            u, v = self._integers(path, number, fields, 2)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"{path}:{number}: arista ({u}, {v}) fuera de rango para n={n}")
            if u == v:
                raise InputError(f"{path}:{number}: lazo en el vértice {u}")
            edges.append((u, v))
        if len(edges) != m:
            raise InputError(f"{path}: la cabecera anuncia {m} aristas y hay {len(edges)}")

        graph = Graph.from_edge_list(n, edges)
        self.logger.info(f"Grafo leído de {path}: n={n}, {graph.edge_count} aristas")
        return graph

    def format_graph(self, graph: Graph, header: Optional[str] = None) -> str:
        lines = [f"# {line}" for line in header.splitlines()] if header else []
        lines.append(f"{graph.n} {graph.edge_count}")
        lines.extend(f"{u} {v}" for u, v in graph.edges)
        return "\n".join(lines) + "\n"

    def save_graph(self, graph: Graph, path: PathLike, header: Optional[str] = None) -> bool:
        try:
            Path(path).write_text(self.format_graph(graph, header), encoding='utf-8')
            self.logger.info(f"Grafo guardado en {path}")
            return True
        except OSError as e:
            self.logger.error(f"Error al guardar el grafo en {path}: {str(e)}")
            return False

    def load_weights(self, path: PathLike, n: int) -> WeightFunction:
        values: Dict[int, float] = {}
        for number, fields in self._read_lines(path):
            if len(fields) != 2:
                raise InputError(f"{path}:{number}: se esperaba 'v w_v'")
            try:
                v, weight = int(fields[0]), float(fields[1])
            except ValueError:
                raise InputError(f"{path}:{number}: línea de pesos mal formada")
            if not 0 <= v < n:
                raise InputError(f"{path}:{number}: vértice {v} fuera de rango para n={n}")
            if v in values:
                raise InputError(f"{path}:{number}: peso repetido para el vértice {v}")
            if not np.isfinite(weight) or weight < 0:
                raise InputError(f"{path}:{number}: peso inválido {weight}")
            values[v] = weight
        return WeightFunction(tuple(values.get(v, 1.0) for v in range(n)))

    def save_weights(self, weights: WeightFunction, path: PathLike) -> bool:
        try:
            text = "".join(f"{v} {w:.17g}\n" for v, w in enumerate(weights.values))
            Path(path).write_text(text, encoding='utf-8')
            return True
        except OSError as e:
            self.logger.error(f"Error al guardar los pesos en {path}: {str(e)}")
            return False

    def load_matrix(self, path: PathLike) -> np.ndarray:
        lines = self._read_lines(path)
        try:
            number, fields = next(lines)
        except StopIteration:
            raise InputError(f"{path}: fichero de matriz vacío")
        rows, cols = self._integers(path, number, fields, 2)
        if rows < 0 or cols < 0:
            raise InputError(f"{path}:{number}: dimensiones negativas")

        values: List[float] = []
        for number, fields in lines:
            try:
                values.extend(float(x) for x in fields)
            except ValueError:
                raise InputError(f"{path}:{number}: valor no numérico")
        if len(values) != rows * cols:
            raise InputError(
                f"{path}: se esperaban {rows * cols} valores y se leyeron {len(values)}"
            )
        return np.array(values, dtype=float).reshape(rows, cols)

    def format_matrix(self, matrix: np.ndarray) -> str:
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        lines = [f"{matrix.shape[0]} {matrix.shape[1]}"]
        lines.extend(" ".join(f"{x:.17g}" for x in row) for row in matrix)
        return "\n".join(lines) + "\n"
