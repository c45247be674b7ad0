import logging
from typing import Optional, Union

import networkx as nx

from ..entities.graph import Graph
from ..exceptions import InputError
from ..models.graph_kind import GraphKind

logger = logging.getLogger(__name__)


def generate(kind: Union[GraphKind, str], size: int,
             probability: Optional[float] = None,
             seed: Optional[int] = None) -> Graph:
    """
    Genera un grafo de la familia indicada.

    Args:
        kind: matching (size = r aristas disjuntas), cycle, complete, empty o random
        size: r para matching, número de vértices en el resto
        probability: probabilidad de arista (solo random)
        seed: semilla (solo random)

    Los grafos aleatorios usan G(n, p) de networkx: se recorren los pares
    (u, v) con u < v en orden lexicográfico y cada uno se incluye si
    random.Random(seed).random() < p, por lo que el resultado es
    reproducible para una semilla fija.
    """
    try:
        kind = GraphKind(kind) if isinstance(kind, str) else kind
    except ValueError:
        raise InputError(f"Familia de grafos desconocida: {kind}")

    if kind is GraphKind.MATCHING:
        if size < 1:
            raise InputError(f"Un emparejamiento necesita r >= 1 (r={size})")
        return Graph.from_edge_list(2 * size, [(2 * i, 2 * i + 1) for i in range(size)])

    if kind is GraphKind.CYCLE:
        if size < 3:
            raise InputError(f"Un ciclo necesita n >= 3 (n={size})")
        return Graph.from_edge_list(size, [(i, (i + 1) % size) for i in range(size)])

    if size < 0:
        raise InputError(f"Número de vértices negativo: {size}")

    if kind is GraphKind.COMPLETE:
        return Graph.from_networkx(nx.complete_graph(size))

    if kind is GraphKind.EMPTY:
        return Graph.from_edge_list(size, [])

    if probability is None or not 0.0 <= probability <= 1.0:
        raise InputError(f"Probabilidad fuera de [0, 1]: {probability}")
    graph = Graph.from_networkx(nx.gnp_random_graph(size, probability, seed=seed))
    logger.info(f"Grafo aleatorio n={size} p={probability} seed={seed}: {graph.edge_count} aristas")
    return graph
