from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from ..exceptions import InputError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Grafo simple no dirigido sobre los vértices 0..n-1.
    Inmutable: todas las operaciones devuelven grafos nuevos.
    """
    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    _edges: Tuple[Edge, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"Número de vértices negativo: {self.n}")
        if len(self.adjacency) != self.n:
            raise InputError("La adyacencia no tiene una entrada por vértice")
        for v, neighbors in enumerate(self.adjacency):
            if v in neighbors:
                raise InputError(f"Lazo en el vértice {v}")
            for u in neighbors:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise InputError(f"Adyacencia no simétrica entre {v} y {u}")
        edges = tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
        )
        object.__setattr__(self, "_edges", edges)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Edge]) -> 'Graph':
        """Construye el grafo con las aristas dadas, eliminando duplicados"""
        if n < 0:
            raise InputError(f"Número de vértices negativo: {n}")
        neighbors: List[set] = [set() for _ in range(n)]
        for pair in edges:
            u, v = (int(x) for x in pair)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"Arista ({u}, {v}) fuera de rango para n={n}")
            if u == v:
                raise InputError(f"Lazo no permitido en el vértice {u}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(frozenset(s) for s in neighbors))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Convierte un grafo de networkx con nodos 0..n-1"""
        n = graph.number_of_nodes()
        if set(graph.nodes()) != set(range(n)):
            raise InputError("Los nodos deben ser exactamente 0..n-1")
        return cls.from_edge_list(n, graph.edges())

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self._edges)
        return graph

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Aristas (u, v) con u < v en orden lexicográfico"""
        return self._edges

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def max_degree(self) -> int:
        return max((len(s) for s in self.adjacency), default=0)

    def complement(self) -> 'Graph':
        """Grafo complementario: {u,v} es arista si y solo si no lo era"""
        everyone = frozenset(range(self.n))
        return Graph(
            self.n,
            tuple(everyone - self.adjacency[v] - {v} for v in range(self.n))
        )

    def to_dict(self) -> Dict:
        return {'n': self.n, 'edges': [list(e) for e in self._edges]}

    @classmethod
    def from_dict(cls, data: Dict) -> 'Graph':
        return cls.from_edge_list(data['n'], [tuple(e) for e in data['edges']])


def graph_from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    return Graph.from_edge_list(n, edges)


def complement(g: Graph) -> Graph:
    return g.complement()
