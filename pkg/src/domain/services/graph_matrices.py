"""Vistas matriciales de un grafo: laplaciano ponderado, su simetrización y adyacencia."""
import numpy as np

from ..entities.graph import Graph
from ..value_objects.weight_function import WeightFunction


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Matriz de adyacencia 0/1, simétrica y con diagonal nula"""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def weighted_laplacian(g: Graph, w: WeightFunction) -> np.ndarray:
    """
    Laplaciano con pesos en los vértices L^w(G):
    (u,u) = suma de w sobre N(u); (u,v) = -w(v) si {u,v} es arista.
    En general no es simétrica.
    """
    w.require_length(g.n)
    a = adjacency_matrix(g)
    weights = w.as_array()
    return np.diag(a @ weights) - a * weights[np.newaxis, :]


def sym_weighted_laplacian(g: Graph, w: WeightFunction) -> np.ndarray:
    """
    Forma simétrica: misma diagonal, -sqrt(w(u) w(v)) en las aristas.
    Para w > 0 es semejante a L^w(G) vía W^(1/2); con ceros es el límite.
    """
    w.require_length(g.n)
    a = adjacency_matrix(g)
    weights = w.as_array()
    roots = np.sqrt(weights)
    return np.diag(a @ weights) - a * np.outer(roots, roots)


def graph_laplacian(g: Graph) -> np.ndarray:
    return weighted_laplacian(g, WeightFunction.uniform(g.n))
