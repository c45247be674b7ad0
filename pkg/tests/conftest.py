import itertools
import logging

import numpy as np
import pytest

from src.domain.entities.graph import Graph
from src.domain.services.graph_generator import generate
from src.domain.value_objects.weight_function import WeightFunction
from src.infrastructure.config.settings import CONFIG_ENV_VAR, Settings, get_settings

SEED = 20240611
RANDOM_GRAPH_PROBABILITIES = (0.3, 0.5, 0.7)


def all_labelled_graphs(n):
    """Los 2^C(n,2) grafos etiquetados sobre n vértices"""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edge_list(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])


def random_graphs(count, max_n=8, seed=SEED):
    rng = np.random.default_rng(seed)
    graphs = []
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        p = RANDOM_GRAPH_PROBABILITIES[i % len(RANDOM_GRAPH_PROBABILITIES)]
        graphs.append(generate("random", n, p, seed=int(rng.integers(0, 2**31))))
    return graphs


def weight_variants(n, rng):
    """Pesos uniformes, positivos aleatorios y aleatorios con ceros"""
    positive = WeightFunction.of(rng.uniform(0.2, 2.0, size=n))
    with_zeros = rng.uniform(0.2, 2.0, size=n)
    with_zeros[rng.random(n) < 0.4] = 0.0
    return [WeightFunction.uniform(n), positive, WeightFunction.of(with_zeros)]


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Cada test usa un fichero de configuración temporal y una instancia nueva"""
    monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "settings.yaml"))
    Settings.reset_instance()
    yield get_settings()
    Settings.reset_instance()
    package_logger = logging.getLogger("src")
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def matching2():
    return generate("matching", 2)


@pytest.fixture
def triangle():
    return generate("complete", 3)


@pytest.fixture
def small_corpus():
    """Todos los grafos etiquetados de 4 vértices y 30 aleatorios con n <= 8"""
    return list(all_labelled_graphs(4)) + random_graphs(30)


@pytest.fixture
def graph_file(tmp_path):
    """Escribe un grafo en formato de texto y devuelve la ruta"""
    def write(graph, name="graph.g"):
        path = tmp_path / name
        lines = [f"{graph.n} {graph.edge_count}"] + [f"{u} {v}" for u, v in graph.edges]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
    return write


@pytest.fixture
def full_corpus():
    """Todos los grafos etiquetados de 4 y 5 vértices y 200 aleatorios"""
    return list(all_labelled_graphs(4)) + list(all_labelled_graphs(5)) + random_graphs(200)


@pytest.fixture
def weights_for(rng):
    return lambda n: weight_variants(n, rng)
