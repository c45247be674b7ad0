import numpy as np
import pytest

from src.domain.exceptions import InputError
from src.domain.services.graph_generator import generate
from src.domain.value_objects.weight_function import WeightFunction
from src.infrastructure.persistence.text_graph_repository import TextGraphRepository


@pytest.fixture
def repository():
    return TextGraphRepository()


def test_load_graph_with_comments(tmp_path, repository):
    path = tmp_path / "c4.g"
    path.write_text("# ciclo\n4 4\n0 1\n1 2  # arista\n\n2 3\n3 0\n", encoding="utf-8")
    assert repository.load_graph(path) == generate("cycle", 4)


@pytest.mark.parametrize("content, fragment", [
    ("3 2\n0 1\n", "anuncia 2 aristas"),
    ("3 1\n0 3\n", ":2:"),
    ("3 1\n1 1\n", "lazo"),
    ("3 1\n0 x\n", "no entero"),
    ("", "vacío"),
])
def test_malformed_graph_files(tmp_path, repository, content, fragment):
    path = tmp_path / "bad.g"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(InputError) as error:
        repository.load_graph(path)
    assert fragment in str(error.value)


def test_missing_file(tmp_path, repository):
    with pytest.raises(InputError):
        repository.load_graph(tmp_path / "missing.g")


def test_graph_file_round_trip_with_header(tmp_path, repository):
    g = generate("random", 8, 0.4, seed=7)
    path = tmp_path / "r.g"
    assert repository.save_graph(g, path, header="generated: random 8")
    assert path.read_text(encoding="utf-8").startswith("# generated: random 8\n8 ")
    assert repository.load_graph(path) == g


def test_weights_default_to_one(tmp_path, repository):
    path = tmp_path / "w.txt"
    path.write_text("0 0.5\n2 0\n", encoding="utf-8")
    assert repository.load_weights(path, 3).values == (0.5, 1.0, 0.0)


@pytest.mark.parametrize("content", ["0 1\n0 2\n", "5 1\n", "0 -1\n", "0\n", "a b\n"])
def test_malformed_weights(tmp_path, repository, content):
    path = tmp_path / "w.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(InputError):
        repository.load_weights(path, 3)


def test_weights_are_written_exactly(tmp_path, repository):
    w = WeightFunction.of([1 / 3, 0.0, 2.5])
    path = tmp_path / "w.txt"
    assert repository.save_weights(w, path)
    assert repository.load_weights(path, 3) == w


def test_matrix_format(tmp_path, repository):
    m = np.array([[1.0, 1 / 3], [-2.0, 0.0]])
    text = repository.format_matrix(m)
    assert text.splitlines()[0] == "2 2"
    path = tmp_path / "m.txt"
    assert repository.save_matrix(m, path)
    assert np.array_equal(repository.load_matrix(path), m)


def test_matrix_value_count_is_checked(tmp_path, repository):
    path = tmp_path / "m.txt"
    path.write_text("2 2\n1 2 3\n", encoding="utf-8")
    with pytest.raises(InputError):
        repository.load_matrix(path)
