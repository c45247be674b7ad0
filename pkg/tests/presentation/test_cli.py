import json
import logging

import numpy as np
import pytest

from src.domain.services import spectral_bounds
from src.domain.services.graph_generator import generate
from src.presentation.cli import EXIT_INPUT, EXIT_OK, EXIT_RESOURCE, EXIT_VIOLATED, main


def test_gen_matching(tmp_path):
    out = tmp_path / "m3.g"
    assert main(["gen", "matching", "3", "-o", str(out)]) == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("# generated: matching 3")
    assert lines[1] == "6 3"
    assert lines[2:] == ["0 1", "2 3", "4 5"]


def test_gen_random_is_deterministic(tmp_path):
    first, second = tmp_path / "a.g", tmp_path / "b.g"
    assert main(["gen", "random", "8", "0.4", "--seed", "7", "-o", str(first)]) == EXIT_OK
    assert main(["gen", "random", "8", "0.4", "--seed", "7", "-o", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_gen_rejects_bad_parameters(capsys):
    assert main(["gen", "random", "8"]) == EXIT_INPUT
    assert "Error de entrada" in capsys.readouterr().err
    assert main(["gen", "cycle", "2"]) == EXIT_INPUT


def test_analyze_prints_json(capsys, graph_file, matching2):
    path = graph_file(matching2)
    assert main(["analyze", str(path), "--max-dim", "1"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report['betti']['values'] == [0, 1]
    assert report['eta']['value'] == 2
    assert 'tolerances' in report


def test_analyze_with_weights_and_packing(tmp_path, capsys, graph_file):
    path = graph_file(generate("cycle", 6))
    weights = tmp_path / "w.txt"
    weights.write_text("0 0\n1 0.5\n2 0.5\n3 0\n4 0.5\n5 0.5\n", encoding="utf-8")
    out = tmp_path / "report.json"
    code = main(["analyze", str(path), "--weights", str(weights), "--max-dim", "2",
                 "--packing", "-o", str(out)])
    assert code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report['connectivity_bound']['value'] >= 2
    assert report['packing']['cycle_packing']['eta_bound'] == 2


def test_analyze_missing_file(tmp_path):
    assert main(["analyze", str(tmp_path / "missing.g")]) == EXIT_INPUT


def test_analyze_resource_limit(tmp_path, graph_file, matching2):
    config = tmp_path / "limits.yaml"
    config.write_text("complex:\n  max_faces: 5\n", encoding="utf-8")
    path = graph_file(matching2)
    assert main(["analyze", str(path), "--config", str(config)]) == EXIT_RESOURCE


def test_verify_all_on_matching(capsys, graph_file, matching2):
    path = graph_file(matching2)
    assert main(["verify-bounds", str(path), "--all"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document['holds'] is True


def test_verify_merris_on_triangle(graph_file, triangle):
    assert main(["verify-bounds", str(graph_file(triangle)), "--theorem", "merris"]) == EXIT_OK


def test_verify_detects_corrupted_laplacian(capsys, graph_file, matching2, monkeypatch):
    original = spectral_bounds.sym_vertex_weighted_k_laplacian

    def corrupted(x, w, k):
        matrix = original(x, w, k)
        return matrix - 10.0 * np.eye(matrix.shape[0])

    monkeypatch.setattr(spectral_bounds, "sym_vertex_weighted_k_laplacian", corrupted)
    path = graph_file(matching2)
    assert main(["verify-bounds", str(path), "--theorem", "independence"]) == EXIT_VIOLATED
    assert "violada en el índice" in capsys.readouterr().err


def test_verify_unknown_theorem(graph_file, matching2):
    assert main(["verify-bounds", str(graph_file(matching2)), "--theorem", "nope"]) == EXIT_INPUT


def test_compound_of_diagonal(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("3 3\n1 0 0\n0 2 0\n0 0 3\n", encoding="utf-8")
    assert main(["compound", str(path), "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "3 3"
    assert np.allclose([[float(x) for x in line.split()] for line in lines[1:]],
                       np.diag([3.0, 4.0, 5.0]))


def test_compound_check_and_bad_order(tmp_path, capsys, rng):
    m = rng.normal(size=(5, 5))
    m = m + m.T
    path = tmp_path / "sym.txt"
    path.write_text("5 5\n" + "\n".join(" ".join(f"{x:.17g}" for x in row) for row in m) + "\n",
                    encoding="utf-8")
    assert main(["compound", str(path), "2", "--check"]) == EXIT_OK
    assert "desviación máxima" in capsys.readouterr().err
    assert main(["compound", str(path), "7"]) == EXIT_INPUT


def test_verbose_flag_enables_info(graph_file, matching2):
    assert main(["verify-bounds", str(graph_file(matching2)), "--theorem", "merris",
                 "--verbose"]) == EXIT_OK
    assert logging.getLogger("src").level == logging.INFO


def test_subcommand_is_required():
    with pytest.raises(SystemExit):
        main([])


def test_verify_writes_document_to_file(tmp_path, graph_file, matching2):
    out = tmp_path / "verify.json"
    assert main(["verify-bounds", str(graph_file(matching2)), "--theorem", "merris",
                 "-o", str(out)]) == EXIT_OK
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document['graphs'][0]['reports'][0]['theorem'] == "merris"


def test_unwritable_output_is_an_input_error(tmp_path, graph_file, matching2):
    out = tmp_path / "missing" / "report.json"
    assert main(["analyze", str(graph_file(matching2)), "--max-dim", "1",
                 "-o", str(out)]) == EXIT_INPUT
