import json

import pytest

from src.application.analysis_service import AnalysisService
from src.domain.exceptions import InputError, ResourceLimitError
from src.domain.services.certificates import cycle_packing_function
from src.domain.services.graph_generator import generate
from src.domain.value_objects.weight_function import WeightFunction
from src.infrastructure.persistence.text_graph_repository import TextGraphRepository


@pytest.fixture
def service():
    return AnalysisService(TextGraphRepository())


def test_matching_report(service, matching2):
    report = service.analyze(matching2)
    assert report['f_vector'] == [4, 4]
    assert report['betti']['values'] == [0, 1]
    assert report['eta'] == {'value': 2, 'exact': True}
    assert report['connectivity_bound'] == {'value': 2, 'vacuous': False}
    first = report['dimensions'][0]
    assert first['spectrum'] == pytest.approx([2.0, 2.0, 4.0, 4.0])
    assert abs(first['independence_bounds']['slack']) < 1e-8
    assert [d['betti_count_bound'] for d in report['dimensions']] == [0, 1]
    assert report['tolerances']['report_tolerance'] == 1e-7


def test_empty_graph_has_acyclic_complex(service):
    report = service.analyze(generate("empty", 4), max_dim=3)
    assert report['betti']['values'] == [0, 0, 0, 0]
    assert report['eta']['exact'] is False
    assert report['connectivity_bound']['vacuous'] is True
    assert report['classical_connectivity_bound'] is None


def test_cycle_with_packing_weights(service):
    g = generate("cycle", 6)
    weights = cycle_packing_function(6).squared()
    report = service.analyze(g, weights, max_dim=2, packing=True)
    assert report['connectivity_bound']['value'] >= 2
    packing = report['packing']
    assert packing['cycle_packing']['eta_bound'] == 2
    assert packing['cycle_packing']['certificate']['valid'] is True
    assert packing['neighborhood_packing']['size'] == 2
    assert packing['star_dominating']['eta_bound'] == 2
    assert report['eta']['value'] >= packing['cycle_packing']['eta_bound']


def test_zero_weights_skip_connectivity_bound(service, matching2):
    report = service.analyze(matching2, WeightFunction.uniform(4, 0.0), max_dim=1)
    assert report['connectivity_bound'] is None


def test_weights_must_match_graph(service, matching2):
    with pytest.raises(InputError):
        service.analyze(matching2, WeightFunction.uniform(3))
    with pytest.raises(InputError):
        service.analyze(matching2, max_dim=-1)


def test_face_cap_from_settings(isolated_settings, matching2):
    isolated_settings.update_complex(max_faces=5)
    with pytest.raises(ResourceLimitError):
        AnalysisService(TextGraphRepository()).analyze(matching2)


def test_analyze_file_and_export(service, graph_file, tmp_path):
    path = graph_file(generate("matching", 2))
    report = service.analyze_file(path, max_dim=1)
    assert report['source'] == str(path)
    ok, _ = service.export_report(report, tmp_path / "report.json")
    assert ok
    data = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert data['betti']['values'] == [0, 1]
