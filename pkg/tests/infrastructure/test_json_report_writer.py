import json

import numpy as np

from src.domain.models.bound_direction import BoundDirection
from src.domain.value_objects.bound_report import BoundReport
from src.infrastructure.persistence.json_report_writer import JsonReportWriter


def test_numpy_values_and_reports_are_serialized():
    report = BoundReport("degree_sum", BoundDirection.UPPER, (1.0,), (0.5,), 0.0)
    text = JsonReportWriter().dumps({
        'spectrum': np.array([0.0, 2.0]),
        'count': np.int64(3),
        'report': report
    })
    data = json.loads(text)
    assert data['spectrum'] == [0.0, 2.0]
    assert data['count'] == 3
    assert data['report']['theorem'] == "degree_sum"
    assert data['report']['holds'] is True


def test_write_reports_success_and_failure(tmp_path):
    writer = JsonReportWriter()
    ok, message = writer.write({'a': 1}, tmp_path / "report.json")
    assert ok and "report.json" in message
    assert json.loads((tmp_path / "report.json").read_text(encoding="utf-8")) == {'a': 1}

    ok, message = writer.write({'a': 1}, tmp_path)
    assert not ok and message.startswith("Error")

    ok, _ = writer.write({'a': object()}, tmp_path / "other.json")
    assert not ok
