"""Tests for exported documents and DOT/CSV artifacts."""

import json

import pytest
from pydantic import ValidationError

from cambrian.export import (
    chart_csv,
    classification_export,
    fan_export,
    framework_dot,
    framework_export,
    to_json,
)
from cambrian.geometry.charts import Chart, project
from cambrian.schemas import FanExport, MatrixInput, rational


class TestExports:
    def test_fan_round_trip(self, a2_graph):
        """Cones survive export and reload."""
        document = fan_export(a2_graph)
        reloaded = FanExport.model_validate_json(to_json(document))
        assert reloaded.to_cones() == a2_graph.cones()

    def test_classification_of_g2(self, g2_affine):
        """Affine data and the Phi0 split are exported."""
        document = classification_export(g2_affine)
        assert document.kind == "Affine"
        assert document.affine.delta == [2, 3, 1]
        assert document.xc == [-4, 6]
        assert [1, 2, 0] in document.zero

    def test_classification_of_a2(self, a2):
        """Finite input carries no affine block."""
        payload = json.loads(to_json(classification_export(a2)))
        assert payload["kind"] == "Finite"
        assert payload["affine"] is None

    def test_framework_indices(self, a2_graph):
        """Vertices are numbered in sorted label order and every one is interior."""
        document = framework_export(a2_graph)
        assert [v.index for v in document.vertices] == list(range(5))
        assert document.interior == list(range(5))
        assert document.frontier == []

    def test_output_is_deterministic(self, a2_graph):
        """The same graph gives the same bytes."""
        assert to_json(framework_export(a2_graph)) == to_json(framework_export(a2_graph))
        assert framework_dot(a2_graph) == framework_dot(a2_graph)


class TestArtifacts:
    def test_dot_colours(self, a2_graph):
        """Both-sided vertices are purple and there are five edges."""
        text = framework_dot(a2_graph)
        assert text.startswith("graph dcamb {")
        assert text.count("color=purple") == 5
        assert text.count(" -- ") == 5

    def test_chart_csv(self, a2, a2_graph):
        """One header and one row per projected ray."""
        rows = chart_csv(project(a2, a2_graph.cones(), Chart.SPHERE)).splitlines()
        assert rows[0] == "cone,index,kind,x0"
        assert len(rows) == 11


class TestInputSchema:
    def test_rejects_unknown_fields(self):
        """Matrix documents are strict."""
        with pytest.raises(ValidationError):
            MatrixInput.model_validate({"B": [[0]], "extra": 1})

    def test_rational(self):
        """Exact rationals print as p/q."""
        assert rational(0.5) == "1/2"
        assert rational(3) == "3"
