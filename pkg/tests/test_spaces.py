"""
Tests for the named example spaces, gauge files and JSON models.
"""

import json
from fractions import Fraction

import pytest

from asymgauge.errors import AxiomError, InputError
from asymgauge.gauge import eval_norm, eval_reverse
from asymgauge.rationals import Certificate, ExtendedRational
from asymgauge.serialization import (
    CampaignReport,
    DualNormReport,
    GaugeFile,
    OperatorFile,
    SuiteResult,
    certificate_model,
    parse_model,
)
from asymgauge.spaces import (
    FIXTURE_NAMES,
    fixture,
    from_file,
    linf_sym,
    load_space,
    sup_gauge,
    to_file,
    upper_real,
    weighted_linf,
)


class TestFixtures:
    """Test cases for the fixture constructors."""

    def test_weighted_linf_generators(self):
        """Test e_k followed by -e_k / k."""
        g = weighted_linf(2)
        assert g.generators == (
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
            (Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(-1, 2)),
        )
        assert g.label == "weighted_linf:2"

    def test_linf_sym(self):
        """Test the symmetric l-infinity norm."""
        assert eval_norm(linf_sym(3), [1, -5, 2]) == 5

    def test_sup_gauge_pinned(self):
        """Test the pinned variant: odd n, dimension n - 1."""
        g = sup_gauge(5)
        assert g.dim == 4
        assert g.label == "sup_gauge:5"
        assert eval_norm(g, [-1, -2, -1, -1]) == 0
        with pytest.raises(InputError, match="odd number"):
            sup_gauge(4)

    def test_sup_gauge_augmented(self):
        """Test the zero-augmented variant clips negative functions to 0."""
        g = sup_gauge(4, "augmented")
        assert g.dim == 4
        assert eval_norm(g, [-1, -1, -1, -1]) == 0
        assert eval_reverse(g, [-1, -1, -1, -1]) == 1

    def test_bad_sizes(self):
        """Test size validation."""
        with pytest.raises(InputError, match="integer >= 1"):
            weighted_linf(0)
        with pytest.raises(InputError, match="variant must be one of"):
            sup_gauge(3, "wavy")


class TestFixtureNames:
    """Test cases for fixture name parsing."""

    def test_sized_and_plain(self):
        """Test both name shapes."""
        assert fixture("weighted_linf:3").dim == 3
        assert fixture("upper_real").label == "upper_real"
        assert fixture("sup_gauge_aug:2").dim == 2

    def test_errors(self):
        """Test unknown names and missing or extra sizes."""
        with pytest.raises(InputError, match="unknown fixture"):
            fixture("l2_ball")
        with pytest.raises(InputError, match="needs a size"):
            fixture("weighted_linf")
        with pytest.raises(InputError, match="takes no size"):
            fixture("upper_real:2")

    def test_listing(self):
        """Test that every family is listed."""
        assert "referee_plane" in FIXTURE_NAMES
        assert "weighted_linf:<n>" in FIXTURE_NAMES


class TestGaugeFiles:
    """Test cases for reading and writing gauge files."""

    def test_round_trip(self, tmp_path):
        """Test that a written file reads back to the same gauge."""
        path = tmp_path / "w.json"
        to_file(weighted_linf(2), path)
        assert '"-1/2"' in path.read_text()
        assert from_file(path) == weighted_linf(2)

    def test_malformed_rational(self, tmp_path):
        """Test the field path diagnostic."""
        path = tmp_path / "ball.json"
        path.write_text(json.dumps({"dim": 2, "generators": [["1", "0"], ["0", "1"], ["-1", "1//3"]]}))
        with pytest.raises(InputError, match=r"generators\.2\.1: malformed rational '1//3' \(in .*ball\.json\)"):
            from_file(path)

    def test_axiom_failure(self, tmp_path):
        """Test that an invalid gauge in a file raises AxiomError."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dim": 1, "generators": [[1]]}))
        with pytest.raises(AxiomError, match="not nonnegative"):
            from_file(path)

    def test_unknown_key(self, tmp_path):
        """Test that extra keys are rejected."""
        path = tmp_path / "extra.json"
        path.write_text(json.dumps({"dim": 1, "generators": [[0], [1]], "norm": "l2"}))
        with pytest.raises(InputError, match="norm: Extra inputs are not permitted"):
            from_file(path)

    def test_unreadable(self, tmp_path):
        """Test a missing file."""
        with pytest.raises(InputError, match="cannot read gauge file"):
            from_file(tmp_path / "missing.json")

    def test_load_space(self, tmp_path):
        """Test fixture names, relative paths and inline gauges."""
        to_file(upper_real(), tmp_path / "u.json")
        assert load_space("upper_real") == upper_real()
        assert load_space("u.json", base_dir=tmp_path).generators == upper_real().generators
        inline = GaugeFile(dim=1, generators=[[0], [1]])
        assert load_space(inline).generators == upper_real().generators


class TestModels:
    """Test cases for the report and operator models."""

    def test_operator_file_inline_codomain(self):
        """Test a fixture domain with an inline codomain."""
        text = json.dumps({
            "matrix": [["0", "1"]],
            "domain": "referee_plane",
            "codomain": {"dim": 1, "generators": [[0], [1]]},
        })
        model = parse_model(OperatorFile, text)
        assert model.domain == "referee_plane"
        assert isinstance(model.codomain, GaugeFile)
        assert model.matrix == [[Fraction(0), Fraction(1)]]

    def test_infinite_value_json(self):
        """Test that divergence serializes as "+inf" and reads back."""
        report = DualNormReport(
            functional=[Fraction(-1)],
            flat_norm=ExtendedRational.infinity(),
            certificate=certificate_model(Certificate("ray", (Fraction(-1),))),
            in_dual_cone=False,
            star_norm=Fraction(1),
        )
        text = report.model_dump_json()
        assert json.loads(text)["flat_norm"] == "+inf"
        assert DualNormReport.model_validate_json(text) == report

    def test_campaign_report_round_trip(self):
        """Test that re-serializing a parsed report is the identity."""
        report = CampaignReport(
            seed=42,
            cases=3,
            dim_range=(1, 2),
            suites=[SuiteResult(name="subadditivity", passed=3, failed=0)],
        )
        text = report.model_dump_json(indent=2)
        assert CampaignReport.model_validate_json(text).model_dump_json(indent=2) == text
        assert report.ok


if __name__ == "__main__":
    pytest.main([__file__])
