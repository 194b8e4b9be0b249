"""
Integration tests for the invariants, classify and verify commands.
"""
import orjson
import pytest

from app.core.constants import EXIT_GATE, EXIT_VALIDATION


@pytest.mark.integration
class TestInvariantsCommand:
    """Test cases for `invariants`."""

    def test_mu3(self, runner, cli_app):
        """Test the presentation of A2 at p = 5."""
        result = runner.invoke(cli_app, ["invariants", "--type", "A", "--n", "2", "--p", "5", "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["degrees"] == [2, 3, 3]
        assert report["relation_degree"] == 6
        assert [g["polynomial"] for g in report["generators"]] == ["u*v", "u^3", "v^3"]
        assert report["normalization"]["type"] == "A2"
        assert report["hilbert"] == []
        assert report["hilbert_matches"] is None

    def test_hilbert_comparison(self, runner, cli_app):
        """Test --hilbert-dmax compares against the hypersurface series."""
        result = runner.invoke(
            cli_app,
            ["invariants", "--type", "D4", "--p", "5", "--dmax", "10", "--hilbert-dmax", "16", "--format", "json"],
        )

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["degrees"] == [4, 4, 6]
        assert len(report["hilbert"]) == 17
        assert report["hilbert"] == report["expected_hilbert"]
        assert report["hilbert_matches"] is True

    def test_from_file(self, runner, cli_app, tmp_path):
        """Test a scheme file is accepted instead of a type."""
        path = tmp_path / "mu4.scheme"
        path.write_text("5 1 1\ngen: [[2,0],[0,3]]\n")

        result = runner.invoke(cli_app, ["invariants", "--input", str(path), "--dmax", "8", "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["degrees"] == [2, 4, 4]
        assert report["normalization"]["type"] == "A3"

    def test_gate(self, runner, cli_app):
        """Test E6 does not exist at p = 3."""
        result = runner.invoke(cli_app, ["invariants", "--type", "E6", "--p", "3"])

        assert result.exit_code == EXIT_GATE

    def test_missing_source(self, runner, cli_app):
        """Test either --input or --type with --p is required."""
        result = runner.invoke(cli_app, ["invariants", "--type", "A", "--n", "2"])

        assert result.exit_code == EXIT_VALIDATION
        assert "--input" in result.stderr


@pytest.mark.integration
class TestClassifyCommand:
    """Test cases for `classify`."""

    def test_quaternion(self, runner, cli_app):
        """Test the catalog D4 at p = 5."""
        result = runner.invoke(cli_app, ["classify", "--type", "D", "--n", "4", "--p", "5", "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["type"] == "D4"
        assert report["order"] == 8
        assert report["abelian"] is False
        assert report["small"] is True
        assert report["conjugator"] is not None

    def test_non_reduced(self, runner, cli_app):
        """Test D5 at p = 3 reports its connected and reduced parts."""
        result = runner.invoke(
            cli_app, ["classify", "--type", "D5", "--p", "3", "--no-normalize", "--format", "json"]
        )

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["type"] == "D5"
        assert report["connected_order"] == 3
        assert report["reduced_order"] == 4
        assert report["conjugator"] is None

    def test_exceptional_note(self, runner, cli_app):
        """Test E types carry a note instead of a conjugator."""
        result = runner.invoke(cli_app, ["classify", "--type", "E6", "--p", "5"])

        assert result.exit_code == 0
        assert "type: E6" in result.stdout
        assert "note: no conjugator is computed for E6" in result.stdout

    def test_bad_modulus(self, runner, cli_app, tmp_path):
        """Test a non-canonical modulus is a validation error."""
        path = tmp_path / "bad.scheme"
        path.write_text("5 2 3\nmodulus: 3,0,1\n")

        result = runner.invoke(cli_app, ["classify", "--input", str(path)])

        assert result.exit_code == EXIT_VALIDATION
        assert "canonical modulus" in result.stderr

    def test_invalid_scheme(self, runner, cli_app, tmp_path):
        """Test a transvection generator is rejected."""
        path = tmp_path / "transvection.scheme"
        path.write_text("5 1 1\ngen: [[1,1],[0,1]]\n")

        result = runner.invoke(cli_app, ["classify", "--input", str(path)])

        assert result.exit_code == EXIT_VALIDATION


@pytest.mark.integration
class TestVerifyCommand:
    """Test cases for `verify`."""

    def test_cyclic_text(self, runner, cli_app):
        """Test the A2 check passes with the + sign."""
        result = runner.invoke(cli_app, ["verify", "--type", "A", "--n", "2", "--p", "5"])

        assert result.exit_code == 0
        assert "checks: relation=XY+Z^3 status=PASS constant=-" in result.stdout
        assert "normal_form: X*Y + Z^3" in result.stdout
        assert "passed: yes" in result.stdout

    def test_dihedral_constant(self, runner, cli_app):
        """Test the D5 generators satisfy X^2 + YZ^2 = Y^4 over F_9."""
        result = runner.invoke(cli_app, ["verify", "--type", "D", "--n", "5", "--p", "3", "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["passed"] is True
        assert report["field"]["k"] == 2
        checks = {c["relation"]: c for c in report["checks"]}
        assert checks["X^2+YZ^2-Y^4"]["status"] == "PASS"
        assert checks["X^2+YZ^2 ~ Y^4"]["constant"] == "[1,0]"
        assert report["normal_form"] == "X^2 + Y^4 + Y*Z^2"

    def test_exceptional(self, runner, cli_app):
        """Test the computed E6 relation vanishes and has type E6."""
        result = runner.invoke(cli_app, ["verify", "--type", "E6", "--p", "5", "--dmax", "14", "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["passed"] is True
        assert [g["degree"] for g in report["generators"]] == [6, 8, 12]
        assert report["normal_form"] == "X^2 + Y^3 + Z^4"

    def test_gate(self, runner, cli_app):
        """Test E8 does not exist at p = 5."""
        result = runner.invoke(cli_app, ["verify", "--type", "E8", "--p", "5"])

        assert result.exit_code == EXIT_GATE

    def test_missing_type(self, runner, cli_app):
        """Test a type is required."""
        result = runner.invoke(cli_app, ["verify", "--p", "5"])

        assert result.exit_code == EXIT_VALIDATION
