"""
Integration tests for the catalog command.
"""
import orjson
import pytest

from app.core.constants import EXIT_GATE, EXIT_VALIDATION


@pytest.mark.integration
class TestCatalogCommand:
    """Test cases for `catalog`."""

    def test_characteristic_two(self, runner, cli_app):
        """Test p = 2 lists only cyclic types."""
        result = runner.invoke(cli_app, ["catalog", "--p", "2", "--max-order", "10", "--format", "json"])

        assert result.exit_code == 0
        entries = orjson.loads(result.stdout)
        assert [e["type"] for e in entries] == [f"A{n}" for n in range(1, 10)]
        assert [e["order"] for e in entries] == list(range(2, 11))
        assert all(e["generators"] == [] for e in entries)

    def test_characteristic_three(self, runner, cli_app):
        """Test p = 3 up to order 8 adds D4 after the cyclic types."""
        result = runner.invoke(cli_app, ["catalog", "--p", "3", "--max-order", "8", "--format", "json"])

        assert result.exit_code == 0
        entries = orjson.loads(result.stdout)
        assert [e["type"] for e in entries] == [f"A{n}" for n in range(1, 8)] + ["D4"]
        d4 = entries[-1]
        assert d4["order"] == 8
        assert d4["degrees"] == [4, 4, 6]
        assert d4["relation"] == "X^2 + Y^3 + Y*Z^2"

    def test_text_entries(self, runner, cli_app):
        """Test text entries are blank-line separated key: value blocks."""
        result = runner.invoke(cli_app, ["catalog", "--p", "5", "--max-order", "3"])

        assert result.exit_code == 0
        blocks = result.stdout.strip().split("\n\n")
        assert len(blocks) == 2
        assert blocks[0].startswith("tag: A n=1 p=5 |G|=2")
        assert "relation: X*Y + Z^3" in blocks[1]

    def test_exceptional_listing(self, runner, cli_app):
        """Test the E family at p = 5 stops below E8."""
        result = runner.invoke(
            cli_app, ["catalog", "--p", "5", "--max-order", "200", "--type", "E", "--format", "json"]
        )

        assert result.exit_code == 0
        entries = orjson.loads(result.stdout)
        assert [e["type"] for e in entries] == ["E6", "E7"]
        assert [e["order"] for e in entries] == [24, 48]

    def test_gate(self, runner, cli_app):
        """Test asking for D types at p = 2 is a gate violation."""
        result = runner.invoke(cli_app, ["catalog", "--p", "2", "--type", "D"])

        assert result.exit_code == EXIT_GATE
        assert "requires p >= 3" in result.stderr

    def test_composite_characteristic(self, runner, cli_app):
        """Test a composite p is a validation error."""
        result = runner.invoke(cli_app, ["catalog", "--p", "4"])

        assert result.exit_code == EXIT_VALIDATION
        assert "not prime" in result.stderr

    def test_unknown_format(self, runner, cli_app):
        """Test an unknown output format is rejected."""
        result = runner.invoke(cli_app, ["catalog", "--p", "5", "--format", "xml"])

        assert result.exit_code == EXIT_VALIDATION

    def test_output_dir_round_trip(self, runner, cli_app, tmp_path):
        """Test emitted scheme files classify back to their type."""
        result = runner.invoke(
            cli_app,
            ["catalog", "--p", "5", "--max-order", "8", "--type", "D", "--output-dir", str(tmp_path)],
        )
        assert result.exit_code == 0
        path = tmp_path / "D4_p5.scheme"
        assert path.is_file()

        result = runner.invoke(cli_app, ["classify", "--input", str(path), "--format", "json"])

        assert result.exit_code == 0
        report = orjson.loads(result.stdout)
        assert report["type"] == "D4"
        assert report["order"] == 8

    def test_compute(self, runner, cli_app):
        """Test --compute fills degrees and relation from the invariant ring."""
        result = runner.invoke(
            cli_app, ["catalog", "--p", "5", "--max-order", "4", "--type", "A", "--compute", "--format", "json"]
        )

        assert result.exit_code == 0
        entries = orjson.loads(result.stdout)
        assert [e["degrees"] for e in entries] == [[2, 2, 2], [2, 3, 3], [2, 4, 4]]
        assert entries[0]["relation"] == "X*Z + 4*Y^2"
        assert entries[1]["relation"] == "X^3 + [4,0]*Y*Z"
