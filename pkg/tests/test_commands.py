import json

from typer.testing import CliRunner

from sidonlab.main import app

runner = CliRunner()


def _fields(output: str) -> dict:
    return dict(line.split("=", 1) for line in output.splitlines() if "=" in line)


class TestCheck:
    def test_dim7_example_set(self):
        result = runner.invoke(app, ["check", "--dim", "7", "--set", "0,1,2,4,8,16,32,64,15,60,101,87"])
        assert result.exit_code == 0
        fields = _fields(result.stdout)
        assert fields["is_maximal_sidon"] == "true"
        assert fields["size"] == "12"
        assert "d_class" not in fields

    def test_not_sidon(self):
        result = runner.invoke(app, ["check", "--dim", "2", "--set", "0,1,2,3"])
        assert result.exit_code == 0
        assert _fields(result.stdout)["is_sidon"] == "false"

    def test_sum_free_sidon_code(self):
        result = runner.invoke(app, ["check", "--dim", "4", "--set", "1,2,4,8,15"])
        fields = _fields(result.stdout)
        assert fields["is_sum_free"] == "true" and fields["is_sidon"] == "true"
        assert (fields["n"], fields["k"], fields["d_class"], fields["R"]) == ("5", "1", "D5", "3")

    def test_json_and_bits(self):
        result = runner.invoke(app, ["check", "--dim", "3", "--set", "1,2,4", "--json"])
        (record,) = json.loads(result.stdout)
        assert record["report"]["is_sum_free"] is True
        result = runner.invoke(app, ["check", "--dim", "3", "--set", "1,2,4", "--format", "bits"])
        assert _fields(result.stdout)["elements"] == "100 010 001"

    def test_bad_token_exits_2(self):
        result = runner.invoke(app, ["check", "--dim", "3", "--set", "0,1,9"])
        assert result.exit_code == 2
        assert "'9'" in result.stderr

    def test_needs_exactly_one_source(self):
        assert runner.invoke(app, ["check", "--dim", "3"]).exit_code == 2

    def test_witness_file(self, tmp_path):
        path = tmp_path / "w.txt"
        written = runner.invoke(app, ["enumerate", "--dim", "4", "--workers", "1", "--witnesses", str(path)])
        assert written.exit_code == 0
        result = runner.invoke(app, ["check", "--dim", "4", "--file", str(path)])
        assert result.exit_code == 0
        flags = [line for line in result.stdout.splitlines() if line.startswith("is_maximal_sidon=")]
        assert flags and set(flags) == {"is_maximal_sidon=true"}


class TestEnumerate:
    def test_dim6_sizes(self):
        result = runner.invoke(app, ["enumerate", "--dim", "6", "--workers", "1"])
        assert result.exit_code == 0
        histogram = [line for line in result.stdout.splitlines() if ": " in line]
        assert [line.split(":")[0] for line in histogram] == ["8", "9"]
        assert result.stdout.splitlines()[-1].startswith("wall_time=")

    def test_output_is_deterministic_apart_from_wall_time(self):
        runs = [runner.invoke(app, ["enumerate", "--dim", "5", "--workers", "1"]).stdout for _ in range(2)]
        assert [r.splitlines()[:-1] for r in runs] == [runs[0].splitlines()[:-1]] * 2

    def test_w8_refused(self):
        result = runner.invoke(app, ["enumerate", "--dim", "8", "--weight-class", "W8"])
        assert result.exit_code == 2
        assert "allow_long_run" in result.stderr

    def test_json(self):
        result = runner.invoke(app, ["enumerate", "--dim", "5", "--workers", "1", "--json", "--sum-free"])
        payload = json.loads(result.stdout)
        assert payload["family"] == "sum_free_sidon"
        assert max(int(size) for size in payload["size_histogram"]) == 6


class TestBounds:
    def test_bound_rows(self):
        result = runner.invoke(app, ["bounds", "--t-min", "4", "--t-max", "15"])
        assert result.exit_code == 0
        rows = [line.split(",") for line in result.stdout.splitlines()[1:]]
        assert [int(r[1]) for r in rows] == [6, 8, 11, 16, 23, 32, 45, 64, 91, 128, 181, 256]
        assert [int(r[2]) for r in rows[2:]] == [10, 14, 21, 30, 43, 62, 90, 126, 180, 254]

    def test_t16(self):
        result = runner.invoke(app, ["bounds", "--t-min", "16", "--t-max", "16"])
        assert result.stdout.splitlines()[1] == "16,362,360,,362,119,1,2"

    def test_inverted_range(self):
        assert runner.invoke(app, ["bounds", "--t-min", "9", "--t-max", "8"]).exit_code == 2

    def test_cor19_and_proof(self):
        cor19 = runner.invoke(app, ["bounds", "--cor19"])
        assert "24,5793,1929,2," in cor19.stdout
        proof = runner.invoke(app, ["bounds", "--proof", "--t-min", "6", "--t-max", "8"])
        assert proof.stdout.splitlines()[0].startswith("t=6 n=10 ")
        assert all(line.endswith("holds=true") for line in proof.stdout.splitlines())
