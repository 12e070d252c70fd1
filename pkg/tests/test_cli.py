from __future__ import annotations

import json

import pytest

from deltacliques import EngineConfig, parse_link_stream
from deltacliques.cli import (
    EXIT_FORMAT,
    EXIT_IO,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_ORACLE_GUARD,
    EXIT_TRUNCATED,
    format_clique_lines,
    main,
    run_compare,
)

from helpers import FOURLINK_TEXT

FOURLINK_LINES = [
    "0\t9\ta b",
    "1\t7\tb c",
    "2\t7\ta b c",
    "2\t8\ta c",
]


@pytest.fixture
def fourlink_file(tmp_path):
    path = tmp_path / "fourlink.txt"
    path.write_text(FOURLINK_TEXT, encoding="utf-8")
    return path


class TestEnumerateCommand:
    def test_golden_output(self, fourlink_file, capsys):
        code = main(
            ["enumerate", str(fourlink_file), "--delta", "3", "--tmin", "0", "--tmax", "9"]
        )
        assert code == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out == FOURLINK_LINES
        assert out[0] == "0\t9\ta b"

    def test_output_file_and_analytics(self, fourlink_file, tmp_path):
        out = tmp_path / "cliques.tsv"
        stats = tmp_path / "stats.json"
        sizes = tmp_path / "sizes.tsv"
        durations = tmp_path / "durations.tsv"
        disc = tmp_path / "disc.tsv"
        code = main(
            [
                "enumerate",
                str(fourlink_file),
                "--delta",
                "3",
                "--tmin",
                "0",
                "--tmax",
                "9",
                "--out",
                str(out),
                "--stats",
                str(stats),
                "--ccdf-sizes",
                str(sizes),
                "--ccdf-durations",
                str(durations),
                "--discovery-log",
                str(disc),
            ]
        )
        assert code == EXIT_OK
        assert out.read_text().splitlines() == FOURLINK_LINES
        row = json.loads(stats.read_text())
        assert row["result_count"] == 4
        # the stats row counts exactly the lines written to the clique file
        assert row["result_count"] == len(out.read_text().splitlines())
        assert sizes.read_text().splitlines()[0] == "value\tccdf"
        assert durations.read_text().splitlines()[1] == "5\t1.0"
        assert all(len(l.split("\t")) == 3 for l in disc.read_text().splitlines())

    def test_byte_identical_across_runs_and_orders(self, fourlink_file, tmp_path):
        outputs = []
        for name, order in (("a", "dfs"), ("b", "dfs"), ("c", "bfs")):
            out = tmp_path / f"{name}.tsv"
            assert (
                main(
                    [
                        "enumerate",
                        str(fourlink_file),
                        "--delta",
                        "2",
                        "--order",
                        order,
                        "--out",
                        str(out),
                    ]
                )
                == EXIT_OK
            )
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]

    def test_missing_input_is_io_error(self, tmp_path):
        code = main(["enumerate", str(tmp_path / "nope.txt"), "--delta", "1"])
        assert code == EXIT_IO

    def test_malformed_input_is_format_error(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("5 x x\n", encoding="utf-8")
        assert main(["enumerate", str(bad), "--delta", "1"]) == EXIT_FORMAT

    def test_partial_span_flags_rejected(self, fourlink_file):
        assert (
            main(["enumerate", str(fourlink_file), "--delta", "1", "--tmin", "0"])
            == EXIT_FORMAT
        )

    def test_truncation_exit_code(self, fourlink_file):
        code = main(
            ["enumerate", str(fourlink_file), "--delta", "3", "--max-states", "5"]
        )
        assert code == EXIT_TRUNCATED

    def test_figures_rendered(self, fourlink_file, tmp_path):
        figs = tmp_path / "figs"
        code = main(
            [
                "enumerate",
                str(fourlink_file),
                "--delta",
                "3",
                "--out",
                str(tmp_path / "c.tsv"),
                "--figures",
                str(figs),
            ]
        )
        assert code == EXIT_OK
        for name in ("ccdf_sizes.png", "ccdf_durations.png", "discovery.png"):
            f = figs / name
            assert f.exists() and f.stat().st_size > 0


class TestCompareCommand:
    def test_agreement_on_example(self, fourlink_file):
        for delta in ("1", "2", "3"):
            assert main(["compare", str(fourlink_file), "--delta", delta]) == EXIT_OK

    def test_guard_exceeded(self, tmp_path):
        big = tmp_path / "big.txt"
        assert main(["generate", "burst", "--nodes", "10", "--out", str(big)]) == EXIT_OK
        assert main(["compare", str(big), "--delta", "1"]) == EXIT_ORACLE_GUARD

    def test_crippled_engine_is_caught(self, fourlink_file, monkeypatch, capsys):
        # fault injection: the engine silently skips right extensions
        import deltacliques.cli as cli_module

        def faulty_config(args, *, log_discovery):
            return EngineConfig(fault_skip_right_extension=True)

        monkeypatch.setattr(cli_module, "_engine_config", faulty_config)
        code = main(["compare", str(fourlink_file), "--delta", "3"])
        assert code == EXIT_MISMATCH
        printed = capsys.readouterr().out
        assert "only in oracle output" in printed

    def test_run_compare_reports_missing_right_extensions(self, fourlink):
        only_engine, only_oracle = run_compare(
            fourlink, 3, EngineConfig(fault_skip_right_extension=True)
        )
        assert only_oracle  # the oracle keeps what the fault loses
        assert not set(only_oracle) & set(only_engine)


class TestGenerateCommand:
    def test_round_trip_counts(self, tmp_path):
        out = tmp_path / "r.txt"
        code = main(
            [
                "generate",
                "random",
                "--nodes",
                "5",
                "--links",
                "12",
                "--tmin",
                "0",
                "--tmax",
                "20",
                "--seed",
                "7",
                "--out",
                str(out),
            ]
        )
        assert code == EXIT_OK
        s = parse_link_stream(out.read_text())
        assert s.node_count == 5
        assert s.link_count == 12

    def test_chain_to_stdout(self, capsys):
        assert main(["generate", "chain", "--links", "3", "--spacing", "2"]) == EXIT_OK
        body = [
            l
            for l in capsys.readouterr().out.splitlines()
            if not l.startswith("#")
        ]
        assert body == ["0 u0 v0", "2 u0 v0", "4 u0 v0"]

    def test_invalid_params(self, tmp_path):
        code = main(
            ["generate", "random", "--nodes", "6", "--links", "2", "--out", str(tmp_path / "x")]
        )
        assert code == EXIT_FORMAT

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        argv = ["generate", "random", "--nodes", "4", "--links", "8", "--seed", "3"]
        assert main(argv + ["--out", str(a)]) == EXIT_OK
        assert main(argv + ["--out", str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()


class TestStatsCommand:
    def test_jsonl_to_stdout(self, fourlink_file, capsys):
        code = main(
            ["stats", str(fourlink_file), "--delta", "1", "--delta", "2", "--delta", "3"]
        )
        assert code == EXIT_OK
        rows = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
        assert [r["result_count"] for r in rows] == [4, 6, 4]

    def test_jobs_do_not_change_rows(self, fourlink_file, tmp_path):
        serial = tmp_path / "serial.jsonl"
        threaded = tmp_path / "threaded.jsonl"
        base = ["stats", str(fourlink_file), "--delta", "1", "--delta", "2", "--delta", "3"]
        assert main(base + ["--stats", str(serial)]) == EXIT_OK
        assert main(base + ["--jobs", "3", "--stats", str(threaded)]) == EXIT_OK

        def strip_runtime(path):
            rows = [json.loads(l) for l in path.read_text().splitlines()]
            for r in rows:
                r.pop("runtime_seconds")
            return rows

        assert strip_runtime(serial) == strip_runtime(threaded)

    def test_delta_templates(self, fourlink_file, tmp_path):
        tpl = str(tmp_path / "sizes_{delta}.tsv")
        code = main(
            [
                "stats",
                str(fourlink_file),
                "--delta",
                "2",
                "--delta",
                "3",
                "--stats",
                str(tmp_path / "s.jsonl"),
                "--ccdf-sizes",
                tpl,
            ]
        )
        assert code == EXIT_OK
        assert (tmp_path / "sizes_2.tsv").exists()
        assert (tmp_path / "sizes_3.tsv").exists()

    def test_template_required_for_multiple_deltas(self, fourlink_file, tmp_path):
        code = main(
            [
                "stats",
                str(fourlink_file),
                "--delta",
                "2",
                "--delta",
                "3",
                "--ccdf-sizes",
                str(tmp_path / "fixed.tsv"),
                "--stats",
                str(tmp_path / "s.jsonl"),
            ]
        )
        assert code == EXIT_FORMAT


class TestFormatting:
    def test_labels_sorted_within_and_across_lines(self):
        # label order must win over id order
        s = parse_link_stream("1 z y\n1 a z\n")
        from deltacliques import enumerate_maximal

        result, _ = enumerate_maximal(s, 1)
        lines = format_clique_lines(s, result)
        assert lines == sorted(lines)
        for line in lines:
            labels = line.split("\t")[2].split(" ")
            assert labels == sorted(labels)
