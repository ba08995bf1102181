"""Command line interface: exit codes and printed output."""

import io
import json
import socket
from pathlib import Path

from rexconf.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
WORKED = str(FIXTURES / "worked_example.json")


def test_check_fixture_mode(capsys):
    rc = main(["check", WORKED, "--traces", "5", "--seed", "3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "state counts" in out
    assert "x1" in out and "x2" in out
    assert "engine total" in out
    assert "oracle product" in out and "live)" in out
    assert "ran 5 traces: 0 divergences" in out


def test_check_more_fixtures(capsys):
    rc = main(["check", str(FIXTURES / "big_dfa_example.json"), "--traces", "3", "--seed", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "oracle product   24 reachable (9 live)" in out
    assert "0 divergences" in out


def test_check_random_mode(capsys):
    rc = main(["check", "--random", "5", "--seed", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.strip().endswith("checked 5 random problems: 0 divergences")


def test_check_requires_some_input(capsys):
    rc = main(["check"])
    assert rc == 2
    assert "check needs a problem file or --random N" in capsys.readouterr().err


def test_check_unreadable_file(capsys):
    rc = main(["check", "/nonexistent/problem.json"])
    assert rc == 2
    assert "cannot load problem" in capsys.readouterr().err


def test_check_agrees_on_infeasible_problems(tmp_path, capsys):
    path = tmp_path / "contradiction.json"
    path.write_text(
        json.dumps(
            {
                "alphabet": ["a"],
                "variables": ["x"],
                "constraints": ['match(x, "a") && !match(x, "a")'],
            }
        ),
        encoding="utf-8",
    )
    rc = main(["check", str(path)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "infeasible problem; product automaton agrees" in out


def test_inspect_single_variable(capsys):
    rc = main(["inspect", WORKED, "--var", "x2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "variable x2" in out
    assert "variable x1" not in out
    assert '"abc"' in out and '"abd*"' in out
    assert "R(0) = {" in out
    assert "reachable acceptance values" in out


def test_inspect_all_variables(capsys):
    rc = main(["inspect", WORKED])
    out = capsys.readouterr().out
    assert rc == 0
    assert "variable x1" in out and "variable x2" in out


def test_inspect_unknown_variable(capsys):
    rc = main(["inspect", WORKED, "--var", "zz"])
    assert rc == 2
    assert "unknown variable" in capsys.readouterr().err


def test_repl_transcript(monkeypatch, capsys):
    script = "\n".join(
        [
            "state",
            "append x2 ab",
            "domain x2",
            "suggest x2 2 4",
            "append x2 c",
            "bogus command",
            "undo",
            "quit",
        ]
    )
    monkeypatch.setattr("sys.stdin", io.StringIO(script + "\n"))
    rc = main(["repl", WORKED])
    out = capsys.readouterr().out
    assert rc == 0

    lines = out.splitlines()
    # `state` prints one tab-separated row per variable.
    assert lines[0] == 'x1\t""\topen'
    assert lines[1] == 'x2\t""\topen'
    # A valid append prints every domain, `domain` just the one.
    assert lines[2].startswith("x1: ")
    assert lines[3].startswith("x2: ")
    x2_regex = lines[3].removeprefix("x2: ")
    assert lines[4] == x2_regex
    # Suggestions are JSON-quoted, shortest first; d* contains "" and "d".
    assert lines[5] == '""' and lines[6] == '"d"'
    assert lines[7] == "invalid append"
    assert lines[8] == "unknown command: bogus command"
    # undo prints all domains again.
    assert lines[9].startswith("x1: ") and lines[10].startswith("x2: ")
    assert len(lines) == 11


def test_repl_reports_errors_and_keeps_running(monkeypatch, capsys):
    script = "append zz a\nappend x1 !\nundo\nsuggest x1 0\nstate\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(script))
    rc = main(["repl", WORKED])  # EOF after the script also exits cleanly
    out = capsys.readouterr().out.splitlines()
    assert rc == 0
    assert out[0] == "unknown variable 'zz'"
    assert "!" in out[1]
    assert out[2] == "nothing to undo"
    assert "at least 1" in out[3] or "k" in out[3]
    assert out[4] == 'x1\t""\topen'


def test_repl_rejects_broken_problem_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    rc = main(["repl", str(path)])
    assert rc == 2
    assert capsys.readouterr().err.strip()


def test_serve_refuses_occupied_port(capsys):
    holder = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        holder.bind(("127.0.0.1", 0))
        holder.listen(1)
        port = holder.getsockname()[1]
        rc = main(["serve", "--addr", "127.0.0.1", "--port", str(port)])
    finally:
        holder.close()
    assert rc == 2
    assert "cannot bind" in capsys.readouterr().err
