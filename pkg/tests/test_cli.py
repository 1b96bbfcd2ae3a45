from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from stacktree.cli import main
from stacktree.config import load_config, parse_config
from stacktree.errors import ConfigError
from stacktree.layout import EngineConfig
from stacktree.metrics import MetricsMode

CORPUS = Path(__file__).parent / "corpus"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path: Path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_bracketed_json(capsys):
    code, out, err = run(capsys, "render", "--syntax", "bracketed", "--format", "json", str(CORPUS / "john.brk"))
    assert code == 0
    data = json.loads(out)
    assert [t["lines"] for t in data["texts"]] == [["S"], ["NP"], ["John"], ["VP"], ["runs"]]
    assert err == ""


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO('leaf "Ä"\ntree\n'.encode())))
    code, out, _ = run(capsys, "render", "--format", "json")
    assert code == 0
    assert json.loads(out)["texts"][0]["lines"] == ["Ä"]


def test_underflow_exit_code(tmp_path, capsys):
    code, out, err = run(capsys, "render", write(tmp_path, "x.tree", 'branch 2 "X"'))
    assert code == 2
    assert out == ""
    assert "Underflow" in err and "command 0" in err and "line 1" in err


def test_syntax_error_exit_code(tmp_path, capsys):
    code, out, err = run(capsys, "render", write(tmp_path, "x.tree", 'branch x "S"'))
    assert code == 1
    assert "1:8" in err


def test_bracketed_syntax_error(tmp_path, capsys):
    code, _, _ = run(capsys, "render", "--syntax", "bracketed", write(tmp_path, "x.brk", "(S (NP x)"))
    assert code == 1


def test_missing_input_is_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "render", str(tmp_path / "missing.tree"))
    assert code == 3
    assert "I/O" in err


def test_bad_utf8_is_io_error(tmp_path, capsys):
    path = tmp_path / "bad.tree"
    path.write_bytes(b'leaf "\xff"\ntree\n')
    code, _, _ = run(capsys, "render", str(path))
    assert code == 3


def test_unwritable_output(tmp_path, capsys):
    code, _, _ = run(capsys, "render", "-o", str(tmp_path / "no" / "such" / "dir.svg"), str(CORPUS / "binary.tree"))
    assert code == 3


def test_usage_error(capsys):
    code, _, _ = run(capsys, "render", "--format", "png")
    assert code == 1


def test_tex_extended_seven_way(tmp_path, capsys):
    src = 'leaf "x" ' * 7 + 'branch 7 "P" tree'
    path = write(tmp_path, "seven.tree", src)
    code, _, err = run(capsys, "render", "--extended", "--format", "tex", path)
    assert code == 2
    assert "UnrepresentableSlope" in err
    code, _, _ = run(capsys, "render", "--format", "tex", path)
    assert code == 2  # strict: arity 7 unsupported
    code, out, _ = run(capsys, "render", "--extended", "--format", "svg", path)
    assert code == 0 and out.startswith("<?xml")


def test_residual_stack_and_allow_partial(tmp_path, capsys):
    path = write(tmp_path, "partial.tree", 'leaf "a" tree leaf "b"')
    code, _, err = run(capsys, "render", path)
    assert code == 2 and "ResidualStack" in err
    code, out, err = run(capsys, "render", "--allow-partial", "--format", "ascii", path)
    assert code == 0
    assert out == "a\n"
    assert "warning" in err


def test_diagnostics_go_to_stderr(tmp_path, capsys):
    path = write(tmp_path, "clamp.tree", 'leaf "" leaf "" branch 2 "" tree')
    code, out, err = run(capsys, "render", "--format", "json", path)
    assert code == 0
    json.loads(out)
    assert "clamped" in err


def test_stacked_forest(capsys):
    code, out, _ = run(capsys, "render", "--format", "json", str(CORPUS / "forest.tree"))
    assert code == 0
    data = json.loads(out)
    assert len(data["texts"]) == 1 + 3 + 3
    assert data["texts"][1]["y"] == 12 + 12  # second tree starts after the first and one gap


def test_separate_files(tmp_path, capsys):
    template = str(tmp_path / "tree-{index}.svg")
    code, out, _ = run(capsys, "render", "--multi-tree", "separate-files", "-o", template, str(CORPUS / "forest.tree"))
    assert code == 0 and out == ""
    assert sorted(p.name for p in tmp_path.iterdir()) == ["tree-0.svg", "tree-1.svg", "tree-2.svg"]


def test_separate_files_needs_template(tmp_path, capsys):
    code, _, err = run(capsys, "render", "--multi-tree", "separate-files", "-o", str(tmp_path / "x.svg"), str(CORPUS / "forest.tree"))
    assert code == 1
    assert "{index}" in err


def test_qobitex_format(capsys):
    code, out, _ = run(capsys, "render", "--format", "qobitex", str(CORPUS / "binary.tree"))
    assert code == 0
    assert out == "\\leaf{NP}\n\\leaf{VP}\n\\branch{2}{S}\n\\tree\n"


def test_merge_preterminals_flag(capsys):
    code, out, _ = run(capsys, "render", "--syntax", "bracketed", "--merge-preterminals", "--format", "json", str(CORPUS / "john.brk"))
    assert code == 0
    assert [t["lines"] for t in json.loads(out)["texts"]] == [["S"], ["NP", "John"], ["VP", "runs"]]


def test_font_size_flag(tmp_path, capsys):
    path = write(tmp_path, "a.tree", 'leaf "AB" tree')
    _, out, _ = run(capsys, "render", "--format", "json", "--font-size", "20", path)
    assert json.loads(out)["width"] == 24


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = write(tmp_path, "c.conf", "font_size = 12  # bigger\nex_pt = 5.0\njson_precision = 2\n")
    path = write(tmp_path, "a.tree", 'leaf "A" branch 1 "B" tree')
    _, out, _ = run(capsys, "render", "--format", "json", "--config", cfg, path)
    data = json.loads(out)
    assert data["texts"][0]["height"] == pytest.approx(14.4)
    (seg,) = data["segments"]
    assert seg["y1"] - seg["y2"] == pytest.approx(10)
    assert '"width": 7.20' in out
    _, out, _ = run(capsys, "render", "--format", "json", "--config", cfg, "--ex-pt", "1", path)
    (seg,) = json.loads(out)["segments"]
    assert seg["y1"] - seg["y2"] == pytest.approx(2)


def test_bad_config_exit_code(tmp_path, capsys):
    cfg = write(tmp_path, "c.conf", "bogus = 1\n")
    code, _, err = run(capsys, "render", "--config", cfg, str(CORPUS / "binary.tree"))
    assert code == 1
    assert "line 1" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stacktree", "render", "--format", "ascii", str(CORPUS / "binary.tree")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "S" in proc.stdout


# config parsing ------------------------------------------------------------


def test_config_font_size():
    _, metrics, _ = parse_config("font_size = 12\n")
    assert metrics.font_size == 12


def test_config_defaults():
    engine, metrics, style = parse_config("# nothing\n\n")
    assert engine == EngineConfig()
    assert metrics.ex_pt == 4.3
    assert style.json_precision == 4


def test_config_all_sections():
    engine, metrics, style = parse_config(
        "strict = false\nmin_branch_width = 2\nallow_partial = yes\n"
        "char_width_factor = 0.5\nline_height_factor = 1.5\n"
        "pt_per_px = 0.75\nascii_col_width_pt = 5\nascii_row_height_pt = 10\n"
    )
    assert (engine.strict, engine.min_branch_width, engine.allow_partial) == (False, 2.0, True)
    assert (metrics.char_width_factor, metrics.line_height_factor) == (0.5, 1.5)
    assert (style.pt_per_px, style.ascii_col_width_pt, style.ascii_row_height_pt) == (0.75, 5, 10)


def test_config_width_table():
    _, metrics, _ = parse_config("width.i = 0.25\nwidth.U+0023 = 1.0\n")
    assert metrics.mode is MetricsMode.WIDTH_TABLE
    assert metrics.width_table == {"i": 0.25, "#": 1.0}
    _, metrics, _ = parse_config("metrics_mode = mono\nwidth.i = 0.25\n")
    assert metrics.mode is MetricsMode.MONO


@pytest.mark.parametrize(
    "text, line",
    [
        ("bogus = 1\n", 1),
        ("\nfont_size = big\n", 2),
        ("font_size\n", 1),
        ("strict = maybe\n", 1),
        ("metrics_mode = serif\n", 1),
        ("width.ab = 1\n", 1),
        ("font_size = -3\n", None),
    ],
)
def test_config_errors(text, line):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == line


def test_load_config(tmp_path):
    path = write(tmp_path, "c.conf", "ex_pt = 5.0\n")
    _, metrics, _ = load_config(path)
    assert metrics.ex_pt == 5.0
