from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from openbook_kit import interchange
from openbook_kit.cli import main, parse_word_spec
from openbook_kit.errors import WordSpecError
from openbook_kit.generate import build_placement
from openbook_kit.openbook import OpenBook
from openbook_kit.surface import Surface

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_new_disk(capsys):
    code, out, _ = run(capsys, "new", "--genus", "0", "--boundary", "1")
    assert code == 0
    assert interchange.parse(out).payload == OpenBook.trivial(0, 1)


def test_new_with_word(capsys, tmp_path):
    path = tmp_path / "ob.yaml"
    code, _, _ = run(capsys, "new", "--genus", "1", "--boundary", "2", "--word", "+a1", "-o", str(path))
    assert code == 0
    ob = interchange.load(path).payload
    assert (ob.page.genus, ob.page.boundary_count) == (1, 2)
    assert [(t.curve.homology, t.sign) for t in ob.monodromy] == [((1, 0, 0), 1)]


def test_new_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["new", "--genus", "-1", "--boundary", "1"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "new", "--genus", "1", "--boundary", "1", "--word", "+a1\n  -q7")
    assert code == 2
    assert "2:4" in err


def test_word_spec_grammar():
    page = Surface.standard(1, 2)
    word = parse_word_spec("+a1, -b1\n(a1+b1-2d1) +a1  # trailing comment", page)
    assert [(t.curve.id, t.curve.homology, t.sign) for t in word] == [
        ("w1", (1, 0, 0), 1), ("w2", (0, 1, 0), -1), ("w3", (1, 1, -2), 1), ("w1", (1, 0, 0), 1),
    ]
    assert word.twists[1].curve.kind == "stabilization-curve"
    assert parse_word_spec("+d1", page).twists[0].curve.kind == "boundary-parallel"
    assert len(parse_word_spec("", page)) == 0
    spaced = parse_word_spec("+( a1 + b1 - 2d1 )", page)
    assert spaced.twists[0].curve.homology == (1, 1, -2)


@pytest.mark.parametrize("spec, line, column", [
    ("+a1 +a3", 1, 6),
    ("+a1\n+(a1+b1", 2, 2),
    ("+a1 *b1", 1, 5),
    ("+(a1 b1)", 1, 6),
    ("+(a1-a1)", 1, 1),
    ("+a1x", 1, 4),
])
def test_word_spec_errors(spec, line, column):
    with pytest.raises(WordSpecError) as exc:
        parse_word_spec(spec, Surface.standard(1, 2))
    assert (exc.value.line, exc.value.column) == (line, column)


def test_pushoff_1a(capsys, tmp_path):
    cert_path, ob_path = tmp_path / "c.yaml", tmp_path / "o.yaml"
    code, out, _ = run(capsys, "pushoff", str(FIXTURES / "placement-c1a.yaml"),
                       "--cert-out", str(cert_path), "--ob-out", str(ob_path))
    assert code == 0
    assert out.splitlines()[0].startswith("case=1a steps=3 order_free=true")
    cert = interchange.load(cert_path).payload
    ob = interchange.load(ob_path).payload
    assert len(cert.steps) == 3 and ob.sub_binding_marks == tuple(b for _, b in cert.sub_binding_map)


def test_pushoff_mixed_orientation_reports_aux(capsys):
    code, out, _ = run(capsys, "pushoff", str(FIXTURES / "placement-c1bii.yaml"))
    assert code == 0
    assert "case=1bii" in out and "aux=1" in out


def test_pushoff_nonzero_framing(capsys, tmp_path):
    path = tmp_path / "p.yaml"
    text = (FIXTURES / "placement-c1a.yaml").read_text().replace("framing_offset: 0", "framing_offset: -1", 1)
    path.write_text(text)
    code, _, err = run(capsys, "pushoff", str(path))
    assert code == 1
    assert "framing offset must be zero" in err


def test_pushoff_invalid_placement_lists_violations(capsys, tmp_path):
    path = tmp_path / "p.yaml"
    path.write_text(interchange.emit(build_placement(0, [(1, 1)])).replace("class_index: 2", "class_index: 1"))
    code, _, err = run(capsys, "pushoff", str(path))
    assert code == 1
    assert "class-index" in err


def test_pushoff_wrong_kind(capsys):
    code, _, _ = run(capsys, "pushoff", str(FIXTURES / "disk.yaml"))
    assert code == 1


def test_render(capsys, tmp_path):
    out = tmp_path / "c.svg"
    assert run(capsys, "render", str(FIXTURES / "certificate-c1a.yaml"), "-o", str(out))[0] == 0
    first = out.read_bytes()
    run(capsys, "render", str(FIXTURES / "certificate-c1a.yaml"), "-o", str(out))
    assert out.read_bytes() == first
    assert first.count(b'class="stabilization"') == 3
    code, _, err = run(capsys, "render", str(FIXTURES / "sg-transverse-g2.yaml"))
    assert code == 1 and "cannot render" in err


def test_missing_file_is_usage_error(capsys, tmp_path):
    assert run(capsys, "render", str(tmp_path / "nope.yaml"))[0] == 2


def test_check_fixtures(capsys):
    code, out, _ = run(capsys, "check", *map(str, sorted(FIXTURES.glob("*.yaml"))), "--permutations", "all")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_check_tampered(capsys, tmp_path):
    text = (FIXTURES / "certificate-c1bi.yaml").read_text()
    lines = text.splitlines()
    last_row = max(i for i, line in enumerate(lines) if line.startswith("  - [") and line.count(",") == 4)
    cells = lines[last_row].strip("- []").split(", ")
    cells[-1] = str(int(cells[-1]) + 1)
    lines[last_row] = "  - [" + ", ".join(cells) + "]"
    path = tmp_path / "bad.yaml"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    report = json.loads(out)
    assert any(r["detail"] == "ledger replay mismatch" for r in report["results"])


def test_check_seed_env(monkeypatch, capsys):
    monkeypatch.setenv("OPENBOOK_KIT_SEED", "99")
    code, out, _ = run(capsys, "check")
    assert code == 0 and json.loads(out)["seed"] == 99


def test_bad_permutations_flag():
    with pytest.raises(SystemExit) as exc:
        main(["check", "--permutations", "some"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "openbook_kit", "new", "--genus", "2", "--boundary", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert interchange.parse(proc.stdout).payload == OpenBook.trivial(2, 1)
