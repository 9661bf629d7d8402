"""Command line: exit codes, output files, serve socket handling."""

import io
import json
import socket

import numpy as np
import pytest
from PIL import Image

from crystalcount import cli, synth
from crystalcount.pipeline import analyze_bytes, result_document, to_wire_json
from crystalcount.starconvex import read_rdm

from conftest import png_bytes


@pytest.fixture()
def blank_file(tmp_path):
    path = tmp_path / "blank.png"
    path.write_bytes(png_bytes(np.full((64, 64), 180, dtype=np.uint8)))
    return path


@pytest.fixture(scope="module")
def phantom_bytes():
    img, truth = synth.ring_phantom(512, 512, 12, seed=3)
    return png_bytes(img.pixels), truth


def run(args):
    return cli.main([str(a) for a in args])


# --- analyze ---


def test_analyze_blank_to_stdout(blank_file, capsys):
    assert run(["analyze", blank_file, "--model", "A", "--um-per-px", "1.0"]) == 0
    out = capsys.readouterr().out
    assert '"seed_count":0' in out
    assert json.loads(out)["file_name"] == "blank.png"


def test_analyze_phantom_counts(tmp_path, phantom_bytes, capsys):
    data, truth = phantom_bytes
    path = tmp_path / "phantom.png"
    path.write_bytes(data)
    assert run(["analyze", path, "--model", "A", "--um-per-px", "1.0"]) == 0
    assert f'"seed_count":{len(truth.rings)}' in capsys.readouterr().out


def test_analyze_json_file_is_exact_document(tmp_path, blank_file):
    out = tmp_path / "r.json"
    assert run(
        ["analyze", blank_file, "--model", "A", "--um-per-px", "2.0", "--json", out]
    ) == 0
    expected = to_wire_json(
        result_document(analyze_bytes(blank_file.read_bytes(), "blank.png", "A", 2.0))
    ).encode()
    assert out.read_bytes() == expected  # no trailing newline, byte for byte


def test_analyze_overlay_written(tmp_path, blank_file):
    overlay = tmp_path / "o.png"
    assert run(
        ["analyze", blank_file, "--model", "A", "--um-per-px", "1", "--overlay", overlay]
    ) == 0
    with Image.open(overlay) as im:
        assert im.size == (64, 64)


def test_analyze_missing_file_exits_2(tmp_path, capsys):
    assert run(["analyze", tmp_path / "no.png", "--model", "A", "--um-per-px", "1"]) == 2
    assert "error" in capsys.readouterr().err


def test_analyze_model_b_needs_rdm(blank_file, capsys):
    assert run(["analyze", blank_file, "--model", "B", "--um-per-px", "1"]) == 2
    assert capsys.readouterr().err


def test_analyze_param_overrides(tmp_path, phantom_bytes, capsys):
    data, _ = phantom_bytes
    img = tmp_path / "p.png"
    img.write_bytes(data)
    params = tmp_path / "params.json"
    params.write_text(json.dumps({"min_area_0or1_hole": 100000}))
    assert run(
        ["analyze", img, "--model", "A", "--um-per-px", "1", "--params", params]
    ) == 0
    assert '"seed_count":0' in capsys.readouterr().out


def test_analyze_bad_params_file(blank_file, tmp_path, capsys):
    params = tmp_path / "params.json"
    params.write_text("[1, 2]")
    assert run(
        ["analyze", blank_file, "--model", "A", "--um-per-px", "1", "--params", params]
    ) == 2
    params.write_text("{not json")
    assert run(
        ["analyze", blank_file, "--model", "A", "--um-per-px", "1", "--params", params]
    ) == 2


# --- batch ---


def test_batch_processes_directory(tmp_path, phantom_bytes, capsys):
    data, truth = phantom_bytes
    src = tmp_path / "in"
    src.mkdir()
    (src / "b_phantom.png").write_bytes(data)
    (src / "a_blank.png").write_bytes(png_bytes(np.full((64, 64), 180, dtype=np.uint8)))
    (src / "c_broken.png").write_bytes(b"\x89PNG\r\n\x1a\nnot really")
    (src / "notes.txt").write_text("not an image")
    out = tmp_path / "out"
    assert run(["batch", src, "--model", "A", "--um-per-px", "1", "--out", out]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert lines == ["a_blank.png 0", f"b_phantom.png {len(truth.rings)}"]
    assert "c_broken.png" in captured.err
    assert sorted(p.name for p in out.iterdir()) == ["a_blank.json", "b_phantom.json"]
    doc = json.loads((out / "b_phantom.json").read_text())
    assert doc["seed_count"] == len(truth.rings)


def test_batch_empty_directory(tmp_path, capsys):
    src = tmp_path / "empty"
    src.mkdir()
    out = tmp_path / "out"
    assert run(["batch", src, "--model", "A", "--um-per-px", "1", "--out", out]) == 0
    assert capsys.readouterr().out == ""
    assert list(out.iterdir()) == []


def test_batch_parallel_matches_serial(tmp_path, capsys):
    src = tmp_path / "in"
    src.mkdir()
    for i in range(4):
        (src / f"im{i}.png").write_bytes(
            png_bytes(np.full((64, 64), 150 + i, dtype=np.uint8))
        )
    out = tmp_path / "out"
    assert run(
        ["batch", src, "--model", "A", "--um-per-px", "1", "--out", out, "--jobs", 4]
    ) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == [f"im{i}.png 0" for i in range(4)]


def test_batch_on_missing_directory(tmp_path, capsys):
    assert run(
        ["batch", tmp_path / "nope", "--model", "A", "--um-per-px", "1", "--out", tmp_path / "o"]
    ) == 2


# --- encode ---


def label_png(tmp_path, labels: np.ndarray):
    path = tmp_path / "labels.png"
    Image.fromarray(labels.astype(np.uint16)).save(path, format="PNG")
    return path


def test_encode_round_trip(tmp_path, capsys):
    lm = synth.star_blob_labels(160, 160, 4, seed=5)
    labels = label_png(tmp_path, lm.labels * 7)  # sparse ids get re-packed
    rdm_path = tmp_path / "maps.rdm"
    assert run(["encode", labels, "--out", rdm_path]) == 0
    m = read_rdm(rdm_path)
    assert m.prob.shape == (160, 160)

    # the encoded map drives model B back to the original count
    img = tmp_path / "gray.png"
    img.write_bytes(png_bytes(np.full((160, 160), 170, dtype=np.uint8)))
    assert run(
        ["analyze", img, "--model", "B", "--um-per-px", "1", "--rdm", rdm_path]
    ) == 0
    assert '"seed_count":4' in capsys.readouterr().out


def test_encode_all_zero_labels(tmp_path):
    labels = label_png(tmp_path, np.zeros((32, 32), dtype=np.uint16))
    rdm_path = tmp_path / "zero.rdm"
    assert run(["encode", labels, "--out", rdm_path]) == 0
    m = read_rdm(rdm_path)
    assert not m.prob.any()
    assert not m.dist.any()


def test_encode_rejects_non_png(tmp_path, capsys):
    path = tmp_path / "labels.png"  # bmp bytes under a png name
    buf = io.BytesIO()
    Image.fromarray(np.zeros((8, 8), dtype=np.uint8)).save(buf, format="BMP")
    path.write_bytes(buf.getvalue())
    assert run(["encode", path, "--out", tmp_path / "x.rdm"]) == 2
    assert capsys.readouterr().err


# --- serve ---


def test_serve_prints_ephemeral_port(tmp_path, monkeypatch, capsys):
    seen = {}

    def fake_run(app, sock):
        seen["sock"] = sock.getsockname()

    monkeypatch.setattr(cli, "_run_uvicorn", fake_run)
    assert run(["serve", "--port", 0, "--state-dir", tmp_path / "s"]) == 0
    out = capsys.readouterr().out
    port = seen["sock"][1]
    assert port != 0
    assert f"listening on http://127.0.0.1:{port}" in out


def test_serve_occupied_port_exits_1(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(cli, "_run_uvicorn", lambda app, sock: None)
    blocker = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    blocker.bind(("127.0.0.1", 0))
    blocker.listen(1)
    port = blocker.getsockname()[1]
    try:
        assert run(["serve", "--port", port, "--state-dir", tmp_path / "s"]) == 1
        assert "cannot bind" in capsys.readouterr().err
    finally:
        blocker.close()
