from __future__ import annotations

import random
import subprocess
import sys
from pathlib import Path

import pytest

from gen import random_convex_bipartite, random_graph, random_intervals, random_labeling, random_leaf_tree, random_outerplanar
from lgraphs import io as lio
from lgraphs.cli import main
from lgraphs.graph import Graph, Labeling, graph_from_leaf_tree


def _write(path: Path, kind: str, payload, names) -> str:
    path.write_text(lio.serialize(lio.Document(kind, payload, tuple(names))))
    return str(path)


def _names(n: int) -> list[str]:
    return [str(i) for i in range(n)]


@pytest.fixture(autouse=True)
def _no_color(monkeypatch):
    monkeypatch.setenv("ELL_COLOR", "0")


def test_search_jumping8_exhausted(tmp_path, capsys):
    g = tmp_path / "j8.graph"
    assert main(["builtin", "jumping8", "--out", str(g)]) == 0
    assert main(["search", str(g)]) == 1
    assert "exhausted: jumping graph" in capsys.readouterr().out


def test_search_jumping8_without_pruning(tmp_path, capsys):
    g = tmp_path / "j8.graph"
    main(["builtin", "jumping8", "--out", str(g)])
    assert main(["search", str(g), "--no-prune"]) == 1
    assert "checked 40320 labelings, 0 non-jumping" in capsys.readouterr().out


def test_search_budget_exceeded(tmp_path, capsys):
    g = tmp_path / "j8.graph"
    main(["builtin", "jumping8", "--out", str(g)])
    assert main(["search", str(g), "--budget", "2"]) == 1
    assert "budget exceeded" in capsys.readouterr().out


def test_search_finds_labeling(tmp_path):
    g = _write(tmp_path / "c5.graph", "graph", Graph.cycle(5), _names(5))
    out = tmp_path / "c5.lab"
    assert main(["search", g, "--out", str(out), "--jobs", "2"]) == 0
    assert main(["verify", g, str(out)]) == 0


def test_verify_k4_identity(tmp_path):
    g = _write(tmp_path / "k4.graph", "graph", Graph.complete(4), "abcd")
    lab = _write(tmp_path / "k4.lab", "labeling", Labeling.identity(4), "abcd")
    assert main(["verify", g, lab]) == 0


def test_verify_reports_one_based_witness(tmp_path, capsys):
    g = _write(tmp_path / "x.graph", "graph", Graph.from_edges(4, [(0, 2), (1, 3)]), "abcd")
    lab = _write(tmp_path / "x.lab", "labeling", Labeling.identity(4), "abcd")
    assert main(["verify", g, lab]) == 1
    assert "(1,2,3,4)" in capsys.readouterr().out


def test_verify_naive_and_fast_agree(tmp_path):
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = _write(tmp_path / "g", "graph", random_graph(rng, n, rng.random()), _names(n))
        lab = _write(tmp_path / "l", "labeling", random_labeling(rng, n), _names(n))
        assert main(["verify", g, lab]) == main(["verify", "--naive", g, lab])


def test_embed_monotone_then_check(tmp_path):
    g = _write(tmp_path / "c6.graph", "graph", Graph.cycle(6), _names(6))
    lab = _write(tmp_path / "c6.lab", "labeling", Labeling.identity(6), _names(6))
    emb = tmp_path / "c6.emb"
    assert main(["embed", "--method", "monotone", g, lab, "--out", str(emb)]) == 0
    assert main(["check", g, str(emb)]) == 0
    lio.parse("embedding", emb.read_text())


def test_embed_monotone_rejects_jumping_labeling(tmp_path):
    g = _write(tmp_path / "x.graph", "graph", Graph.from_edges(4, [(0, 2), (1, 3)]), _names(4))
    lab = _write(tmp_path / "x.lab", "labeling", Labeling.identity(4), _names(4))
    assert main(["embed", "--method", "monotone", g, lab]) == 1


def test_embed_monotone_searches_without_labeling(tmp_path):
    g = _write(tmp_path / "p.graph", "graph", Graph.path(5), _names(5))
    emb = tmp_path / "p.emb"
    assert main(["embed", "--method", "monotone", g, "--out", str(emb)]) == 0
    assert main(["check", g, str(emb)]) == 0


def test_embed_dh_then_check(tmp_path):
    g = _write(tmp_path / "k5.graph", "graph", Graph.complete(5), _names(5))
    emb = tmp_path / "k5.emb"
    assert main(["embed", "--method", "dh", g, "--out", str(emb)]) == 0
    assert main(["check", g, str(emb)]) == 0


def test_embed_dh_rejects_c5(tmp_path, capsys):
    g = _write(tmp_path / "c5.graph", "graph", Graph.cycle(5), _names(5))
    assert main(["embed", "--method", "dh", g]) == 1
    assert "not distance-hereditary" in capsys.readouterr().err


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_embed_leaf_power_then_check(tmp_path, k):
    t = random_leaf_tree(random.Random(k), max_leaves=15)
    tree = _write(tmp_path / "t.tree", "tree", t, _names(t.size))
    leaf_names = [t.leaf_label[v] for v in t.sorted_leaves()]
    g = _write(tmp_path / "t.graph", "graph", graph_from_leaf_tree(t, k), leaf_names)
    emb = tmp_path / "t.emb"
    assert main(["embed", "--method", "4leaf", "--power", str(k), tree, "--out", str(emb)]) == 0
    assert main(["check", g, str(emb)]) == 0


def test_check_reports_violations(tmp_path, capsys):
    g = _write(tmp_path / "e.graph", "graph", Graph(2, frozenset()), "ab")
    emb = tmp_path / "e.emb"
    emb.write_text("embedding\na 2 2 3 1\nb 4 4 1 3\n")
    assert main(["check", g, str(emb)]) == 1
    assert "a b: proper (non-adjacent)" in capsys.readouterr().out


def test_check_unknown_vertex(tmp_path):
    g = _write(tmp_path / "e.graph", "graph", Graph.path(2), "ab")
    emb = tmp_path / "e.emb"
    emb.write_text("embedding\na 2 2 3 1\nz 4 4 1 3\n")
    assert main(["check", g, str(emb)]) == 2


def _label_and_verify(tmp_path, family: str, src: str, graph_file: str) -> None:
    out = tmp_path / "out.lab"
    assert main(["label", "--family", family, src, "--out", str(out)]) == 0
    assert main(["verify", graph_file, str(out)]) == 0


def test_label_interval(tmp_path):
    iv = random_intervals(random.Random(1), 12)
    src = _write(tmp_path / "iv", "intervals", iv, _names(12))
    g = _write(tmp_path / "g", "graph", iv.graph(), _names(12))
    _label_and_verify(tmp_path, "interval", src, g)


def test_label_convex_bipartite(tmp_path):
    cb = random_convex_bipartite(random.Random(2), 6, 6)
    src = _write(tmp_path / "cb", "bipartite", cb, _names(cb.n))
    g = _write(tmp_path / "g", "graph", cb.graph(), _names(cb.n))
    _label_and_verify(tmp_path, "convex-bipartite", src, g)


def test_label_convex_bipartite_gap_exits_2(tmp_path):
    src = tmp_path / "cb"
    src.write_text("bipartite\nblue x 1\nblue y 2\nblue z 3\nred r x z\n")
    assert main(["label", "--family", "convex-bipartite", str(src)]) == 2


def test_label_outerplanar(tmp_path):
    g = _write(tmp_path / "g", "graph", random_outerplanar(random.Random(3), 15), _names(15))
    _label_and_verify(tmp_path, "outerplanar", g, g)


def test_label_outerplanar_rejects_k4(tmp_path):
    g = _write(tmp_path / "g", "graph", Graph.complete(4), _names(4))
    assert main(["label", "--family", "outerplanar", g]) == 1


def test_label_3leaf(tmp_path):
    t = random_leaf_tree(random.Random(4), max_leaves=15)
    src = _write(tmp_path / "t", "tree", t, _names(t.size))
    g = _write(tmp_path / "g", "graph", graph_from_leaf_tree(t, 3), [t.leaf_label[v] for v in t.sorted_leaves()])
    _label_and_verify(tmp_path, "3leaf", src, g)


def test_render(tmp_path):
    g = _write(tmp_path / "k3.graph", "graph", Graph.complete(3), "abc")
    emb, svg = tmp_path / "k3.emb", tmp_path / "k3.svg"
    main(["embed", "--method", "dh", g, "--out", str(emb)])
    assert main(["render", str(emb), "--highlight", "a", "--out", str(svg)]) == 0
    assert svg.read_text().count("<polyline") == 3


def test_render_unknown_highlight(tmp_path):
    emb = tmp_path / "e"
    emb.write_text("embedding\na 2 2 1 1\n")
    assert main(["render", str(emb), "--highlight", "zz"]) == 2


def test_missing_file_exits_2(tmp_path):
    assert main(["search", str(tmp_path / "nope")]) == 2


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad"
    bad.write_text("graph 2 1\na a\n")
    assert main(["search", str(bad)]) == 2
    assert "SELF_LOOP" in capsys.readouterr().err


def test_color_enabled_by_env(tmp_path, capsys, monkeypatch):
    g = _write(tmp_path / "k2.graph", "graph", Graph.path(2), "ab")
    lab = _write(tmp_path / "k2.lab", "labeling", Labeling.identity(2), "ab")
    monkeypatch.setenv("ELL_COLOR", "1")
    main(["verify", g, lab])
    assert "\x1b[32m" in capsys.readouterr().out
    monkeypatch.setenv("ELL_COLOR", "0")
    main(["verify", g, lab])
    assert "\x1b[" not in capsys.readouterr().out


def test_module_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "lgraphs", "builtin", "jumping8"], capture_output=True, text=True, check=True
    )
    assert lio.parse("graph", out.stdout).payload.m == 16
