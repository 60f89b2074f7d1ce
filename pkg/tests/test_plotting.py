import matplotlib.image as mpimg
import pytest

from subdub import complement_components, cycle_from_edges, enumerate_ham_cycles, ham_decompositions, subdivided_double
from subdub import generators as G
from subdub.cli import main
from subdub.plotting import circle_layout, save_decomposition_panels, save_figure


def test_circle_layout_follows_cycle_order():
    pos = circle_layout(4, [2, 0, 3, 1])
    assert pos[2] == pytest.approx((0.0, 1.0))
    assert pos[0] == pytest.approx((1.0, 0.0))


def test_counterexample_figure(tmp_path):
    g = G.circulant(18, [1, 8])
    outer = cycle_from_edges(g, range(18))
    assert len(complement_components(g, outer)) == 2
    path = save_figure(tmp_path / "c18.png", g, outer, title="counterexample")
    img = mpimg.imread(path)
    assert img.shape[0] > 100 and img.shape[1] > 100


def test_sd_figure_with_loops_and_parallels(tmp_path):
    s = subdivided_double(G.bouquet(2))
    save_figure(tmp_path / "b2.svg", G.bouquet(2))
    save_figure(tmp_path / "sd_b2.pdf", s.graph, enumerate_ham_cycles(s.graph)[0], s)
    assert (tmp_path / "b2.svg").stat().st_size > 0 and (tmp_path / "sd_b2.pdf").stat().st_size > 0


def test_decomposition_panels(tmp_path):
    g = G.complete(5)
    path = save_decomposition_panels(tmp_path / "k5.png", g, ham_decompositions(g))
    assert mpimg.imread(path).shape[1] > mpimg.imread(path).shape[0]
    assert save_decomposition_panels(tmp_path / "none.png", G.petersen(), []).exists()


@pytest.mark.parametrize("command", ["enum", "verify-paired", "decomp", "export-dot"])
def test_cli_figure_option(tmp_path, capsys, command):
    src = tmp_path / "g.json"
    assert main(["gen", "octahedron", "-o", str(src)]) == 0
    fig = tmp_path / f"{command}.png"
    extra = ["-o", str(tmp_path / "g.dot")] if command == "export-dot" else []
    assert main([command, str(src), "--figure", str(fig), *extra]) in (0, 1)
    capsys.readouterr()
    assert fig.stat().st_size > 0
