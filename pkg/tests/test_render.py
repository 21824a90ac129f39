import re

import pytest

from figures import FIG1, FIG1_ARCS, FIG1_CHORDS
from ncpb.errors import IoError
from ncpb.partition import validate
from ncpb.render import RenderSpec, chords, render_svg


def arcs_in(svg):
    return {(int(a), int(b)) for a, b in re.findall(r'data-left="(-?\d+)" data-right="(-?\d+)"', svg)}


def chords_in(svg):
    return {frozenset((int(a), int(b))) for a, b in re.findall(r'data-a="(-?\d+)" data-b="(-?\d+)"', svg)}


def test_figure_one_linear():
    svg = render_svg(FIG1, RenderSpec("linear"))
    assert arcs_in(svg) == FIG1_ARCS
    assert svg.count('class="arc"') == 7
    assert svg.count('class="point"') == 16


def test_figure_one_cyclic():
    svg = render_svg(FIG1, RenderSpec("cyclic"))
    assert chords_in(svg) == FIG1_CHORDS
    assert svg.count('class="chord"') == len(chords(FIG1)) == 9


def test_zero_block_arcs():
    p = validate([[1, 2, -1, -2]], 2)
    assert arcs_in(render_svg(p, RenderSpec("linear"))) == {(1, 2), (2, -1), (-1, -2)}


def test_deterministic(tmp_path):
    out = tmp_path / "fig.svg"
    a = render_svg(FIG1, RenderSpec("cyclic", out=str(out)))
    assert out.read_text() == a == render_svg(FIG1, RenderSpec("cyclic"))
    assert "-0.00" not in a


def test_arcs_drawn_above_line():
    svg = render_svg(validate([[1, 2], [-1, -2]], 2), RenderSpec("linear", labels=False))
    # sweep flag 1 from left to right bulges upwards in SVG coordinates
    assert re.search(r"A [\d.]+ [\d.]+ 0 0 1 ", svg)
    assert "<text" not in svg


def test_unwritable(tmp_path):
    with pytest.raises(IoError):
        render_svg(FIG1, RenderSpec("linear", out=str(tmp_path / "missing" / "x.svg")))
