from pathlib import Path

import pytest

import tilemealy

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def text(name):
    return (FIXTURES / name).read_text()


def test_vert_finite_direction():
    vert = text("vert.tiles")
    assert tilemealy.least_untileable_n(vert)["n"] == 1
    assert tilemealy.finiteness_bound(2, 1) == 7
    verdict = tilemealy.enumerate(tilemealy.reduce(vert))
    assert verdict["verdict"] == "finite"
    assert verdict["size"] == 1
    assert tilemealy.verify_claim(vert, n=1, suffix_length=3)["pass"]


def test_mono_infinite_direction():
    mono = text("mono.tiles")
    torus = tilemealy.find_torus_tiling(mono)
    assert (torus["tiling"]["width"], torus["tiling"]["height"]) == (1, 1)
    report = tilemealy.verify_lemma1(mono)
    assert report["pass"]
    assert tilemealy.semidecide(mono)["status"] == "infinite_certified"


def test_sink_order_search():
    vert_sink = tilemealy.reduce(text("vert.tiles"), sink=True)
    assert tilemealy.order_search(vert_sink, "_bot", "c")["n"] == 1
    mono_sink = tilemealy.reduce(text("mono.tiles"), sink=True)
    assert tilemealy.order_search(mono_sink, "_bot", "c", max_n=20)["n"] is None


def test_actions_and_equality():
    odometer = text("odometer.mealy")
    assert tilemealy.act(odometer, "a", "1 1 0") == "0 0 1"
    assert tilemealy.dstate(odometer, "a", "1 1 0") == "e"
    assert tilemealy.equal(odometer, "e", "e e")
    assert tilemealy.digest(odometer, "e") == tilemealy.digest(odometer, "e e")
    assert not tilemealy.equal(odometer, "a", "a a")


def test_rectangles_and_rendering():
    stripes = text("stripes.tiles")
    assert tilemealy.nw_conflict(stripes) is None
    assert tilemealy.nw_conflict(text("collision.tiles")) == ("a", "a2")
    result = tilemealy.tile_rectangle(stripes, 3, 2)
    assert result["status"] == "found"
    assert tilemealy.render_svg(stripes, result["tiling"]).startswith("<svg")


def test_errors_and_cli():
    with pytest.raises(tilemealy.ParseError):
        tilemealy.tile_rectangle(text("unknown_color.tiles"), 1, 1)
    with pytest.raises(tilemealy.PreconditionError):
        tilemealy.reduce(text("collision.tiles"))
    code, out, _ = tilemealy.run_cli(["nw-check", str(FIXTURES / "stripes.tiles")])
    assert code == 0
