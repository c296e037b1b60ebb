import xml.etree.ElementTree as ET

from planecover.planner import solve
from planecover.render import RenderSpec, to_svg

from conftest import P

NS = "{http://www.w3.org/2000/svg}"


def parse(svg: bytes):
    return ET.fromstring(svg)


def test_single_point():
    root = parse(to_svg([P(1, 1)]))
    assert root.tag == NS + "svg"
    assert len(root.findall(f".//{NS}circle")) == 1
    assert not root.findall(f".//{NS}polyline")


def test_nine_dot_path(nine_dot):
    path = [P(2, 2), P(0, 0), P(0, 3), P(3, 0), P(1, 0)]
    root = parse(to_svg(nine_dot, path))
    poly = root.findall(f".//{NS}polyline")
    assert len(poly) == 1
    assert len(poly[0].get("points").split()) == 5
    assert len(root.findall(f".//{NS}circle")) == 9


def test_coordinates_flip_y():
    root = parse(to_svg([P(0, 0), P(1, 1)], spec=RenderSpec(width=100, height=100, margin=0)))
    c = [(float(e.get("cx")), float(e.get("cy"))) for e in root.iter(NS + "circle")]
    assert c == [(0.0, 100.0), (100.0, 0.0)]


def test_byte_deterministic():
    pts = [P(k, (k * 7) % 11) for k in range(20)]
    sol = solve(pts)
    spec = RenderSpec(label_roles=True)
    assert to_svg(pts, sol.path, sol.traces, spec) == to_svg(pts, sol.path, sol.traces, spec)


def test_traces_draw_slabs_and_aux():
    from fixtures import CASE_WINDOWS
    from fractions import Fraction
    pts = [P(x, Fraction(y)) for x, y in CASE_WINDOWS["C2.1"]]
    sol = solve(pts)
    root = parse(to_svg(pts, sol.path, sol.traces, RenderSpec(label_roles=True)))
    groups = {g.get("class"): g for g in root.iter(NS + "g")}
    assert len(groups["slabs"]) >= 2
    assert len(groups["aux"]) == len(sol.traces[0].aux_points) >= 1
    assert {t.text for t in groups["labels"]} >= {"l", "r"}
    plain = parse(to_svg(pts, sol.path, sol.traces, RenderSpec(show_aux=False)))
    assert "slabs" not in {g.get("class") for g in plain.iter(NS + "g")}
