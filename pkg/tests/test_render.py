import math
import xml.etree.ElementTree as ET

import pytest
from shapely.geometry import Polygon

from coronas.bruteforce import Corona, iter_coronas
from coronas.lattice import Diamond, Hexagon, build_region
from coronas.render import StyleConfig, corona_filename, plane_point, render_corona, write_coronas

NS = {"svg": "http://www.w3.org/2000/svg"}


def polygons(svg_text):
    root = ET.fromstring(svg_text.encode())
    return root.findall(".//svg:polygon", NS)


def parse_points(poly):
    return [tuple(map(float, p.split(","))) for p in poly.get("points").split()]


def test_plane_point():
    assert plane_point((0, 0), 10) == (0.0, 0.0)
    x, y = plane_point((1, 2), 10)
    assert x == pytest.approx(20.0)
    assert y == pytest.approx(2 * math.sqrt(3) / 2 * 10)


def test_polygon_count_and_determinism():
    r = build_region(Diamond(2))
    c = iter_coronas(r)[17]
    text = render_corona(r, c)
    assert text == render_corona(r, c)
    polys = polygons(text)
    assert len(polys) == len(c) + 1
    assert polys[-1].get("class") == "region"


def test_lozenges_do_not_overlap_and_have_correct_shape():
    style = StyleConfig(scale=10.0)
    r = build_region(Hexagon(1))
    c = iter_coronas(r)[100]
    shapes = [Polygon(parse_points(p)) for p in polygons(render_corona(r, c, style))[:-1]]
    unit_triangle = math.sqrt(3) / 4 * style.scale**2
    for s in shapes:
        assert s.area == pytest.approx(2 * unit_triangle, rel=1e-5)
    for a in range(len(shapes)):
        for b in range(a + 1, len(shapes)):
            assert shapes[a].intersection(shapes[b]).area < 1e-6


def test_fill_follows_orientation():
    style = StyleConfig()
    r = build_region(Hexagon(1))
    c = iter_coronas(r)[0]
    for lz, poly in zip(c, polygons(render_corona(r, c, style))):
        assert poly.get("fill") == style.fills[lz.orientation]


def test_invalid_corona_rejected():
    r = build_region(Hexagon(1))
    c = iter_coronas(r)[0]
    with pytest.raises(ValueError):
        render_corona(r, Corona(c.lozenges[1:]))


def test_write_coronas(tmp_path):
    r = build_region(Hexagon(1))
    paths = write_coronas(r, iter_coronas(r)[:3], tmp_path)
    assert [p.name for p in paths] == ["hexagon_1_0.svg", "hexagon_1_1.svg", "hexagon_1_2.svg"]
    assert corona_filename(build_region(Diamond(2)).shape, 7) == "diamond_2_7.svg"
    for p in paths:
        ET.parse(p)
