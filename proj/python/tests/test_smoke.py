import pytest

import tilingsg as ts


@pytest.fixture(scope="module")
def chair():
    return ts.TilingSemigroup(ts.builtin_system("chair"))


def test_builtin_systems():
    assert set(ts.builtin_names()) == {"solid", "checkerboard", "chair"}
    solid = ts.builtin_system("solid")
    assert solid.matrix == [[4]]
    assert ts.builtin_system("chair").primitivity_exponent == 2
    assert len(ts.supertile(solid, "u", 2)) == 16


def test_bad_config_raises():
    with pytest.raises(ts.TilingError):
        ts.load_system("name = x\nlabels = a\nfactor = 2\nrule.a = a a a / a a a / a a a\n")


def test_admissibility():
    cb = ts.builtin_system("checkerboard")
    assert not ts.is_admissible(cb, [("b", 0, 0), ("b", 1, 0)])
    assert ts.is_admissible(cb, [("b", 0, 0), ("w", 1, 0)])


def test_solid_product():
    sg = ts.TilingSemigroup(ts.builtin_system("solid"))
    a = sg.dppc(("u", 0, 0), [("u", 0, 0), ("u", 1, 0)], ("u", 1, 0))
    b = sg.dppc(("u", 0, 0), [("u", 0, 0), ("u", 0, 1)], ("u", 0, 1))
    ab = sg.multiply(a, b)
    assert ab == sg.dppc(("u", -1, 0), [("u", -1, 0), ("u", 0, 0), ("u", 0, 1)], ("u", 0, 1))
    assert ab.displacement == (-1, -1)
    assert ts.star(ts.star(ab)) == ab


def test_enumeration_and_text(chair):
    els = chair.enumerate_elements(1, 4)
    assert len(els) == 468
    assert sum(e.is_idempotent for e in els) == 144
    for e in els[:50]:
        assert chair.parse_element(chair.write_element(e)) == e


def test_filters_and_characters(chair):
    u = ts.IdempotentUniverse(chair, 1, 9)
    w = ts.fixed_point_window(chair.system, 8)
    f = ts.xi_T(w, u)
    assert ts.is_filter(f)
    assert ts.is_ultrafilter(f) == "yes"
    c = ts.psi(w, u)
    assert set(str(c)) <= {"0", "1"}
    assert len(c.dump().splitlines()) == len(u)


def test_germs_and_alpha(chair):
    w = ts.fixed_point_window(chair.system, 8)
    s = next(e for e in chair.enumerate_elements(1, 4) if not e.is_idempotent and ts.in_domain(e, w))
    g = ts.Germ(s, w)
    p = ts.alpha(g)
    assert p.displacement == s.displacement
    assert ts.germ_equiv_lemma(ts.alpha_inv(chair, p), g)
    assert ts.germ_equiv_lemma(ts.alpha_inv(chair, p, vertical_first=True), g)
    assert ts.same_pair(ts.alpha(ts.invert(g)), ts.alpha(ts.Germ(ts.star(s), ts.theta_omega(s, w))))


def test_suites_pass():
    solid = ts.TilingSemigroup(ts.builtin_system("solid"))
    r = ts.semigroup_suite(solid, 1, 4)
    assert r.passed
    assert r.count("fail") == 0
    assert r.text() == ts.semigroup_suite(solid, 1, 4).text()
    assert ts.metric_suite(ts.builtin_system("chair"), samples=10).passed


def test_render_and_windows(chair):
    w = ts.fixed_point_window(chair.system, 3)
    tiles = ts.window_tiles(w, chair.system)
    svg = ts.render_svg(tiles, chair.system)
    assert svg.count("<rect") == len(tiles) == 49
    assert ts.read_window(ts.window_text(w, chair.system), chair.system) == w
    assert ts.window_distance(w, w) == (1, 3)
    assert ts.detect_period(ts.fixed_point_window(ts.builtin_system("solid"), 8)) == (1, 0)
