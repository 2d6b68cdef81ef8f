#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilingsg/error.hpp"
#include "tilingsg/filters.hpp"
#include "tilingsg/groupoid.hpp"
#include "tilingsg/render.hpp"
#include "tilingsg/report.hpp"

namespace py = pybind11;
using namespace tilingsg;

namespace {

using TileTuple = std::tuple<std::string, int, int>;

std::vector<TileTuple> to_tuples(const Patch& p, const Alphabet& names) {
  std::vector<TileTuple> out;
  for (const Tile& t : p) out.emplace_back(names.name(t.label), t.pos.x, t.pos.y);
  return out;
}

Patch from_tuples(const std::vector<TileTuple>& tiles, const Alphabet& names) {
  std::vector<Tile> out;
  for (const auto& [name, x, y] : tiles) {
    const auto l = names.find(name);
    if (!l) throw TilingError(ErrorCode::ParseError, "unknown label " + name);
    out.push_back({*l, {x, y}});
  }
  return Patch(std::move(out));
}

Tile tile_of(const TileTuple& t, const Alphabet& names) { return *from_tuples({t}, names).begin(); }

TileTuple tuple_of(const Tile& t, const Alphabet& names) { return {names.name(t.label), t.pos.x, t.pos.y}; }

std::string report_text(const Report& r) { return r.text(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tiling inverse semigroups, tight spectra and germ groupoids of substitution tilings.";

  py::register_exception<TilingError>(m, "TilingError", PyExc_ValueError);

  py::class_<SubstitutionSystem>(m, "SubstitutionSystem")
      .def_property_readonly("name", &SubstitutionSystem::name)
      .def_property_readonly("labels", [](const SubstitutionSystem& s) { return s.alphabet().names(); })
      .def_property_readonly("factor", &SubstitutionSystem::factor)
      .def_property_readonly("matrix", &SubstitutionSystem::matrix)
      .def_property_readonly("primitivity_exponent", &SubstitutionSystem::primitivity_exponent)
      .def("to_config", &SubstitutionSystem::to_config);
  m.def("builtin_names", &builtin_names);
  m.def("builtin_system", [](const std::string& name) { return builtin_system(name); }, py::arg("name"));
  m.def("load_system", [](const std::string& config) { return load_system(config); }, py::arg("config"));
  m.def("resolve_system", [](const std::string& name) { return resolve_system(name); }, py::arg("name_or_path"));

  m.def("supertile", [](const SubstitutionSystem& s, const std::string& label, int depth) {
        return to_tuples(supertile(s, tile_of({label, 0, 0}, s.alphabet()).label, depth), s.alphabet());
      }, py::arg("system"), py::arg("label"), py::arg("depth"));
  m.def("is_admissible", [](const SubstitutionSystem& s, const std::vector<TileTuple>& tiles) {
        return is_admissible(s, from_tuples(tiles, s.alphabet()));
      }, py::arg("system"), py::arg("tiles"));
  m.def("atlas_size", [](const SubstitutionSystem& s, int r) { return atlas(s, r).patches.size(); },
        py::arg("system"), py::arg("radius"));

  py::class_<Window>(m, "Window")
      .def_property_readonly("radius", &Window::radius)
      .def("label_at", [](const Window& w, int x, int y) { return w.at({x, y}); })
      .def("fingerprint", &Window::fingerprint)
      .def("translated", [](const Window& w, int x, int y) { return w.translated({x, y}); })
      .def("restricted", &Window::restricted)
      .def("__eq__", &Window::operator==);
  m.def("fixed_point_window", &fixed_point_window, py::arg("system"), py::arg("radius"));
  m.def("window_tiles", [](const Window& w, const SubstitutionSystem& s) { return to_tuples(w.patch(), s.alphabet()); });
  m.def("window_text", [](const Window& w, const SubstitutionSystem& s) { return write_window(w, s.alphabet()); });
  m.def("read_window", [](const std::string& text, const SubstitutionSystem& s) {
        Alphabet names = s.alphabet();
        return read_window(text, names);
      });
  m.def("window_distance", [](const Window& a, const Window& b) {
        const Rational r = window_distance(a, b);
        return std::make_pair(r.num, r.den);
      });
  m.def("detect_period", [](const Window& w) -> std::optional<std::pair<int, int>> {
        const auto v = detect_period(w);
        if (!v) return std::nullopt;
        return std::make_pair(v->x, v->y);
      });
  m.def("render_svg", [](const std::vector<TileTuple>& tiles, const SubstitutionSystem& s, int cell) {
        return render_svg(from_tuples(tiles, s.alphabet()), s.alphabet(), cell);
      }, py::arg("tiles"), py::arg("system"), py::arg("cell_px") = 12);

  py::class_<Element>(m, "Element")
      .def_property_readonly("is_zero", &Element::is_zero)
      .def_property_readonly("is_idempotent", &Element::is_idempotent)
      .def_property_readonly("displacement", [](const Element& e) { return std::make_pair(e.displacement().x, e.displacement().y); })
      .def_property_readonly("size", [](const Element& e) { return e.is_zero() ? 0 : e.patch().size(); })
      .def("fingerprint", &element_fingerprint)
      .def("__eq__", &Element::operator==)
      .def("__hash__", &Element::hash);
  m.def("star", &star);
  m.def("in_domain", &in_domain);
  m.def("theta_omega", &theta_omega);

  py::class_<TilingSemigroup>(m, "TilingSemigroup")
      .def(py::init<SubstitutionSystem>(), py::arg("system"))
      .def_property_readonly("system", &TilingSemigroup::system, py::return_value_policy::reference_internal)
      .def("dppc", [](const TilingSemigroup& sg, const TileTuple& t1, const std::vector<TileTuple>& p, const TileTuple& t2) {
             const Alphabet& a = sg.alphabet();
             return sg.dppc(tile_of(t1, a), from_tuples(p, a), tile_of(t2, a));
           }, py::arg("t1"), py::arg("tiles"), py::arg("t2"))
      .def("multiply", &TilingSemigroup::multiply)
      .def("leq", &TilingSemigroup::leq)
      .def("enumerate_elements", [](const TilingSemigroup& sg, int r, std::size_t n, bool connected) {
             return sg.enumerate_elements(r, n, connected ? ShapeFamily::Connected : ShapeFamily::Box);
           }, py::arg("radius"), py::arg("max_tiles"), py::arg("connected") = false)
      .def("parse_element", &TilingSemigroup::parse_element)
      .def("write_element", [](const TilingSemigroup& sg, const Element& e) { return write_element(e, sg.alphabet()); })
      .def("tiles", [](const TilingSemigroup& sg, const Element& e) { return to_tuples(e.patch(), sg.alphabet()); })
      .def("t1", [](const TilingSemigroup& sg, const Element& e) { return tuple_of(e.t1(), sg.alphabet()); })
      .def("t2", [](const TilingSemigroup& sg, const Element& e) { return tuple_of(e.t2(), sg.alphabet()); });

  py::class_<IdempotentUniverse>(m, "IdempotentUniverse")
      .def(py::init<const TilingSemigroup&, int, std::size_t>(), py::arg("semigroup"), py::arg("radius"),
           py::arg("max_tiles"), py::keep_alive<1, 2>())
      .def("__len__", &IdempotentUniverse::size)
      .def("__getitem__", [](const IdempotentUniverse& u, std::size_t i) {
        if (i >= u.size()) throw py::index_error();
        return u[i];
      });

  py::class_<Filter>(m, "Filter")
      .def_readonly("members", &Filter::members)
      .def("__eq__", &Filter::operator==);
  m.def("xi_T", &xi_T, py::keep_alive<0, 2>());
  m.def("is_filter", &is_filter);
  m.def("is_ultrafilter", [](const Filter& f) { return std::string(verdict_name(is_ultrafilter(f).verdict)); });

  py::class_<Character>(m, "Character")
      .def("__str__", [](const Character& c) {
        std::string s;
        for (Truth t : c.values) s += truth_char(t);
        return s;
      })
      .def("agrees_with", &Character::agrees_with)
      .def("unknown_count", &Character::unknown_count)
      .def("dump", &write_character)
      .def("__eq__", &Character::operator==);
  m.def("psi", &psi, py::keep_alive<0, 2>());
  m.def("theta_tight", py::overload_cast<const Element&, const Character&, const IdempotentUniverse&>(&theta_tight),
        py::keep_alive<0, 3>());

  py::class_<Germ>(m, "Germ")
      .def(py::init([](const Element& s, const Window& w) { return Germ(s, std::make_shared<const Window>(w)); }))
      .def_property_readonly("element", &Germ::element)
      .def_property_readonly("window", &Germ::window, py::return_value_policy::copy)
      .def_property_readonly("image", [](const Germ& g) { return *g.image(); });
  m.def("germ_equiv_lemma", &germ_equiv_lemma);
  m.def("germ_equiv_def", &germ_equiv_def);
  m.def("compose", &compose);
  m.def("invert", &invert);

  py::class_<RpuncPair>(m, "RpuncPair")
      .def_property_readonly("source", [](const RpuncPair& p) { return *p.source(); })
      .def_property_readonly("range", [](const RpuncPair& p) { return *p.range(); })
      .def_property_readonly("displacement", [](const RpuncPair& p) { return std::make_pair(p.displacement().x, p.displacement().y); });
  m.def("alpha", &alpha);
  m.def("alpha_inv", [](const TilingSemigroup& sg, const RpuncPair& p, bool vertical_first) {
        return alpha_inv(sg, p, vertical_first ? PathOrder::VerticalFirst : PathOrder::HorizontalFirst);
      }, py::arg("semigroup"), py::arg("pair"), py::arg("vertical_first") = false);
  m.def("same_pair", &same_pair);

  py::class_<Report>(m, "Report")
      .def_property_readonly("passed", &Report::passed)
      .def("count", [](const Report& r, const std::string& s) {
        return r.count(s == "pass" ? Status::Pass : s == "fail" ? Status::Fail : Status::Indeterminate);
      })
      .def("checks", &Report::checks)
      .def("status", [](const Report& r, const std::string& c) { return std::string(status_name(r.status(c))); })
      .def("text", &report_text);
  m.def("semigroup_suite", [](const TilingSemigroup& sg, int r, std::size_t n, std::uint64_t seed, std::size_t samples) {
        SemigroupSuiteConfig c;
        c.radius = r;
        c.max_tiles = n;
        c.seed = seed;
        c.samples = samples;
        return semigroup_suite(sg, c);
      }, py::arg("semigroup"), py::arg("radius") = 1, py::arg("max_tiles") = 4, py::arg("seed") = 1,
        py::arg("samples") = 10000);
  m.def("filters_suite", [](const TilingSemigroup& sg, int r, std::size_t n, int window_radius, std::size_t windows,
                            std::uint64_t seed) {
        return filters_suite(sg, {r, n, window_radius, windows, seed});
      }, py::arg("semigroup"), py::arg("radius") = 2, py::arg("max_tiles") = 25, py::arg("window_radius") = 16,
        py::arg("windows") = 20, py::arg("seed") = 1);
  m.def("groupoid_suite", [](const TilingSemigroup& sg, int r, std::size_t n, int class_radius, int window_radius,
                             int universe_radius, std::size_t universe_tiles, std::uint64_t seed) {
        return groupoid_suite(sg, {r, n, class_radius, window_radius, universe_radius, universe_tiles, seed});
      }, py::arg("semigroup"), py::arg("radius") = 1, py::arg("max_tiles") = 9, py::arg("class_radius") = 2,
        py::arg("window_radius") = 12, py::arg("universe_radius") = 3, py::arg("universe_tiles") = 49,
        py::arg("seed") = 1);
  m.def("metric_suite", [](const SubstitutionSystem& s, int window_radius, std::size_t samples, std::uint64_t seed) {
        return metric_suite(s, {window_radius, samples, seed});
      }, py::arg("system"), py::arg("window_radius") = 8, py::arg("samples") = 60, py::arg("seed") = 1);
}
