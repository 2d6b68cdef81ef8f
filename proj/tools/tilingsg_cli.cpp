#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "tilingsg/error.hpp"
#include "tilingsg/filters.hpp"
#include "tilingsg/render.hpp"
#include "tilingsg/report.hpp"
#include "tilingsg/semigroup.hpp"
#include "tilingsg/substitution.hpp"

using namespace tilingsg;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw TilingError(ErrorCode::ParseError, "cannot write " + out);
  f << text;
}

int finish(const Report& rep, const std::string& out) {
  emit(rep.text(), out);
  std::cerr << rep.count(Status::Pass) << " pass, " << rep.count(Status::Fail) << " fail, "
            << rep.count(Status::Indeterminate) << " indet\n";
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tiling inverse semigroups, tight spectra and germ groupoids"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string system = "chair";
  std::string out;
  std::uint64_t seed = 1;
  app.add_option("--system", system, "builtin name (solid, checkerboard, chair) or config path");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  int radius = 16;
  auto* gen = app.add_subcommand("gen", "window of the fixed point around the origin");
  gen->add_option("--radius", radius)->check(CLI::PositiveNumber);

  int depth = 2;
  std::string label;
  std::string patch_file;
  int cell_px = 12;
  auto* render = app.add_subcommand("render", "SVG of a supertile, a window or a patch file");
  render->add_option("--depth", depth, "supertile depth")->check(CLI::NonNegativeNumber);
  render->add_option("--label", label, "supertile label (default: first)");
  render->add_option("--radius", radius, "render the fixed-point window instead");
  render->add_option("--patch", patch_file, "render a patch or window file instead");
  render->add_option("--cell", cell_px)->check(CLI::PositiveNumber);

  int atlas_r = 2;
  auto* atl = app.add_subcommand("atlas", "patches T(B_r(x)) up to translation");
  atl->add_option("--radius", atlas_r)->check(CLI::NonNegativeNumber);

  SemigroupSuiteConfig sc;
  bool table = false;
  auto* sgc = app.add_subcommand("semigroup-check", "inverse semigroup axioms");
  sgc->add_option("--r", sc.radius)->check(CLI::PositiveNumber);
  sgc->add_option("--n", sc.max_tiles)->check(CLI::PositiveNumber);
  sgc->add_option("--samples", sc.samples)->check(CLI::PositiveNumber);
  sgc->add_flag("--table", table, "dump the enumerated elements instead of checking");

  FiltersSuiteConfig fc;
  std::string char_window;
  auto* flc = app.add_subcommand("filters-check", "filters, characters and the tight action");
  flc->add_option("--r", fc.radius)->check(CLI::PositiveNumber);
  flc->add_option("--n", fc.max_tiles)->check(CLI::PositiveNumber);
  flc->add_option("--radius", fc.window_radius)->check(CLI::PositiveNumber);
  flc->add_option("--windows", fc.windows)->check(CLI::PositiveNumber);
  flc->add_option("--character", char_window, "dump the character of a window file instead of checking");

  GroupoidSuiteConfig gc;
  auto* grc = app.add_subcommand("groupoid-check", "germ groupoid and the isomorphism onto R_punc");
  grc->add_option("--r", gc.element_radius)->check(CLI::PositiveNumber);
  grc->add_option("--n", gc.element_tiles)->check(CLI::PositiveNumber);
  grc->add_option("--class-radius", gc.class_radius)->check(CLI::PositiveNumber);
  grc->add_option("--radius", gc.window_radius)->check(CLI::PositiveNumber);
  grc->add_option("--universe-r", gc.universe_radius)->check(CLI::PositiveNumber);
  grc->add_option("--universe-n", gc.universe_tiles)->check(CLI::PositiveNumber);

  MetricSuiteConfig mc;
  auto* met = app.add_subcommand("metric", "tiling metric on windows");
  met->add_option("--radius", mc.window_radius)->check(CLI::PositiveNumber);
  met->add_option("--samples", mc.samples)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  sc.seed = fc.seed = gc.seed = mc.seed = seed;

  try {
    const SubstitutionSystem s = resolve_system(system);
    if (gen->parsed()) {
      emit(write_window(fixed_point_window(s, radius), s.alphabet()), out);
    } else if (render->parsed()) {
      std::optional<Patch> p;
      if (!patch_file.empty()) {
        std::ifstream f(patch_file);
        if (!f) throw TilingError(ErrorCode::ParseError, "cannot read " + patch_file);
        const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        Alphabet names = s.alphabet();
        p = text.rfind("# radius ", 0) == 0 ? read_window(text, names).patch() : read_patch(text, names, false);
      } else if (render->count("--radius") > 0) {
        p = fixed_point_window(s, radius).patch();
      } else {
        const Label a = label.empty() ? make_label(0) : s.alphabet().find(label).value_or(make_label(255));
        if (label_index(a) >= s.label_count()) throw TilingError(ErrorCode::ParseError, "unknown label " + label);
        p = supertile(s, a, depth);
      }
      emit(render_svg(*p, s.alphabet(), cell_px), out);
    } else if (atl->parsed()) {
      const Atlas a = atlas(s, atlas_r);
      std::string text = "# system: " + s.name() + "\n# radius: " + std::to_string(atlas_r) +
                         "\n# saturation depth: " + std::to_string(a.saturation_depth) +
                         "\n# patches: " + std::to_string(a.patches.size()) + "\n";
      for (const Patch& p : a.patches) text += "\n" + write_patch(centered_plaque(p, atlas_r), s.alphabet());
      emit(text, out);
    } else if (sgc->parsed()) {
      const TilingSemigroup sg(s);
      if (table) {
        std::string text;
        for (const Element& e : sg.enumerate_elements(sc.radius, sc.max_tiles)) {
          text += element_fingerprint(e) + "\t" + write_element(e, s.alphabet()) + "\n";
        }
        emit(text, out);
        return 0;
      }
      return finish(semigroup_suite(sg, sc), out);
    } else if (flc->parsed()) {
      const TilingSemigroup sg(s);
      if (!char_window.empty()) {
        std::ifstream f(char_window);
        if (!f) throw TilingError(ErrorCode::ParseError, "cannot read " + char_window);
        const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        Alphabet names = s.alphabet();
        const IdempotentUniverse u(sg, fc.radius, fc.max_tiles);
        emit(write_character(psi(read_window(text, names), u)), out);
        return 0;
      }
      return finish(filters_suite(sg, fc), out);
    } else if (grc->parsed()) {
      return finish(groupoid_suite(TilingSemigroup(s), gc), out);
    } else if (met->parsed()) {
      return finish(metric_suite(s, mc), out);
    }
  } catch (const TilingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
