#include "tilingsg/render.hpp"

#include <array>
#include <sstream>

#include "tilingsg/error.hpp"

namespace tilingsg {

namespace {

constexpr std::array<const char*, 12> kPalette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                                  "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

}  // namespace

std::string render_svg(const Patch& p, const Alphabet& alphabet, int cell_px) {
  if (p.size() == 0) throw TilingError(ErrorCode::InvalidPatch, "cannot render an empty patch");
  const Box b = p.bounds();
  const int w = b.width() * cell_px;
  const int h = b.height() * cell_px;
  auto px = [&](Vec2 c) { return std::pair{(c.x - b.lo.x) * cell_px, (b.hi.y - c.y) * cell_px}; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << ' ' << h << "\">\n";
  for (const Tile& t : p) {
    const auto [x, y] = px(t.pos);
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_px << "\" height=\"" << cell_px << "\" fill=\""
        << kPalette[label_index(t.label) % kPalette.size()] << "\" stroke=\"#333\" stroke-width=\"0.5\"><title>"
        << alphabet.name(t.label) << ' ' << to_string(t.pos) << "</title></rect>\n";
  }
  if (b.contains(Vec2{0, 0})) {
    const auto [x, y] = px({0, 0});
    out << "<circle cx=\"" << x + cell_px / 2.0 << "\" cy=\"" << y + cell_px / 2.0 << "\" r=\"" << cell_px / 4.0
        << "\" fill=\"#000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string write_window(const Window& w, const Alphabet& alphabet) {
  return "# radius " + std::to_string(w.radius()) + "\n" + write_patch(w.patch(), alphabet);
}

Window read_window(std::string_view text, Alphabet& alphabet) {
  constexpr std::string_view tag = "# radius ";
  if (text.substr(0, tag.size()) != tag) throw TilingError(ErrorCode::ParseError, "window text must start with '# radius R'");
  const auto eol = text.find('\n');
  const std::string num(text.substr(tag.size(), eol - tag.size()));
  int radius = 0;
  try {
    std::size_t used = 0;
    radius = std::stoi(num, &used);
    if (used != num.size() || radius < 0) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw TilingError(ErrorCode::ParseError, "bad window radius: " + num);
  }
  const Patch p = read_patch(eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1), alphabet, false);
  if (!ball(radius).contains(p.bounds()) || p.size() != static_cast<std::size_t>((2 * radius + 1) * (2 * radius + 1))) {
    throw TilingError(ErrorCode::InvalidWindow, "window patch must fill B_" + std::to_string(radius));
  }
  return Window(p, radius);
}

}  // namespace tilingsg
