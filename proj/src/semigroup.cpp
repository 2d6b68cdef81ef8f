#include "tilingsg/semigroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tilingsg/error.hpp"

namespace tilingsg {

namespace {

std::uint64_t element_hash(const Patch& p, Vec2 t1) {
  StableHash h;
  h.add(p.hash());
  h.add_int(t1.x);
  h.add_int(t1.y);
  return h.value();
}

}  // namespace

Element Element::from_canonical(Patch patch, Vec2 t1_pos) {
  Element e;
  const std::uint64_t h = element_hash(patch, t1_pos);
  e.body_ = std::make_shared<const Body>(Body{std::move(patch), t1_pos, h});
  return e;
}

const Patch& Element::patch() const {
  if (!body_) throw TilingError(ErrorCode::ZeroProduct, "zero has no patch");
  return body_->patch;
}

Vec2 Element::displacement() const {
  if (!body_) throw TilingError(ErrorCode::ZeroProduct, "zero has no displacement");
  return body_->t1;
}

Tile Element::t1() const { return {*patch().label_at(body_->t1), body_->t1}; }

Tile Element::t2() const { return {*patch().label_at({0, 0}), {0, 0}}; }

bool Element::operator==(const Element& o) const {
  if (body_ == o.body_) return true;
  if (!body_ || !o.body_) return false;
  return body_->hash == o.body_->hash && body_->t1 == o.body_->t1 && body_->patch == o.body_->patch;
}

bool element_less(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (a.patch().size() != b.patch().size()) return a.patch().size() < b.patch().size();
  if (a.patch().tiles() != b.patch().tiles()) return a.patch().tiles() < b.patch().tiles();
  return a.displacement() < b.displacement();
}

Element star(const Element& a) {
  if (a.is_zero()) return a;
  const Vec2 x = a.displacement();
  if (x == Vec2{}) return a;
  return Element::from_canonical(translate_patch(a.patch(), -x), -x);
}

bool leq_structural(const Element& e, const Element& f) {
  if (!e.is_idempotent() || !f.is_idempotent()) throw TilingError(ErrorCode::NotIdempotent, "order is defined on idempotents");
  return e.patch().contains_all(f.patch());
}

bool in_domain(const Element& s, const Window& w) {
  if (s.is_zero()) return false;
  if (!w.covers(s.patch())) {
    throw TilingError(ErrorCode::InsufficientWindow, "patch extends past the window radius");
  }
  return w.contains(s.patch());
}

Window theta_omega(const Element& s, const Window& w) {
  if (s.is_zero()) throw TilingError(ErrorCode::NotInDomain, "zero acts with empty domain");
  if (!in_domain(s, w)) throw TilingError(ErrorCode::NotInDomain, "window is not in U(P, t2)");
  return w.translated(-s.displacement());
}

std::string write_element(const Element& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  auto tile = [&](const Tile& t) { return alphabet.name(t.label) + " " + std::to_string(t.pos.x) + " " + std::to_string(t.pos.y); };
  std::string out = tile(e.t1()) + " |";
  bool first = true;
  for (const Tile& t : e.patch()) {
    out += first ? " " : ", ";
    out += tile(t);
    first = false;
  }
  out += " | " + tile(e.t2());
  return out;
}

std::string element_fingerprint(const Element& e) { return hex64(e.hash()); }

std::string_view shape_family_name(ShapeFamily f) { return f == ShapeFamily::Box ? "box" : "connected"; }

std::vector<std::vector<Vec2>> enumerate_shapes(int radius, std::size_t max_cells, ShapeFamily family) {
  std::vector<std::vector<Vec2>> out;
  if (max_cells == 0 || radius < 0) return out;
  if (family == ShapeFamily::Box) {
    for (int left = 0; left <= radius; ++left)
      for (int right = 0; right <= radius; ++right)
        for (int down = 0; down <= radius; ++down)
          for (int up = 0; up <= radius; ++up) {
            const std::size_t area = static_cast<std::size_t>((left + right + 1) * (down + up + 1));
            if (area > max_cells) continue;
            std::vector<Vec2> cells;
            for (int y = -down; y <= up; ++y)
              for (int x = -left; x <= right; ++x) cells.push_back({x, y});
            out.push_back(std::move(cells));
          }
  } else {
    // Grow connected sets one neighbouring cell at a time, deduplicating by the
    // sorted cell list.
    std::set<std::vector<Vec2>> seen;
    std::vector<std::vector<Vec2>> layer{{Vec2{0, 0}}};
    seen.insert(layer.front());
    constexpr Vec2 steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (!layer.empty()) {
      std::vector<std::vector<Vec2>> next;
      for (const auto& cells : layer) {
        if (cells.size() >= max_cells) continue;
        for (Vec2 c : cells) {
          for (Vec2 d : steps) {
            const Vec2 n = c + d;
            if (chebyshev_norm(n) > radius || std::binary_search(cells.begin(), cells.end(), n)) continue;
            auto grown = cells;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), n), n);
            if (seen.insert(grown).second) next.push_back(std::move(grown));
          }
        }
      }
      layer = std::move(next);
    }
    out.assign(seen.begin(), seen.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

TilingSemigroup::TilingSemigroup(SubstitutionSystem system) : language_(std::move(system)) {}

Element TilingSemigroup::dppc(const Tile& t1, const Patch& p, const Tile& t2) const {
  if (!p.contains(t1)) throw TilingError(ErrorCode::TileNotInPatch, "t1 is not a tile of the patch");
  if (!p.contains(t2)) throw TilingError(ErrorCode::TileNotInPatch, "t2 is not a tile of the patch");
  if (!connected_interior(p)) throw TilingError(ErrorCode::NotConnected, "patch support has disconnected interior");
  if (!language_.admits(p)) throw TilingError(ErrorCode::NotAdmissible, "patch does not occur in the tiling");
  return Element::from_canonical(translate_patch(p, -t2.pos), t1.pos - t2.pos);
}

Element TilingSemigroup::multiply(const Element& a, const Element& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  // Align b so that its t1 coincides with a's t2, then move the result so b's
  // t2 sits at the origin: a's patch shifts by x_b, b's stays put.
  const Vec2 xb = b.displacement();
  const Tile b_t1 = b.t1();
  if (a.t2().label != b_t1.label) return {};
  auto joined = try_patch_union(translate_patch(a.patch(), xb), b.patch());
  if (!joined || !language_.admits(*joined)) return {};
  return Element::from_canonical(*std::move(joined), a.displacement() + xb);
}

bool TilingSemigroup::leq(const Element& e, const Element& f) const {
  if (!e.is_idempotent() || !f.is_idempotent()) throw TilingError(ErrorCode::NotIdempotent, "order is defined on idempotents");
  return multiply(e, f) == e;
}

std::vector<Patch> TilingSemigroup::patterns(int radius, std::size_t max_tiles, ShapeFamily family) const {
  const auto shapes = enumerate_shapes(radius, max_tiles, family);
  const Atlas plaques = atlas(system(), radius);
  std::vector<Patch> out;
  for (const auto& cells : shapes) {
    std::unordered_set<Patch, PatchHash> seen;
    std::vector<Patch> found;
    for (const Patch& canonical : plaques.patches) {
      const Patch plaque = centered_plaque(canonical, radius);
      std::vector<Tile> tiles;
      tiles.reserve(cells.size());
      for (Vec2 c : cells) tiles.push_back({*plaque.label_at(c), c});
      Patch p = Patch::from_sorted(std::move(tiles));
      if (seen.insert(p).second) found.push_back(std::move(p));
    }
    std::sort(found.begin(), found.end(), [](const Patch& a, const Patch& b) { return a.tiles() < b.tiles(); });
    for (auto& p : found) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Element> TilingSemigroup::enumerate_elements(int radius, std::size_t max_tiles, ShapeFamily family,
                                                         std::size_t max_elements) const {
  std::vector<Element> out;
  for (const Patch& p : patterns(radius, max_tiles, family)) {
    for (const Tile& t : p) {
      if (out.size() >= max_elements) throw TilingError(ErrorCode::BudgetExceeded, "element enumeration exceeds budget");
      out.push_back(Element::from_canonical(p, t.pos));
    }
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

std::vector<Element> TilingSemigroup::enumerate_idempotents(int radius, std::size_t max_tiles, ShapeFamily family,
                                                            std::size_t max_elements) const {
  std::vector<Element> out;
  for (Patch& p : patterns(radius, max_tiles, family)) {
    if (out.size() >= max_elements) throw TilingError(ErrorCode::BudgetExceeded, "idempotent enumeration exceeds budget");
    out.push_back(Element::from_canonical(std::move(p), {0, 0}));
  }
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

Element TilingSemigroup::parse_element(std::string_view text) const {
  std::string s(text);
  if (s == "0") return {};
  const auto bar1 = s.find('|');
  const auto bar2 = s.rfind('|');
  if (bar1 == std::string::npos || bar1 == bar2) throw TilingError(ErrorCode::ParseError, "expected `t1 | tiles | t2`");
  Alphabet alpha = alphabet();
  auto parse_tile = [&](const std::string& field) {
    Patch one = read_patch(field, alpha, false);
    if (one.size() != 1) throw TilingError(ErrorCode::ParseError, "marked tile must be a single `label x y`");
    return one.tiles().front();
  };
  std::string body = s.substr(bar1 + 1, bar2 - bar1 - 1);
  std::replace(body.begin(), body.end(), ',', '\n');
  const Patch p = read_patch(body, alpha, false);
  return dppc(parse_tile(s.substr(0, bar1)), p, parse_tile(s.substr(bar2 + 1)));
}

}  // namespace tilingsg
