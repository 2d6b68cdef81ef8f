#include "tilingsg/geometry.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "tilingsg/error.hpp"

namespace tilingsg {

std::string to_string(Vec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) intern(n);
}

Label Alphabet::intern(std::string_view name) {
  if (auto found = find(name)) return *found;
  if (names_.size() >= 255) throw TilingError(ErrorCode::ParseError, "too many labels");
  Label l = make_label(static_cast<unsigned>(names_.size()));
  names_.emplace_back(name);
  index_.emplace(std::string(name), l);
  return l;
}

std::optional<Label> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Alphabet::name(Label l) const {
  if (label_index(l) >= names_.size()) throw TilingError(ErrorCode::ParseError, "label out of range");
  return names_[label_index(l)];
}

Box ball(int radius) { return {{-radius, -radius}, {radius, radius}}; }

Patch::Patch(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw TilingError(ErrorCode::InvalidPatch, "patch must be nonempty");
  std::sort(tiles_.begin(), tiles_.end());
  for (std::size_t i = 1; i < tiles_.size(); ++i) {
    if (tiles_[i].pos == tiles_[i - 1].pos) {
      throw TilingError(ErrorCode::InvalidPatch, "two tiles share cell " + to_string(tiles_[i].pos));
    }
  }
}

Patch Patch::from_sorted(std::vector<Tile> tiles) {
  Patch p;
  p.tiles_ = std::move(tiles);
  return p;
}

std::optional<Label> Patch::label_at(Vec2 cell) const {
  auto it = std::lower_bound(tiles_.begin(), tiles_.end(), cell,
                             [](const Tile& t, Vec2 c) { return t.pos < c; });
  if (it == tiles_.end() || it->pos != cell) return std::nullopt;
  return it->label;
}

bool Patch::contains(const Tile& t) const {
  auto l = label_at(t.pos);
  return l && *l == t.label;
}

bool Patch::contains_all(const Patch& other) const {
  if (other.size() > size()) return false;
  auto it = tiles_.begin();
  for (const Tile& t : other.tiles_) {
    it = std::lower_bound(it, tiles_.end(), t.pos, [](const Tile& a, Vec2 c) { return a.pos < c; });
    if (it == tiles_.end() || *it != t) return false;
  }
  return true;
}

Box Patch::bounds() const {
  Box b{tiles_.front().pos, tiles_.front().pos};
  for (const Tile& t : tiles_) {
    b.lo.x = std::min(b.lo.x, t.pos.x);
    b.hi.x = std::max(b.hi.x, t.pos.x);
  }
  b.lo.y = tiles_.front().pos.y;
  b.hi.y = tiles_.back().pos.y;
  return b;
}

int Patch::diameter() const {
  Box b = bounds();
  return std::max(b.width(), b.height());
}

std::uint64_t Patch::hash() const {
  StableHash h;
  for (const Tile& t : tiles_) {
    h.add((static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.pos.x)) << 32) ^
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.pos.y)) << 8) ^ label_index(t.label));
  }
  return h.value();
}

Patch translate_patch(const Patch& p, Vec2 v) {
  std::vector<Tile> out(p.tiles());
  for (Tile& t : out) t.pos += v;
  return Patch::from_sorted(std::move(out));
}

bool patches_compatible(const Patch& p, const Patch& q) {
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() && b != q.end()) {
    if (a->pos < b->pos) {
      ++a;
    } else if (b->pos < a->pos) {
      ++b;
    } else {
      if (a->label != b->label) return false;
      ++a;
      ++b;
    }
  }
  return true;
}

std::optional<Patch> try_patch_union(const Patch& p, const Patch& q) {
  std::vector<Tile> out;
  out.reserve(p.size() + q.size());
  auto a = p.begin();
  auto b = q.begin();
  while (a != p.end() && b != q.end()) {
    if (a->pos < b->pos) {
      out.push_back(*a++);
    } else if (b->pos < a->pos) {
      out.push_back(*b++);
    } else {
      if (a->label != b->label) return std::nullopt;
      out.push_back(*a);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, p.end());
  out.insert(out.end(), b, q.end());
  return Patch::from_sorted(std::move(out));
}

Patch patch_union(const Patch& p, const Patch& q) {
  auto u = try_patch_union(p, q);
  if (!u) throw TilingError(ErrorCode::IncompatibleOverlap, "patches disagree on a shared cell");
  return *std::move(u);
}

bool connected_interior(const Patch& p) {
  const Box b = p.bounds();
  const int w = b.width();
  const int h = b.height();
  std::vector<std::uint8_t> state(static_cast<std::size_t>(w) * h, 0);  // 1 occupied, 2 visited
  auto idx = [&](Vec2 c) { return static_cast<std::size_t>((c.y - b.lo.y) * w + (c.x - b.lo.x)); };
  for (const Tile& t : p) state[idx(t.pos)] = 1;

  std::vector<Vec2> stack{p.tiles().front().pos};
  state[idx(stack.back())] = 2;
  std::size_t seen = 1;
  constexpr Vec2 steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  while (!stack.empty()) {
    Vec2 c = stack.back();
    stack.pop_back();
    for (Vec2 d : steps) {
      Vec2 n = c + d;
      if (!b.contains(n) || state[idx(n)] != 1) continue;
      state[idx(n)] = 2;
      ++seen;
      stack.push_back(n);
    }
  }
  return seen == p.size();
}

std::vector<Vec2> find_occurrences(const Patch& pattern, const Patch& host) {
  const Box hb = host.bounds();
  const Box pb = pattern.bounds();
  std::vector<Vec2> found;
  if (pb.width() > hb.width() || pb.height() > hb.height()) return found;

  const int w = hb.width();
  std::vector<int> grid(static_cast<std::size_t>(w) * hb.height(), -1);
  for (const Tile& t : host) {
    grid[static_cast<std::size_t>((t.pos.y - hb.lo.y) * w + (t.pos.x - hb.lo.x))] = static_cast<int>(label_index(t.label));
  }
  // v ranges so that the pattern's box lands inside the host's box.
  for (int vy = hb.lo.y - pb.lo.y; vy <= hb.hi.y - pb.hi.y; ++vy) {
    for (int vx = hb.lo.x - pb.lo.x; vx <= hb.hi.x - pb.hi.x; ++vx) {
      bool ok = true;
      for (const Tile& t : pattern) {
        const int gx = t.pos.x + vx - hb.lo.x;
        const int gy = t.pos.y + vy - hb.lo.y;
        if (grid[static_cast<std::size_t>(gy * w + gx)] != static_cast<int>(label_index(t.label))) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back({vx, vy});
    }
  }
  return found;
}

std::optional<Patch> restrict_patch(const Patch& p, const Box& box) {
  std::vector<Tile> out;
  for (const Tile& t : p) {
    if (box.contains(t.pos)) out.push_back(t);
  }
  if (out.empty()) return std::nullopt;
  return Patch::from_sorted(std::move(out));
}

Patch anchor_at_origin(const Patch& p) { return translate_patch(p, -p.tiles().front().pos); }

std::string write_patch(const Patch& p, const Alphabet& alphabet) {
  std::string out;
  for (const Tile& t : p) {
    out += alphabet.name(t.label);
    out += ' ';
    out += std::to_string(t.pos.x);
    out += ' ';
    out += std::to_string(t.pos.y);
    out += '\n';
  }
  return out;
}

Patch read_patch(std::string_view text, Alphabet& alphabet, bool extend) {
  std::vector<Tile> tiles;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    int x = 0;
    int y = 0;
    std::string extra;
    if (!(fields >> x >> y) || (fields >> extra)) {
      throw TilingError(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected `label x y`");
    }
    std::optional<Label> label = extend ? std::optional<Label>(alphabet.intern(name)) : alphabet.find(name);
    if (!label) throw TilingError(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown label " + name);
    tiles.push_back({*label, {x, y}});
  }
  return Patch(std::move(tiles));
}

Window::Window(const Patch& patch, int radius) : patch_(patch), radius_(radius) {
  if (radius < 0) throw TilingError(ErrorCode::InvalidWindow, "negative radius");
  const Box b = ball(radius);
  auto inside = restrict_patch(patch, b);
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  if (!inside || inside->size() != side * side) {
    throw TilingError(ErrorCode::InvalidWindow, "patch does not cover B_" + std::to_string(radius));
  }
  patch_ = *std::move(inside);
  cells_.resize(side * side);
  for (const Tile& t : patch_) cells_[index(t.pos)] = t.label;
}

Window::Window(Patch patch, int radius, std::vector<Label> cells)
    : patch_(std::move(patch)), radius_(radius), cells_(std::move(cells)) {}

Label Window::at(Vec2 cell) const {
  if (chebyshev_norm(cell) > radius_) {
    throw TilingError(ErrorCode::InsufficientWindow, "cell " + to_string(cell) + " outside B_" + std::to_string(radius_));
  }
  return cells_[index(cell)];
}

bool Window::contains(const Patch& p) const {
  for (const Tile& t : p) {
    if (chebyshev_norm(t.pos) > radius_ || cells_[index(t.pos)] != t.label) return false;
  }
  return true;
}

Window Window::restricted(int r) const {
  if (r > radius_) throw TilingError(ErrorCode::InsufficientWindow, "cannot restrict to a larger radius");
  return Window(patch_, r);
}

Window Window::translated(Vec2 v) const {
  const int r = radius_ - chebyshev_norm(v);
  if (r < 0) throw TilingError(ErrorCode::InsufficientWindow, "translation by " + to_string(v) + " leaves no truthful region");
  const std::size_t side = static_cast<std::size_t>(2 * r + 1);
  std::vector<Tile> tiles;
  std::vector<Label> cells;
  tiles.reserve(side * side);
  cells.reserve(side * side);
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      const Label l = cells_[index(Vec2{x, y} - v)];
      tiles.push_back({l, {x, y}});
      cells.push_back(l);
    }
  }
  return Window(Patch::from_sorted(std::move(tiles)), r, std::move(cells));
}

bool Window::agrees_with(const Window& o, int r) const {
  if (r > radius_ || r > o.radius_) return false;
  static_assert(sizeof(Label) == 1);
  const std::size_t row = static_cast<std::size_t>(2 * r + 1);
  for (int y = -r; y <= r; ++y) {
    if (std::memcmp(&cells_[index({-r, y})], &o.cells_[o.index({-r, y})], row) != 0) return false;
  }
  return true;
}

bool windows_agree(const Window& a, const Window& b, int r) { return a.agrees_with(b, r); }

std::string to_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational window_distance(const Window& a, const Window& b) {
  const int m = std::min(a.radius(), b.radius());
  if (a.origin_label() != b.origin_label()) return {1, 1};
  // Agreement on B_r is monotone in r; find the first shell that disagrees.
  int agree = 0;
  for (int r = 1; r <= m; ++r) {
    bool shell_ok = true;
    for (int y = -r; y <= r && shell_ok; ++y) {
      for (int x = -r; x <= r; ++x) {
        if (std::max(std::abs(x), std::abs(y)) != r) continue;
        if (a.at({x, y}) != b.at({x, y})) {
          shell_ok = false;
          break;
        }
      }
    }
    if (!shell_ok) break;
    agree = r;
  }
  if (agree == 0) return {1, 1};
  return {1, agree};
}

std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xfU];
    v >>= 4;
  }
  return s;
}

}  // namespace tilingsg
