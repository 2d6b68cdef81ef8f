#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tilingsg {

// Integer lattice vector. Ordered by (y, x), which is the canonical order for
// cells, occurrence lists and serialization.
struct Vec2 {
  int x = 0;
  int y = 0;

  constexpr Vec2() = default;
  constexpr Vec2(int x_, int y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
  constexpr std::strong_ordering operator<=>(const Vec2& o) const {
    if (auto c = y <=> o.y; c != 0) return c;
    return x <=> o.x;
  }
};

constexpr int chebyshev_norm(Vec2 v) { return std::max(std::abs(v.x), std::abs(v.y)); }

std::string to_string(Vec2 v);

// Prototile identifier. Names live in an Alphabet.
enum class Label : std::uint8_t {};

constexpr Label make_label(unsigned i) { return static_cast<Label>(i); }
constexpr unsigned label_index(Label l) { return static_cast<unsigned>(l); }

// A labeled unit cell; `pos` is both the cell and its puncture.
struct Tile {
  Label label{};
  Vec2 pos;

  constexpr bool operator==(const Tile&) const = default;
  constexpr std::strong_ordering operator<=>(const Tile& o) const {
    if (auto c = pos <=> o.pos; c != 0) return c;
    return label_index(label) <=> label_index(o.label);
  }
};

// Bidirectional map between label names and Label values.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  Label intern(std::string_view name);
  std::optional<Label> find(std::string_view name) const;
  const std::string& name(Label l) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Label> index_;
};

// Closed integer box [lo, hi] in cell coordinates.
struct Box {
  Vec2 lo;
  Vec2 hi;

  int width() const { return hi.x - lo.x + 1; }
  int height() const { return hi.y - lo.y + 1; }
  bool contains(Vec2 c) const { return c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y; }
  bool contains(const Box& b) const { return contains(b.lo) && contains(b.hi); }
  bool operator==(const Box&) const = default;
};

Box ball(int radius);

// Finite, nonempty set of tiles with pairwise distinct cells. Tiles are kept
// sorted by (y, x), so equality is structural.
class Patch {
 public:
  explicit Patch(std::vector<Tile> tiles);
  Patch(std::initializer_list<Tile> tiles) : Patch(std::vector<Tile>(tiles)) {}

  // Caller guarantees tiles are nonempty, sorted and cell-distinct.
  static Patch from_sorted(std::vector<Tile> tiles);

  const std::vector<Tile>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  auto begin() const { return tiles_.begin(); }
  auto end() const { return tiles_.end(); }

  std::optional<Label> label_at(Vec2 cell) const;
  bool contains(const Tile& t) const;
  // True iff every tile of `other` is a tile of this patch.
  bool contains_all(const Patch& other) const;
  Box bounds() const;
  // Chebyshev diameter in cells: max(width, height) of the bounding box.
  int diameter() const;
  std::uint64_t hash() const;

  bool operator==(const Patch& o) const { return tiles_ == o.tiles_; }

 private:
  Patch() = default;
  std::vector<Tile> tiles_;
};

Patch translate_patch(const Patch& p, Vec2 v);
bool patches_compatible(const Patch& p, const Patch& q);
// Throws IncompatibleOverlap when the patches disagree on a shared cell.
Patch patch_union(const Patch& p, const Patch& q);
std::optional<Patch> try_patch_union(const Patch& p, const Patch& q);
bool connected_interior(const Patch& p);
// All v with translate_patch(pattern, v) contained in host, sorted by (y, x).
std::vector<Vec2> find_occurrences(const Patch& pattern, const Patch& host);
// Tiles of p inside the box, or nullopt when none are.
std::optional<Patch> restrict_patch(const Patch& p, const Box& box);
// Translate so the minimal cell in (y, x) order sits at the origin.
Patch anchor_at_origin(const Patch& p);

// Patch text format: one `label x y` line per tile, sorted by (y, x).
std::string write_patch(const Patch& p, const Alphabet& alphabet);
// Order-insensitive. Unknown names are interned when `extend` is true and
// rejected otherwise.
Patch read_patch(std::string_view text, Alphabet& alphabet, bool extend = true);

// Finite truncation T(B_R(0)) of a punctured tiling. Holds exactly the cells of
// B_R; content outside is dropped on construction.
class Window {
 public:
  Window(const Patch& patch, int radius);

  int radius() const { return radius_; }
  const Patch& patch() const { return patch_; }
  Label at(Vec2 cell) const;
  Label origin_label() const { return at({0, 0}); }
  Tile origin_tile() const { return {origin_label(), {0, 0}}; }
  // True iff p lies within B_R and agrees with the window on every tile.
  bool contains(const Patch& p) const;
  bool covers(const Patch& p) const { return ball(radius_).contains(p.bounds()); }
  Window restricted(int r) const;
  // The window of T + v, with radius shrunk to R - |v|.
  Window translated(Vec2 v) const;
  // Same tiles on B_r.
  bool agrees_with(const Window& o, int r) const;
  std::uint64_t fingerprint() const { return patch_.hash() ^ (static_cast<std::uint64_t>(radius_) * 0x9e3779b97f4a7c15ULL); }

  bool operator==(const Window& o) const { return radius_ == o.radius_ && patch_ == o.patch_; }

 private:
  Window(Patch patch, int radius, std::vector<Label> cells);
  std::size_t index(Vec2 c) const { return static_cast<std::size_t>((c.y + radius_) * (2 * radius_ + 1) + (c.x + radius_)); }

  Patch patch_;
  int radius_;
  std::vector<Label> cells_;
};

// True iff the windows carry the same tiles on B_r.
bool windows_agree(const Window& a, const Window& b, int r);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

std::string to_string(const Rational& r);

// Lattice tiling metric with the translation slack fixed at zero.
Rational window_distance(const Window& a, const Window& b);

struct PatchHash {
  std::size_t operator()(const Patch& p) const { return static_cast<std::size_t>(p.hash()); }
};

// Stable 64-bit hash (splitmix64 combining), used for fingerprints that
// appear in reports; identical across runs and platforms.
class StableHash {
 public:
  void add(std::uint64_t v) {
    std::uint64_t z = h_ ^ v;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h_ = z ^ (z >> 31);
  }
  void add_int(int v) { add(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0x6a09e667f3bcc908ULL;
};

std::string hex64(std::uint64_t v);

}  // namespace tilingsg
