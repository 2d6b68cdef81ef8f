#include "tilingsg/substitution.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "builtin_systems.hpp"
#include "tilingsg/error.hpp"

namespace tilingsg {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix bool_product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = 1;
  return c;
}

bool all_positive(const Matrix& m) {
  for (const auto& row : m)
    for (auto v : row)
      if (v <= 0) return false;
  return true;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct LabelVecHash {
  std::size_t operator()(const std::vector<Label>& v) const {
    StableHash h;
    for (Label l : v) h.add(label_index(l));
    return static_cast<std::size_t>(h.value());
  }
};

}  // namespace

SubstitutionSystem::SubstitutionSystem(std::string name, Alphabet alphabet, int factor,
                                       std::vector<std::vector<std::vector<Label>>> rows)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), factor_(factor) {
  const std::size_t n = alphabet_.size();
  if (n == 0) throw TilingError(ErrorCode::MalformedRule, "no labels");
  if (factor_ < 2) throw TilingError(ErrorCode::MalformedRule, "factor must be at least 2");
  if (rows.size() != n) throw TilingError(ErrorCode::MalformedRule, "rule must be total on labels");
  blocks_.resize(n);
  matrix_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& block = rows[a];
    if (block.size() != static_cast<std::size_t>(factor_)) {
      throw TilingError(ErrorCode::MalformedRule, "rule." + alphabet_.names()[a] + " has " +
                                                      std::to_string(block.size()) + " rows, expected " +
                                                      std::to_string(factor_));
    }
    blocks_[a].resize(static_cast<std::size_t>(factor_ * factor_));
    for (int r = 0; r < factor_; ++r) {
      const auto& row = block[static_cast<std::size_t>(r)];
      if (row.size() != static_cast<std::size_t>(factor_)) {
        throw TilingError(ErrorCode::MalformedRule, "rule." + alphabet_.names()[a] + " row " + std::to_string(r) +
                                                        " has " + std::to_string(row.size()) + " labels");
      }
      const int dy = factor_ - 1 - r;
      for (int dx = 0; dx < factor_; ++dx) {
        const Label l = row[static_cast<std::size_t>(dx)];
        if (label_index(l) >= n) throw TilingError(ErrorCode::MalformedRule, "unknown label in rule");
        blocks_[a][static_cast<std::size_t>(dy * factor_ + dx)] = l;
        ++matrix_[a][label_index(l)];
      }
    }
  }
  Matrix power = matrix_;
  for (auto& row : power)
    for (auto& v : row) v = v > 0 ? 1 : 0;
  const Matrix base = power;
  for (std::size_t k = 1; k <= n * n; ++k) {
    if (all_positive(power)) {
      primitivity_exponent_ = static_cast<int>(k);
      return;
    }
    power = bool_product(power, base);
  }
  throw TilingError(ErrorCode::NotPrimitive, "no power of the substitution matrix of " + name_ + " is positive");
}

std::string SubstitutionSystem::to_config() const {
  std::string out = "name = " + name_ + "\nlabels =";
  for (const auto& n : alphabet_.names()) out += " " + n;
  out += "\nfactor = " + std::to_string(factor_) + "\n";
  for (std::size_t a = 0; a < label_count(); ++a) {
    out += "rule." + alphabet_.names()[a] + " =";
    for (int r = 0; r < factor_; ++r) {
      if (r > 0) out += " /";
      for (int dx = 0; dx < factor_; ++dx) out += " " + alphabet_.name(image(make_label(static_cast<unsigned>(a)), dx, factor_ - 1 - r));
    }
    out += "\n";
  }
  return out;
}

SubstitutionSystem load_system(std::string_view config) {
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(config)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw TilingError(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (!fields.emplace(key, trim(std::string_view(line).substr(eq + 1))).second) {
      throw TilingError(ErrorCode::ParseError, "duplicate key " + key);
    }
  }
  auto require = [&](const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw TilingError(ErrorCode::ParseError, "missing field " + key);
    return it->second;
  };
  const std::string name = require("name");
  const auto label_names = split_ws(require("labels"));
  if (std::set<std::string>(label_names.begin(), label_names.end()).size() != label_names.size()) {
    throw TilingError(ErrorCode::MalformedRule, "duplicate label");
  }
  Alphabet alphabet(label_names);
  int factor = 0;
  try {
    factor = std::stoi(require("factor"));
  } catch (const std::logic_error&) {
    throw TilingError(ErrorCode::ParseError, "factor is not an integer");
  }

  std::vector<std::vector<std::vector<Label>>> rows(label_names.size());
  std::size_t rules_seen = 0;
  for (const auto& [key, value] : fields) {
    if (key == "name" || key == "labels" || key == "factor") continue;
    if (key.rfind("rule.", 0) != 0) throw TilingError(ErrorCode::ParseError, "unknown field " + key);
    const auto label = alphabet.find(key.substr(5));
    if (!label) throw TilingError(ErrorCode::MalformedRule, "rule for unknown label " + key.substr(5));
    std::vector<std::vector<Label>> block;
    std::istringstream row_stream(value);
    std::string row;
    while (std::getline(row_stream, row, '/')) {
      std::vector<Label> labels;
      for (const auto& tok : split_ws(row)) {
        auto l = alphabet.find(tok);
        if (!l) throw TilingError(ErrorCode::MalformedRule, key + " uses unknown label " + tok);
        labels.push_back(*l);
      }
      block.push_back(std::move(labels));
    }
    rows[label_index(*label)] = std::move(block);
    ++rules_seen;
  }
  if (rules_seen != label_names.size()) throw TilingError(ErrorCode::MalformedRule, "rule must be given for every label");
  return SubstitutionSystem(name, std::move(alphabet), factor, std::move(rows));
}

SubstitutionSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TilingError(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_system(buf.str());
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"solid", "checkerboard", "chair"};
  return names;
}

std::string builtin_config(std::string_view name) {
  if (name == "solid") return std::string(builtin::solid);
  if (name == "checkerboard") return std::string(builtin::checkerboard);
  if (name == "chair") return std::string(builtin::chair);
  throw TilingError(ErrorCode::ParseError, "no builtin system named " + std::string(name));
}

SubstitutionSystem builtin_system(std::string_view name) { return load_system(builtin_config(name)); }

SubstitutionSystem resolve_system(std::string_view name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin_system(name_or_path);
  return load_system_file(std::string(name_or_path));
}

std::size_t default_cell_budget() {
  if (const char* env = std::getenv("TILINGSG_CELL_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::logic_error&) {
      throw TilingError(ErrorCode::ParseError, "TILINGSG_CELL_BUDGET is not a number");
    }
  }
  return std::size_t{1} << 24;
}

Patch LabelGrid::to_patch() const {
  std::vector<Tile> tiles;
  tiles.reserve(cells.size());
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      tiles.push_back({cells[static_cast<std::size_t>(y * width + x)], origin + Vec2{x, y}});
  return Patch::from_sorted(std::move(tiles));
}

namespace {

// Applies the substitution once to every cell of the grid.
LabelGrid substitute(const SubstitutionSystem& s, const LabelGrid& g, std::size_t cell_budget) {
  const int f = s.factor();
  LabelGrid out;
  out.origin = {g.origin.x * f, g.origin.y * f};
  out.width = g.width * f;
  out.height = g.height * f;
  if (static_cast<std::size_t>(out.width) * static_cast<std::size_t>(out.height) > cell_budget) {
    throw TilingError(ErrorCode::DepthTooLarge, "region of " + std::to_string(out.width) + "x" +
                                                    std::to_string(out.height) + " cells exceeds the cell budget");
  }
  out.cells.resize(static_cast<std::size_t>(out.width) * out.height);
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      const Label a = g.cells[static_cast<std::size_t>(y * g.width + x)];
      for (int dy = 0; dy < f; ++dy)
        for (int dx = 0; dx < f; ++dx)
          out.cells[static_cast<std::size_t>((y * f + dy) * out.width + x * f + dx)] = s.image(a, dx, dy);
    }
  }
  return out;
}

}  // namespace

LabelGrid supertile_grid(const SubstitutionSystem& s, Label a, int depth, std::size_t cell_budget) {
  if (depth < 0) throw TilingError(ErrorCode::DepthTooLarge, "negative depth");
  LabelGrid g{{0, 0}, 1, 1, {a}};
  for (int k = 0; k < depth; ++k) g = substitute(s, g, cell_budget);
  return g;
}

Patch supertile(const SubstitutionSystem& s, Label a, int depth, std::size_t cell_budget) {
  return supertile_grid(s, a, depth, cell_budget).to_patch();
}

Census pattern_census(const SubstitutionSystem& s, int width, int height, std::size_t cell_budget) {
  const std::size_t f = static_cast<std::size_t>(s.factor());
  int k = 0;
  while (ipow(f, k) < static_cast<std::size_t>(std::max(width, height))) ++k;

  auto census_at = [&](int depth) {
    std::unordered_set<std::vector<Label>, LabelVecHash> seen;
    std::vector<Label> pat(static_cast<std::size_t>(width * height));
    for (std::size_t a = 0; a < s.label_count(); ++a) {
      const LabelGrid g = supertile_grid(s, make_label(static_cast<unsigned>(a)), depth, cell_budget);
      for (int y = 0; y + height <= g.height; ++y) {
        for (int x = 0; x + width <= g.width; ++x) {
          for (int j = 0; j < height; ++j)
            for (int i = 0; i < width; ++i)
              pat[static_cast<std::size_t>(j * width + i)] = g.cells[static_cast<std::size_t>((y + j) * g.width + x + i)];
          seen.insert(pat);
        }
      }
    }
    std::vector<std::vector<Label>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  };

  auto prev = census_at(k);
  for (int depth = k + 1;; ++depth) {
    const std::size_t side = ipow(f, depth);
    if (side * side > cell_budget) {
      throw TilingError(ErrorCode::NoSaturation, "pattern census did not saturate within the cell budget");
    }
    auto cur = census_at(depth);
    if (cur == prev) return {std::move(prev), depth - 1};
    prev = std::move(cur);
  }
}

Atlas atlas(const SubstitutionSystem& s, int radius) {
  if (radius < 0) throw TilingError(ErrorCode::InvalidPatch, "negative atlas radius");
  const int side = 2 * radius + 1;
  Census c = pattern_census(s, side, side);
  Atlas out;
  out.saturation_depth = c.depth;
  for (const auto& pat : c.patterns) {
    std::vector<Tile> tiles;
    tiles.reserve(pat.size());
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) tiles.push_back({pat[static_cast<std::size_t>(y * side + x)], {x, y}});
    out.patches.push_back(Patch::from_sorted(std::move(tiles)));
  }
  return out;
}

Patch centered_plaque(const Patch& canonical, int radius) { return translate_patch(canonical, {-radius, -radius}); }

Seed find_seed(const SubstitutionSystem& s) {
  const Census blocks = pattern_census(s, 2, 2);
  for (int period = 1; period <= 4; ++period) {
    std::vector<LabelGrid> images;
    for (std::size_t a = 0; a < s.label_count(); ++a) {
      images.push_back(supertile_grid(s, make_label(static_cast<unsigned>(a)), period));
    }
    const int last = images.front().width - 1;
    auto corner = [&](Label a, int x, int y) { return images[label_index(a)].at({x, y}); };
    // Census patterns are row-major from the bottom row, i.e. already in quad order.
    for (const auto& q : blocks.patterns) {
      if (corner(q[0], last, last) == q[0] && corner(q[1], 0, last) == q[1] && corner(q[2], last, 0) == q[2] &&
          corner(q[3], 0, 0) == q[3]) {
        return Seed{{q[0], q[1], q[2], q[3]}, period};
      }
    }
  }
  throw TilingError(ErrorCode::NoSeed, "no self-reproducing 2x2 block for periods up to 4");
}

LabelGrid fixed_point_region(const SubstitutionSystem& s, int radius, std::size_t cell_budget) {
  if (radius < 0) throw TilingError(ErrorCode::InvalidWindow, "negative radius");
  const Seed seed = find_seed(s);
  LabelGrid g{{-1, -1}, 2, 2, {seed.quad.begin(), seed.quad.end()}};
  while (g.origin.x > -radius || g.origin.x + g.width - 1 < radius) {
    for (int i = 0; i < seed.period; ++i) g = substitute(s, g, cell_budget);
  }
  return g;
}

Window fixed_point_window(const SubstitutionSystem& s, int radius) {
  if (radius < 1) throw TilingError(ErrorCode::InvalidWindow, "fixed point window needs radius >= 1");
  const LabelGrid g = fixed_point_region(s, radius);
  std::vector<Tile> tiles;
  for (int y = -radius; y <= radius; ++y)
    for (int x = -radius; x <= radius; ++x) tiles.push_back({g.at({x, y}), {x, y}});
  return Window(Patch::from_sorted(std::move(tiles)), radius);
}

Language::Language(SubstitutionSystem system) : system_(std::move(system)) {
  depth_margin_ = std::max(2, pattern_census(system_, 2, 2).depth);
}

Language::Language(SubstitutionSystem system, int depth_margin)
    : system_(std::move(system)), depth_margin_(depth_margin) {}

int Language::search_depth(const Patch& p) const {
  const std::size_t d = static_cast<std::size_t>(p.diameter());
  int m = 0;
  while (ipow(static_cast<std::size_t>(system_.factor()), m) < d) ++m;
  return m + depth_margin_;
}

namespace {

// Key of the k x k block whose lower-left cell is `at`, read through `label`.
template <class LabelAt>
std::uint64_t block_key(int k, Vec2 at, LabelAt&& label) {
  StableHash h;
  h.add_int(k);
  for (int dy = 0; dy < k; ++dy)
    for (int dx = 0; dx < k; ++dx) h.add_int(static_cast<int>(label_index(label(at + Vec2{dx, dy}))));
  return h.value();
}

constexpr int block_sizes[] = {4, 2, 1};

}  // namespace

const Language::Level& Language::level(int depth) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = levels_.find(depth); it != levels_.end()) return *it->second;
  }
  auto lvl = std::make_unique<Level>();
  for (std::size_t a = 0; a < system_.label_count(); ++a) {
    lvl->grids.push_back(supertile_grid(system_, make_label(static_cast<unsigned>(a)), depth));
  }
  for (std::uint32_t g = 0; g < lvl->grids.size(); ++g) {
    const LabelGrid& grid = lvl->grids[g];
    auto label = [&](Vec2 c) { return grid.at(c); };
    for (int k : block_sizes) {
      for (int y = 0; y + k <= grid.height; ++y)
        for (int x = 0; x + k <= grid.width; ++x) lvl->index[block_key(k, {x, y}, label)].emplace_back(g, Vec2{x, y});
    }
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = levels_.emplace(depth, std::move(lvl));
  return *it->second;
}

bool Language::admits_at_depth(const Patch& p, int depth) const {
  const Level& lvl = level(depth);
  // Anchor the search on the largest full square block of p.
  auto label = [&](Vec2 c) { return *p.label_at(c); };
  auto full_block = [&](int k, Vec2 at) {
    for (int dy = 0; dy < k; ++dy)
      for (int dx = 0; dx < k; ++dx)
        if (!p.label_at(at + Vec2{dx, dy})) return false;
    return true;
  };
  Vec2 anchor = p.tiles().front().pos;
  std::uint64_t key = 0;
  bool found = false;
  for (int k : block_sizes) {
    for (const Tile& t : p) {
      if (full_block(k, t.pos)) {
        anchor = t.pos;
        key = block_key(k, anchor, label);
        found = true;
        break;
      }
    }
    if (found) break;
  }
  auto it = lvl.index.find(key);
  if (it == lvl.index.end()) return false;
  for (const auto& [g, pos] : it->second) {
    const LabelGrid& grid = lvl.grids[g];
    const Vec2 shift = pos - anchor;
    bool ok = true;
    for (const Tile& t : p) {
      const Vec2 c = t.pos + shift;
      if (c.x < 0 || c.y < 0 || c.x >= grid.width || c.y >= grid.height ||
          grid.cells[static_cast<std::size_t>(c.y * grid.width + c.x)] != t.label) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

const Language::BoxCensus& Language::box_census(int w, int h) const {
  const int key = w * 64 + h;
  {
    std::shared_lock lock(mutex_);
    if (auto it = box_census_.find(key); it != box_census_.end()) return *it->second;
  }
  int m = 0;
  while (ipow(static_cast<std::size_t>(system_.factor()), m) < static_cast<std::size_t>(std::max(w, h))) ++m;
  const Level& lvl = level(m + depth_margin_);
  std::unordered_set<std::string> seen;
  std::vector<std::string> blocks;
  std::string block(static_cast<std::size_t>(w * h), '\0');
  for (const LabelGrid& g : lvl.grids) {
    for (int y = 0; y + h <= g.height; ++y) {
      for (int x = 0; x + w <= g.width; ++x) {
        for (int j = 0; j < h; ++j)
          for (int i = 0; i < w; ++i)
            block[static_cast<std::size_t>(j * w + i)] =
                static_cast<char>(label_index(g.cells[static_cast<std::size_t>((y + j) * g.width + x + i)]));
        if (seen.insert(block).second) blocks.push_back(block);
      }
    }
  }
  auto census = std::make_unique<BoxCensus>();
  const std::size_t labels = system_.label_count();
  census->words = (blocks.size() + 63) / 64;
  census->rows.assign(static_cast<std::size_t>(w * h) * labels * census->words, 0);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t c = 0; c < blocks[k].size(); ++c) {
      const std::size_t row = c * labels + static_cast<unsigned char>(blocks[k][c]);
      census->rows[row * census->words + k / 64] |= std::uint64_t{1} << (k % 64);
    }
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] = box_census_.emplace(key, std::move(census));
  return *it->second;
}

bool Language::admits_by_census(const Patch& p) const {
  const Box b = p.bounds();
  const int w = b.width();
  const int h = b.height();
  if (w > kCensusSide || h > kCensusSide)
    throw TilingError(ErrorCode::BudgetExceeded, "patch bounding box exceeds the census side");
  const BoxCensus& census = box_census(w, h);
  const std::size_t labels = system_.label_count();
  std::vector<std::uint64_t> acc(census.words, ~std::uint64_t{0});
  for (const Tile& t : p) {
    const std::size_t cell = static_cast<std::size_t>((t.pos.y - b.lo.y) * w + (t.pos.x - b.lo.x));
    const std::uint64_t* row = &census.rows[(cell * labels + label_index(t.label)) * census.words];
    std::uint64_t any = 0;
    for (std::size_t i = 0; i < census.words; ++i) any |= (acc[i] &= row[i]);
    if (!any) return false;
  }
  return census.words > 0;
}

bool Language::admits(const Patch& p) const {
  const Box b = p.bounds();
  if (b.width() <= kCensusSide && b.height() <= kCensusSide) return admits_by_census(p);
  return admits_by_search(p);
}

bool Language::admits_by_search(const Patch& p) const {
  const Patch key = anchor_at_origin(p);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Occurrence at any depth is an occurrence in the tiling; one level below the
  // full depth already settles most admissible patches at a quarter of the cost.
  const int full = search_depth(key);
  bool result = false;
  for (int d = std::max(0, full - 1); d <= full && !result; ++d) result = admits_at_depth(key, d);
  std::unique_lock lock(mutex_);
  if (memo_.size() > (std::size_t{1} << 18)) memo_.clear();
  memo_.emplace(key, result);
  return result;
}

bool is_admissible(const SubstitutionSystem& s, const Patch& p) { return Language(s).admits(p); }

std::optional<Vec2> detect_period(const Window& w) {
  const int r = w.radius();
  for (int n = 1; n <= r / 2; ++n) {
    for (int y = 0; y <= n; ++y) {
      for (int x = -n; x <= n; ++x) {
        if (std::max(std::abs(x), y) != n) continue;
        if (y == 0 && x <= 0) continue;
        const Vec2 v{x, y};
        bool periodic = true;
        for (int cy = -r; cy <= r && periodic; ++cy) {
          for (int cx = -r; cx <= r; ++cx) {
            const Vec2 src = Vec2{cx, cy} - v;
            if (chebyshev_norm(src) > r) continue;
            if (w.at({cx, cy}) != w.at(src)) {
              periodic = false;
              break;
            }
          }
        }
        if (periodic) return v;
      }
    }
  }
  return std::nullopt;
}

RepetitivityReport repetitivity(const SubstitutionSystem& s, int patch_radius, int window_radius, int probe_radius) {
  RepetitivityReport rep;
  rep.patch_radius = patch_radius;
  rep.window_radius = window_radius;
  rep.probe_radius = probe_radius;
  const Atlas at = atlas(s, patch_radius);
  rep.patch_count = at.patches.size();
  const Window w = fixed_point_window(s, window_radius);
  const int side = 2 * window_radius + 1;
  const int inner = window_radius - patch_radius;
  rep.complete = true;
  for (const Patch& canonical : at.patches) {
    const Patch plaque = centered_plaque(canonical, patch_radius);
    // Chebyshev distance to the nearest occurrence centre, by 8-neighbour BFS.
    std::vector<int> dist(static_cast<std::size_t>(side * side), -1);
    std::vector<Vec2> frontier;
    auto idx = [&](Vec2 c) { return static_cast<std::size_t>((c.y + window_radius) * side + c.x + window_radius); };
    for (int y = -inner; y <= inner; ++y) {
      for (int x = -inner; x <= inner; ++x) {
        bool match = true;
        for (const Tile& t : plaque) {
          if (w.at(t.pos + Vec2{x, y}) != t.label) {
            match = false;
            break;
          }
        }
        if (match) {
          dist[idx({x, y})] = 0;
          frontier.push_back({x, y});
        }
      }
    }
    if (frontier.empty()) {
      rep.complete = false;
      continue;
    }
    for (int d = 1; !frontier.empty(); ++d) {
      std::vector<Vec2> next;
      for (Vec2 c : frontier) {
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            const Vec2 n = c + Vec2{dx, dy};
            if (chebyshev_norm(n) > window_radius || dist[idx(n)] >= 0) continue;
            dist[idx(n)] = d;
            next.push_back(n);
          }
      }
      frontier = std::move(next);
    }
    for (int y = -probe_radius; y <= probe_radius; ++y)
      for (int x = -probe_radius; x <= probe_radius; ++x) rep.radius = std::max(rep.radius, dist[idx({x, y})] + patch_radius);
  }
  return rep;
}

std::vector<Window> realize_windows(const SubstitutionSystem& s, int class_radius, int window_radius) {
  const std::size_t classes = atlas(s, class_radius).patches.size();
  const int cside = 2 * class_radius + 1;
  for (int region = window_radius + 16;; region *= 2) {
    const LabelGrid g = fixed_point_region(s, region);
    const int reach = std::min({-g.origin.x, -g.origin.y, g.origin.x + g.width - 1, g.origin.y + g.height - 1}) - window_radius;
    std::unordered_set<std::vector<Label>, LabelVecHash> seen;
    std::vector<Window> out;
    std::vector<Label> key(static_cast<std::size_t>(cside * cside));
    for (int n = 0; n <= reach && out.size() < classes; ++n) {
      for (int y = -n; y <= n; ++y) {
        for (int x = -n; x <= n; ++x) {
          if (std::max(std::abs(x), std::abs(y)) != n) continue;
          for (int j = 0; j < cside; ++j)
            for (int i = 0; i < cside; ++i)
              key[static_cast<std::size_t>(j * cside + i)] = g.at({x + i - class_radius, y + j - class_radius});
          if (!seen.insert(key).second) continue;
          std::vector<Tile> tiles;
          for (int wy = -window_radius; wy <= window_radius; ++wy)
            for (int wx = -window_radius; wx <= window_radius; ++wx) tiles.push_back({g.at({x + wx, y + wy}), {wx, wy}});
          out.emplace_back(Patch::from_sorted(std::move(tiles)), window_radius);
        }
      }
    }
    if (out.size() == classes) return out;
    if (static_cast<std::size_t>(4 * region) * static_cast<std::size_t>(4 * region) > default_cell_budget()) {
      throw TilingError(ErrorCode::BudgetExceeded, "could not realize every atlas class within the cell budget");
    }
  }
}

}  // namespace tilingsg
