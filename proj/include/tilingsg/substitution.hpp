#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tilingsg/geometry.hpp"

namespace tilingsg {

// Block substitution on labeled unit squares: every label is replaced by a
// factor x factor block of labels.
class SubstitutionSystem {
 public:
  // rows[a] lists the block of label a top row first.
  SubstitutionSystem(std::string name, Alphabet alphabet, int factor,
                     std::vector<std::vector<std::vector<Label>>> rows);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int factor() const { return factor_; }
  std::size_t label_count() const { return alphabet_.size(); }
  // Label placed at offset (dx, dy) of the block of `a`; dy counts from the bottom row.
  Label image(Label a, int dx, int dy) const {
    return blocks_[label_index(a)][static_cast<std::size_t>(dy * factor_ + dx)];
  }
  // M[a][b] = number of b cells in the block of a.
  const std::vector<std::vector<std::int64_t>>& matrix() const { return matrix_; }
  // Least k with M^k entrywise positive.
  int primitivity_exponent() const { return primitivity_exponent_; }
  std::string to_config() const;

 private:
  std::string name_;
  Alphabet alphabet_;
  int factor_;
  std::vector<std::vector<Label>> blocks_;
  std::vector<std::vector<std::int64_t>> matrix_;
  int primitivity_exponent_ = 0;
};

// Parses the `key = value` config format:
//   name = chair
//   labels = ne nw sw se
//   factor = 2
//   rule.ne = nw ne / ne se      (rows top to bottom, separated by '/')
SubstitutionSystem load_system(std::string_view config);
SubstitutionSystem load_system_file(const std::string& path);

const std::vector<std::string>& builtin_names();
std::string builtin_config(std::string_view name);
SubstitutionSystem builtin_system(std::string_view name);
// Builtin name, or else a path to a config file.
SubstitutionSystem resolve_system(std::string_view name_or_path);

// Cell limit for generated regions; TILINGSG_CELL_BUDGET overrides it.
std::size_t default_cell_budget();

// Dense rectangular label array.
struct LabelGrid {
  Vec2 origin;  // cell of index 0
  int width = 0;
  int height = 0;
  std::vector<Label> cells;

  Label at(Vec2 c) const {
    return cells[static_cast<std::size_t>((c.y - origin.y) * width + (c.x - origin.x))];
  }
  Box box() const { return {origin, origin + Vec2{width - 1, height - 1}}; }
  Patch to_patch() const;
};

LabelGrid supertile_grid(const SubstitutionSystem& s, Label a, int depth,
                         std::size_t cell_budget = default_cell_budget());
// lambda^k x lambda^k patch anchored at (0, 0).
Patch supertile(const SubstitutionSystem& s, Label a, int depth,
                std::size_t cell_budget = default_cell_budget());

// Self-reproducing 2x2 block around the origin corner; `period` is the power of
// the substitution that refixes it.
struct Seed {
  std::array<Label, 4> quad{};  // cells (-1,-1), (0,-1), (-1,0), (0,0)
  int period = 1;

  bool operator==(const Seed&) const = default;
};

Seed find_seed(const SubstitutionSystem& s);
// The fixed point generated from the seed, covering at least B_radius.
LabelGrid fixed_point_region(const SubstitutionSystem& s, int radius,
                             std::size_t cell_budget = default_cell_budget());
Window fixed_point_window(const SubstitutionSystem& s, int radius);

// All label patterns of the given box shape occurring in the tiling, found by
// scanning supertiles of increasing depth until two consecutive depths agree.
struct Census {
  std::vector<std::vector<Label>> patterns;  // row-major over the shape, sorted
  int depth = 0;                             // first depth of the agreeing pair
};
Census pattern_census(const SubstitutionSystem& s, int width, int height,
                      std::size_t cell_budget = default_cell_budget());

struct Atlas {
  std::vector<Patch> patches;  // canonical: minimal cell at the origin
  int saturation_depth = 0;
};
// Patches T(B_r(x)) up to translation.
Atlas atlas(const SubstitutionSystem& s, int radius);
// An atlas patch re-centred so that its middle tile sits at the origin.
Patch centered_plaque(const Patch& canonical, int radius);

// Decides whether a patch occurs in the tiling generated by a system. Results
// are memoized; concurrent queries are safe.
class Language {
 public:
  // Margin defaults to max(2, depth at which every legal 2x2 block has
  // appeared): a patch of diameter <= f^m lies in a 2x2 block of level-m
  // supertiles, which is the image of a legal 2x2 block.
  explicit Language(SubstitutionSystem system);
  Language(SubstitutionSystem system, int depth_margin);

  const SubstitutionSystem& system() const { return system_; }
  int depth_margin() const { return depth_margin_; }
  // ceil(log_factor(diameter)) + margin.
  int search_depth(const Patch& p) const;
  // Patches whose bounding box fits in kCensusSide x kCensusSide are decided by
  // the census of that box at search depth; larger ones by admits_by_search.
  static constexpr int kCensusSide = 9;
  bool admits(const Patch& p) const;
  bool admits_by_census(const Patch& p) const;
  bool admits_by_search(const Patch& p) const;
  bool admits_at_depth(const Patch& p, int depth) const;

 private:
  struct Level {
    std::vector<LabelGrid> grids;
    // k x k block key (k = 1, 2, 4) -> (grid, lower-left cell).
    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, Vec2>>> index;
  };
  const Level& level(int depth) const;
  // w x h blocks at search depth; bit k of row (cell, label) is set when block k
  // has that label at that cell (row-major from the lower-left).
  struct BoxCensus {
    std::size_t words = 0;
    std::vector<std::uint64_t> rows;
  };
  const BoxCensus& box_census(int w, int h) const;

  SubstitutionSystem system_;
  int depth_margin_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<int, std::unique_ptr<Level>> levels_;
  mutable std::unordered_map<Patch, bool, PatchHash> memo_;
  mutable std::unordered_map<int, std::unique_ptr<BoxCensus>> box_census_;
};

bool is_admissible(const SubstitutionSystem& s, const Patch& p);

// Least nonzero v with |v| <= R/2 such that W and W + v agree on their overlap.
// Only the half-plane representative (y > 0, or y == 0 and x > 0) of +-v is
// considered; candidates are ordered by Chebyshev norm, then (y, x). So a full
// shift symmetry reports (1, 0).
std::optional<Vec2> detect_period(const Window& w);

struct RepetitivityReport {
  int patch_radius = 0;
  int window_radius = 0;
  int probe_radius = 0;
  std::size_t patch_count = 0;
  // Largest r0 such that every probed position sees every patch within B_r0.
  int radius = 0;
  bool complete = false;  // every patch was found around every probed position
};
RepetitivityReport repetitivity(const SubstitutionSystem& s, int patch_radius, int window_radius,
                                int probe_radius);

// One window of radius `window_radius` per atlas(class_radius) class, each a
// translate of the fixed point. Positions are scanned by (|x|, y, x).
std::vector<Window> realize_windows(const SubstitutionSystem& s, int class_radius, int window_radius);

}  // namespace tilingsg
