#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tilingsg/semigroup.hpp"

namespace tilingsg {

// Finite truncation of the idempotent semilattice: idempotents with patch in
// B_r, at most N tiles and marked tile at the origin.
class IdempotentUniverse {
 public:
  IdempotentUniverse(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                     ShapeFamily family = ShapeFamily::Box);
  // Explicit item list; items must be idempotents of `semigroup`.
  IdempotentUniverse(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                     std::vector<Element> items);

  const TilingSemigroup& semigroup() const { return *semigroup_; }
  int radius() const { return radius_; }
  std::size_t max_tiles() const { return max_tiles_; }
  const std::vector<Element>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Element& operator[](std::size_t i) const { return items_[i]; }
  std::optional<std::size_t> index_of(const Element& e) const;

 private:
  void build_index();

  const TilingSemigroup* semigroup_;
  int radius_;
  std::size_t max_tiles_;
  std::vector<Element> items_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

IdempotentUniverse build_universe(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                                  ShapeFamily family = ShapeFamily::Box);

// A subset of a universe given by sorted item indices.
struct Filter {
  const IdempotentUniverse* universe = nullptr;
  std::vector<std::size_t> members;

  bool contains(std::size_t i) const;
  bool operator==(const Filter& o) const { return universe == o.universe && members == o.members; }
};

// Items whose patch lies in the window (same origin tile). Throws
// InsufficientWindow if W.radius < U.radius.
Filter xi_T(const Window& w, const IdempotentUniverse& u);
// Same for a partial tiling: items whose patch is a sub-patch of p.
Filter xi_patch(const Patch& p, const IdempotentUniverse& u);

// A member below every other member, if any (verified with leq).
std::optional<std::size_t> least_member(const Filter& f);

// Filter axioms within the universe: non-empty, upward closed in U, and for
// members e, f the product ef is non-zero and a member whenever it lies in U.
// Products escaping U impose nothing. With a least member m this reduces to
// F = {g in U : m <= g}.
bool is_filter(const Filter& f);
// The axioms checked literally: upward closure over all (member, item) pairs and
// a lower bound among the members for every pair whose product stays in U.
// Quadratic; meant for small universes.
bool is_filter_pairwise(const Filter& f);

enum class Verdict : std::uint8_t { No, Yes, Indeterminate };
std::string_view verdict_name(Verdict v);

struct UltrafilterReport {
  Verdict verdict = Verdict::No;
  std::size_t escapes = 0;  // outside items whose extension cannot be decided inside U
  std::optional<std::size_t> extension;  // an item whose addition still gives a filter
};
// No strictly larger filter within U. For each e outside F, e * m with m the
// least member decides it: Zero means e is excluded, an item of U gives a larger
// filter, anything else escapes the truncation. Without a least member, e is
// excluded by a zero product with some member, and otherwise the filter
// generated by F, e and their products in U is tried.
UltrafilterReport is_ultrafilter(const Filter& f);

// Patch union of all members (members are pairwise compatible in a filter).
Patch filter_patch(const Filter& f);

enum class Truth : std::uint8_t { False, True, Unknown };
char truth_char(Truth t);

struct Character {
  const IdempotentUniverse* universe = nullptr;
  std::vector<Truth> values;

  std::size_t unknown_count() const;
  // Equal on every entry determinate in both.
  bool agrees_with(const Character& o) const;
  bool operator==(const Character& o) const { return universe == o.universe && values == o.values; }
};

Character character_of(const Filter& f);
// Support of a determinate character. Throws DomainViolation on unknown entries.
Filter filter_of(const Character& c);
// c(ef) = c(e) c(f) whenever ef lies in U (Zero counts as 0), and c is not
// identically zero. Quadratic.
bool is_character(const Character& c);

Character psi(const Window& w, const IdempotentUniverse& u);

// s* e s for every item e of U: the item index, or kZeroEntry / kEscapeEntry.
class ConjugationTable {
 public:
  static constexpr std::int64_t kZeroEntry = -1;
  static constexpr std::int64_t kEscapeEntry = -2;

  ConjugationTable(const Element& s, const IdempotentUniverse& u);

  const Element& element() const { return s_; }
  const IdempotentUniverse& universe() const { return *universe_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  // Index of s* s in U. Throws UniverseTooSmall when it is not an item.
  std::size_t domain_item() const;

 private:
  Element s_;
  const IdempotentUniverse* universe_;
  std::vector<std::int64_t> entries_;
  std::optional<std::size_t> domain_;
};

// theta_s(c)(e) = c(s* e s), Unknown where s* e s escapes U. Throws
// DomainViolation if c(s* s) != 1.
Character theta_tight(const Element& s, const Character& c, const IdempotentUniverse& u);
Character theta_tight(const ConjugationTable& table, const Character& c);

// `<element-hash> <0|1|?>` per item, in universe order.
std::string write_character(const Character& c);

}  // namespace tilingsg
