#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tilingsg/geometry.hpp"
#include "tilingsg/substitution.hpp"

namespace tilingsg {

// Doubly pointed pattern class [t1, P, t2], or the adjoined zero.
//
// Non-zero elements are stored in canonical position: the puncture of t2 is at
// the origin, so two classes are equal iff their canonical forms are. Copies
// share the immutable body.
class Element {
 public:
  Element() = default;  // zero
  static Element zero() { return {}; }
  // The caller guarantees that `patch` is in canonical position, holds a tile at
  // the origin and at t1_pos, and belongs to the admissible connected patches.
  static Element from_canonical(Patch patch, Vec2 t1_pos);

  bool is_zero() const { return !body_; }
  explicit operator bool() const { return !is_zero(); }
  const Patch& patch() const;
  // x_s = x(t1) - x(t2); in canonical position this is the cell of t1.
  Vec2 displacement() const;
  Tile t1() const;
  Tile t2() const;
  bool is_idempotent() const { return !is_zero() && displacement() == Vec2{}; }
  std::uint64_t hash() const { return body_ ? body_->hash : 0; }

  bool operator==(const Element& o) const;

 private:
  struct Body {
    Patch patch;
    Vec2 t1;
    std::uint64_t hash;
  };
  std::shared_ptr<const Body> body_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return static_cast<std::size_t>(e.hash()); }
};

// Deterministic order: zero first, then by size, patch tiles and t1.
bool element_less(const Element& a, const Element& b);

Element star(const Element& a);
// Subset characterization of the idempotent order: same marked tile and f's
// patch contained in e's. Both must be idempotents.
bool leq_structural(const Element& e, const Element& f);

// W is in U(P, t2), i.e. the canonical patch of s lies in W.
bool in_domain(const Element& s, const Window& w);
// theta^Omega_s(W) = W - x_s on U(P, t2); the result's radius is R - |x_s|.
Window theta_omega(const Element& s, const Window& w);

// Single-line text form `t1 | patch tiles | t2`, tiles written `label x y` and
// separated by commas, in canonical position.
std::string write_element(const Element& e, const Alphabet& alphabet);
std::string element_fingerprint(const Element& e);

enum class ShapeFamily {
  Box,        // axis-parallel rectangles containing the marked tile
  Connected,  // every edge-connected cell set containing the marked tile
};

std::string_view shape_family_name(ShapeFamily f);

// Supports (cell sets containing the origin) within B_r with at most max_cells
// cells, sorted by size then cells.
std::vector<std::vector<Vec2>> enumerate_shapes(int radius, std::size_t max_cells, ShapeFamily family);

// The inverse semigroup S of the tiling generated by a substitution system.
class TilingSemigroup {
 public:
  explicit TilingSemigroup(SubstitutionSystem system);

  const SubstitutionSystem& system() const { return language_.system(); }
  const Alphabet& alphabet() const { return language_.system().alphabet(); }
  const Language& language() const { return language_; }

  // Throws TileNotInPatch, NotConnected or NotAdmissible.
  Element dppc(const Tile& t1, const Patch& p, const Tile& t2) const;
  Element multiply(const Element& a, const Element& b) const;
  // e <= f iff e = ef. Throws NotIdempotent.
  bool leq(const Element& e, const Element& f) const;

  // All non-zero elements whose canonical patch lies in B_r with at most
  // max_tiles tiles and support in the given family. Patterns are the
  // restrictions of atlas(r) plaques; every tile pair is marked. Sorted by
  // element_less. Throws BudgetExceeded past max_elements.
  std::vector<Element> enumerate_elements(int radius, std::size_t max_tiles, ShapeFamily family = ShapeFamily::Box,
                                          std::size_t max_elements = 5'000'000) const;
  // Idempotents of enumerate_elements (marked tile at the origin).
  std::vector<Element> enumerate_idempotents(int radius, std::size_t max_tiles,
                                             ShapeFamily family = ShapeFamily::Box,
                                             std::size_t max_elements = 5'000'000) const;

  Element parse_element(std::string_view text) const;

 private:
  std::vector<Patch> patterns(int radius, std::size_t max_tiles, ShapeFamily family) const;

  Language language_;
};

}  // namespace tilingsg
