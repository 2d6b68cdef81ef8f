#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tilingsg/filters.hpp"
#include "tilingsg/semigroup.hpp"

namespace tilingsg {

using WindowPtr = std::shared_ptr<const Window>;

// Germ [s, W] of the action at the point W in U(P, t2). Germs are compared only
// through the equivalence predicates below.
class Germ {
 public:
  // Throws ZeroProduct for s = 0 and NotInDomain when W is outside U(P, t2).
  Germ(Element s, WindowPtr window);

  const Element& element() const { return s_; }
  const Window& window() const { return *window_; }
  const WindowPtr& window_ptr() const { return window_; }
  // theta_s(W), computed on first use and shared by copies.
  const WindowPtr& image() const;

 private:
  struct ImageCache {
    std::once_flag once;
    WindowPtr window;
  };

  Element s_;
  WindowPtr window_;
  std::shared_ptr<ImageCache> image_ = std::make_shared<ImageCache>();
};

// The two windows describe the same tiling on their common radius.
bool same_point(const Window& a, const Window& b);

// t1 = t1', t2 = t2' and the aligned union P u P' lies in W. Throws
// InsufficientWindow if the union leaves the window's radius.
bool germ_equiv_lemma(const Germ& g1, const Germ& g2);

// Witness search for s e = t e with e ranging over xi_W in a universe.
class GermDefinitionOracle {
 public:
  GermDefinitionOracle(const TilingSemigroup& semigroup, const Window& w, const IdempotentUniverse& u);

  const Filter& filter() const { return filter_; }
  std::optional<std::size_t> least() const { return least_; }
  // s m for the least member m. Witnesses are closed downward (s e = t e
  // implies s e' = t e' for e' <= e), so m decides the search when it exists.
  Element witness_product(const Element& s) const;
  bool equivalent(const Element& s, const Element& t) const;
  // Tries every member of xi_W.
  bool equivalent_exhaustive(const Element& s, const Element& t) const;

 private:
  const TilingSemigroup* semigroup_;
  const IdempotentUniverse* universe_;
  Filter filter_;
  std::optional<std::size_t> least_;
};

// Throws UniverseTooSmall when no witness is found but the lemma holds.
bool germ_equiv_def(const Germ& g1, const Germ& g2, const IdempotentUniverse& u);

// [s, theta_t(W)] [t, W] = [s t, W]. Throws NotComposable or ZeroProduct.
Germ compose(const TilingSemigroup& semigroup, const Germ& g1, const Germ& g2);
Germ invert(const Germ& g);

// (T - x, T), stored as T and x.
class RpuncPair {
 public:
  // `range`, when given, must be source translated by -x.
  RpuncPair(WindowPtr source, Vec2 displacement, WindowPtr range = nullptr);

  const WindowPtr& source() const { return source_; }
  Vec2 displacement() const { return displacement_; }
  // T - x with radius R - |x|, computed on first use and shared by copies.
  const WindowPtr& range() const;

 private:
  struct RangeCache {
    std::once_flag once;
    WindowPtr window;
  };

  WindowPtr source_;
  Vec2 displacement_;
  std::shared_ptr<RangeCache> range_ = std::make_shared<RangeCache>();
};

bool same_pair(const RpuncPair& a, const RpuncPair& b);
RpuncPair rpunc_compose(const RpuncPair& p1, const RpuncPair& p2);
RpuncPair rpunc_invert(const RpuncPair& p);

RpuncPair alpha(const Germ& g);

enum class PathOrder { HorizontalFirst, VerticalFirst };
// Tiles along the L-shaped lattice path from the origin to x.
std::vector<Vec2> connecting_path(Vec2 x, PathOrder order = PathOrder::HorizontalFirst);
// [T(x), P, T(0)] at T with P the path tiles. Throws InsufficientWindow if the
// path leaves the window.
Germ alpha_inv(const TilingSemigroup& semigroup, const RpuncPair& p, PathOrder order = PathOrder::HorizontalFirst);

struct BasisReport {
  std::size_t image_size = 0;  // |alpha(Theta(s, U(Q, t2)))|
  std::size_t graph_size = 0;  // |{(W - x_s, W) : W in U(Q, t2)}|
  bool equal = false;
};
// Compares both sets over the given windows. `q` is in canonical position (t2 at
// the origin) and must contain the patch of s. Throws DomainViolation otherwise.
BasisReport basis_correspondence(const Element& s, const Patch& q, const std::vector<WindowPtr>& windows);

}  // namespace tilingsg
