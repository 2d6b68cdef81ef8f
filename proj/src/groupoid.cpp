#include "tilingsg/groupoid.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tilingsg/error.hpp"

namespace tilingsg {

Germ::Germ(Element s, WindowPtr window) : s_(std::move(s)), window_(std::move(window)) {
  if (s_.is_zero()) throw TilingError(ErrorCode::ZeroProduct, "germ of zero");
  if (!in_domain(s_, *window_)) throw TilingError(ErrorCode::NotInDomain, "window is not in U(P, t2)");
}

const WindowPtr& Germ::image() const {
  std::call_once(image_->once, [&] { image_->window = std::make_shared<const Window>(theta_omega(s_, *window_)); });
  return image_->window;
}

bool same_point(const Window& a, const Window& b) {
  if (&a == &b) return true;
  return windows_agree(a, b, std::min(a.radius(), b.radius()));
}

bool germ_equiv_lemma(const Germ& g1, const Germ& g2) {
  const Window& w = g1.window();
  if (!same_point(w, g2.window())) return false;
  const Element& s = g1.element();
  const Element& t = g2.element();
  if (s.displacement() != t.displacement() || s.t1().label != t.t1().label || s.t2().label != t.t2().label) {
    return false;
  }
  const auto joined = try_patch_union(s.patch(), t.patch());
  if (!joined) return false;
  if (!w.covers(*joined)) throw TilingError(ErrorCode::InsufficientWindow, "patch union leaves the window");
  return w.contains(*joined);
}

GermDefinitionOracle::GermDefinitionOracle(const TilingSemigroup& semigroup, const Window& w,
                                           const IdempotentUniverse& u)
    : semigroup_(&semigroup), universe_(&u), filter_(xi_T(w, u)), least_(least_member(filter_)) {}

Element GermDefinitionOracle::witness_product(const Element& s) const {
  if (!least_) throw TilingError(ErrorCode::UniverseTooSmall, "xi has no least member in the universe");
  return semigroup_->multiply(s, (*universe_)[*least_]);
}

bool GermDefinitionOracle::equivalent(const Element& s, const Element& t) const {
  if (!least_) return equivalent_exhaustive(s, t);
  const Element a = witness_product(s);
  return !a.is_zero() && a == witness_product(t);
}

bool GermDefinitionOracle::equivalent_exhaustive(const Element& s, const Element& t) const {
  for (std::size_t i : filter_.members) {
    const Element& e = (*universe_)[i];
    const Element a = semigroup_->multiply(s, e);
    if (!a.is_zero() && a == semigroup_->multiply(t, e)) return true;
  }
  return false;
}

bool germ_equiv_def(const Germ& g1, const Germ& g2, const IdempotentUniverse& u) {
  if (!same_point(g1.window(), g2.window())) return false;
  const GermDefinitionOracle oracle(u.semigroup(), g1.window(), u);
  if (oracle.equivalent(g1.element(), g2.element())) return true;
  if (germ_equiv_lemma(g1, g2)) {
    throw TilingError(ErrorCode::UniverseTooSmall, "no witness idempotent in the universe");
  }
  return false;
}

Germ compose(const TilingSemigroup& semigroup, const Germ& g1, const Germ& g2) {
  if (!same_point(g1.window(), *g2.image())) throw TilingError(ErrorCode::NotComposable, "germ windows do not match");
  Element st = semigroup.multiply(g1.element(), g2.element());
  if (st.is_zero()) throw TilingError(ErrorCode::ZeroProduct, "composable germs with zero product");
  return Germ(std::move(st), g2.window_ptr());
}

Germ invert(const Germ& g) {
  return Germ(star(g.element()), g.image());
}

RpuncPair::RpuncPair(WindowPtr source, Vec2 displacement, WindowPtr range)
    : source_(std::move(source)), displacement_(displacement) {
  if (range) std::call_once(range_->once, [&] { range_->window = std::move(range); });
}

const WindowPtr& RpuncPair::range() const {
  std::call_once(range_->once, [&] { range_->window = std::make_shared<const Window>(source_->translated(-displacement_)); });
  return range_->window;
}

bool same_pair(const RpuncPair& a, const RpuncPair& b) {
  return a.displacement() == b.displacement() && same_point(*a.source(), *b.source());
}

RpuncPair rpunc_compose(const RpuncPair& p1, const RpuncPair& p2) {
  if (!same_point(*p1.source(), *p2.range())) throw TilingError(ErrorCode::NotComposable, "pair windows do not match");
  return {p2.source(), p1.displacement() + p2.displacement()};
}

RpuncPair rpunc_invert(const RpuncPair& p) { return {p.range(), -p.displacement(), p.source()}; }

RpuncPair alpha(const Germ& g) { return {g.window_ptr(), g.element().displacement()}; }

std::vector<Vec2> connecting_path(Vec2 x, PathOrder order) {
  std::vector<Vec2> cells;
  auto run = [&](Vec2 from, Vec2 to) {
    const Vec2 step{(to.x > from.x) - (to.x < from.x), (to.y > from.y) - (to.y < from.y)};
    for (Vec2 c = from; c != to; c = c + step) cells.push_back(c);
  };
  const Vec2 corner = order == PathOrder::HorizontalFirst ? Vec2{x.x, 0} : Vec2{0, x.y};
  run({0, 0}, corner);
  run(corner, x);
  cells.push_back(x);
  std::sort(cells.begin(), cells.end());
  return cells;
}

Germ alpha_inv(const TilingSemigroup& semigroup, const RpuncPair& p, PathOrder order) {
  const Window& w = *p.source();
  const Vec2 x = p.displacement();
  if (chebyshev_norm(x) > w.radius()) {
    throw TilingError(ErrorCode::InsufficientWindow, "displacement leaves the window");
  }
  std::vector<Tile> tiles;
  for (Vec2 c : connecting_path(x, order)) tiles.push_back({w.at(c), c});
  const Patch path = Patch::from_sorted(std::move(tiles));
  return Germ(semigroup.dppc({w.at(x), x}, path, w.origin_tile()), p.source());
}

BasisReport basis_correspondence(const Element& s, const Patch& q, const std::vector<WindowPtr>& windows) {
  if (s.is_zero() || !q.contains_all(s.patch())) {
    throw TilingError(ErrorCode::DomainViolation, "U(Q, t2) is not inside the domain of s");
  }
  using Key = std::tuple<std::uint64_t, std::uint64_t, Vec2>;
  std::set<Key> image;
  std::set<Key> graph;
  for (const WindowPtr& w : windows) {
    if (!w->covers(q)) throw TilingError(ErrorCode::InsufficientWindow, "marker patch leaves the window");
    // Germs [s, W] with W in U(Q, t2), pushed through alpha.
    if (in_domain(s, *w) && w->contains(q)) {
      const RpuncPair p = alpha(Germ(s, w));
      image.emplace(p.source()->fingerprint(), p.range()->fingerprint(), p.displacement());
    }
    // The graph of theta on U(Q, t2), membership read off the occurrence list.
    const auto at = find_occurrences(q, w->patch());
    if (std::binary_search(at.begin(), at.end(), Vec2{0, 0})) {
      graph.emplace(w->fingerprint(), w->translated(-s.displacement()).fingerprint(), s.displacement());
    }
  }
  return {image.size(), graph.size(), image == graph};
}

}  // namespace tilingsg
