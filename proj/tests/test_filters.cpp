#include <doctest.h>

#include <random>

#include "tilingsg/error.hpp"
#include "tilingsg/filters.hpp"

using namespace tilingsg;

namespace {

// Filter axioms read directly off multiply and leq.
bool filter_oracle(const std::vector<bool>& in, const IdempotentUniverse& u) {
  const TilingSemigroup& sg = u.semigroup();
  bool any = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!in[i]) continue;
    any = true;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (sg.leq(u[i], u[j]) && !in[j]) return false;
      if (!in[j]) continue;
      bool bounded = false;
      for (std::size_t k = 0; k < u.size() && !bounded; ++k) {
        bounded = in[k] && sg.leq(u[k], u[i]) && sg.leq(u[k], u[j]);
      }
      // Pairs whose meet leaves the universe impose nothing.
      const Element meet = sg.multiply(u[i], u[j]);
      if (!bounded && (meet.is_zero() || u.index_of(meet))) return false;
    }
  }
  return any;
}

Filter subset(const IdempotentUniverse& u, std::uint32_t mask) {
  Filter f{&u, {}};
  for (std::size_t i = 0; i < u.size(); ++i)
    if (mask >> i & 1) f.members.push_back(i);
  return f;
}

std::vector<Window> seeded_windows(const SubstitutionSystem& s, int count, int radius, std::uint64_t seed) {
  const Window big = fixed_point_window(s, radius + 24);
  std::mt19937_64 rng(seed);
  std::vector<Window> out;
  for (int i = 0; i < count; ++i) {
    const Vec2 v{static_cast<int>(rng() % 49) - 24, static_cast<int>(rng() % 49) - 24};
    out.push_back(big.translated(v).restricted(radius));
  }
  return out;
}

}  // namespace

TEST_CASE("universe basics") {
  const TilingSemigroup solid(builtin_system("solid"));
  CHECK(build_universe(solid, 0, 1).size() == 1);
  const IdempotentUniverse u(solid, 1, 4);
  CHECK(u.size() == 11);
  for (std::size_t i = 0; i < u.size(); ++i) {
    CHECK(u[i].is_idempotent());
    CHECK(u.index_of(u[i]) == i);
  }
  CHECK_FALSE(u.index_of(Element::zero()));
}

TEST_CASE("all filters of small universes, by brute force") {
  for (auto [name, r, n] : {std::tuple{"solid", 1, 4}, {"checkerboard", 1, 2}}) {
    const TilingSemigroup sg(builtin_system(name));
    const IdempotentUniverse u(sg, r, n);
    REQUIRE(u.size() <= 16);
    std::size_t filters = 0;
    for (std::uint32_t mask = 0; mask < (1u << u.size()); ++mask) {
      const Filter f = subset(u, mask);
      std::vector<bool> in(u.size());
      for (std::size_t i : f.members) in[i] = true;
      const bool expected = filter_oracle(in, u);
      CHECK(is_filter(f) == expected);
      CHECK(is_filter_pairwise(f) == expected);
      if (!expected) continue;
      ++filters;
      const Character c = character_of(f);
      CHECK(filter_of(c) == f);
      CHECK(is_character(c));
      CHECK(xi_patch(filter_patch(f), u) == f);
    }
    // Every principal upset is a filter.
    for (std::size_t i = 0; i < u.size(); ++i) {
      Filter up{&u, {}};
      for (std::size_t j = 0; j < u.size(); ++j)
        if (sg.leq(u[i], u[j])) up.members.push_back(j);
      CHECK(is_filter(up));
      CHECK(least_member(up) == i);
    }
    CHECK(filters >= u.size());
  }
}

TEST_CASE("xi_T is a filter on seeded windows of every system") {
  for (const auto& name : builtin_names()) {
    const TilingSemigroup sg(builtin_system(name));
    const IdempotentUniverse u(sg, 2, 9);
    for (const Window& w : seeded_windows(sg.system(), 50, 6, 17)) {
      const Filter f = xi_T(w, u);
      CHECK(is_filter(f));
      std::vector<bool> in(u.size());
      for (std::size_t i : f.members) in[i] = true;
      for (std::size_t i = 0; i < u.size(); ++i) CHECK(in[i] == w.contains(u[i].patch()));
    }
  }
}

TEST_CASE("xi_T is maximal in a full universe") {
  const TilingSemigroup sg(builtin_system("chair"));
  const IdempotentUniverse u(sg, 1, 9);
  for (const Window& w : seeded_windows(sg.system(), 12, 4, 3)) {
    const Filter f = xi_T(w, u);
    const UltrafilterReport rep = is_ultrafilter(f);
    // Maximal iff no outside item shares a lower bound with every member.
    bool extendable = false;
    for (std::size_t e = 0; e < u.size() && !extendable; ++e) {
      if (f.contains(e)) continue;
      for (std::size_t g = 0; g < u.size() && !extendable; ++g) {
        extendable = sg.leq(u[g], u[e]) && sg.leq(u[g], u[*least_member(f)]);
      }
    }
    CHECK_FALSE(extendable);
    CHECK(rep.verdict == Verdict::Yes);
  }
  CHECK_THROWS_AS(xi_T(fixed_point_window(sg.system(), 0), u), TilingError);
}

TEST_CASE("non-filters") {
  const TilingSemigroup sg(builtin_system("chair"));
  const IdempotentUniverse u(sg, 2, 25);
  CHECK_FALSE(is_filter(Filter{&u, {}}));
  // Two incompatible B_2 plaques with the same origin label.
  const auto windows = realize_windows(sg.system(), 2, 4);
  const Label origin = windows[0].origin_label();
  const auto other = std::find_if(windows.begin() + 1, windows.end(), [&](const Window& w) { return w.origin_label() == origin; });
  REQUIRE(other != windows.end());
  Filter both = xi_T(windows[0], u);
  const Filter second = xi_T(*other, u);
  both.members.insert(both.members.end(), second.members.begin(), second.members.end());
  std::sort(both.members.begin(), both.members.end());
  both.members.erase(std::unique(both.members.begin(), both.members.end()), both.members.end());
  CHECK_FALSE(is_filter(both));

  Character ones{&u, std::vector<Truth>(u.size(), Truth::True)};
  CHECK_FALSE(is_character(ones));
}

TEST_CASE("psi separates origin labels") {
  const TilingSemigroup sg(builtin_system("chair"));
  const IdempotentUniverse u(sg, 1, 4);
  const auto windows = realize_windows(sg.system(), 0, 3);
  REQUIRE(windows.size() == 4);
  for (std::size_t i = 0; i < windows.size(); ++i)
    for (std::size_t j = i + 1; j < windows.size(); ++j) CHECK_FALSE(psi(windows[i], u) == psi(windows[j], u));
}

TEST_CASE("tight action") {
  const TilingSemigroup sg(builtin_system("chair"));
  const IdempotentUniverse u(sg, 1, 9);
  const auto pool = sg.enumerate_elements(1, 4);
  std::size_t compared = 0;
  for (const Window& w : seeded_windows(sg.system(), 10, 6, 9)) {
    const Character c = psi(w, u);
    for (const Element& s : pool) {
      if (!in_domain(s, w)) continue;
      const ConjugationTable table(s, u);
      if (s.is_idempotent()) CHECK(theta_tight(table, c).agrees_with(c));
      const Character moved = theta_tight(s, c, u);
      CHECK(moved.agrees_with(psi(theta_omega(s, w), u)));
      // The same map computed entry by entry.
      for (std::size_t i = 0; i < u.size(); ++i) {
        const Element conj = sg.multiply(star(s), sg.multiply(u[i], s));
        const auto k = conj.is_zero() ? std::optional<std::size_t>{} : u.index_of(conj);
        if (conj.is_zero()) CHECK(moved.values[i] == Truth::False);
        else if (k) CHECK(moved.values[i] == c.values[*k]);
        else CHECK(moved.values[i] == Truth::Unknown);
      }
      // s s* may leave the universe; the inverse is checked where it is defined.
      const ConjugationTable back(star(s), u);
      bool defined = true;
      try {
        back.domain_item();
      } catch (const TilingError& e) {
        CHECK(e.code() == ErrorCode::UniverseTooSmall);
        defined = false;
      }
      if (defined) CHECK(theta_tight(back, moved).agrees_with(c));
      ++compared;
    }
  }
  CHECK(compared > 50);
  const Window w = fixed_point_window(sg.system(), 6);
  const auto outside = std::find_if(pool.begin(), pool.end(), [&](const Element& s) { return !in_domain(s, w); });
  REQUIRE(outside != pool.end());
  CHECK_THROWS_AS(theta_tight(*outside, psi(w, u), u), TilingError);
}

TEST_CASE("character text") {
  const TilingSemigroup sg(builtin_system("solid"));
  const IdempotentUniverse u(sg, 0, 1);
  const Character c = psi(fixed_point_window(sg.system(), 2), u);
  CHECK(write_character(c) == element_fingerprint(u[0]) + " 1\n");
  CHECK(truth_char(Truth::Unknown) == '?');
}
