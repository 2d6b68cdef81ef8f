// Acceptance battery: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tilingsg/error.hpp"
#include "tilingsg/filters.hpp"
#include "tilingsg/groupoid.hpp"
#include "tilingsg/semigroup.hpp"
#include "tilingsg/substitution.hpp"

using namespace tilingsg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Interns elements so that products can be memoized by id.
class ProductTable {
 public:
  explicit ProductTable(const TilingSemigroup& sg) : sg_(sg) { elements_.push_back(Element::zero()); }

  std::uint32_t id(const Element& e) {
    if (e.is_zero()) return 0;
    auto [it, inserted] = ids_.emplace(e, static_cast<std::uint32_t>(elements_.size()));
    if (inserted) elements_.push_back(e);
    return it->second;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint32_t r = id(sg_.multiply(elements_[a], elements_[b]));
    memo_.emplace(key, r);
    return r;
  }

 private:
  const TilingSemigroup& sg_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::uint32_t, ElementHash> ids_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

// Elements of `pool` whose canonical patch lies in the window.
std::vector<Element> in_domain_elements(const std::vector<Element>& pool, const Window& w) {
  std::vector<Element> out;
  for (const Element& e : pool) {
    if (in_domain(e, w)) out.push_back(e);
  }
  return out;
}

// A random element [t1, P, T(0)] with P a box around the origin of w, inside
// B_r with at most n cells.
Element random_local_element(const TilingSemigroup& sg, const Window& w, int r, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> side(0, r);
  for (;;) {
    const int l = side(rng), rt = side(rng), dn = side(rng), up = side(rng);
    if ((l + rt + 1) * (dn + up + 1) > n) continue;
    std::vector<Tile> tiles;
    for (int y = -dn; y <= up; ++y)
      for (int x = -l; x <= rt; ++x) tiles.push_back({w.at({x, y}), {x, y}});
    const Tile t1 = tiles[rng() % tiles.size()];
    return sg.dppc(t1, Patch(std::move(tiles)), w.origin_tile());
  }
}

Outcome criterion_1(const TilingSemigroup& sg) {
  const auto t0 = Clock::now();
  const auto elements = sg.enumerate_elements(2, 6);
  std::size_t regular = 0, involution = 0;
  std::vector<Element> idempotents;
  for (const Element& a : elements) {
    const Element as = star(a);
    if (sg.multiply(a, sg.multiply(as, a)) == a && sg.multiply(as, sg.multiply(a, as)) == as) ++regular;
    if (star(as) == a) ++involution;
    if (sg.multiply(a, a) == a && as == a) idempotents.push_back(a);
  }
  std::size_t commuting = 0;
  for (const Element& e : idempotents)
    for (const Element& f : idempotents)
      if (sg.multiply(e, f) == sg.multiply(f, e)) ++commuting;

  ProductTable table(sg);
  const auto small = sg.enumerate_elements(1, 4);
  std::vector<std::uint32_t> ids;
  for (const Element& e : small) ids.push_back(table.id(e));
  const std::size_t n = ids.size();
  std::vector<std::uint32_t> base(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i * n + j] = table.mul(ids[i], ids[j]);
  std::size_t assoc_fail = 0, assoc_nonzero = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint32_t ab = base[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t bc = base[b * n + c];
        const std::uint32_t left = table.mul(ab, ids[c]);
        const std::uint32_t right = table.mul(ids[a], bc);
        if (left != right) ++assoc_fail;
        if (left != 0) ++assoc_nonzero;
      }
    }

  std::mt19937_64 rng(0x5eed0001);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::size_t random_fail = 0, random_nonzero = 0;
  for (int k = 0; k < 10000; ++k) {
    const Element& a = elements[pick(rng)];
    const Element& b = elements[pick(rng)];
    const Element& c = elements[pick(rng)];
    const Element left = sg.multiply(sg.multiply(a, b), c);
    if (left != sg.multiply(a, sg.multiply(b, c))) ++random_fail;
    if (!left.is_zero()) ++random_nonzero;
  }
  // Triples read off one window, so that most products are non-zero.
  const Window w = fixed_point_window(sg.system(), 24);
  std::uniform_int_distribution<int> shift(-12, 12);
  std::size_t chained_fail = 0, chained_nonzero = 0;
  for (int k = 0; k < 10000; ++k) {
    // a, b, c with t2(a) = t1(b) and t2(b) = t1(c) on the tiling.
    const Window wc = w.translated({shift(rng), shift(rng)});
    const Element c = random_local_element(sg, wc, 2, 6, rng);
    const Window wb = theta_omega(c, wc);
    const Element b = random_local_element(sg, wb, 2, 6, rng);
    const Element a = random_local_element(sg, theta_omega(b, wb), 2, 6, rng);
    const Element left = sg.multiply(sg.multiply(a, b), c);
    if (left != sg.multiply(a, sg.multiply(b, c))) ++chained_fail;
    if (!left.is_zero()) ++chained_nonzero;
  }
  const double secs = seconds_since(t0);

  std::ostringstream d;
  d << elements.size() << " elements (r=2,N=6): regular " << regular << ", involutive " << involution << "; "
    << idempotents.size() << " idempotents, commuting pairs " << commuting << "/" << idempotents.size() * idempotents.size()
    << "; associativity exhaustive on " << n << "^3 = " << n * n * n << " triples (r=1,N=4), " << assoc_fail
    << " failures, " << assoc_nonzero << " non-zero; 10^4 random r=2 triples " << random_fail << " failures ("
    << random_nonzero << " non-zero); 10^4 window-chained triples " << chained_fail << " failures (" << chained_nonzero
    << " non-zero); " << secs << " s (limit 120 s)";
  const bool pass = regular == elements.size() && involution == elements.size() &&
                    commuting == idempotents.size() * idempotents.size() && assoc_fail == 0 && random_fail == 0 &&
                    chained_fail == 0 && secs <= 120.0;
  return {pass, d.str()};
}

Outcome criterion_2(const TilingSemigroup& sg) {
  const auto elements = sg.enumerate_elements(2, 6);
  std::unordered_map<std::uint8_t, std::vector<Element>> by_t1;
  for (const Element& e : elements) by_t1[label_index(e.t1().label)].push_back(e);
  const Window region = fixed_point_window(sg.system(), 32);
  const Language oracle_language(sg.system());
  std::mt19937_64 rng(0x5eed0002);
  std::size_t disagreements = 0, nonzero = 0;
  std::uniform_int_distribution<int> shift(-24, 24);
  for (int k = 0; k < 1000; ++k) {
    Element a, b;
    if (k % 2 == 0) {
      a = elements[rng() % elements.size()];
      const auto& matching = by_t1[label_index(a.t2().label)];
      b = matching[rng() % matching.size()];
    } else {
      // A pair that sits together somewhere in the tiling.
      const Window wb = region.translated({shift(rng), shift(rng)});
      const auto bs = in_domain_elements(elements, wb);
      b = bs[rng() % bs.size()];
      const auto as = in_domain_elements(elements, theta_omega(b, wb));
      a = as[rng() % as.size()];
    }
    const bool product_nonzero = !sg.multiply(a, b).is_zero();
    // The aligned union: b moved so that its t1 lands on a's t2.
    const Patch a_side = a.patch();
    const Patch b_side = translate_patch(b.patch(), -b.displacement());
    const auto joined = try_patch_union(a_side, b_side);
    const bool union_admissible = joined && oracle_language.admits(*joined);
    // Some realized point lies in U(P, t2) and U(P', t1').
    const auto occ_a = find_occurrences(a_side, region.patch());
    const auto occ_b = find_occurrences(b_side, region.patch());
    std::vector<Vec2> both;
    std::set_intersection(occ_a.begin(), occ_a.end(), occ_b.begin(), occ_b.end(), std::back_inserter(both));
    const bool realized = !both.empty();
    if (product_nonzero != union_admissible || product_nonzero != realized) ++disagreements;
    if (product_nonzero) ++nonzero;
  }
  std::ostringstream d;
  d << "1000 seeded pairs (" << nonzero << " non-zero): " << disagreements
    << " disagreements between product, aligned-union admissibility and realization in the R=32 window";
  return {disagreements == 0, d.str()};
}

struct GermPopulation {
  std::vector<WindowPtr> windows;
  std::vector<std::vector<Element>> elements;  // per window, the s with W in U(P, t2)
  std::unordered_map<std::uint64_t, std::size_t> by_class;  // B_3 content -> window
};

GermPopulation germ_population(const TilingSemigroup& sg) {
  GermPopulation pop;
  const auto pool = sg.enumerate_elements(2, 25);
  for (Window& w : realize_windows(sg.system(), 3, 16)) {
    pop.by_class.emplace(w.restricted(3).fingerprint(), pop.windows.size());
    pop.elements.push_back(in_domain_elements(pool, w));
    pop.windows.push_back(std::make_shared<const Window>(std::move(w)));
  }
  return pop;
}

std::vector<Germ> germs_at(const GermPopulation& pop, std::size_t w) {
  std::vector<Germ> out;
  for (const Element& s : pop.elements[w]) out.emplace_back(s, pop.windows[w]);
  return out;
}

struct GermResults {
  std::size_t germs = 0, pairs = 0, equivalent = 0;
  std::size_t disagreements = 0, escalations = 0;
  std::size_t not_well_defined = 0, not_injective = 0;
  std::size_t unrealized = 0, alpha_inv_fail = 0, path_dependence = 0;
  std::size_t composable = 0, unmatched = 0, multiplicative_fail = 0;
  std::size_t inverse_fail = 0, unit_fail = 0;
  double seconds_def = 0, seconds_alpha = 0;
};

GermResults run_germ_checks(const TilingSemigroup& sg, const GermPopulation& pop) {
  GermResults res;
  auto t0 = Clock::now();
  const IdempotentUniverse universe(sg, 4, 81);
  for (std::size_t w = 0; w < pop.windows.size(); ++w) {
    const auto germs = germs_at(pop, w);
    const GermDefinitionOracle oracle(sg, *pop.windows[w], universe);
    std::vector<Element> witness;
    std::vector<RpuncPair> pairs;
    for (const Germ& g : germs) {
      witness.push_back(oracle.witness_product(g.element()));
      pairs.push_back(alpha(g));
    }
    res.germs += germs.size();
    for (std::size_t i = 0; i < germs.size(); ++i) {
      for (std::size_t j = 0; j < germs.size(); ++j) {
        ++res.pairs;
        const bool def = !witness[i].is_zero() && witness[i] == witness[j];
        const bool lemma = germ_equiv_lemma(germs[i], germs[j]);
        if (def != lemma) ++res.disagreements;
        if (lemma && !def) ++res.escalations;
        if (lemma) ++res.equivalent;
        const bool same_image = same_pair(pairs[i], pairs[j]);
        if (lemma && !same_image) ++res.not_well_defined;
        if (same_image && !lemma) ++res.not_injective;
      }
    }
  }
  res.seconds_def = seconds_since(t0);

  t0 = Clock::now();
  // First factors of composable pairs; their image caches stay unused.
  std::vector<std::vector<Germ>> first;
  for (std::size_t w = 0; w < pop.windows.size(); ++w) first.push_back(germs_at(pop, w));
  for (std::size_t w = 0; w < pop.windows.size(); ++w) {
    const WindowPtr& win = pop.windows[w];
    const auto germs = germs_at(pop, w);
    // Surjectivity onto (W - x, W) with |x| <= 2, and alpha_inv round trips.
    for (int y = -2; y <= 2; ++y) {
      for (int x = -2; x <= 2; ++x) {
        const RpuncPair p(win, {x, y});
        const bool hit = std::any_of(germs.begin(), germs.end(), [&](const Germ& g) { return same_pair(alpha(g), p); });
        if (!hit) ++res.unrealized;
        const Germ back = alpha_inv(sg, p);
        if (!same_pair(alpha(back), p)) ++res.alpha_inv_fail;
        if (!germ_equiv_lemma(back, alpha_inv(sg, p, PathOrder::VerticalFirst))) ++res.path_dependence;
      }
    }
    for (const Germ& g : germs) {
      if (!germ_equiv_lemma(alpha_inv(sg, alpha(g)), g)) ++res.alpha_inv_fail;
      const RpuncPair p = alpha(g);
      if (!same_pair(alpha(invert(g)), rpunc_invert(p))) ++res.inverse_fail;
      if (g.element().is_idempotent() != (p.displacement() == Vec2{})) ++res.unit_fail;
      // Composable pairs inside the population: [s, theta_t(W)] [t, W].
      const WindowPtr& moved = g.image();
      const auto it = pop.by_class.find(moved->restricted(3).fingerprint());
      if (it == pop.by_class.end() || !same_point(*pop.windows[it->second], *moved)) {
        ++res.unmatched;
        continue;
      }
      for (const Germ& g1 : first[it->second]) {
        ++res.composable;
        const RpuncPair lhs = alpha(compose(sg, g1, g));
        if (!same_pair(lhs, rpunc_compose(alpha(g1), p))) ++res.multiplicative_fail;
      }
    }
  }
  res.seconds_alpha = seconds_since(t0);
  return res;
}

Outcome criterion_3(const GermResults& r, std::size_t windows) {
  std::ostringstream d;
  d << r.germs << " germs over " << windows << " windows (R=16), " << r.pairs << " same-point pairs, " << r.equivalent
    << " equivalent; universe (r=4,N=81); " << r.disagreements << " disagreements, " << r.escalations
    << " UniverseTooSmall escalations; " << r.seconds_def << " s";
  return {r.disagreements == 0 && r.escalations == 0, d.str()};
}

Outcome criterion_4(const GermResults& r) {
  std::ostringstream d;
  d << "well-defined failures " << r.not_well_defined << ", injectivity failures " << r.not_injective
    << ", unrealized displacements " << r.unrealized << ", alpha_inv failures " << r.alpha_inv_fail
    << ", path dependence " << r.path_dependence << ", multiplicative failures " << r.multiplicative_fail << " over "
    << r.composable << " composable pairs (" << r.unmatched << " germs with image outside the population), inverse failures "
    << r.inverse_fail << ", unit-space failures " << r.unit_fail << "; " << r.seconds_alpha << " s";
  const bool pass = r.not_well_defined == 0 && r.not_injective == 0 && r.unrealized == 0 && r.alpha_inv_fail == 0 &&
                    r.path_dependence == 0 && r.multiplicative_fail == 0 && r.composable > 0 && r.inverse_fail == 0 &&
                    r.unit_fail == 0;
  return {pass, d.str()};
}

Outcome criterion_5(const TilingSemigroup& sg, const GermPopulation& pop) {
  const auto t0 = Clock::now();
  const IdempotentUniverse universe(sg, 2, 25);
  // Group germs by element so each conjugation table is built once.
  std::unordered_map<Element, std::vector<std::size_t>, ElementHash> windows_of;
  std::vector<Element> order;
  for (std::size_t w = 0; w < pop.windows.size(); ++w) {
    for (const Element& s : pop.elements[w]) {
      auto [it, inserted] = windows_of.try_emplace(s);
      if (inserted) order.push_back(s);
      it->second.push_back(w);
    }
  }
  std::vector<Character> psi_w;
  for (const WindowPtr& w : pop.windows) psi_w.push_back(psi(*w, universe));
  std::unordered_map<std::uint64_t, Character> psi_moved;  // keyed by window index and x_s
  std::size_t entries = 0, determinate = 0, mismatches = 0, instances = 0;
  for (const Element& s : order) {
    const ConjugationTable table(s, universe);
    for (std::size_t w : windows_of[s]) {
      ++instances;
      const Character left = theta_tight(table, psi_w[w]);
      const Vec2 x = s.displacement();
      const std::uint64_t key = (w << 16) | (static_cast<std::uint64_t>(x.x + 128) << 8) | static_cast<std::uint64_t>(x.y + 128);
      auto it = psi_moved.find(key);
      if (it == psi_moved.end()) it = psi_moved.emplace(key, psi(theta_omega(s, *pop.windows[w]), universe)).first;
      const Character& right = it->second;
      for (std::size_t i = 0; i < universe.size(); ++i) {
        ++entries;
        if (left.values[i] == Truth::Unknown) continue;
        ++determinate;
        if (left.values[i] != right.values[i]) ++mismatches;
      }
    }
  }
  const double coverage = static_cast<double>(determinate) / static_cast<double>(entries);
  std::ostringstream d;
  d << instances << " (s, W) instances, " << order.size() << " distinct s, universe (r=2,N=" << universe.max_tiles()
    << ") of " << universe.size() << " items; determinate coverage " << coverage * 100 << "% (need >= 90%); "
    << mismatches << " mismatches; " << seconds_since(t0) << " s";
  return {coverage >= 0.9 && mismatches == 0, d.str()};
}

// Windows of a system at seeded positions of its fixed point.
std::vector<Window> seeded_windows(const SubstitutionSystem& s, std::size_t count, std::mt19937_64& rng) {
  const Window big = fixed_point_window(s, 48);
  std::uniform_int_distribution<int> shift(-32, 32);
  std::vector<Window> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(big.translated({shift(rng), shift(rng)}));
  return out;
}

Outcome criterion_6() {
  std::mt19937_64 rng(0x5eed0006);
  std::size_t filters = 0, filter_fail = 0, ultra_yes = 0, ultra_other = 0, chair_windows = 0;
  const std::vector<std::pair<std::string, std::size_t>> plan{{"solid", 16}, {"checkerboard", 17}, {"chair", 17}};
  for (const auto& [name, count] : plan) {
    const TilingSemigroup sg(builtin_system(name));
    const IdempotentUniverse u(sg, 3, 49);
    for (const Window& w : seeded_windows(sg.system(), count, rng)) {
      const Filter f = xi_T(w, u);
      ++filters;
      if (!is_filter(f)) ++filter_fail;
      if (name == "chair") {
        ++chair_windows;
        if (is_ultrafilter(f).verdict == Verdict::Yes) {
          ++ultra_yes;
        } else {
          ++ultra_other;
        }
      }
    }
  }
  // Every subset of the solid universe (r=1, N=4), filters picked by the axioms.
  const TilingSemigroup solid(builtin_system("solid"));
  const IdempotentUniverse u(solid, 1, 4);
  std::size_t subsets = 0, found = 0, reconstruct_fail = 0, shortcut_disagree = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << u.size()); ++mask) {
    Filter f{&u, {}};
    for (std::size_t i = 0; i < u.size(); ++i)
      if (mask >> i & 1) f.members.push_back(i);
    ++subsets;
    const bool axioms = is_filter_pairwise(f);
    if (axioms != is_filter(f)) ++shortcut_disagree;
    if (!axioms) continue;
    ++found;
    try {
      if (!(xi_patch(filter_patch(f), u) == f)) ++reconstruct_fail;
      if (!(filter_of(character_of(f)) == f)) ++reconstruct_fail;
    } catch (const TilingError&) {
      ++reconstruct_fail;
    }
  }
  std::ostringstream d;
  d << filters << " seeded windows (universe r=3,N=49): " << filter_fail << " not filters; chair ultrafilter "
    << ultra_yes << "/" << chair_windows << " (" << ultra_other << " not); solid (r=1,N=4) universe of " << u.size()
    << " items: " << found << " filters among " << subsets << " subsets, " << reconstruct_fail
    << " reconstruction failures, " << shortcut_disagree << " is_filter disagreements with the pairwise axioms";
  return {filter_fail == 0 && ultra_other == 0 && ultra_yes == chair_windows && reconstruct_fail == 0 &&
              shortcut_disagree == 0 && found > 0,
          d.str()};
}

Outcome criterion_7(const TilingSemigroup& sg, const GermPopulation& pop) {
  const IdempotentUniverse u(sg, 3, 49);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<Character> chars;
  std::size_t collisions = 0;
  for (const WindowPtr& w : pop.windows) {
    chars.push_back(psi(*w, u));
    StableHash h;
    for (Truth t : chars.back().values) h.add_int(static_cast<int>(t));
    auto& bucket = buckets[h.value()];
    for (std::size_t j : bucket)
      if (chars[j] == chars.back()) ++collisions;
    bucket.push_back(chars.size() - 1);
  }
  std::ostringstream d;
  d << pop.windows.size() << " B_3-distinct chair windows, universe (r=3,N=49) of " << u.size() << " items: "
    << collisions << " collisions";
  return {collisions == 0 && pop.windows.size() == atlas(sg.system(), 3).patches.size(), d.str()};
}

Outcome criterion_8(const TilingSemigroup& sg) {
  std::ostringstream d;
  bool pass = true;
  d << "atlas(chair, r) saturation depths";
  for (int r = 0; r <= 3; ++r) {
    try {
      const Atlas a = atlas(sg.system(), r);
      d << " r=" << r << ":" << a.patches.size() << "@" << a.saturation_depth;
    } catch (const TilingError& e) {
      d << " r=" << r << ":" << e.what();
      pass = false;
    }
  }
  const auto chair_period = detect_period(fixed_point_window(sg.system(), 16));
  const auto solid_period = detect_period(fixed_point_window(builtin_system("solid"), 8));
  d << "; chair R=16 period " << (chair_period ? to_string(*chair_period) : "none") << "; solid R=8 period "
    << (solid_period ? to_string(*solid_period) : "none");
  pass = pass && !chair_period && solid_period == Vec2{1, 0};
  const RepetitivityReport rep = repetitivity(sg.system(), 2, 64, 32);
  d << "; repetitivity of " << rep.patch_count << " atlas(chair,2) patches: r0 = " << rep.radius
    << (rep.complete ? "" : " (incomplete)");
  pass = pass && rep.complete && rep.patch_count == atlas(sg.system(), 2).patches.size();
  return {pass, d.str()};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("criterion %d [%s] %s: %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  auto guarded = [&](int id, const char* name, const std::function<Outcome()>& run) {
    try {
      report(id, name, run());
    } catch (const std::exception& e) {
      report(id, name, {false, std::string("exception: ") + e.what()});
    }
  };

  const TilingSemigroup chair(builtin_system("chair"));
  guarded(1, "inverse-semigroup certification", [&] { return criterion_1(chair); });
  guarded(2, "non-zero product criterion", [&] { return criterion_2(chair); });
  const GermPopulation pop = germ_population(chair);
  GermResults germs;
  bool germs_ok = true;
  std::string germ_error;
  try {
    germs = run_germ_checks(chair, pop);
  } catch (const std::exception& e) {
    germs_ok = false;
    germ_error = std::string("exception: ") + e.what();
  }
  guarded(3, "germ equivalence: definition vs lemma", [&] {
    return germs_ok ? criterion_3(germs, pop.windows.size()) : Outcome{false, germ_error};
  });
  guarded(4, "alpha is a groupoid isomorphism at scale",
          [&] { return germs_ok ? criterion_4(germs) : Outcome{false, germ_error}; });
  guarded(5, "commuting diagram theta_tight / theta_omega", [&] { return criterion_5(chair, pop); });
  guarded(6, "xi_T filters, ultrafilters, reconstruction", [&] { return criterion_6(); });
  guarded(7, "psi injectivity", [&] { return criterion_7(chair, pop); });
  guarded(8, "assumptions harness and total runtime", [&] {
    Outcome o = criterion_8(chair);
    const double total = seconds_since(start);
    o.detail += "; battery runtime " + std::to_string(total) + " s (limit 600 s)";
    o.pass = o.pass && total <= 600.0;
    return o;
  });
  std::printf("acceptance: %d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
