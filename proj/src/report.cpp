#include "tilingsg/report.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "tilingsg/error.hpp"
#include "tilingsg/filters.hpp"
#include "tilingsg/groupoid.hpp"

namespace tilingsg {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indet";
  }
  return "?";
}

void Report::note(const std::string& key, const std::string& value) { notes_.emplace_back(key, value); }

void Report::describe(const std::string& check, const std::string& anchor) { tallies_[check].anchor = anchor; }

void Report::record(const std::string& check, std::uint64_t instance, Status status) {
  Tally& t = tallies_[check];
  t.hash.add(instance);
  t.hash.add(static_cast<std::uint64_t>(status));
  ++t.counts[static_cast<int>(status)];
  if (status != Status::Pass) t.flagged.emplace_back(instance, status);
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& [name, t] : tallies_) n += t.counts[static_cast<int>(s)];
  return n;
}

Status Report::status(const std::string& check) const {
  auto it = tallies_.find(check);
  if (it == tallies_.end()) return Status::Indeterminate;
  const Tally& t = it->second;
  if (t.counts[static_cast<int>(Status::Fail)] > 0) return Status::Fail;
  if (t.counts[static_cast<int>(Status::Pass)] == 0 || t.counts[static_cast<int>(Status::Indeterminate)] > 0) {
    return Status::Indeterminate;
  }
  return Status::Pass;
}

std::vector<std::string> Report::checks() const {
  std::vector<std::string> out;
  for (const auto& [name, t] : tallies_) out.push_back(name);
  return out;
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : notes_) out += "# " + k + ": " + v + "\n";
  for (const auto& [name, t] : tallies_) {
    if (t.counts[0] + t.counts[1] + t.counts[2] == 0) {
      out += "# " + name + ": not run\n";
      continue;
    }
    out += "# " + name + ": " + std::to_string(t.counts[0]) + " pass, " + std::to_string(t.counts[1]) + " fail, " +
           std::to_string(t.counts[2]) + " indet";
    if (!t.anchor.empty()) out += " (" + t.anchor + ")";
    out += "\n";
  }
  std::vector<std::string> lines;
  for (const auto& [name, t] : tallies_) {
    if (t.counts[0] + t.counts[1] + t.counts[2] == 0) continue;
    lines.push_back(name + "\t" + hex64(t.hash.value()) + "\t" + std::string(status_name(status(name))));
    for (const auto& [inst, st] : t.flagged) {
      lines.push_back(name + "\t" + hex64(inst) + "\t" + std::string(status_name(st)));
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace {

std::uint64_t combine(std::initializer_list<std::uint64_t> parts) {
  StableHash h;
  for (auto p : parts) h.add(p);
  return h.value();
}

// Memoized products over interned element ids; id 0 is zero.
class ProductMemo {
 public:
  explicit ProductMemo(const TilingSemigroup& sg) : sg_(sg) { elements_.push_back(Element::zero()); }

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

// Windows of radius `radius` at seeded positions of the fixed point.
std::vector<Window> seeded_windows(const SubstitutionSystem& s, std::size_t count, int radius, std::uint64_t seed) {
  constexpr int spread = 32;
  const Window big = fixed_point_window(s, radius + spread);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shift(-spread, spread);
  std::vector<Window> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(big.translated({shift(rng), shift(rng)}).restricted(radius));
  return out;
}

// A random element read off the window: a box around the origin inside B_r
// with at most n cells, t2 at the origin and t1 anywhere in the box.
Element local_element(const TilingSemigroup& sg, const Window& w, int r, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> side(0, r);
  for (;;) {
    const int l = side(rng), rt = side(rng), dn = side(rng), up = side(rng);
    if (static_cast<std::size_t>((l + rt + 1) * (dn + up + 1)) > n) continue;
    std::vector<Tile> tiles;
    for (int y = -dn; y <= up; ++y)
      for (int x = -l; x <= rt; ++x) tiles.push_back({w.at({x, y}), {x, y}});
    const Tile t1 = tiles[rng() % tiles.size()];
    return sg.dppc(t1, Patch(std::move(tiles)), w.origin_tile());
  }
}

bool has_domain_item(const ConjugationTable& t) {
  try {
    t.domain_item();
    return true;
  } catch (const TilingError&) {
    return false;
  }
}

std::vector<Element> in_domain_of(const std::vector<Element>& pool, const Window& w) {
  std::vector<Element> out;
  for (const Element& e : pool)
    if (in_domain(e, w)) out.push_back(e);
  return out;
}

}  // namespace

Report semigroup_suite(const TilingSemigroup& sg, const SemigroupSuiteConfig& cfg) {
  Report rep;
  rep.note("suite", "semigroup");
  rep.note("system", sg.system().name());
  rep.note("bounds", "r=" + std::to_string(cfg.radius) + " N=" + std::to_string(cfg.max_tiles));
  rep.note("seed", std::to_string(cfg.seed));
  rep.describe("semigroup.regularity", "s s* s = s and s* s s* = s*");
  rep.describe("semigroup.involution", "s** = s and x(s*) = -x(s)");
  rep.describe("semigroup.idempotents_commute", "ef = fe on idempotents");
  rep.describe("semigroup.associativity", "(ab)c = a(bc)");
  rep.describe("semigroup.natural_order", "e = ef iff same marked tile and patch inclusion");
  rep.describe("semigroup.order_antisymmetry", "e <= f <= e implies e = f");
  rep.describe("semigroup.displacement_additivity", "x(ab) = x(a) + x(b) on non-zero products");
  rep.describe("semigroup.theta_homomorphism", "theta(ab) = theta(a) theta(b) on windows");
  rep.describe("semigroup.nonzero_criterion", "ab != 0 iff U(P, t2) and U(P', t1') meet");

  const auto elements = sg.enumerate_elements(cfg.radius, cfg.max_tiles);
  rep.note("elements", std::to_string(elements.size()));
  std::vector<Element> idempotents;
  for (const Element& a : elements) {
    const Element as = star(a);
    rep.record("semigroup.regularity", a.hash(),
               sg.multiply(a, sg.multiply(as, a)) == a && sg.multiply(as, sg.multiply(a, as)) == as);
    rep.record("semigroup.involution", a.hash(), star(as) == a && as.displacement() == -a.displacement());
    if (a.is_idempotent()) idempotents.push_back(a);
  }
  std::mt19937_64 rng(cfg.seed);
  const bool pairs_exhaustive = idempotents.size() * idempotents.size() <= cfg.exhaustive_limit;
  auto idem_pair = [&](auto&& body) {
    if (pairs_exhaustive) {
      for (const Element& e : idempotents)
        for (const Element& f : idempotents) body(e, f);
    } else {
      for (std::size_t k = 0; k < cfg.samples; ++k) body(idempotents[rng() % idempotents.size()], idempotents[rng() % idempotents.size()]);
    }
  };
  idem_pair([&](const Element& e, const Element& f) {
    const std::uint64_t inst = combine({e.hash(), f.hash()});
    rep.record("semigroup.idempotents_commute", inst, sg.multiply(e, f) == sg.multiply(f, e));
    const bool le = sg.leq(e, f);
    rep.record("semigroup.natural_order", inst, le == leq_structural(e, f));
    if (le && sg.leq(f, e)) rep.record("semigroup.order_antisymmetry", inst, e == f);
  });

  const std::size_t n = elements.size();
  if (n * n * n <= cfg.exhaustive_limit) {
    rep.note("associativity", "exhaustive");
    ProductMemo memo(sg);
    std::vector<std::uint32_t> ids;
    for (const Element& e : elements) ids.push_back(memo.id(e));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::uint32_t ab = memo.mul(ids[a], ids[b]);
        for (std::size_t c = 0; c < n; ++c) {
          const bool ok = memo.mul(ab, ids[c]) == memo.mul(ids[a], memo.mul(ids[b], ids[c]));
          rep.record("semigroup.associativity", combine({elements[a].hash(), elements[b].hash(), elements[c].hash()}), ok);
        }
      }
  } else {
    rep.note("associativity", std::to_string(cfg.samples) + " random and " + std::to_string(cfg.samples) + " chained triples");
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      const Element& a = elements[rng() % n];
      const Element& b = elements[rng() % n];
      const Element& c = elements[rng() % n];
      rep.record("semigroup.associativity", combine({a.hash(), b.hash(), c.hash()}),
                 sg.multiply(sg.multiply(a, b), c) == sg.multiply(a, sg.multiply(b, c)));
    }
  }

  // Chained triples on the tiling, so that products are non-zero.
  const int r = std::max(1, cfg.radius);
  const auto windows = seeded_windows(sg.system(), std::min<std::size_t>(cfg.samples, 2000), 4 * r + 2, cfg.seed ^ 0x9e37);
  for (const Window& wc : windows) {
    const Element c = local_element(sg, wc, r, cfg.max_tiles, rng);
    const Window wb = theta_omega(c, wc);
    const Element b = local_element(sg, wb, r, cfg.max_tiles, rng);
    const Window wa = theta_omega(b, wb);
    const Element a = local_element(sg, wa, r, cfg.max_tiles, rng);
    const std::uint64_t inst = combine({a.hash(), b.hash(), c.hash(), wc.fingerprint()});
    const Element ab = sg.multiply(a, b);
    const Element bc = sg.multiply(b, c);
    rep.record("semigroup.associativity", inst, sg.multiply(ab, c) == sg.multiply(a, bc));
    rep.record("semigroup.displacement_additivity", inst,
               !ab.is_zero() && ab.displacement() == a.displacement() + b.displacement() && !bc.is_zero() &&
                   bc.displacement() == b.displacement() + c.displacement());
    const Window lhs = theta_omega(bc, wc);
    const Window rhs = theta_omega(b, theta_omega(c, wc));
    rep.record("semigroup.theta_homomorphism", inst, windows_agree(lhs, rhs, std::min(lhs.radius(), rhs.radius())));
  }

  // Non-zero criterion against realization in a fixed-point window.
  const Window region = fixed_point_window(sg.system(), 32);
  std::unordered_map<int, std::vector<Element>> by_t1;
  for (const Element& e : elements) by_t1[label_index(e.t1().label)].push_back(e);
  const std::size_t pairs = std::min<std::size_t>(cfg.samples, 1000);
  for (std::size_t k = 0; k < pairs; ++k) {
    const Element& a = elements[rng() % n];
    const auto& matching = by_t1[label_index(a.t2().label)];
    if (matching.empty()) continue;
    const Element& b = matching[rng() % matching.size()];
    const auto occ_a = find_occurrences(a.patch(), region.patch());
    const auto occ_b = find_occurrences(translate_patch(b.patch(), -b.displacement()), region.patch());
    std::vector<Vec2> both;
    std::set_intersection(occ_a.begin(), occ_a.end(), occ_b.begin(), occ_b.end(), std::back_inserter(both));
    rep.record("semigroup.nonzero_criterion", combine({a.hash(), b.hash()}),
               sg.multiply(a, b).is_zero() == both.empty());
  }
  return rep;
}

Report filters_suite(const TilingSemigroup& sg, const FiltersSuiteConfig& cfg) {
  Report rep;
  rep.note("suite", "filters");
  rep.note("system", sg.system().name());
  rep.note("universe", "r=" + std::to_string(cfg.radius) + " N=" + std::to_string(cfg.max_tiles));
  rep.note("windows", std::to_string(cfg.windows) + " at radius " + std::to_string(cfg.window_radius));
  rep.note("seed", std::to_string(cfg.seed));
  rep.describe("filters.xi_filter", "xi_T is a filter");
  rep.describe("filters.xi_ultrafilter", "xi_T is an ultrafilter (truncated)");
  rep.describe("filters.character_table", "phi_T(e) = 1 iff T in U(P, t)");
  rep.describe("filters.character_roundtrip", "filters and characters correspond");
  rep.describe("filters.character_multiplicative", "phi(ef) = phi(e) phi(f)");
  rep.describe("filters.psi_injective", "distinct tilings give distinct characters");
  rep.describe("filters.tight_diagram", "theta_s(psi(T)) = psi(theta_s(T))");
  rep.describe("filters.tight_inverse", "theta_s* theta_s = id on the domain");
  rep.describe("filters.tight_product", "theta_{s2 s} = theta_s2 theta_s");
  rep.describe("filters.reconstruction", "a filter is xi of the union of its patches");

  if (cfg.window_radius < cfg.radius) throw TilingError(ErrorCode::InsufficientWindow, "window radius below universe radius");
  const IdempotentUniverse u(sg, cfg.radius, cfg.max_tiles);
  rep.note("items", std::to_string(u.size()));
  const bool full = cfg.max_tiles >= static_cast<std::size_t>((2 * cfg.radius + 1) * (2 * cfg.radius + 1));
  const auto windows = seeded_windows(sg.system(), cfg.windows, cfg.window_radius, cfg.seed);
  const auto pool = sg.enumerate_elements(std::min(cfg.radius, 2), std::min<std::size_t>(cfg.max_tiles, 25));
  std::mt19937_64 rng(cfg.seed ^ 0x51ed);
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;  // B_r content -> character
  const bool small = u.size() <= 400;
  for (const Window& w : windows) {
    const std::uint64_t wf = w.fingerprint();
    const Filter f = xi_T(w, u);
    rep.record("filters.xi_filter", wf, is_filter(f));
    const UltrafilterReport ur = is_ultrafilter(f);
    Status us = ur.verdict == Verdict::Yes ? Status::Pass : Status::Indeterminate;
    if (ur.verdict == Verdict::No && full) us = Status::Fail;
    rep.record("filters.xi_ultrafilter", wf, us);
    const Character c = character_of(f);
    bool table_ok = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto occ = find_occurrences(u[i].patch(), w.patch());
      const bool in_u = std::binary_search(occ.begin(), occ.end(), Vec2{0, 0});
      table_ok = table_ok && (c.values[i] == Truth::True) == in_u;
    }
    rep.record("filters.character_table", wf, table_ok);
    rep.record("filters.character_roundtrip", wf, filter_of(c) == f);
    if (small) rep.record("filters.character_multiplicative", wf, is_character(c));

    StableHash ch;
    for (Truth t : c.values) ch.add(static_cast<std::uint64_t>(t));
    const std::uint64_t key = w.restricted(cfg.radius).fingerprint();
    for (const auto& [other, val] : seen) {
      if (other != key) rep.record("filters.psi_injective", combine({key, other}), val.first != ch.value());
    }
    seen.emplace(key, std::make_pair(ch.value(), wf));

    const auto local = in_domain_of(pool, w);
    for (int k = 0; k < 8 && !local.empty(); ++k) {
      const Element& s = local[rng() % local.size()];
      const ConjugationTable table(s, u);
      const std::uint64_t inst = combine({wf, s.hash()});
      const Window tw = theta_omega(s, w);
      if (!has_domain_item(table) || tw.radius() < u.radius()) {
        rep.record("filters.tight_diagram", inst, Status::Indeterminate);
        continue;
      }
      const Character moved = theta_tight(table, c);
      rep.record("filters.tight_diagram", inst, moved.agrees_with(psi(tw, u)));
      const ConjugationTable back(star(s), u);
      if (!has_domain_item(back)) {
        rep.record("filters.tight_inverse", inst, Status::Indeterminate);
        continue;
      }
      rep.record("filters.tight_inverse", inst, theta_tight(back, moved).agrees_with(c));

      // theta_{s2 s} = theta_s2 theta_s with s2 read off the moved window.
      const auto next = in_domain_of(pool, tw);
      if (next.empty()) continue;
      const Element& s2 = next[rng() % next.size()];
      const ConjugationTable t2(s2, u);
      const ConjugationTable t12(sg.multiply(s2, s), u);
      const std::uint64_t inst2 = combine({inst, s2.hash()});
      if (!has_domain_item(t2) || !has_domain_item(t12)) {
        rep.record("filters.tight_product", inst2, Status::Indeterminate);
        continue;
      }
      try {
        rep.record("filters.tight_product", inst2, theta_tight(t12, c).agrees_with(theta_tight(t2, moved)));
      } catch (const TilingError&) {
        rep.record("filters.tight_product", inst2, Status::Indeterminate);
      }
    }
  }

  if (u.size() <= 16) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << u.size()); ++mask) {
      Filter f{&u, {}};
      for (std::size_t i = 0; i < u.size(); ++i)
        if (mask >> i & 1) f.members.push_back(i);
      const bool axioms = is_filter_pairwise(f);
      if (axioms != is_filter(f)) {
        rep.record("filters.reconstruction", mask, false);
        continue;
      }
      if (!axioms) continue;
      bool ok = false;
      try {
        ok = xi_patch(filter_patch(f), u) == f && filter_of(character_of(f)) == f;
      } catch (const TilingError&) {
      }
      rep.record("filters.reconstruction", mask, ok);
    }
  }
  return rep;
}

Report groupoid_suite(const TilingSemigroup& sg, const GroupoidSuiteConfig& cfg) {
  Report rep;
  rep.note("suite", "groupoid");
  rep.note("system", sg.system().name());
  rep.note("elements", "r=" + std::to_string(cfg.element_radius) + " N=" + std::to_string(cfg.element_tiles));
  rep.note("windows", "one per atlas(" + std::to_string(cfg.class_radius) + ") class at radius " + std::to_string(cfg.window_radius));
  rep.note("universe", "r=" + std::to_string(cfg.universe_radius) + " N=" + std::to_string(cfg.universe_tiles));
  rep.note("seed", std::to_string(cfg.seed));
  rep.describe("groupoid.equiv_def_vs_lemma", "germ equivalence: definition agrees with the lemma");
  rep.describe("groupoid.equiv_relation", "lemma equivalence is transitive");
  rep.describe("groupoid.alpha_well_defined", "equivalent germs have equal images");
  rep.describe("groupoid.alpha_injective", "equal images come from equivalent germs");
  rep.describe("groupoid.alpha_surjective", "every (T - x, T) with |x| <= r is an image");
  rep.describe("groupoid.alpha_inverse_map", "alpha_inv(alpha(g)) ~ g, independent of the path");
  rep.describe("groupoid.alpha_multiplicative", "alpha(gh) = alpha(g) alpha(h)");
  rep.describe("groupoid.alpha_inversion", "alpha(g^-1) = alpha(g)^-1");
  rep.describe("groupoid.unit_law", "g^-1 g ~ [s* s, W]");
  rep.describe("groupoid.invert_involution", "(g^-1)^-1 ~ g");
  rep.describe("groupoid.unit_space", "idempotent germs map to zero displacement");
  rep.describe("groupoid.compose_associative", "(gh)k ~ g(hk)");
  rep.describe("groupoid.basis_correspondence", "alpha(Theta(s, U)) is the graph of theta on U");

  const auto pool = sg.enumerate_elements(cfg.element_radius, cfg.element_tiles);
  const IdempotentUniverse u(sg, cfg.universe_radius, cfg.universe_tiles);
  std::vector<WindowPtr> windows;
  std::unordered_map<std::uint64_t, std::size_t> by_class;
  for (Window& w : realize_windows(sg.system(), cfg.class_radius, cfg.window_radius)) {
    by_class.emplace(w.restricted(cfg.class_radius).fingerprint(), windows.size());
    windows.push_back(std::make_shared<const Window>(std::move(w)));
  }
  std::vector<std::vector<Germ>> germs(windows.size());
  for (std::size_t w = 0; w < windows.size(); ++w)
    for (const Element& s : in_domain_of(pool, *windows[w])) germs[w].emplace_back(s, windows[w]);
  rep.note("population", std::to_string(windows.size()) + " windows");
  std::mt19937_64 rng(cfg.seed);

  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto& gs = germs[w];
    const GermDefinitionOracle oracle(sg, *windows[w], u);
    std::vector<Element> witness;
    for (const Germ& g : gs) witness.push_back(oracle.least() ? oracle.witness_product(g.element()) : Element{});
    std::vector<std::vector<bool>> eq(gs.size(), std::vector<bool>(gs.size()));
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = 0; j < gs.size(); ++j) {
        const std::uint64_t inst = combine({windows[w]->fingerprint(), gs[i].element().hash(), gs[j].element().hash()});
        const bool lemma = germ_equiv_lemma(gs[i], gs[j]);
        eq[i][j] = lemma;
        const bool def = oracle.least() ? !witness[i].is_zero() && witness[i] == witness[j]
                                        : oracle.equivalent(gs[i].element(), gs[j].element());
        rep.record("groupoid.equiv_def_vs_lemma", inst, def == lemma);
        const bool same = same_pair(alpha(gs[i]), alpha(gs[j]));
        if (lemma) rep.record("groupoid.alpha_well_defined", inst, same);
        if (same) rep.record("groupoid.alpha_injective", inst, lemma);
      }
    }
    for (std::size_t k = 0; k < 4 * gs.size() && !gs.empty(); ++k) {
      const std::size_t a = rng() % gs.size(), b = rng() % gs.size(), c = rng() % gs.size();
      if (eq[a][b] && eq[b][c]) {
        rep.record("groupoid.equiv_relation",
                   combine({windows[w]->fingerprint(), gs[a].element().hash(), gs[b].element().hash(), gs[c].element().hash()}),
                   eq[a][c] && eq[b][a]);
      }
    }
    const int reach = cfg.element_radius;
    for (int y = -reach; y <= reach; ++y) {
      for (int x = -reach; x <= reach; ++x) {
        const RpuncPair p(windows[w], {x, y});
        const bool hit = std::any_of(gs.begin(), gs.end(), [&](const Germ& g) { return same_pair(alpha(g), p); });
        rep.record("groupoid.alpha_surjective", combine({windows[w]->fingerprint(), static_cast<std::uint64_t>(x + 64),
                                                         static_cast<std::uint64_t>(y + 64)}),
                   hit);
      }
    }
    for (const Germ& g : gs) {
      const std::uint64_t inst = combine({windows[w]->fingerprint(), g.element().hash()});
      const RpuncPair p = alpha(g);
      const Germ back = alpha_inv(sg, p);
      rep.record("groupoid.alpha_inverse_map", inst,
                 germ_equiv_lemma(back, g) && germ_equiv_lemma(back, alpha_inv(sg, p, PathOrder::VerticalFirst)) &&
                     same_pair(alpha(back), p));
      rep.record("groupoid.alpha_inversion", inst, same_pair(alpha(invert(g)), rpunc_invert(p)));
      rep.record("groupoid.unit_law", inst,
                 germ_equiv_lemma(compose(sg, invert(g), g), Germ(sg.multiply(star(g.element()), g.element()), g.window_ptr())));
      rep.record("groupoid.invert_involution", inst, germ_equiv_lemma(invert(invert(g)), g));
      rep.record("groupoid.unit_space", inst, g.element().is_idempotent() == (p.displacement() == Vec2{}));
      const WindowPtr& moved = g.image();
      const auto it = by_class.find(moved->restricted(cfg.class_radius).fingerprint());
      if (it == by_class.end() || !same_point(*windows[it->second], *moved)) continue;
      for (const Germ& g1 : germs[it->second]) {
        rep.record("groupoid.alpha_multiplicative", combine({inst, g1.element().hash()}),
                   same_pair(alpha(compose(sg, g1, g)), rpunc_compose(alpha(g1), p)));
      }
      // (g2 g1) g ~ g2 (g1 g) for one composable continuation.
      const auto& next = germs[it->second];
      if (next.empty()) continue;
      const Germ& g1 = next[rng() % next.size()];
      const auto it2 = by_class.find(g1.image()->restricted(cfg.class_radius).fingerprint());
      if (it2 == by_class.end() || !same_point(*windows[it2->second], *g1.image()) || germs[it2->second].empty()) continue;
      const Germ& g2 = germs[it2->second][rng() % germs[it2->second].size()];
      const Germ left = compose(sg, compose(sg, g2, g1), g);
      const Germ right = compose(sg, g2, compose(sg, g1, g));
      rep.record("groupoid.compose_associative", combine({inst, g1.element().hash(), g2.element().hash()}),
                 germ_equiv_lemma(left, right));
    }
  }

  // Basis sets: Q = P gives the whole graph, a larger Q a subset.
  for (std::size_t k = 0; k < std::min<std::size_t>(windows.size(), 24); ++k) {
    const auto& gs = germs[k];
    if (gs.empty()) continue;
    const Element& s = gs[rng() % gs.size()].element();
    const BasisReport whole = basis_correspondence(s, s.patch(), windows);
    rep.record("groupoid.basis_correspondence", combine({s.hash(), 0}), whole.equal && whole.image_size > 0);
    std::vector<Tile> grown(s.patch().begin(), s.patch().end());
    const Box b = s.patch().bounds();
    for (int x = b.lo.x; x <= b.hi.x; ++x) {
      const Vec2 c{x, b.hi.y + 1};
      grown.push_back({windows[k]->at(c), c});
    }
    const BasisReport part = basis_correspondence(s, Patch(std::move(grown)), windows);
    rep.record("groupoid.basis_correspondence", combine({s.hash(), 1}),
               part.equal && part.image_size <= whole.image_size && part.image_size > 0);
  }
  return rep;
}

Report metric_suite(const SubstitutionSystem& s, const MetricSuiteConfig& cfg) {
  Report rep;
  rep.note("suite", "metric");
  rep.note("system", s.name());
  rep.note("windows", std::to_string(cfg.samples) + " at radius " + std::to_string(cfg.window_radius));
  rep.note("seed", std::to_string(cfg.seed));
  rep.describe("metric.self_distance", "d(W, W) = 1/R");
  rep.describe("metric.symmetry", "d(A, B) = d(B, A)");
  rep.describe("metric.triangle", "d(A, C) <= d(A, B) + d(B, C)");
  const auto ws = seeded_windows(s, cfg.samples, cfg.window_radius, cfg.seed);
  const Rational self{1, cfg.window_radius};
  for (const Window& w : ws) rep.record("metric.self_distance", w.fingerprint(), window_distance(w, w) == self);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      const Rational dij = window_distance(ws[i], ws[j]);
      rep.record("metric.symmetry", combine({ws[i].fingerprint(), ws[j].fingerprint()}), dij == window_distance(ws[j], ws[i]));
      const std::size_t k = (i * 7 + j * 13) % ws.size();
      const Rational djk = window_distance(ws[j], ws[k]);
      const Rational dik = window_distance(ws[i], ws[k]);
      const Rational sum{dij.num * djk.den + djk.num * dij.den, dij.den * djk.den};
      rep.record("metric.triangle", combine({ws[i].fingerprint(), ws[j].fingerprint(), ws[k].fingerprint()}), dik <= sum);
    }
  }
  return rep;
}

}  // namespace tilingsg
