#include "tilingsg/filters.hpp"

#include <algorithm>

#include "tilingsg/error.hpp"

namespace tilingsg {

IdempotentUniverse::IdempotentUniverse(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                                       ShapeFamily family)
    : semigroup_(&semigroup),
      radius_(radius),
      max_tiles_(max_tiles),
      items_(semigroup.enumerate_idempotents(radius, max_tiles, family)) {
  build_index();
}

IdempotentUniverse::IdempotentUniverse(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                                       std::vector<Element> items)
    : semigroup_(&semigroup), radius_(radius), max_tiles_(max_tiles), items_(std::move(items)) {
  for (const Element& e : items_) {
    if (!e.is_idempotent()) throw TilingError(ErrorCode::NotIdempotent, "universe items must be idempotents");
  }
  build_index();
}

void IdempotentUniverse::build_index() {
  index_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(items_[i], i);
}

std::optional<std::size_t> IdempotentUniverse::index_of(const Element& e) const {
  if (e.is_zero()) return std::nullopt;
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IdempotentUniverse build_universe(const TilingSemigroup& semigroup, int radius, std::size_t max_tiles,
                                  ShapeFamily family) {
  return IdempotentUniverse(semigroup, radius, max_tiles, family);
}

bool Filter::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

Filter xi_T(const Window& w, const IdempotentUniverse& u) {
  if (w.radius() < u.radius()) throw TilingError(ErrorCode::InsufficientWindow, "window radius below universe radius");
  Filter f{&u, {}};
  const Label origin = w.origin_label();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Patch& p = u[i].patch();
    if (*p.label_at({0, 0}) == origin && w.contains(p)) f.members.push_back(i);
  }
  return f;
}

Filter xi_patch(const Patch& p, const IdempotentUniverse& u) {
  Filter f{&u, {}};
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (p.contains_all(u[i].patch())) f.members.push_back(i);
  }
  return f;
}

std::optional<std::size_t> least_member(const Filter& f) {
  if (f.members.empty()) return std::nullopt;
  const IdempotentUniverse& u = *f.universe;
  const TilingSemigroup& sg = u.semigroup();
  // The least member has the largest patch.
  std::size_t best = f.members.front();
  for (std::size_t i : f.members) {
    if (u[i].patch().size() > u[best].patch().size()) best = i;
  }
  for (std::size_t i : f.members) {
    if (!sg.leq(u[best], u[i])) return std::nullopt;
  }
  return best;
}

bool is_filter(const Filter& f) {
  if (f.members.empty()) return false;
  const IdempotentUniverse& u = *f.universe;
  const TilingSemigroup& sg = u.semigroup();
  if (const auto m = least_member(f)) {
    // With a least member, upward closure is F = up(m) and m bounds every pair.
    for (std::size_t g = 0; g < u.size(); ++g) {
      if (sg.leq(u[*m], u[g]) != f.contains(g)) return false;
    }
    return true;
  }
  for (std::size_t g = 0; g < u.size(); ++g) {
    if (f.contains(g)) continue;
    for (std::size_t i : f.members)
      if (sg.leq(u[i], u[g])) return false;
  }
  for (std::size_t i : f.members) {
    for (std::size_t j : f.members) {
      if (j <= i) continue;
      const Element p = sg.multiply(u[i], u[j]);
      if (p.is_zero()) return false;
      const auto k = u.index_of(p);
      if (k && !f.contains(*k)) return false;
    }
  }
  return true;
}

bool is_filter_pairwise(const Filter& f) {
  if (f.members.empty()) return false;
  const IdempotentUniverse& u = *f.universe;
  const TilingSemigroup& sg = u.semigroup();
  for (std::size_t i : f.members) {
    for (std::size_t g = 0; g < u.size(); ++g) {
      if (!f.contains(g) && sg.leq(u[i], u[g])) return false;
    }
  }
  for (std::size_t i : f.members) {
    for (std::size_t j : f.members) {
      const bool bounded = std::any_of(f.members.begin(), f.members.end(), [&](std::size_t k) {
        return sg.leq(u[k], u[i]) && sg.leq(u[k], u[j]);
      });
      if (bounded) continue;
      const Element p = sg.multiply(u[i], u[j]);
      if (p.is_zero() || u.index_of(p)) return false;
    }
  }
  return true;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::No: return "no";
    case Verdict::Yes: return "yes";
    case Verdict::Indeterminate: return "indet";
  }
  return "?";
}

UltrafilterReport is_ultrafilter(const Filter& f) {
  UltrafilterReport report;
  if (!is_filter(f)) return report;
  const IdempotentUniverse& u = *f.universe;
  const TilingSemigroup& sg = u.semigroup();
  const auto m = least_member(f);
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (f.contains(e)) continue;
    if (m) {
      const Element p = sg.multiply(u[e], u[*m]);
      if (p.is_zero()) continue;
      if (u.index_of(p)) {
        report.extension = e;
        return report;
      }
      ++report.escapes;
      continue;
    }
    // No least member: try the filter generated by F, e and their products in U.
    std::vector<bool> in(u.size());
    for (std::size_t i : f.members) in[i] = true;
    in[e] = true;
    bool excluded = false;
    for (std::size_t i : f.members) {
      const Element p = sg.multiply(u[e], u[i]);
      if (p.is_zero()) {
        excluded = true;
        break;
      }
      if (const auto k = u.index_of(p)) in[*k] = true;
    }
    if (excluded) continue;
    Filter g{&u, {}};
    for (std::size_t x = 0; x < u.size(); ++x) {
      bool above = in[x];
      for (std::size_t y = 0; y < u.size() && !above; ++y) above = in[y] && sg.leq(u[y], u[x]);
      if (above) g.members.push_back(x);
    }
    if (is_filter(g)) {
      report.extension = e;
      return report;
    }
    ++report.escapes;
  }
  report.verdict = report.escapes == 0 ? Verdict::Yes : Verdict::Indeterminate;
  return report;
}

Patch filter_patch(const Filter& f) {
  if (f.members.empty()) throw TilingError(ErrorCode::InvalidPatch, "empty filter has no patch");
  const IdempotentUniverse& u = *f.universe;
  Patch out = u[f.members.front()].patch();
  for (std::size_t i : f.members) out = patch_union(out, u[i].patch());
  return out;
}

char truth_char(Truth t) {
  switch (t) {
    case Truth::False: return '0';
    case Truth::True: return '1';
    case Truth::Unknown: return '?';
  }
  return '?';
}

std::size_t Character::unknown_count() const {
  return static_cast<std::size_t>(std::count(values.begin(), values.end(), Truth::Unknown));
}

bool Character::agrees_with(const Character& o) const {
  if (universe != o.universe || values.size() != o.values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != Truth::Unknown && o.values[i] != Truth::Unknown && values[i] != o.values[i]) return false;
  }
  return true;
}

Character character_of(const Filter& f) {
  Character c{f.universe, std::vector<Truth>(f.universe->size(), Truth::False)};
  for (std::size_t i : f.members) c.values[i] = Truth::True;
  return c;
}

Filter filter_of(const Character& c) {
  Filter f{c.universe, {}};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] == Truth::Unknown) throw TilingError(ErrorCode::DomainViolation, "character has unknown entries");
    if (c.values[i] == Truth::True) f.members.push_back(i);
  }
  return f;
}

bool is_character(const Character& c) {
  const IdempotentUniverse& u = *c.universe;
  const TilingSemigroup& sg = u.semigroup();
  if (std::none_of(c.values.begin(), c.values.end(), [](Truth t) { return t == Truth::True; })) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (c.values[i] == Truth::Unknown || c.values[j] == Truth::Unknown) continue;
      const Element p = sg.multiply(u[i], u[j]);
      const bool both = c.values[i] == Truth::True && c.values[j] == Truth::True;
      if (p.is_zero()) {
        if (both) return false;
        continue;
      }
      const auto k = u.index_of(p);
      if (!k || c.values[*k] == Truth::Unknown) continue;
      if ((c.values[*k] == Truth::True) != both) return false;
    }
  }
  return true;
}

Character psi(const Window& w, const IdempotentUniverse& u) { return character_of(xi_T(w, u)); }

ConjugationTable::ConjugationTable(const Element& s, const IdempotentUniverse& u)
    : s_(s), universe_(&u), entries_(u.size(), kZeroEntry) {
  if (s.is_zero()) throw TilingError(ErrorCode::ZeroProduct, "conjugation by zero");
  const TilingSemigroup& sg = u.semigroup();
  const Element s_star = star(s);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Element c = sg.multiply(sg.multiply(s_star, u[i]), s);
    if (c.is_zero()) continue;
    const auto k = u.index_of(c);
    entries_[i] = k ? static_cast<std::int64_t>(*k) : kEscapeEntry;
  }
  domain_ = u.index_of(sg.multiply(s_star, s));
}

std::size_t ConjugationTable::domain_item() const {
  if (!domain_) throw TilingError(ErrorCode::UniverseTooSmall, "s* s is not an item of the universe");
  return *domain_;
}

Character theta_tight(const ConjugationTable& table, const Character& c) {
  if (c.universe != &table.universe()) throw TilingError(ErrorCode::DomainViolation, "character over another universe");
  if (c.values[table.domain_item()] != Truth::True) {
    throw TilingError(ErrorCode::DomainViolation, "character is not 1 on s* s");
  }
  Character out{c.universe, std::vector<Truth>(c.values.size(), Truth::False)};
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    const std::int64_t k = table[i];
    if (k == ConjugationTable::kEscapeEntry) {
      out.values[i] = Truth::Unknown;
    } else if (k >= 0) {
      out.values[i] = c.values[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

Character theta_tight(const Element& s, const Character& c, const IdempotentUniverse& u) {
  return theta_tight(ConjugationTable(s, u), c);
}

std::string write_character(const Character& c) {
  std::string out;
  const IdempotentUniverse& u = *c.universe;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += element_fingerprint(u[i]);
    out += ' ';
    out += truth_char(c.values[i]);
    out += '\n';
  }
  return out;
}

}  // namespace tilingsg
