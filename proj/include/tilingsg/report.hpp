#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tilingsg/semigroup.hpp"

namespace tilingsg {

enum class Status : std::uint8_t { Pass, Fail, Indeterminate };
std::string_view status_name(Status s);

// Verification report. Every check gets a summary line whose fingerprint
// covers all its instances, plus one line per failing or indeterminate
// instance. Lines are `check-id<TAB>fingerprint<TAB>pass|fail|indet`, sorted.
class Report {
 public:
  void note(const std::string& key, const std::string& value);
  void describe(const std::string& check, const std::string& anchor);
  void record(const std::string& check, std::uint64_t instance, Status status);
  void record(const std::string& check, std::uint64_t instance, bool ok) {
    record(check, instance, ok ? Status::Pass : Status::Fail);
  }

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
  Status status(const std::string& check) const;
  std::vector<std::string> checks() const;
  std::string text() const;

 private:
  struct Tally {
    std::string anchor;
    StableHash hash;
    std::size_t counts[3] = {0, 0, 0};
    std::vector<std::pair<std::uint64_t, Status>> flagged;
  };
  std::vector<std::pair<std::string, std::string>> notes_;
  std::map<std::string, Tally> tallies_;
};

struct SemigroupSuiteConfig {
  int radius = 1;
  std::size_t max_tiles = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  // Exhaustive triple checks are used below this many triples.
  std::size_t exhaustive_limit = 20'000'000;
};
Report semigroup_suite(const TilingSemigroup& sg, const SemigroupSuiteConfig& cfg);

struct FiltersSuiteConfig {
  int radius = 2;  // universe
  std::size_t max_tiles = 25;
  int window_radius = 16;
  std::size_t windows = 20;
  std::uint64_t seed = 1;
};
Report filters_suite(const TilingSemigroup& sg, const FiltersSuiteConfig& cfg);

struct GroupoidSuiteConfig {
  int element_radius = 1;
  std::size_t element_tiles = 9;
  int class_radius = 2;
  int window_radius = 12;
  int universe_radius = 3;
  std::size_t universe_tiles = 49;
  std::uint64_t seed = 1;
};
Report groupoid_suite(const TilingSemigroup& sg, const GroupoidSuiteConfig& cfg);

struct MetricSuiteConfig {
  int window_radius = 8;
  std::size_t samples = 60;
  std::uint64_t seed = 1;
};
Report metric_suite(const SubstitutionSystem& s, const MetricSuiteConfig& cfg);

}  // namespace tilingsg
