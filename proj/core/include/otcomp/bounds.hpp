#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otcomp/value.hpp"

namespace otcomp {

/// Enumeration limits shared by every component enumerator and by the
/// checker. The defaults keep a full CP2 sweep of the registry components
/// well under a second.
struct Bounds {
  int alphabet = 3;    // characters 'a'..
  int nat_max = 3;     // naturals 0..nat_max
  int colors = 3;      // prefix of red < green < blue
  int universe = 2;    // atoms x, y, ... of a bare set
  int max_len = 3;     // longest enumerated sequence
  int depth = 3;       // context depth for observational equality
  int sites = 2;       // site ids 1..sites
  std::int64_t max_cases = 10'000'000;
  std::int64_t max_methods = 100'000;

  /// Throws Error(kInvalidBounds) unless every field is strictly positive
  /// and within the fixed domains.
  void validate() const;

  std::vector<char> chars() const;
  std::vector<std::int64_t> nats() const;
  std::vector<Color> color_values() const;
  std::vector<Symbol> atoms() const;
  std::vector<SiteId> site_ids() const;

  /// Throws Error(kBoundsExceeded) when `estimate` is above max_cases.
  void require_within(double estimate, const std::string& what) const;

  /// True when every enumerated domain of `smaller` is included in ours.
  bool covers(const Bounds& smaller) const;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

}  // namespace otcomp
