#include "otcomp/bounds.hpp"

#include <sstream>

#include "otcomp/error.hpp"

namespace otcomp {

void Bounds::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::kInvalidBounds, what);
  };
  require(alphabet > 0 && alphabet <= 26, "alphabet must be in 1..26");
  require(nat_max > 0, "nat-max must be positive");
  require(colors > 0 && colors <= 3, "colors must be in 1..3");
  require(universe > 0 && universe <= 26, "universe must be in 1..26");
  require(max_len > 0, "max-len must be positive");
  require(depth > 0, "depth must be positive");
  require(sites > 0, "sites must be positive");
  require(max_cases > 0, "max-cases must be positive");
  require(max_methods > 0, "max-methods must be positive");
}

std::vector<char> Bounds::chars() const {
  std::vector<char> out;
  for (int i = 0; i < alphabet; ++i) out.push_back(static_cast<char>('a' + i));
  return out;
}

std::vector<std::int64_t> Bounds::nats() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= nat_max; ++n) out.push_back(n);
  return out;
}

std::vector<Color> Bounds::color_values() const {
  static constexpr Color kAll[] = {Color::kRed, Color::kGreen, Color::kBlue};
  return {kAll, kAll + colors};
}

std::vector<Symbol> Bounds::atoms() const {
  // x, y, z, then wrap to a, b, ... for larger universes.
  static constexpr const char* kNames = "xyzabcdefghijklmnopqrstuvw";
  std::vector<Symbol> out;
  for (int i = 0; i < universe; ++i) out.push_back(Symbol{std::string(1, kNames[i])});
  return out;
}

std::vector<SiteId> Bounds::site_ids() const {
  std::vector<SiteId> out;
  for (int i = 1; i <= sites; ++i) out.push_back(static_cast<SiteId>(i));
  return out;
}

void Bounds::require_within(double estimate, const std::string& what) const {
  if (estimate > static_cast<double>(max_cases)) {
    std::ostringstream os;
    os << what << " needs about " << static_cast<long long>(estimate) << " cases, ceiling is "
       << max_cases << " (raise OTCOMP_MAX_CASES or shrink the bounds)";
    throw Error(ErrorCode::kBoundsExceeded, os.str());
  }
}

bool Bounds::covers(const Bounds& smaller) const {
  return alphabet >= smaller.alphabet && nat_max >= smaller.nat_max && colors >= smaller.colors &&
         universe >= smaller.universe && max_len >= smaller.max_len && sites >= smaller.sites;
}

}  // namespace otcomp
