#pragma once

#include <memory>
#include <vector>

#include "oracle.hpp"
#include "sparking/set_system.hpp"

namespace testing {

using namespace sparking;

inline UniversePtr range_universe(std::size_t m) { return std::make_shared<const Universe>(Universe::range(m)); }

inline UniversePtr id_universe(std::vector<ElementId> ids) {
  return std::make_shared<const Universe>(Universe::identity(ids));
}

inline SetSystem system_of(std::size_t m, const std::vector<std::vector<ElementId>>& sets) {
  return SetSystem(range_universe(m), sets);
}

/// E_1 = {1,2,3}, E_2 = {1,2,4} over {1,2,3,4}.
inline SetSystem u42_parts() { return system_of(4, {{1, 2, 3}, {1, 2, 4}}); }

inline SParkingFunction fn(std::vector<std::uint32_t> values) { return {std::move(values)}; }

inline SParkingSet pset(const SetSystem& s, std::vector<ElementId> ids) { return SParkingSet::from_ids(s.universe(), ids); }

inline std::vector<ElementId> ids(const SetSystem& s, ElementSet set) { return s.universe().to_ids(set); }

inline IndexSet indices(std::vector<std::size_t> one_based) {
  IndexSet out;
  for (auto i : one_based) out = out.with(i - 1);
  return out;
}

inline oracle::Family to_family(const SetSystem& s) {
  oracle::Family out;
  for (ElementSet a : s.sets()) {
    auto v = s.universe().to_ids(a);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

inline oracle::Set to_oracle(const SetSystem& s, ElementSet set) {
  auto v = s.universe().to_ids(set);
  return {v.begin(), v.end()};
}

/// Calls visit(system) for every ordered k-tuple of subsets of {1..m}.
template <typename Visit>
void for_each_system(std::size_t k, std::size_t m, Visit&& visit) {
  auto universe = range_universe(m);
  const std::uint64_t per = std::uint64_t{1} << m;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= per;
  std::vector<ElementSet> sets(k);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      sets[i] = ElementSet(rest % per);
      rest /= per;
    }
    visit(SetSystem(universe, sets));
  }
}

}  // namespace testing
