#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sparking/set_system.hpp"

namespace sparking {

/// Every parking function of the family, lexicographic in the value vector.
/// Candidates are bounded by 0 <= f(A_i) < |A_i|; a family with an empty
/// member yields an empty list (see SetSystem::diagnostics()).
std::vector<SParkingFunction> enumerate_parking_functions(const SetSystem& system);

/// Every k-subset of the union that is a parking set, ordered by the
/// ascending id list of each set.
std::vector<SParkingSet> enumerate_parking_sets(const SetSystem& system);

/// Orders parking sets the way enumerate_parking_sets does.
void sort_parking_sets(const Universe& universe, std::vector<SParkingSet>& sets);

struct PairingRow {
  SParkingFunction function;
  SParkingSet set;  // sigma(function)
};

struct BijectionReport {
  std::size_t function_count = 0;
  std::size_t set_count = 0;
  /// Human-readable description of each violated property; empty on success.
  std::vector<std::string> failures;
  /// f <-> sigma(f) in enumeration order of f.
  std::vector<PairingRow> pairing;

  bool counts_equal() const { return function_count == set_count; }
  bool ok() const { return counts_equal() && failures.empty(); }
};

/// Enumerates both families, runs sigma on every f and rho on every D, and
/// records any count mismatch, non-member output, collision, or roundtrip
/// failure.
BijectionReport verify_bijection(const SetSystem& system);

/// Aligned text table: one column per set with f values, then sigma(f), then
/// `complement_of` - sigma(f) when a ground set is supplied.
std::string render_pairing_table(const SetSystem& system, const BijectionReport& report,
                                 std::optional<ElementSet> complement_of = std::nullopt);

/// Random family of 1..max_k sets over `universe`, each element included
/// with probability 1/2.
SetSystem random_set_system(std::mt19937_64& rng, std::size_t max_k, UniversePtr universe);

}  // namespace sparking
