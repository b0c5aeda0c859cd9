#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparking/bitset.hpp"
#include "sparking/universe.hpp"

namespace sparking {

/// 0-based position of a set A_i within its family.
using SetIndex = std::size_t;

/// Largest family the exhaustive 2^k subset checks accept.
inline constexpr std::size_t kMaxExhaustiveSets = 20;

/// Ordered family A_1..A_k of subsets of a shared weighted universe.
///
/// Immutable. Empty members are allowed; they make the family admit no
/// parking function, and the constructor records a diagnostic for each.
class SetSystem {
 public:
  SetSystem(UniversePtr universe, std::vector<ElementSet> sets);
  SetSystem(UniversePtr universe, const std::vector<std::vector<ElementId>>& sets);

  std::size_t k() const { return sets_.size(); }
  const std::vector<ElementSet>& sets() const { return sets_; }
  ElementSet set(SetIndex i) const { return sets_.at(i); }
  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  IndexSet all_indices() const { return IndexSet::first(k()); }
  ElementSet union_all() const;

  SetSystem with_set(SetIndex i, ElementSet replacement) const;
  SetSystem without_set(SetIndex i) const;

  /// Compares universes by value, so systems built from equal but distinct
  /// universe objects compare equal.
  bool operator==(const SetSystem& other) const;

 private:
  UniversePtr universe_;
  std::vector<ElementSet> sets_;
  std::vector<std::string> diagnostics_;
};

/// f(A_i) for i = 1..k, stored 0-based.
struct SParkingFunction {
  std::vector<std::uint32_t> values;

  std::size_t size() const { return values.size(); }
  std::uint32_t operator[](SetIndex i) const { return values[i]; }
  auto operator<=>(const SParkingFunction&) const = default;
};

/// k-element candidate set D.
struct SParkingSet {
  ElementSet elements;

  static SParkingSet from_ids(const Universe& universe, std::span<const ElementId> ids) {
    return {universe.from_ids(ids)};
  }
  std::size_t size() const { return elements.size(); }
  auto operator<=>(const SParkingSet&) const = default;
};

std::string format_function(const SParkingFunction& f);

/// Elements lying in exactly one A_j, j in `indices`. Empty `indices` throws.
ElementSet exactly_one(const SetSystem& system, IndexSet indices);

/// The exactly-one set for every subset of the family, indexed by IndexSet
/// bits. Built incrementally in O(2^k); k is capped at kMaxExhaustiveSets.
class ExactlyOneTable {
 public:
  explicit ExactlyOneTable(const SetSystem& system);

  ElementSet operator[](IndexSet indices) const { return table_[indices.bits()]; }
  std::size_t subset_count() const { return table_.size(); }

 private:
  std::vector<ElementSet> table_;
};

/// Exhaustive check of the defining inequality over all non-empty I.
bool is_parking_function(const SetSystem& system, const SParkingFunction& f);
bool is_parking_function(const SetSystem& system, const ExactlyOneTable& table, const SParkingFunction& f);

/// Greedy certificate: an order pi with |A_pi_i ∩ ∨_{j>=i} A_pi_j| > f(A_pi_i)
/// for every i, smallest eligible index first. Absent iff f is not a
/// parking function.
std::optional<std::vector<SetIndex>> parking_function_permutation(const SetSystem& system,
                                                                  const SParkingFunction& f);

bool is_parking_set(const SetSystem& system, const SParkingSet& d);
bool is_parking_set(const SetSystem& system, const ExactlyOneTable& table, const SParkingSet& d);

struct ParkingSetCertificate {
  std::vector<SetIndex> order;
  /// The single element of D ∩ A_pi_i ∩ ∨_{j>=i} A_pi_j, per step.
  std::vector<ElementId> witnesses;
};

std::optional<ParkingSetCertificate> parking_set_permutation(const SetSystem& system, const SParkingSet& d);

struct ReducedFunction {
  SetSystem system;
  SParkingFunction function;
};

struct ReducedSet {
  SetSystem system;
  SParkingSet set;
};

/// Removes `e` from its owner A_s and decrements f(A_s). Requires f a parking
/// function, e in the exactly-one set of the whole family, f(A_s) > 0.
ReducedFunction reduce_function(const SetSystem& system, const SParkingFunction& f, ElementId e);

/// Drops A_1 and its value. Requires f a parking function and k >= 2.
ReducedFunction drop_first_set(const SetSystem& system, const SParkingFunction& f);

/// For D a parking set and e in the exactly-one set of the whole family with
/// owner A_i: e outside D removes e from A_i; e inside D removes A_i and e.
ReducedSet reduce_set(const SetSystem& system, const SParkingSet& d, ElementId e);

/// Number of elements of `s` lighter than `e`.
std::size_t delta(const Universe& universe, ElementSet s, ElementId e);

}  // namespace sparking
