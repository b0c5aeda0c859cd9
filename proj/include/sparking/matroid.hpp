#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparking/set_system.hpp"

namespace sparking {

/// Finite matroid given by its explicit list of bases.
///
/// The ground set is the whole universe. Construction deduplicates and sorts
/// the bases, and rejects lists that are empty, mixed-cardinality, or fail
/// basis exchange.
class Matroid {
 public:
  Matroid(UniversePtr ground, std::vector<ElementSet> bases);

  const Universe& ground() const { return *ground_; }
  const UniversePtr& ground_ptr() const { return ground_; }
  ElementSet ground_set() const { return ground_->all(); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t rank() const { return bases_.front().size(); }
  std::size_t corank() const { return ground_->size() - rank(); }

  bool is_basis(ElementSet s) const;
  bool is_independent(ElementSet s) const;

  bool operator==(const Matroid& other) const;

 private:
  UniversePtr ground_;
  std::vector<ElementSet> bases_;
};

/// max |B ∩ S| over bases.
std::size_t rank(const Matroid& m, ElementSet s);

/// Inclusion-minimal dependent sets, by increasing-cardinality subset scan.
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> cocircuits(const Matroid& m);
Matroid dual(const Matroid& m);

/// r(S - e) = r(S) for every e in S.
bool is_union_of_circuits(const Matroid& m, ElementSet s);
bool is_union_of_cocircuits(const Matroid& m, ElementSet s);

std::vector<ElementSet> bases_containing(const Matroid& m, ElementSet required);

/// Bases containing the exactly-one set of some non-empty subfamily.
std::vector<ElementSet> bases_bracket(const Matroid& m, const SetSystem& parts);
/// Bases containing no exactly-one set of any non-empty subfamily.
std::vector<ElementSet> bases_prime(const Matroid& m, const SetSystem& parts);
/// Complements of bases_prime(dual(m), parts): the bases of m that meet the
/// exactly-one set of every non-empty subfamily. This is the target family
/// on the cocircuit side.
std::vector<ElementSet> dual_bases_prime(const Matroid& m, const SetSystem& parts);

enum class Side { Circuit, Cocircuit };

std::string to_string(Side side);

enum class IdentityForm {
  /// prime family = bases ∩ (candidate family); holds for arbitrary parts.
  Intersection,
  /// prime family = candidate family; needs every part a (co)circuit-union.
  Exact,
};

std::string to_string(IdentityForm form);

/// Both sides of the parking-set / basis identity.
///
/// Circuit side (k = |E| - r): `target` is bases_prime and `candidates` are
/// the complements E - D of parking sets D. Cocircuit side (k = r): `target`
/// is dual_bases_prime and `candidates` the parking sets themselves.
struct IdentityReport {
  Side side;
  IdentityForm form;
  std::vector<ElementSet> target;
  std::vector<ElementSet> candidates;
  /// candidates after the form's restriction (intersected with the bases for
  /// the intersection form).
  std::vector<ElementSet> restricted;
  bool holds;
};

IdentityReport parking_sets_vs_bases_circuit_side(const Matroid& m, const SetSystem& parts);
/// Evaluated on dual(m) through the circuit side and mapped back by complement.
IdentityReport parking_sets_vs_bases_cocircuit_side(const Matroid& m, const SetSystem& parts);

struct TheoremPair {
  SParkingFunction function;
  ElementSet basis;
};

struct TheoremBijection {
  Side side;
  std::vector<TheoremPair> pairs;
  /// bases_prime (circuit side) or dual_bases_prime (cocircuit side).
  std::vector<ElementSet> target;
  bool injective;
  bool image_is_target;

  bool ok() const { return injective && image_is_target; }
};

/// f -> E - sigma(f) (circuit side) or f -> sigma(f) (cocircuit side) over
/// every parking function of `parts`. Throws PreconditionFailure naming the
/// violated hypothesis.
TheoremBijection theorem_bijection(const Matroid& m, const SetSystem& parts, Side side);

struct FullCoverReport {
  /// Every non-empty subfamily's exactly-one set contains a circuit
  /// (resp. cocircuit).
  bool hypothesis;
  /// hypothesis implies target == all bases and the bijection onto them;
  /// true whenever the hypothesis is false.
  bool consequence_verified;
  /// First subfamily (IndexSet bits) whose exactly-one set is not covered.
  std::optional<IndexSet> uncovered;
};

FullCoverReport corollary_full_cover(const Matroid& m, const SetSystem& parts, Side side);

/// Bases are all r-subsets of {1..n}.
Matroid uniform_matroid(std::size_t n, std::size_t r);

/// Searches multisets of r(m) cocircuit-unions for a family whose every
/// exactly-one set contains a cocircuit. Exhaustive, so only for tiny
/// matroids; stops after `max_families` candidates.
std::optional<SetSystem> find_full_cover_family(const Matroid& m, std::size_t max_families = 1'000'000);

}  // namespace sparking
