#include "sparking/set_system.hpp"

#include <algorithm>

#include "sparking/errors.hpp"

namespace sparking {

namespace {

void require_length(const SetSystem& system, const SParkingFunction& f) {
  if (f.size() != system.k()) {
    throw InvalidArgument("function has " + std::to_string(f.size()) + " values but the family has " +
                          std::to_string(system.k()) + " sets");
  }
}

void require_size(const SetSystem& system, const SParkingSet& d) {
  if (d.size() != system.k()) {
    throw InvalidArgument("candidate set has " + std::to_string(d.size()) + " elements but the family has " +
                          std::to_string(system.k()) + " sets");
  }
}

// Owner of an element known to lie in the exactly-one set of `sets` over `indices`.
SetIndex unique_owner(const std::vector<ElementSet>& sets, IndexSet indices, std::size_t pos) {
  for (SetIndex i : indices) {
    if (sets[i].contains(pos)) return i;
  }
  throw std::logic_error("element of an exactly-one set has no owner");
}

}  // namespace

SetSystem::SetSystem(UniversePtr universe, std::vector<ElementSet> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
  if (!universe_) throw InvalidArgument("set system needs a universe");
  if (sets_.size() > IndexSet::kCapacity) {
    throw InvalidArgument("at most " + std::to_string(IndexSet::kCapacity) + " sets are supported");
  }
  const ElementSet all = universe_->all();
  for (SetIndex i = 0; i < sets_.size(); ++i) {
    if (!sets_[i].subset_of(all)) {
      throw InvalidArgument("set A_" + std::to_string(i + 1) + " refers to positions outside the universe");
    }
    if (sets_[i].empty()) {
      diagnostics_.push_back("set A_" + std::to_string(i + 1) + " is empty; the family has no parking function");
    }
  }
}

namespace {

std::vector<ElementSet> resolve(const Universe& universe, const std::vector<std::vector<ElementId>>& sets) {
  std::vector<ElementSet> out;
  out.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    try {
      out.push_back(universe.from_ids(sets[i]));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("set A_" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

SetSystem::SetSystem(UniversePtr universe, const std::vector<std::vector<ElementId>>& sets)
    : SetSystem(universe, universe ? resolve(*universe, sets) : std::vector<ElementSet>{}) {}

ElementSet SetSystem::union_all() const {
  ElementSet out;
  for (ElementSet s : sets_) out |= s;
  return out;
}

SetSystem SetSystem::with_set(SetIndex i, ElementSet replacement) const {
  auto sets = sets_;
  sets.at(i) = replacement;
  return SetSystem(universe_, std::move(sets));
}

SetSystem SetSystem::without_set(SetIndex i) const {
  auto sets = sets_;
  sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(i));
  return SetSystem(universe_, std::move(sets));
}

bool SetSystem::operator==(const SetSystem& other) const {
  return sets_ == other.sets_ && (universe_ == other.universe_ || *universe_ == *other.universe_);
}

std::string format_function(const SParkingFunction& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(f[i]);
  }
  out += ')';
  return out;
}

ElementSet exactly_one(const SetSystem& system, IndexSet indices) {
  if (indices.empty()) throw InvalidArgument("exactly-one needs a non-empty index set");
  if (!indices.subset_of(system.all_indices())) throw InvalidArgument("index set exceeds the family");
  ElementSet once;
  ElementSet twice;
  for (SetIndex i : indices) {
    twice |= once & system.set(i);
    once |= system.set(i);
  }
  return once - twice;
}

ExactlyOneTable::ExactlyOneTable(const SetSystem& system) {
  const std::size_t k = system.k();
  if (k > kMaxExhaustiveSets) {
    throw InvalidArgument("exhaustive subset checks support at most " + std::to_string(kMaxExhaustiveSets) +
                          " sets, got " + std::to_string(k));
  }
  const std::size_t count = std::size_t{1} << k;
  std::vector<ElementSet> once(count);
  std::vector<ElementSet> twice(count);
  table_.resize(count);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const IndexSet indices(static_cast<IndexSet::word_type>(mask));
    const SetIndex low = indices.lowest();
    const std::size_t rest = mask & (mask - 1);
    const ElementSet a = system.set(low);
    once[mask] = once[rest] | a;
    twice[mask] = twice[rest] | (once[rest] & a);
    table_[mask] = once[mask] - twice[mask];
  }
}

bool is_parking_function(const SetSystem& system, const ExactlyOneTable& table, const SParkingFunction& f) {
  require_length(system, f);
  const auto& sets = system.sets();
  for (std::size_t mask = 1; mask < table.subset_count(); ++mask) {
    const IndexSet indices(static_cast<IndexSet::word_type>(mask));
    const ElementSet x = table[indices];
    bool witnessed = false;
    for (SetIndex i : indices) {
      if ((sets[i] & x).size() > f[i]) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool is_parking_function(const SetSystem& system, const SParkingFunction& f) {
  require_length(system, f);
  return is_parking_function(system, ExactlyOneTable(system), f);
}

std::optional<std::vector<SetIndex>> parking_function_permutation(const SetSystem& system,
                                                                  const SParkingFunction& f) {
  require_length(system, f);
  std::vector<SetIndex> order;
  IndexSet remaining = system.all_indices();
  while (!remaining.empty()) {
    const ElementSet x = exactly_one(system, remaining);
    auto eligible = std::find_if(remaining.begin(), remaining.end(),
                                 [&](SetIndex i) { return (system.set(i) & x).size() > f[i]; });
    if (eligible == remaining.end()) return std::nullopt;
    order.push_back(*eligible);
    remaining = remaining.without(*eligible);
  }
  return order;
}

bool is_parking_set(const SetSystem& system, const ExactlyOneTable& table, const SParkingSet& d) {
  require_size(system, d);
  for (std::size_t mask = 1; mask < table.subset_count(); ++mask) {
    if (!d.elements.intersects(table[IndexSet(static_cast<IndexSet::word_type>(mask))])) return false;
  }
  return true;
}

bool is_parking_set(const SetSystem& system, const SParkingSet& d) {
  require_size(system, d);
  return is_parking_set(system, ExactlyOneTable(system), d);
}

std::optional<ParkingSetCertificate> parking_set_permutation(const SetSystem& system, const SParkingSet& d) {
  require_size(system, d);
  ParkingSetCertificate cert;
  IndexSet remaining = system.all_indices();
  while (!remaining.empty()) {
    const ElementSet x = exactly_one(system, remaining) & d.elements;
    auto eligible = std::find_if(remaining.begin(), remaining.end(),
                                 [&](SetIndex i) { return system.set(i).intersects(x); });
    if (eligible == remaining.end()) return std::nullopt;
    const ElementSet hit = system.set(*eligible) & x;
    // Hits of successive steps are disjoint and |D| = k, so a second hit
    // leaves some later step empty.
    if (hit.size() != 1) return std::nullopt;
    cert.order.push_back(*eligible);
    cert.witnesses.push_back(system.universe().id(hit.lowest()));
    remaining = remaining.without(*eligible);
  }
  return cert;
}

namespace {

// Position of `e` and its owner, given e must lie in the exactly-one set of the whole family.
std::pair<std::size_t, SetIndex> exactly_one_owner(const SetSystem& system, ElementId e) {
  if (system.k() == 0) throw InvalidArgument("the family is empty");
  const std::size_t pos = system.universe().position_of(e);
  if (!exactly_one(system, system.all_indices()).contains(pos)) {
    throw InvalidArgument("element " + std::to_string(e) + " does not lie in exactly one set of the family");
  }
  return {pos, unique_owner(system.sets(), system.all_indices(), pos)};
}

}  // namespace

ReducedFunction reduce_function(const SetSystem& system, const SParkingFunction& f, ElementId e) {
  require_length(system, f);
  auto [pos, owner] = exactly_one_owner(system, e);
  if (f[owner] == 0) {
    throw InvalidArgument("f(A_" + std::to_string(owner + 1) + ") must be positive to remove element " +
                          std::to_string(e));
  }
  if (!is_parking_function(system, f)) throw InvalidArgument("input is not a parking function");
  SParkingFunction reduced = f;
  --reduced.values[owner];
  return {system.with_set(owner, system.set(owner).without(pos)), std::move(reduced)};
}

ReducedFunction drop_first_set(const SetSystem& system, const SParkingFunction& f) {
  require_length(system, f);
  if (system.k() < 2) throw InvalidArgument("dropping a set needs at least two sets");
  if (!is_parking_function(system, f)) throw InvalidArgument("input is not a parking function");
  return {system.without_set(0), SParkingFunction{{f.values.begin() + 1, f.values.end()}}};
}

ReducedSet reduce_set(const SetSystem& system, const SParkingSet& d, ElementId e) {
  require_size(system, d);
  auto [pos, owner] = exactly_one_owner(system, e);
  if (!is_parking_set(system, d)) throw InvalidArgument("input is not a parking set");
  if (!d.elements.contains(pos)) return {system.with_set(owner, system.set(owner).without(pos)), d};
  return {system.without_set(owner), SParkingSet{d.elements.without(pos)}};
}

std::size_t delta(const Universe& universe, ElementSet s, ElementId e) {
  const std::size_t pos = universe.position_of(e);
  if (!s.contains(pos)) throw InvalidArgument("element " + std::to_string(e) + " is not in the set");
  return s.count_below(pos);
}

}  // namespace sparking
