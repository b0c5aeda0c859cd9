#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "sparking/bitset.hpp"

namespace sparking {

using ElementId = std::uint32_t;
using Weight = boost::rational<std::int64_t>;

struct GroundElement {
  ElementId id;
  Weight weight;

  bool operator==(const GroundElement&) const = default;
};

/// Finite weighted ground set.
///
/// Elements are stored in increasing weight order and a position in that
/// order is what an ElementSet bit refers to, so the lightest element of a
/// set is its lowest bit. Ids are positive and unique, weights pairwise
/// distinct; both are checked on construction. At most 64 elements.
class Universe {
 public:
  static constexpr std::size_t kMaxSize = ElementSet::kCapacity;

  explicit Universe(std::vector<GroundElement> elements);

  /// Elements `ids` with w(e) = e.
  static Universe identity(std::span<const ElementId> ids);
  /// Elements 1..m with identity weights.
  static Universe range(std::size_t m);

  std::size_t size() const { return by_weight_.size(); }
  ElementSet all() const { return ElementSet::first(size()); }

  const GroundElement& at(std::size_t pos) const { return by_weight_.at(pos); }
  ElementId id(std::size_t pos) const { return by_weight_[pos].id; }
  const Weight& weight(std::size_t pos) const { return by_weight_[pos].weight; }
  const std::vector<GroundElement>& elements() const { return by_weight_; }

  std::optional<std::size_t> position(ElementId id) const;
  /// Throws InvalidArgument for an unknown id.
  std::size_t position_of(ElementId id) const;

  /// Throws InvalidArgument on unknown or repeated ids.
  ElementSet from_ids(std::span<const ElementId> ids) const;
  /// Ids of `set`, ascending by id.
  std::vector<ElementId> to_ids(ElementSet set) const;

  bool operator==(const Universe& other) const { return by_weight_ == other.by_weight_; }

 private:
  std::vector<GroundElement> by_weight_;
  std::vector<std::pair<ElementId, std::size_t>> by_id_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// `{1,3}` style rendering, ids ascending.
std::string format_set(const Universe& universe, ElementSet set);
std::string format_weight(const Weight& w);
/// Accepts `n`, `-n` and `p/q`.
std::optional<Weight> parse_weight(std::string_view text);

}  // namespace sparking
