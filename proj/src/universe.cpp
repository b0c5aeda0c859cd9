#include "sparking/universe.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sparking/errors.hpp"

namespace sparking {

Universe::Universe(std::vector<GroundElement> elements) : by_weight_(std::move(elements)) {
  if (by_weight_.size() > kMaxSize) {
    throw InvalidArgument("universe holds " + std::to_string(by_weight_.size()) + " elements; at most " +
                          std::to_string(kMaxSize) + " are supported");
  }
  std::sort(by_weight_.begin(), by_weight_.end(),
            [](const GroundElement& a, const GroundElement& b) { return a.weight < b.weight; });
  for (std::size_t pos = 0; pos < by_weight_.size(); ++pos) {
    if (by_weight_[pos].id == 0) throw InvalidArgument("element ids must be positive");
    if (pos > 0 && by_weight_[pos].weight == by_weight_[pos - 1].weight) {
      throw InvalidArgument("elements " + std::to_string(by_weight_[pos - 1].id) + " and " +
                            std::to_string(by_weight_[pos].id) + " share weight " +
                            format_weight(by_weight_[pos].weight));
    }
    by_id_.emplace_back(by_weight_[pos].id, pos);
  }
  std::sort(by_id_.begin(), by_id_.end());
  auto dup = std::adjacent_find(by_id_.begin(), by_id_.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != by_id_.end()) throw InvalidArgument("duplicate element id " + std::to_string(dup->first));
}

Universe Universe::identity(std::span<const ElementId> ids) {
  std::vector<GroundElement> elements;
  elements.reserve(ids.size());
  for (ElementId id : ids) elements.push_back({id, Weight(static_cast<std::int64_t>(id))});
  return Universe(std::move(elements));
}

Universe Universe::range(std::size_t m) {
  std::vector<ElementId> ids(m);
  for (std::size_t i = 0; i < m; ++i) ids[i] = static_cast<ElementId>(i + 1);
  return identity(ids);
}

std::optional<std::size_t> Universe::position(ElementId id) const {
  auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::make_pair(id, std::size_t{0}));
  if (it == by_id_.end() || it->first != id) return std::nullopt;
  return it->second;
}

std::size_t Universe::position_of(ElementId id) const {
  if (auto pos = position(id)) return *pos;
  throw InvalidArgument("element " + std::to_string(id) + " is not in the universe");
}

ElementSet Universe::from_ids(std::span<const ElementId> ids) const {
  ElementSet set;
  for (ElementId id : ids) {
    std::size_t pos = position_of(id);
    if (set.contains(pos)) throw InvalidArgument("element " + std::to_string(id) + " listed twice");
    set = set.with(pos);
  }
  return set;
}

std::vector<ElementId> Universe::to_ids(ElementSet set) const {
  std::vector<ElementId> ids;
  ids.reserve(set.size());
  for (std::size_t pos : set) ids.push_back(id(pos));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string format_set(const Universe& universe, ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (ElementId id : universe.to_ids(set)) {
    if (!first) out += ',';
    out += std::to_string(id);
    first = false;
  }
  out += '}';
  return out;
}

std::string format_weight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Weight> parse_weight(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Weight(*n);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Weight(*num, *den);
}

}  // namespace sparking
