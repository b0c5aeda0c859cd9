#include "sparking/matroid.hpp"

#include <algorithm>
#include <set>

#include "sparking/bijections.hpp"
#include "sparking/enumeration.hpp"
#include "sparking/errors.hpp"

namespace sparking {

namespace {

constexpr std::size_t kMaxSubsetScan = 24;

void sort_unique(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<ElementSet> complements(ElementSet ground, const std::vector<ElementSet>& sets) {
  std::vector<ElementSet> out;
  out.reserve(sets.size());
  for (ElementSet s : sets) out.push_back(ground - s);
  sort_unique(out);
  return out;
}

void require_subset(const Matroid& m, ElementSet s) {
  if (!s.subset_of(m.ground_set())) throw InvalidArgument("set is not contained in the ground set");
}

void require_same_ground(const Matroid& m, const SetSystem& parts) {
  if (!(parts.universe() == m.ground())) {
    throw InvalidArgument("parts must be drawn from the matroid's ground set");
  }
}

// A set contains a cocircuit iff it meets every basis.
bool contains_cocircuit(const Matroid& m, ElementSet s) {
  return std::all_of(m.bases().begin(), m.bases().end(), [&](ElementSet b) { return b.intersects(s); });
}

bool contains_circuit(const Matroid& m, ElementSet s) { return !m.is_independent(s); }

}  // namespace

Matroid::Matroid(UniversePtr ground, std::vector<ElementSet> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  if (!ground_) throw InvalidArgument("matroid needs a ground set");
  if (bases_.empty()) throw InvalidArgument("a matroid has at least one basis");
  sort_unique(bases_);
  const ElementSet all = ground_->all();
  const std::size_t r = bases_.front().size();
  for (ElementSet b : bases_) {
    if (!b.subset_of(all)) throw InvalidArgument("basis " + format_set(*ground_, b) + " leaves the ground set");
    if (b.size() != r) {
      throw InvalidArgument("bases " + format_set(*ground_, bases_.front()) + " and " + format_set(*ground_, b) +
                            " differ in size");
    }
  }
  for (ElementSet b1 : bases_) {
    for (ElementSet b2 : bases_) {
      for (std::size_t x : b1 - b2) {
        const ElementSet rest = b1.without(x);
        const ElementSet pool = b2 - b1;
        const bool exchanged = std::any_of(pool.begin(), pool.end(), [&](std::size_t y) { return is_basis(rest.with(y)); });
        if (!exchanged) {
          throw InvalidArgument("basis exchange fails for " + format_set(*ground_, b1) + ", " +
                                format_set(*ground_, b2) + " at element " + std::to_string(ground_->id(x)));
        }
      }
    }
  }
}

bool Matroid::is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

bool Matroid::is_independent(ElementSet s) const {
  return std::any_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return s.subset_of(b); });
}

bool Matroid::operator==(const Matroid& other) const {
  return bases_ == other.bases_ && (ground_ == other.ground_ || *ground_ == *other.ground_);
}

std::size_t rank(const Matroid& m, ElementSet s) {
  require_subset(m, s);
  std::size_t best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (b & s).size());
  return best;
}

std::vector<ElementSet> circuits(const Matroid& m) {
  const std::size_t n = m.ground().size();
  if (n > kMaxSubsetScan) throw InvalidArgument("circuit scan supports at most 24 elements");
  std::vector<ElementSet> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    const ElementSet s(bits);
    if (m.is_independent(s)) continue;
    const bool minimal = std::all_of(s.begin(), s.end(), [&](std::size_t e) { return m.is_independent(s.without(e)); });
    if (minimal) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.size() < b.size(); });
  return out;
}

Matroid dual(const Matroid& m) { return Matroid(m.ground_ptr(), complements(m.ground_set(), m.bases())); }

std::vector<ElementSet> cocircuits(const Matroid& m) { return circuits(dual(m)); }

bool is_union_of_circuits(const Matroid& m, ElementSet s) {
  const std::size_t r = rank(m, s);
  return std::all_of(s.begin(), s.end(), [&](std::size_t e) { return rank(m, s.without(e)) == r; });
}

bool is_union_of_cocircuits(const Matroid& m, ElementSet s) { return is_union_of_circuits(dual(m), s); }

std::vector<ElementSet> bases_containing(const Matroid& m, ElementSet required) {
  require_subset(m, required);
  std::vector<ElementSet> out;
  for (ElementSet b : m.bases()) {
    if (required.subset_of(b)) out.push_back(b);
  }
  return out;
}

namespace {

// Splits bases into (contains some exactly-one set, contains none).
std::pair<std::vector<ElementSet>, std::vector<ElementSet>> split_bases(const Matroid& m, const SetSystem& parts) {
  require_same_ground(m, parts);
  const ExactlyOneTable table(parts);
  std::pair<std::vector<ElementSet>, std::vector<ElementSet>> out;
  for (ElementSet b : m.bases()) {
    bool bracketed = false;
    for (std::size_t mask = 1; mask < table.subset_count() && !bracketed; ++mask) {
      bracketed = table[IndexSet(static_cast<IndexSet::word_type>(mask))].subset_of(b);
    }
    (bracketed ? out.first : out.second).push_back(b);
  }
  return out;
}

std::vector<ElementSet> parking_set_elements(const SetSystem& parts) {
  std::vector<ElementSet> out;
  for (const auto& d : enumerate_parking_sets(parts)) out.push_back(d.elements);
  return out;
}

}  // namespace

std::vector<ElementSet> bases_bracket(const Matroid& m, const SetSystem& parts) { return split_bases(m, parts).first; }

std::vector<ElementSet> bases_prime(const Matroid& m, const SetSystem& parts) { return split_bases(m, parts).second; }

std::vector<ElementSet> dual_bases_prime(const Matroid& m, const SetSystem& parts) {
  return complements(m.ground_set(), bases_prime(dual(m), parts));
}

std::string to_string(Side side) { return side == Side::Circuit ? "circuit" : "cocircuit"; }

std::string to_string(IdentityForm form) { return form == IdentityForm::Exact ? "exact" : "intersection"; }

IdentityReport parking_sets_vs_bases_circuit_side(const Matroid& m, const SetSystem& parts) {
  require_same_ground(m, parts);
  if (parts.k() != m.corank()) {
    throw PreconditionFailure("circuit side needs k = |E| - r(M) = " + std::to_string(m.corank()) + ", got k = " +
                              std::to_string(parts.k()));
  }
  const bool circuit_unions = std::all_of(parts.sets().begin(), parts.sets().end(),
                                          [&](ElementSet e) { return is_union_of_circuits(m, e); });
  IdentityReport report{Side::Circuit,
                        circuit_unions ? IdentityForm::Exact : IdentityForm::Intersection,
                        bases_prime(m, parts),
                        complements(m.ground_set(), parking_set_elements(parts)),
                        {},
                        false};
  if (circuit_unions) {
    report.restricted = report.candidates;
  } else {
    for (ElementSet c : report.candidates) {
      if (m.is_basis(c)) report.restricted.push_back(c);
    }
  }
  report.holds = report.target == report.restricted;
  return report;
}

IdentityReport parking_sets_vs_bases_cocircuit_side(const Matroid& m, const SetSystem& parts) {
  require_same_ground(m, parts);
  if (parts.k() != m.rank()) {
    throw PreconditionFailure("cocircuit side needs k = r(M) = " + std::to_string(m.rank()) + ", got k = " +
                              std::to_string(parts.k()));
  }
  const ElementSet ground = m.ground_set();
  const IdentityReport dual_report = parking_sets_vs_bases_circuit_side(dual(m), parts);
  return {Side::Cocircuit,
          dual_report.form,
          complements(ground, dual_report.target),
          complements(ground, dual_report.candidates),
          complements(ground, dual_report.restricted),
          dual_report.holds};
}

namespace {

void require_theorem_hypotheses(const Matroid& m, const SetSystem& parts, Side side) {
  require_same_ground(m, parts);
  if (side == Side::Circuit) {
    if (parts.k() != m.corank()) {
      throw PreconditionFailure("k = |E| - r(M) fails: k = " + std::to_string(parts.k()) + ", |E| - r(M) = " +
                                std::to_string(m.corank()));
    }
    for (SetIndex i = 0; i < parts.k(); ++i) {
      if (!is_union_of_circuits(m, parts.set(i))) {
        throw PreconditionFailure("E_" + std::to_string(i + 1) + " = " + format_set(m.ground(), parts.set(i)) +
                                  " is not a union of circuits");
      }
    }
  } else {
    if (parts.k() != m.rank()) {
      throw PreconditionFailure("k = r(M) fails: k = " + std::to_string(parts.k()) + ", r(M) = " +
                                std::to_string(m.rank()));
    }
    const Matroid d = dual(m);
    for (SetIndex i = 0; i < parts.k(); ++i) {
      if (!is_union_of_circuits(d, parts.set(i))) {
        throw PreconditionFailure("E_" + std::to_string(i + 1) + " = " + format_set(m.ground(), parts.set(i)) +
                                  " is not a union of cocircuits");
      }
    }
  }
}

}  // namespace

TheoremBijection theorem_bijection(const Matroid& m, const SetSystem& parts, Side side) {
  require_theorem_hypotheses(m, parts, side);
  TheoremBijection out{side, {}, side == Side::Circuit ? bases_prime(m, parts) : dual_bases_prime(m, parts), true,
                       false};
  const ElementSet ground = m.ground_set();
  std::vector<ElementSet> image;
  for (const auto& f : enumerate_parking_functions(parts)) {
    const ElementSet d = sigma(parts, f).set.elements;
    const ElementSet basis = side == Side::Circuit ? ground - d : d;
    out.pairs.push_back({f, basis});
    image.push_back(basis);
  }
  const std::size_t mapped = image.size();
  sort_unique(image);
  out.injective = image.size() == mapped;
  out.image_is_target = image == out.target;
  return out;
}

FullCoverReport corollary_full_cover(const Matroid& m, const SetSystem& parts, Side side) {
  require_theorem_hypotheses(m, parts, side);
  FullCoverReport report{true, true, std::nullopt};
  const ExactlyOneTable table(parts);
  for (std::size_t mask = 1; mask < table.subset_count(); ++mask) {
    const IndexSet indices(static_cast<IndexSet::word_type>(mask));
    const ElementSet x = table[indices];
    const bool covered = side == Side::Circuit ? contains_circuit(m, x) : contains_cocircuit(m, x);
    if (!covered) {
      report.hypothesis = false;
      report.uncovered = indices;
      break;
    }
  }
  if (report.hypothesis) {
    const auto bij = theorem_bijection(m, parts, side);
    report.consequence_verified = bij.ok() && bij.target == m.bases();
  }
  return report;
}

Matroid uniform_matroid(std::size_t n, std::size_t r) {
  if (r > n) throw InvalidArgument("uniform matroid needs r <= n, got r = " + std::to_string(r) + ", n = " + std::to_string(n));
  auto ground = std::make_shared<const Universe>(Universe::range(n));
  std::vector<ElementSet> bases;
  if (n > kMaxSubsetScan) throw InvalidArgument("uniform matroid supports n <= 24");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (ElementSet(bits).size() == r) bases.emplace_back(bits);
  }
  return Matroid(std::move(ground), std::move(bases));
}

std::optional<SetSystem> find_full_cover_family(const Matroid& m, std::size_t max_families) {
  const std::size_t k = m.rank();
  if (k == 0) return SetSystem(m.ground_ptr(), std::vector<ElementSet>{});
  const std::size_t n = m.ground().size();
  if (n > kMaxSubsetScan) throw InvalidArgument("full-cover search supports at most 24 elements");
  if (k > kMaxExhaustiveSets) throw InvalidArgument("full-cover search supports rank <= 20");

  const Matroid d = dual(m);
  std::vector<ElementSet> unions;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const ElementSet s(bits);
    if (contains_cocircuit(m, s) && is_union_of_circuits(d, s)) unions.push_back(s);
  }
  if (unions.empty()) return std::nullopt;

  std::vector<std::size_t> pick(k, 0);
  std::size_t tried = 0;
  while (tried < max_families) {
    ++tried;
    std::vector<ElementSet> sets;
    for (std::size_t i : pick) sets.push_back(unions[i]);
    SetSystem family(m.ground_ptr(), std::move(sets));
    const ExactlyOneTable table(family);
    bool covered = true;
    for (std::size_t mask = 1; mask < table.subset_count() && covered; ++mask) {
      covered = contains_cocircuit(m, table[IndexSet(static_cast<IndexSet::word_type>(mask))]);
    }
    if (covered) return family;
    // Next non-decreasing tuple.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == unions.size() - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[i - 1];
  }
  return std::nullopt;
}

}  // namespace sparking
