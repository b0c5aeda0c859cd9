#include "sparking/enumeration.hpp"

#include <algorithm>
#include <map>

#include "sparking/bijections.hpp"
#include "sparking/errors.hpp"

namespace sparking {

std::vector<SParkingFunction> enumerate_parking_functions(const SetSystem& system) {
  const std::size_t k = system.k();
  for (ElementSet a : system.sets()) {
    if (a.empty()) return {};
  }
  const ExactlyOneTable table(system);
  std::vector<SParkingFunction> out;
  SParkingFunction candidate{std::vector<std::uint32_t>(k, 0)};
  while (true) {
    if (is_parking_function(system, table, candidate)) out.push_back(candidate);
    // Odometer with the last coordinate fastest, so output is lexicographic.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (candidate.values[i] + 1 < system.set(i).size()) {
        ++candidate.values[i];
        break;
      }
      candidate.values[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

void sort_parking_sets(const Universe& universe, std::vector<SParkingSet>& sets) {
  std::vector<std::pair<std::vector<ElementId>, SParkingSet>> keyed;
  keyed.reserve(sets.size());
  for (const auto& d : sets) keyed.emplace_back(universe.to_ids(d.elements), d);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < sets.size(); ++i) sets[i] = keyed[i].second;
}

std::vector<SParkingSet> enumerate_parking_sets(const SetSystem& system) {
  const std::size_t k = system.k();
  const ElementSet pool = system.union_all();
  std::vector<std::size_t> positions(pool.begin(), pool.end());
  std::vector<SParkingSet> out;
  if (k > positions.size()) return out;

  const ExactlyOneTable table(system);
  // Lexicographic k-combinations of `positions`.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    SParkingSet d;
    for (std::size_t i : pick) d.elements = d.elements.with(positions[i]);
    if (is_parking_set(system, table, d)) out.push_back(d);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == positions.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  sort_parking_sets(system.universe(), out);
  return out;
}

BijectionReport verify_bijection(const SetSystem& system) {
  BijectionReport report;
  const auto functions = enumerate_parking_functions(system);
  const auto sets = enumerate_parking_sets(system);
  report.function_count = functions.size();
  report.set_count = sets.size();
  if (!report.counts_equal()) {
    report.failures.push_back("|P| = " + std::to_string(functions.size()) + " but |Q| = " +
                              std::to_string(sets.size()));
  }
  const Universe& universe = system.universe();
  const auto in_sets = [&](const SParkingSet& d) {
    return std::find(sets.begin(), sets.end(), d) != sets.end();
  };

  std::map<SParkingSet, SParkingFunction> seen;
  for (const auto& f : functions) {
    SParkingSet d;
    try {
      d = sigma(system, f).set;
    } catch (const InvalidInput& e) {
      report.failures.push_back("sigma" + format_function(f) + " failed: " + e.what());
      continue;
    }
    report.pairing.push_back({f, d});
    if (!in_sets(d)) {
      report.failures.push_back("sigma" + format_function(f) + " = " + format_set(universe, d.elements) +
                                " is not a parking set");
      continue;
    }
    auto [it, inserted] = seen.emplace(d, f);
    if (!inserted) {
      report.failures.push_back("sigma" + format_function(f) + " = sigma" + format_function(it->second));
    }
    const auto back = rho(system, d).function;
    if (back != f) {
      report.failures.push_back("rho(sigma" + format_function(f) + ") = " + format_function(back));
    }
  }
  for (const auto& d : sets) {
    SParkingFunction f;
    try {
      f = rho(system, d).function;
    } catch (const InvalidInput& e) {
      report.failures.push_back("rho" + format_set(universe, d.elements) + " failed: " + e.what());
      continue;
    }
    if (std::find(functions.begin(), functions.end(), f) == functions.end()) {
      report.failures.push_back("rho" + format_set(universe, d.elements) + " = " + format_function(f) +
                                " is not a parking function");
      continue;
    }
    const auto back = sigma(system, f).set;
    if (back != d) {
      report.failures.push_back("sigma(rho" + format_set(universe, d.elements) + ") = " +
                                format_set(universe, back.elements));
    }
  }
  return report;
}

std::string render_pairing_table(const SetSystem& system, const BijectionReport& report,
                                 std::optional<ElementSet> complement_of) {
  const Universe& universe = system.universe();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (std::size_t i = 0; i < system.k(); ++i) header.push_back("E_" + std::to_string(i + 1));
  header.push_back("sigma(f_i)");
  if (complement_of) header.push_back("E-sigma(f_i)");
  rows.push_back(header);
  for (std::size_t r = 0; r < report.pairing.size(); ++r) {
    const auto& row = report.pairing[r];
    std::vector<std::string> cells{"f_" + std::to_string(r + 1)};
    for (auto v : row.function.values) cells.push_back(std::to_string(v));
    cells.push_back(format_set(universe, row.set.elements));
    if (complement_of) cells.push_back(format_set(universe, *complement_of - row.set.elements));
    rows.push_back(std::move(cells));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& cells : rows) {
    for (std::size_t c = 0; c < cells.size(); ++c) width[c] = std::max(width[c], cells[c].size());
  }
  std::string out;
  for (const auto& cells : rows) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += " | ";
      line += cells[c];
      line.append(width[c] - cells[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

SetSystem random_set_system(std::mt19937_64& rng, std::size_t max_k, UniversePtr universe) {
  if (max_k == 0) throw InvalidArgument("random family needs max_k >= 1");
  std::uniform_int_distribution<std::size_t> pick_k(1, max_k);
  const std::size_t k = pick_k(rng);
  const std::uint64_t all = universe->all().bits();
  std::vector<ElementSet> sets;
  sets.reserve(k);
  for (std::size_t i = 0; i < k; ++i) sets.emplace_back(rng() & all);
  return SetSystem(std::move(universe), std::move(sets));
}

}  // namespace sparking
