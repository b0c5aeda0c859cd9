#include "sparking/bijections.hpp"

#include <sstream>

#include "sparking/errors.hpp"

namespace sparking {

namespace {

// Shared sweep of both procedures. `spend(s, pos)` decides whether the
// lightest residual element `pos` (owned by set s) is deleted rather than fixed.
template <typename Spend>
BijectionTrace sweep(const SetSystem& system, Spend&& spend) {
  const Universe& universe = system.universe();
  std::vector<ElementSet> working = system.sets();
  IndexSet open = system.all_indices();
  BijectionTrace trace;
  std::size_t step = 1;

  while (!open.empty()) {
    ElementSet once;
    ElementSet twice;
    for (SetIndex j : open) {
      twice |= once & working[j];
      once |= working[j];
    }
    const ElementSet residual = once - twice;
    if (residual.empty()) {
      throw InvalidInput("residual exactly-one set is empty at step " + std::to_string(step) +
                         "; the input is outside the domain");
    }
    const std::size_t pos = residual.lowest();
    SetIndex owner = 0;
    std::size_t owners = 0;
    for (SetIndex j : open) {
      if (working[j].contains(pos)) {
        owner = j;
        ++owners;
      }
    }
    if (owners != 1) throw std::logic_error("lightest exactly-one element must have a unique owner");

    const ElementId id = universe.id(pos);
    if (spend(owner, pos)) {
      working[owner] = working[owner].without(pos);
      trace.events.push_back({TraceEventKind::Delete, step, owner, id});
    } else {
      trace.pi.push_back(owner);
      trace.chosen.push_back(id);
      trace.events.push_back({TraceEventKind::Fix, step, owner, id});
      open = open.without(owner);
      ++step;
    }
  }
  return trace;
}

}  // namespace

std::vector<TraceEvent> BijectionTrace::deletions() const {
  std::vector<TraceEvent> out;
  for (const auto& ev : events) {
    if (ev.kind == TraceEventKind::Delete) out.push_back(ev);
  }
  return out;
}

RhoResult rho(const SetSystem& system, const SParkingSet& d, Validation validation) {
  if (d.size() != system.k()) {
    throw InvalidInput("candidate set has " + std::to_string(d.size()) + " elements, expected " +
                       std::to_string(system.k()));
  }
  if (validation == Validation::Eager && !is_parking_set(system, d)) {
    throw InvalidInput("input set is not a parking set of the family");
  }
  SParkingFunction f{std::vector<std::uint32_t>(system.k(), 0)};
  auto trace = sweep(system, [&](SetIndex owner, std::size_t pos) {
    if (d.elements.contains(pos)) return false;
    ++f.values[owner];
    return true;
  });
  return {std::move(f), std::move(trace)};
}

SigmaResult sigma(const SetSystem& system, const SParkingFunction& f, Validation validation) {
  if (f.size() != system.k()) {
    throw InvalidInput("function has " + std::to_string(f.size()) + " values, expected " +
                       std::to_string(system.k()));
  }
  if (validation == Validation::Eager && !is_parking_function(system, f)) {
    throw InvalidInput("input function is not a parking function of the family");
  }
  SParkingFunction budget = f;
  SParkingSet out;
  auto trace = sweep(system, [&](SetIndex owner, std::size_t pos) {
    if (budget.values[owner] > 0) {
      --budget.values[owner];
      return true;
    }
    out.elements = out.elements.with(pos);
    return false;
  });
  return {out, std::move(trace)};
}

std::string format_trace(const BijectionTrace& trace) {
  std::ostringstream out;
  for (const auto& ev : trace.events) {
    out << (ev.kind == TraceEventKind::Delete ? "DEL " : "FIX ") << ev.step << ' ' << ev.set + 1 << ' '
        << ev.element << '\n';
  }
  return out.str();
}

}  // namespace sparking
