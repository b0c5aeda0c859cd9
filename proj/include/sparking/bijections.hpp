#pragma once

#include <string>
#include <vector>

#include "sparking/set_system.hpp"

namespace sparking {

enum class TraceEventKind { Delete, Fix };

/// One loop iteration of the ρ/σ procedures. `step` is the 1-based index of
/// the element e_step being sought when the event happened.
struct TraceEvent {
  TraceEventKind kind;
  std::size_t step;
  SetIndex set;
  ElementId element;

  bool operator==(const TraceEvent&) const = default;
};

struct BijectionTrace {
  /// Set index fixed at each step, in fixation order.
  std::vector<SetIndex> pi;
  /// e_1..e_k in fixation order.
  std::vector<ElementId> chosen;
  /// Every deletion and fixation, in execution order.
  std::vector<TraceEvent> events;

  std::vector<TraceEvent> deletions() const;
};

enum class Validation {
  /// Check domain membership up front with the definitional predicate.
  Eager,
  /// Skip the up-front check; a non-member is still caught when the residual
  /// exactly-one set runs dry before every set is fixed.
  Trusted,
};

struct RhoResult {
  SParkingFunction function;
  BijectionTrace trace;
};

struct SigmaResult {
  SParkingSet set;
  BijectionTrace trace;
};

/// Parking set -> parking function. Elements of the residual exactly-one set
/// are visited lightest first; those outside D are deleted from their owner
/// and counted against it, those inside D fix their owner.
/// Throws InvalidInput when D is not a parking set.
RhoResult rho(const SetSystem& system, const SParkingSet& d, Validation validation = Validation::Eager);

/// Parking function -> parking set. Same sweep, but an owner with remaining
/// budget g(A_s) > 0 spends one unit to delete e; at budget zero e is fixed.
/// Throws InvalidInput when f is not a parking function.
SigmaResult sigma(const SetSystem& system, const SParkingFunction& f, Validation validation = Validation::Eager);

/// `DEL step set elem` / `FIX step set elem` lines, set index 1-based.
std::string format_trace(const BijectionTrace& trace);

}  // namespace sparking
