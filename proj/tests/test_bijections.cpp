#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sparking/bijections.hpp"
#include "sparking/enumeration.hpp"
#include "sparking/errors.hpp"

using namespace testing;

namespace {

// Re-executes a trace against the family step by step, checking that every
// event touched the lightest residual element and its sole owner. Returns
// the fixed elements.
oracle::Set replay(const SetSystem& system, const BijectionTrace& trace) {
  oracle::Family working = to_family(system);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < system.k(); ++i) open.push_back(i);
  const Universe& u = system.universe();
  oracle::Set fixed;
  for (const auto& ev : trace.events) {
    const oracle::Set residual = oracle::exactly_one(working, open);
    REQUIRE_FALSE(residual.empty());
    const auto lightest = *std::min_element(residual.begin(), residual.end(), [&](auto a, auto b) {
      return u.weight(u.position_of(a)) < u.weight(u.position_of(b));
    });
    REQUIRE(ev.element == lightest);
    REQUIRE(std::find(open.begin(), open.end(), ev.set) != open.end());
    REQUIRE(working[ev.set].count(ev.element) == 1);
    if (ev.kind == TraceEventKind::Delete) {
      working[ev.set].erase(ev.element);
    } else {
      fixed.insert(ev.element);
      open.erase(std::find(open.begin(), open.end(), ev.set));
    }
  }
  REQUIRE(open.empty());
  return fixed;
}

void check_trace_shape(const SetSystem& s, const BijectionTrace& t) {
  REQUIRE(t.chosen.size() == s.k());
  REQUIRE(t.pi.size() == s.k());
  oracle::Set chosen(t.chosen.begin(), t.chosen.end());
  REQUIRE(chosen.size() == s.k());
  for (const auto& d : t.deletions()) REQUIRE(chosen.count(d.element) == 0);
  REQUIRE(t.events.size() <= s.union_all().size() + s.k());
}

}  // namespace

TEST_SUITE("rho") {
  TEST_CASE("worked example") {
    auto s = u42_parts();
    CHECK(rho(s, pset(s, {2, 3})).function == fn({0, 1}));
    CHECK(rho(s, pset(s, {1, 3})).function == fn({0, 0}));
  }

  TEST_CASE("single set: lighter elements are counted") {
    auto s = SetSystem(id_universe({5, 7}), std::vector<std::vector<ElementId>>{{5, 7}});
    auto r = rho(s, pset(s, {7}));
    CHECK(r.function == fn({1}));
    REQUIRE(r.trace.events.size() == 2);
    CHECK(r.trace.events[0] == TraceEvent{TraceEventKind::Delete, 1, 0, 5});
    CHECK(r.trace.events[1] == TraceEvent{TraceEventKind::Fix, 1, 0, 7});
  }

  TEST_CASE("non-members are refused in both modes") {
    auto s = u42_parts();
    CHECK_THROWS_AS(rho(s, pset(s, {1, 2})), InvalidInput);
    CHECK_THROWS_AS(rho(s, pset(s, {1, 2}), Validation::Trusted), InvalidInput);
    CHECK_THROWS_AS(rho(s, pset(s, {1})), InvalidInput);
  }
}

TEST_SUITE("sigma") {
  TEST_CASE("worked example rows") {
    auto s = u42_parts();
    CHECK(ids(s, sigma(s, fn({0, 0})).set.elements) == std::vector<ElementId>{1, 3});
    CHECK(ids(s, sigma(s, fn({1, 0})).set.elements) == std::vector<ElementId>{1, 4});
    CHECK(ids(s, sigma(s, fn({2, 0})).set.elements) == std::vector<ElementId>{2, 4});
  }

  TEST_CASE("trace text") {
    auto s = u42_parts();
    auto r = sigma(s, fn({1, 0}));
    CHECK(format_trace(r.trace) == "DEL 1 1 3\nFIX 1 2 4\nFIX 2 1 1\n");
    CHECK(r.trace.pi == std::vector<SetIndex>{1, 0});
    CHECK(r.trace.chosen == std::vector<ElementId>{4, 1});
  }

  TEST_CASE("non-members are refused in both modes") {
    auto s = u42_parts();
    CHECK_THROWS_AS(sigma(s, fn({2, 2})), InvalidInput);
    CHECK_THROWS_AS(sigma(s, fn({2, 2}), Validation::Trusted), InvalidInput);
    CHECK_THROWS_AS(sigma(s, fn({0})), InvalidInput);
  }

  TEST_CASE("custom weights change the pairing") {
    // Reversed weights on the worked example: 4 is lightest.
    std::vector<GroundElement> elements{{1, Weight(4)}, {2, Weight(3)}, {3, Weight(2)}, {4, Weight(1)}};
    SetSystem s(std::make_shared<const Universe>(elements), std::vector<std::vector<ElementId>>{{1, 2, 3}, {1, 2, 4}});
    CHECK(ids(s, sigma(s, fn({0, 0})).set.elements) == std::vector<ElementId>{3, 4});
    CHECK(verify_bijection(s).ok());
  }
}

TEST_CASE("roundtrip, membership and trace consistency on random families") {
  std::mt19937_64 rng(2024);
  auto universe = range_universe(6);
  std::size_t members = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const SetSystem s = random_set_system(rng, 4, universe);
    for (const auto& f : enumerate_parking_functions(s)) {
      auto forward = sigma(s, f);
      check_trace_shape(s, forward.trace);
      CHECK(replay(s, forward.trace) == to_oracle(s, forward.set.elements));
      CHECK(oracle::is_parking_set(to_family(s), to_oracle(s, forward.set.elements)));
      auto back = rho(s, forward.set);
      check_trace_shape(s, back.trace);
      CHECK(replay(s, back.trace) == to_oracle(s, forward.set.elements));
      CHECK(back.function == f);
      // Same sweep: both directions delete and fix the same elements.
      CHECK(back.trace.events == forward.trace.events);
      CHECK(oracle::is_parking_function(to_family(s), back.function.values));
      ++members;
    }
  }
  CHECK(members > 100);
}

TEST_CASE("trusted mode agrees with eager mode on members") {
  std::mt19937_64 rng(99);
  auto universe = range_universe(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SetSystem s = random_set_system(rng, 3, universe);
    for (const auto& d : enumerate_parking_sets(s)) {
      CHECK(rho(s, d, Validation::Trusted).function == rho(s, d).function);
    }
  }
}
