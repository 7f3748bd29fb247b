#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpg/coset_table.hpp"
#include "fpg/wp.hpp"

namespace fpg::testing {

struct PropertyResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(std::string m);
  std::string summary() const;
};

// Random finite images of free groups of rank 1..4: the kernel presentation
// has no relators and index * (rank - 1) + 1 generators.
PropertyResult nielsen_schreier(std::size_t cases, std::uint64_t seed);

// Random integer matrices: U M V = D with U, V unimodular, a divisibility
// chain on D, |det| equal to the diagonal product for square M, and the
// invariants unchanged by random unimodular multiplication.
PropertyResult smith_form(std::size_t cases, std::uint64_t seed);

struct NamedTable {
  std::string name;
  Presentation presentation;
  std::shared_ptr<CosetTable const> table;
};

// Every table the library builds for the braid groups and models: registry
// quotients, derived-series quotients and enumerations.
std::vector<NamedTable> constructed_tables(GroupRegistry const& reg);
// Each relator acts trivially on every coset of each table.
PropertyResult relator_triviality(std::vector<NamedTable> const& tables);

// Words sampled from registered groups: relator consequences and random
// words. No word may be proved trivial by rewriting and refuted by a finite
// quotient; consequences are never refuted.
PropertyResult wp_soundness(GroupRegistry const& reg, std::size_t samples, std::uint64_t seed);

}  // namespace fpg::testing
