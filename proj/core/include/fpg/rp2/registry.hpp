#pragma once

#include <string>

#include "fpg/coset_table.hpp"
#include "fpg/wp.hpp"

namespace fpg::rp2 {

struct RegistryOptions {
  int max_strands = 5;
  EnumerationLimits limits{};
  KnuthBendixCaps kb{};
  bool rewriting = true;  // run Knuth-Bendix for every group
};

// bn:1..max, gamma2:3..max, L, Lambda, M3, Q8, Q16, D12, Dic12, A4, each with
// its exact finite quotients and a (possibly capped) rewriting system.
GroupRegistry build_registry(RegistryOptions const& opts = {});

// Presentation behind a registry id, without building quotients or rewriting
// systems: bn:N, gamma2:N, M3, Lambda or a model name. Throws UnknownGroup.
Presentation group_presentation(std::string const& id);

}  // namespace fpg::rp2
