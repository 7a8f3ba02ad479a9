// Copyright 2026 The polymeta Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>

namespace polymeta {

/// Size bounds applied by the exponential parts of the library.
///
/// Defaults can be overridden through the POLYMETA_LIMITS environment
/// variable, a comma separated list of `key=value` pairs, e.g.
/// `POLYMETA_LIMITS=power_domain=2000000,group_search=10`.
struct Limits {
  std::uint64_t power_domain = 1'000'000;       // |A|^m in power()
  std::uint64_t power_tuples = 20'000'000;      // tuples over all relations of a power
  std::uint64_t indicator_elements = 1'000'000; // sum of |B|^arity over symbols
  std::uint64_t model_tables = 10'000'000;      // model search over {0,1,2}
  std::uint64_t closure_terms = 1'000'000;      // term universe of the closure
  std::uint64_t subgroup_order = 48;            // all_subgroups()
  std::uint64_t enumerate_order = 12;           // enumerate_groups_on_set()
  std::uint64_t group_search = 12;              // general coset-polymorphism search
  std::uint64_t decompose_vertices = 20;        // exact matching+bipartite search
  std::uint64_t nae_variables = 24;             // nae_brute()

  /// Applies a `key=value,...` override string. Throws InvalidArgument on an
  /// unknown key or a malformed value.
  void apply(std::string_view overrides);

  /// Defaults with POLYMETA_LIMITS applied (read once per process).
  static const Limits& defaults();
};

}  // namespace polymeta
