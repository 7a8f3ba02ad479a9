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
#include <functional>
#include <string>
#include <vector>

namespace polymeta::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20261019;
  std::vector<int> only;  // empty runs every criterion
};

/// Ids 1..11.
std::vector<int> criterion_ids();

/// Runs one criterion; exceptions count as failure.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] name (1.23s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace polymeta::selftest
