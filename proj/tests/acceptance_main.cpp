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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Arguments restrict the run to the given criterion ids.

#include <cstdlib>
#include <iostream>
#include <string>

#include "polymeta/selftest.hpp"

int main(int argc, char** argv) {
  polymeta::selftest::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::stoi(argv[i]));
  bool ok = true;
  polymeta::selftest::run_acceptance(options, [&](const polymeta::selftest::CriterionResult& r) {
    std::cout << polymeta::selftest::format_line(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
