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

#include "polymeta/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "polymeta/error.hpp"

namespace polymeta {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t* field(Limits& l, std::string_view key) {
  if (key == "power_domain") return &l.power_domain;
  if (key == "power_tuples") return &l.power_tuples;
  if (key == "indicator_elements") return &l.indicator_elements;
  if (key == "model_tables") return &l.model_tables;
  if (key == "closure_terms") return &l.closure_terms;
  if (key == "subgroup_order") return &l.subgroup_order;
  if (key == "enumerate_order") return &l.enumerate_order;
  if (key == "group_search") return &l.group_search;
  if (key == "decompose_vertices") return &l.decompose_vertices;
  if (key == "nae_variables") return &l.nae_variables;
  return nullptr;
}

}  // namespace

void Limits::apply(std::string_view overrides) {
  while (!overrides.empty()) {
    auto comma = overrides.find(',');
    auto item = trim(overrides.substr(0, comma));
    overrides = comma == std::string_view::npos ? std::string_view{} : overrides.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgument("limit override '" + std::string(item) + "' is not key=value");
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    auto* slot = field(*this, key);
    if (slot == nullptr) throw InvalidArgument("unknown limit '" + std::string(key) + "'");
    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw InvalidArgument("limit '" + std::string(key) + "' has non-numeric value");
    *slot = parsed;
  }
}

const Limits& Limits::defaults() {
  static const Limits instance = [] {
    Limits l;
    if (const char* env = std::getenv("POLYMETA_LIMITS")) l.apply(env);
    return l;
  }();
  return instance;
}

}  // namespace polymeta
