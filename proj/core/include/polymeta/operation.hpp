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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polymeta/structure.hpp"

namespace polymeta {

/// A k-ary operation on {0..n-1}, tabulated. The argument tuple
/// (a_0, ..., a_{k-1}) is stored at index encode_tuple(a, n), so the table of
/// a k-ary polymorphism is exactly a map from the domain of power(B, k).
class OperationTable {
 public:
  OperationTable() = default;
  OperationTable(Element domain, int arity);
  OperationTable(Element domain, int arity, std::vector<Element> values);

  /// Tabulates `f` over every argument tuple.
  static OperationTable from_function(Element domain, int arity,
                                      const std::function<Element(std::span<const Element>)>& f);
  static OperationTable projection(Element domain, int arity, int index);

  Element domain() const { return domain_; }
  int arity() const { return arity_; }
  std::size_t table_size() const { return values_.size(); }
  const std::vector<Element>& values() const { return values_; }

  Element operator()(std::span<const Element> args) const;
  Element operator()(std::initializer_list<Element> args) const {
    return (*this)(std::span<const Element>(args.begin(), args.size()));
  }
  Element at(std::size_t index) const { return values_[index]; }
  void set(std::span<const Element> args, Element value);
  void set_index(std::size_t index, Element value) { values_[index] = value; }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;

 private:
  Element domain_ = 0;
  int arity_ = 0;
  std::vector<Element> values_;
};

/// Interpretation of function symbols by operations.
using Interpretation = std::map<std::string, OperationTable>;

/// True iff `op` preserves every relation of `b`.
bool is_polymorphism(const OperationTable& op, const RelationalStructure& b);

}  // namespace polymeta
