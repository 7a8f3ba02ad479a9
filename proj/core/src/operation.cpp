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

#include "polymeta/operation.hpp"

#include "polymeta/error.hpp"

namespace polymeta {

namespace {

std::size_t table_length(Element domain, int arity) {
  if (domain < 1) throw InvalidArgument("operation domain must be nonempty");
  if (arity < 1) throw InvalidArgument("operation arity must be at least 1");
  std::size_t len = 1;
  for (int i = 0; i < arity; ++i) {
    if (len > (std::size_t{1} << 40) / static_cast<std::size_t>(domain))
      throw LimitExceeded("operation table too large");
    len *= static_cast<std::size_t>(domain);
  }
  return len;
}

}  // namespace

OperationTable::OperationTable(Element domain, int arity)
    : domain_(domain), arity_(arity), values_(table_length(domain, arity), 0) {}

OperationTable::OperationTable(Element domain, int arity, std::vector<Element> values)
    : domain_(domain), arity_(arity), values_(std::move(values)) {
  if (values_.size() != table_length(domain, arity))
    throw InvalidArgument("operation table has the wrong length");
  for (Element v : values_)
    if (v < 0 || v >= domain) throw InvalidArgument("operation value outside the domain");
}

OperationTable OperationTable::from_function(Element domain, int arity,
                                             const std::function<Element(std::span<const Element>)>& f) {
  OperationTable op(domain, arity);
  std::vector<Element> args(static_cast<std::size_t>(arity), 0);
  for (std::size_t idx = 0; idx < op.values_.size(); ++idx) {
    op.values_[idx] = f(args);
    for (auto& a : args) {
      if (++a < domain) break;
      a = 0;
    }
  }
  return op;
}

OperationTable OperationTable::projection(Element domain, int arity, int index) {
  if (index < 0 || index >= arity) throw InvalidArgument("projection index out of range");
  return from_function(domain, arity, [index](std::span<const Element> a) { return a[index]; });
}

Element OperationTable::operator()(std::span<const Element> args) const {
  return values_[encode_tuple(args, static_cast<std::uint64_t>(domain_))];
}

void OperationTable::set(std::span<const Element> args, Element value) {
  values_[encode_tuple(args, static_cast<std::uint64_t>(domain_))] = value;
}

bool is_polymorphism(const OperationTable& op, const RelationalStructure& b) {
  if (op.domain() != b.size) throw InvalidArgument("operation and structure domains differ");
  const auto k = static_cast<std::size_t>(op.arity());
  std::vector<Element> args(k), image;
  for (const auto& r : b.relations) {
    const std::size_t count = r.size();
    if (count == 0) continue;
    TupleSet set(r);
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      image.clear();
      for (int pos = 0; pos < r.arity; ++pos) {
        for (std::size_t j = 0; j < k; ++j) args[j] = r.tuple(choice[j])[pos];
        image.push_back(op(args));
      }
      if (!set.contains(image)) return false;
      std::size_t j = 0;
      while (j < k && ++choice[j] == count) choice[j++] = 0;
      if (j == k) break;
    }
  }
  return true;
}

}  // namespace polymeta
