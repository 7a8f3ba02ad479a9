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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polymeta/group.hpp"
#include "polymeta/identities.hpp"
#include "polymeta/limits.hpp"
#include "polymeta/operation.hpp"
#include "polymeta/structure.hpp"

namespace polymeta {

struct MetaVerdict {
  bool answer = false;
  std::optional<Interpretation> witness;
  /// Set for coset-polymorphism answers: the group behind the heap witness.
  std::optional<GroupTable> group;
  /// The solver accepted but the assembled witness did not check out.
  bool promise_violation = false;
};

bool is_maltsev(const OperationTable& m);
/// Maltsev plus m(u,x,m(v,y,w)) = m(m(u,x,v),y,w).
bool is_heap(const OperationTable& m);
/// Heap plus m(x,y,z) = m(z,y,x).
bool is_abelian_heap(const OperationTable& m);

/// The instance I whose homomorphisms into C = add_singleton_relations(B)
/// are the interpretations of sigma by polymorphisms of B.
struct Indicator {
  RelationalStructure instance;
  RelationalStructure target;
  Element values = 0;  // |B|
  struct Copy {
    std::string symbol;
    int arity = 0;
    Element offset = 0;  // first element of the copy of B^arity
  };
  std::vector<Copy> copies;
  /// An identity with two distinct variables forced apart made I contain an
  /// element that must be mapped to both 0 and 1.
  bool contradictory = false;

  /// Reads the operations off a map from I to C.
  Interpretation decode(std::span<const Element> map) const;
};

/// Throws InvalidArgument for a non-linear sigma and LimitExceeded when the
/// copies of B^k would exceed limits.indicator_elements.
Indicator indicator_structure(const RelationalStructure& b, const IdentitySet& sigma,
                              const Limits& limits = Limits::defaults());

/// True iff every operation is a polymorphism of b and sigma holds.
bool is_valid_witness(const Interpretation& ops, const RelationalStructure& b, const IdentitySet& sigma);

/// Exact decision by homomorphism search on the indicator structure.
MetaVerdict has_polymorphism(const RelationalStructure& b, const IdentitySet& sigma,
                             const Limits& limits = Limits::defaults());

/// Is there a heap operation among the polymorphisms of b? Structures whose
/// relations are all unary of size at most two on 4p elements (p >= 5 prime)
/// go through the five groups of that order; everything else through the
/// groups of order |b| from enumerate_groups_on_set().
MetaVerdict has_coset_polymorphism(const RelationalStructure& b, const Limits& limits = Limits::defaults());

/// Coset search against one group: a bijection from b's domain onto the
/// group elements under which every relation becomes a coset.
std::optional<std::vector<Element>> coset_labelling(const RelationalStructure& b, const GroupTable& g);

/// A homomorphism-existence decider that is only trusted under a promise.
using UniformSolver = std::function<bool(const RelationalStructure&, const RelationalStructure&)>;

/// Incremental view of a solver for the self-reduction: the instance only
/// ever grows by unary pins v in {b}.
class SolverSession {
 public:
  virtual ~SolverSession() = default;
  virtual bool accepts() = 0;
  /// Answer on the current instance plus the pin; the pin is kept iff true.
  virtual bool try_pin(Element v, Element b) = 0;
};

using SessionFactory =
    std::function<std::unique_ptr<SolverSession>(const RelationalStructure&, const RelationalStructure&)>;

/// Re-runs `solver` on the pinned instance for every query.
SessionFactory session_from_solver(UniformSolver solver);
/// Incremental sessions answering exactly as aip_decide would.
SessionFactory aip_sessions();

/// Builds the indicator for sigma plus idempotence, asks the solver, and
/// fixes the elements of I one at a time in ascending order, keeping the
/// first value the solver accepts. The assembled operations are returned as
/// the witness without further checks; promise_violation is set when they
/// fail validation or when some element admits no value.
MetaVerdict pcreameta_generic(const RelationalStructure& b, const IdentitySet& sigma, const SessionFactory& solver,
                              const Limits& limits = Limits::defaults());
MetaVerdict pcreameta_generic(const RelationalStructure& b, const IdentitySet& sigma, const UniformSolver& solver,
                              const Limits& limits = Limits::defaults());

/// As pcreameta_generic, but answers yes only with a validated witness.
MetaVerdict pmeta_generic(const RelationalStructure& b, const IdentitySet& sigma, const SessionFactory& solver,
                          const Limits& limits = Limits::defaults());
MetaVerdict pmeta_generic(const RelationalStructure& b, const IdentitySet& sigma, const UniformSolver& solver,
                          const Limits& limits = Limits::defaults());

/// pmeta_generic with the Maltsev identities and the affine integer
/// relaxation as solver.
MetaVerdict pmeta_abheap_maltsev(const RelationalStructure& b, const Limits& limits = Limits::defaults());

/// Answers CSP(B) on instance A through `solver` after checking that the
/// witness consists of polymorphisms of B satisfying sigma. The default
/// solver is hom_search.
bool uniform_solve_via_witness(const RelationalStructure& a, const RelationalStructure& b,
                               const Interpretation& witness, const IdentitySet& sigma,
                               const UniformSolver& solver = {});

}  // namespace polymeta
