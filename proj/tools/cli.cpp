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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <string>
#include <vector>

#include "polymeta/aip.hpp"
#include "polymeta/error.hpp"
#include "polymeta/group.hpp"
#include "polymeta/identities.hpp"
#include "polymeta/io.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/reductions.hpp"
#include "polymeta/selftest.hpp"
#include "polymeta/structure.hpp"

namespace polymeta::cli {
namespace {

using json = nlohmann::json;

struct OutputFlags {
  bool witness = false;
  bool json = false;
};

void add_output_flags(CLI::App* sub, OutputFlags& flags) {
  sub->add_flag("--witness", flags.witness, "Append the witness as JSON");
  sub->add_flag("--json", flags.json, "Print a single JSON object instead of YES/NO");
}

// YES/NO on the first line, then the witness if asked for. In JSON mode the
// object carries "answer" and the witness fields.
void decision(std::ostream& out, const OutputFlags& flags, bool yes, const json& witness) {
  if (flags.json) {
    json j = witness.is_object() ? witness : json::object();
    j["answer"] = yes ? "yes" : "no";
    out << j.dump() << "\n";
    return;
  }
  out << (yes ? "YES" : "NO") << "\n";
  if (flags.witness && !witness.is_null()) out << witness.dump() << "\n";
}

void verdict(std::ostream& out, const OutputFlags& flags, const MetaVerdict& v) {
  if (flags.json) {
    out << to_json(v);
    return;
  }
  out << (v.answer ? "YES" : "NO") << "\n";
  if (flags.witness && v.answer) out << to_json(v);
}

RelationalStructure load_structure(const std::string& path) { return parse_structure(read_file(path), path); }

GroupTable build_group(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw InvalidArgument("family '" + family + "' takes " + std::to_string(lo) +
                            (hi > lo ? " or " + std::to_string(hi) : std::string()) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1, 1);
    return cyclic(params[0]);
  }
  if (family == "dihedral") {
    need(1, 1);
    return dihedral(params[0]);
  }
  if (family == "dicyclic") {
    need(1, 1);
    return dicyclic_4p(params[0]);
  }
  if (family == "cp-c4") {
    need(1, 2);
    return cp_c4_faithful(params[0], params.size() > 1 ? params[1] : 0);
  }
  if (family == "c2c2cp") {
    need(1, 1);
    return direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(params[0]));
  }
  if (family == "product") {
    need(2, 2);
    return direct_product(cyclic(params[0]), cyclic(params[1]));
  }
  throw InvalidArgument("unknown group family '" + family +
                        "' (cyclic, dihedral, dicyclic, cp-c4, c2c2cp, product)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polymorphism metaproblems for finite relational structures", "polymeta"};
  app.require_subcommand(1);

  OutputFlags flags;
  std::string first, second;
  std::string context;  // file named in semantic error messages

  auto* check_coset = app.add_subcommand("check-coset", "Is there a coset-generating (heap) polymorphism?");
  check_coset->add_option("structure", first, "Structure JSON")->required();
  add_output_flags(check_coset, flags);

  auto* check_poly = app.add_subcommand("check-poly", "Do polymorphisms satisfy the identities?");
  check_poly->add_option("structure", first, "Structure JSON")->required();
  check_poly->add_option("identities", second, "Identity file")->required();
  add_output_flags(check_poly, flags);

  auto* pmeta = app.add_subcommand("pmeta-abheap", "Promise decision: abelian heap vs Maltsev");
  pmeta->add_option("structure", first, "Structure JSON")->required();
  add_output_flags(pmeta, flags);

  auto* aip = app.add_subcommand("aip", "Affine integer relaxation of CSP(template)");
  aip->add_option("instance", first, "Instance JSON")->required();
  aip->add_option("template", second, "Template JSON")->required();
  add_output_flags(aip, flags);

  auto* solve = app.add_subcommand("solve", "Homomorphism search");
  solve->add_option("instance", first, "Instance JSON")->required();
  solve->add_option("template", second, "Template JSON")->required();
  add_output_flags(solve, flags);

  auto* reduce = app.add_subcommand("reduce", "Hardness reductions");
  reduce->require_subcommand(1);
  auto* nae2graph = reduce->add_subcommand("nae2graph", "NAE-3SAT instance to graph");
  nae2graph->add_option("nae", first, "NAE file")->required();
  auto* graph2meta = reduce->add_subcommand("graph2meta", "Graph to structure on 4p elements");
  graph2meta->add_option("graph", first, "DIMACS graph")->required();

  auto* decompose = app.add_subcommand("decompose", "Split edges into a matching and a bipartite graph");
  decompose->add_option("graph", first, "DIMACS graph")->required();
  add_output_flags(decompose, flags);

  std::string family;
  std::vector<int> params;
  bool want_graph = false;
  int subgroup_order = 0;
  auto* group = app.add_subcommand("group", "Build a group table");
  group->add_option("family", family, "cyclic, dihedral, dicyclic, cp-c4, c2c2cp or product")->required();
  group->add_option("params", params, "Family parameters")->required();
  auto* graph_flag = group->add_flag("--coset-graph", want_graph, "Print the order-two coset graph");
  group->add_option("--subgroups", subgroup_order, "List the subgroups of this order")->excludes(graph_flag);

  polymeta::selftest::AcceptanceOptions acceptance;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("criteria", acceptance.only, "Only these criterion ids");
  selftest->add_option("--seed", acceptance.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kDecided : kInputError;
  }

  try {
    context = first;
    if (*check_coset) {
      verdict(out, flags, has_coset_polymorphism(load_structure(first)));
    } else if (*check_poly) {
      const auto b = load_structure(first);
      context = second;
      const auto sigma = parse_identities(read_file(second), second);
      verdict(out, flags, has_polymorphism(b, sigma));
    } else if (*pmeta) {
      const MetaVerdict v = pmeta_abheap_maltsev(load_structure(first));
      if (v.promise_violation) err << "note: the input is outside the promise\n";
      verdict(out, flags, v);
    } else if (*aip) {
      const auto a = load_structure(first);
      context = second;
      const auto b = load_structure(second);
      context = first + ", " + second;
      const AipEncoding enc = encode_aip(a, b);
      const auto x = solve_z(enc.system);
      json w;
      if (x) {
        w["values"] = json::array();
        for (Element v = 0; v < a.size; ++v) {
          json row = json::array();
          for (Element t = 0; t < b.size; ++t) row.push_back((*x)[enc.value_variable(v, t)].get_str());
          w["values"].push_back(row);
        }
      }
      decision(out, flags, x.has_value(), w);
    } else if (*solve) {
      const auto a = load_structure(first);
      context = second;
      const auto b = load_structure(second);
      context = first + ", " + second;
      const auto h = hom_search(a, b);
      json w;
      if (h) w["map"] = h->map;
      decision(out, flags, h.has_value(), w);
    } else if (*nae2graph) {
      const NaeInstance phi = parse_nae(read_file(first), first);
      err << "copies of the clause list: " << duplication_factor(phi) << "\n";
      out << to_dimacs(nae3sat_to_graph(phi));
    } else if (*graph2meta) {
      const GraphReduction red = graph_to_structure(parse_graph(read_file(first), first));
      err << red.report << "\n";
      out << to_json(red.structure);
    } else if (*decompose) {
      const Graph g = parse_graph(read_file(first), first);
      const auto d = decompose_matching_bipartite(g);
      json w;
      if (d) w = json::parse(to_json(*d));
      decision(out, flags, d.has_value(), w);
    } else if (*group) {
      context = "group " + family;
      const GroupTable g = build_group(family, params);
      if (want_graph) {
        out << to_dimacs(coset_graph(g));
      } else if (subgroup_order > 0) {
        json j = json::array();
        for (const auto& s : subgroups_of_order(g, subgroup_order)) j.push_back(s);
        out << j.dump() << "\n";
      } else {
        out << to_json(g);
      }
    } else if (*selftest) {
      bool ok = true;
      polymeta::selftest::run_acceptance(acceptance, [&](const polymeta::selftest::CriterionResult& r) {
        out << polymeta::selftest::format_line(r) << std::endl;
        ok = ok && r.passed;
      });
      return ok ? kDecided : kSelftestFailed;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << " (raise it through POLYMETA_LIMITS)\n";
    return kLimitExceeded;
  } catch (const InvalidArgument& e) {
    err << context << ": " << e.what() << "\n";
    return kInputError;
  }
  return kDecided;
}

}  // namespace polymeta::cli
