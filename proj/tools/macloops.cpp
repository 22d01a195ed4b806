// Command-line front end: Betti numbers, cohomology ring pairings, loop
// homology generators, and relation verification/solving for moment-angle
// complexes of flag simplicial complexes.
//
// Exit codes: 0 success, 2 input error, 3 internal invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macloops/io.hpp"
#include "macloops/presets.hpp"

namespace {

using namespace macloops;

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_vertices() {
  const char* env = std::getenv("MACLOOPS_MAX_VERTICES");
  if (!env) return 12;
  try {
    return std::stoi(env);
  } catch (...) {
    throw InputError("MACLOOPS_MAX_VERTICES must be an integer");
  }
}

SimplicialComplex load_complex(const std::string& spec) {
  SimplicialComplex k;
  if (spec == "pentagon") {
    k = presets::pentagon();
  } else if (spec == "hexagon") {
    k = presets::hexagon();
  } else if (spec == "square") {
    k = presets::square();
  } else if (spec.rfind("simplex:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(spec.substr(8));
    } catch (...) {
      throw InputError("bad simplex preset: " + spec);
    }
    if (m < 0) throw InputError("bad simplex preset: " + spec);
    k = full_simplex(m);
  } else {
    try {
      k = complex_from_json(load_json_file(spec));
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
  }
  if (k.m() > max_vertices())
    throw InputError("complex exceeds MACLOOPS_MAX_VERTICES (" +
                     std::to_string(max_vertices()) + ") vertices");
  return k;
}

RelationTemplate load_template(const std::string& spec, bool with_unknowns) {
  if (spec == "pentagon") return presets::pentagon_relation_template();
  if (spec == "hexagon")
    return with_unknowns ? presets::build_hexagon_template()
                         : presets::hexagon_relation_template();
  try {
    return template_from_json(load_json_file(spec));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::string rat_str(const Rat& r, bool rational_mode) {
  std::ostringstream os;
  if (!rational_mode && r.denominator() == 1)
    os << r.numerator();
  else
    os << r;
  return os.str();
}

json rat_json(const Rat& r, bool rational_mode) {
  if (!rational_mode && r.denominator() == 1) {
    std::ostringstream os;
    os << r.numerator();
    try {
      return json(std::stoll(os.str()));
    } catch (...) {
    }
  }
  return json(rat_str(r, rational_mode));
}

bool degree_selected(const std::vector<int>& filter, int degree) {
  return filter.empty() ||
         std::find(filter.begin(), filter.end(), degree) != filter.end();
}

int cmd_betti(const std::string& input, const std::string& format,
              const std::vector<int>& degrees) {
  SimplicialComplex k = load_complex(input);
  BettiVector hochster = hochster_cohomology(k);
  ZkHomology zk = zk_homology(k, presets::reference_cycles(k));
  bool agree = hochster == zk.ranks && zk.torsion.empty();
  if (format == "json") {
    json jh = json::object(), jc = json::object();
    for (const auto& [d, r] : hochster)
      if (degree_selected(degrees, d)) jh[std::to_string(d)] = r;
    for (const auto& [d, r] : zk.ranks)
      if (degree_selected(degrees, d)) jc[std::to_string(d)] = r;
    std::cout << json{{"hochster", jh}, {"cellular", jc}, {"agree", agree}}
                     .dump()
              << "\n";
  } else {
    std::cout << "degree  hochster  cellular\n";
    std::set<int> ds;
    for (const auto& [d, r] : hochster) ds.insert(d);
    for (const auto& [d, r] : zk.ranks) ds.insert(d);
    for (int d : ds) {
      if (!degree_selected(degrees, d)) continue;
      long h = hochster.count(d) ? hochster.at(d) : 0;
      long c = zk.ranks.count(d) ? zk.ranks.at(d) : 0;
      std::cout << d << "  " << h << "  " << c << "\n";
    }
    std::cout << "agree: " << (agree ? "true" : "false") << "\n";
  }
  if (!agree) {
    std::cerr << "invariant violation: Hochster and cellular ranks disagree\n";
    return kExitInvariant;
  }
  return 0;
}

int cmd_cohomology_ring(const std::string& input, int p, int q,
                        const std::string& format, bool rational_mode) {
  SimplicialComplex k = load_complex(input);
  std::vector<CohomologyClass> bp, bq;
  KoszulElement top;
  if (k == presets::pentagon() && p == 3 && q == 4) {
    bp = presets::pentagon_h3_classes();
    bq = presets::pentagon_h4_classes();
    top = presets::pentagon_top_class();
  } else if (k == presets::hexagon() && p == 3 && q == 5) {
    bp = presets::hexagon_h3_classes();
    bq = presets::hexagon_h5_classes();
    top = presets::hexagon_top_class();
  } else if (k == presets::hexagon() && p == 4 && q == 4) {
    bp = presets::hexagon_h4_classes();
    bq = presets::hexagon_h4_classes();
    top = presets::hexagon_top_class();
  } else {
    bp = cohomology_basis(k, p);
    bq = cohomology_basis(k, q);
    auto top_basis = cohomology_basis(k, p + q);
    if (top_basis.size() != 1)
      throw InputError("degree " + std::to_string(p + q) +
                       " is not one-dimensional; no canonical top class");
    top = top_basis[0].representative;
  }
  RatMat table = bp.empty() || bq.empty()
                     ? RatMat(bp.size(), bq.size())
                     : product_pairing_table(k, bp, bq, top);
  if (format == "json") {
    json rows = json::array(), cols = json::array(), mat = json::array();
    for (const auto& c : bp) rows.push_back(to_string(c.representative));
    for (const auto& c : bq) cols.push_back(to_string(c.representative));
    for (Eigen::Index i = 0; i < table.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < table.cols(); ++j)
        row.push_back(rat_json(table(i, j), rational_mode));
      mat.push_back(row);
    }
    std::cout << json{{"top", to_string(top)},
                      {"row_basis", rows},
                      {"col_basis", cols},
                      {"pairing", mat}}
                     .dump()
              << "\n";
  } else {
    std::cout << "top class: " << to_string(top) << "\n";
    for (size_t i = 0; i < bp.size(); ++i)
      std::cout << "row " << i + 1 << ": " << to_string(bp[i].representative)
                << "\n";
    for (size_t j = 0; j < bq.size(); ++j)
      std::cout << "col " << j + 1 << ": " << to_string(bq[j].representative)
                << "\n";
    for (Eigen::Index i = 0; i < table.rows(); ++i) {
      for (Eigen::Index j = 0; j < table.cols(); ++j)
        std::cout << (j ? " " : "") << rat_str(table(i, j), rational_mode);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_generators(const std::string& input, const std::string& format,
                   const std::vector<int>& degrees) {
  SimplicialComplex k = load_complex(input);
  ZkHomology zk = zk_homology(k, presets::reference_cycles(k));
  std::vector<GeneratorCycleRow> table = generator_cycle_table(k, zk);
  json out = json::array();
  for (const auto& row : table) {
    if (!degree_selected(degrees, row.descriptor.degree())) continue;
    if (format == "json") {
      json coords = json::array();
      if (row.coordinates)
        for (Eigen::Index i = 0; i < row.coordinates->size(); ++i)
          coords.push_back(rat_json((*row.coordinates)(i), false));
      out.push_back({{"commutator", to_string(row.descriptor.commutator())},
                     {"degree", row.descriptor.degree()},
                     {"chain", to_json(row.chain)},
                     {"cycle", row.cycle},
                     {"coords", coords}});
    } else {
      std::cout << to_string(row.descriptor.commutator()) << "  "
                << to_string(row.chain) << "  "
                << (row.cycle ? "cycle" : "NOT A CYCLE");
      if (row.coordinates) {
        std::cout << "  [";
        for (Eigen::Index i = 0; i < row.coordinates->size(); ++i)
          std::cout << (i ? " " : "") << rat_str((*row.coordinates)(i), false);
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  if (format == "json") std::cout << out.dump() << "\n";
  for (const auto& row : table)
    if (!row.cycle) {
      std::cerr << "invariant violation: generator chain is not a cycle\n";
      return kExitInvariant;
    }
  return 0;
}

int cmd_verify_relation(const std::string& input, const std::string& relation,
                        const std::string& format) {
  SimplicialComplex k = load_complex(input);
  RelationTemplate t = load_template(relation, false);
  if (!t.parametrized_terms.empty())
    throw InputError("verify-relation needs a template without unknowns");
  QuotientAlgebra alg(k);
  TensorElement residue = expand_fixed(t, alg);
  bool zero = verify_zero(residue);
  if (format == "json") {
    json terms = json::array();
    for (const auto& [w, n] : residue) {
      json word = json::array();
      for (int i : w) word.push_back(i);
      terms.push_back({{"word", word}, {"coeff", n}});
    }
    std::cout << json{{"zero", zero}, {"residue", terms}}.dump() << "\n";
  } else {
    std::cout << (zero ? "zero" : "nonzero") << "\n";
    if (!zero) std::cout << "residue: " << to_string(residue) << "\n";
  }
  return 0;
}

int cmd_solve_coefficients(const std::string& input,
                           const std::string& relation,
                           const std::string& format, bool rational_mode) {
  SimplicialComplex k = load_complex(input);
  RelationTemplate t = load_template(relation, true);
  QuotientAlgebra alg(k);
  SolutionSet sol = solve_coefficients(t, alg);
  if (format == "json") {
    json out{{"consistent", sol.consistent},
             {"unknowns", sol.unknown_ids},
             {"dimension", sol.dimension()}};
    if (sol.consistent) {
      json part = json::array();
      for (Eigen::Index i = 0; i < sol.particular.size(); ++i)
        part.push_back(rat_json(sol.particular(i), rational_mode));
      json basis = json::array();
      for (const auto& v : sol.homogeneous_basis) {
        json row = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
          row.push_back(rat_json(v(i), rational_mode));
        basis.push_back(row);
      }
      out["particular"] = part;
      out["nullspace"] = basis;
    }
    std::cout << out.dump() << "\n";
  } else {
    if (!sol.consistent) {
      std::cout << "no solution\n";
      return 0;
    }
    std::cout << "solution space dimension: " << sol.dimension() << "\n";
    std::cout << "particular:";
    for (Eigen::Index i = 0; i < sol.particular.size(); ++i)
      std::cout << " " << sol.unknown_ids[i] << "="
                << rat_str(sol.particular(i), rational_mode);
    std::cout << "\n";
    for (const auto& v : sol.homogeneous_basis) {
      std::cout << "nullspace:";
      for (Eigen::Index i = 0; i < v.size(); ++i)
        std::cout << " " << rat_str(v(i), rational_mode);
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment-angle complex homology and loop-algebra calculator"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string coefficients = "integer";
  std::vector<int> degrees;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--coefficients", coefficients, "coefficient rendering")
      ->check(CLI::IsMember({"integer", "rational"}));
  app.add_option("--degree", degrees, "restrict output to these degrees");

  std::string input, relation;
  int p = 0, q = 0;

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers of Z_K");
  betti->add_option("complex", input, "complex file or preset")->required();

  CLI::App* ring =
      app.add_subcommand("cohomology-ring", "cup product pairing table");
  ring->add_option("complex", input)->required();
  ring->add_option("-p", p, "first degree")->required();
  ring->add_option("-q", q, "second degree")->required();

  CLI::App* gens =
      app.add_subcommand("generators", "loop homology generators");
  gens->add_option("complex", input)->required();

  CLI::App* verify =
      app.add_subcommand("verify-relation", "expand a relation, check zero");
  verify->add_option("complex", input)->required();
  verify->add_option("relation", relation, "relation file or preset")
      ->required();

  CLI::App* solve = app.add_subcommand("solve-coefficients",
                                       "solve a template's unknowns");
  solve->add_option("complex", input)->required();
  solve->add_option("template", relation, "template file or preset")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const bool rational_mode = coefficients == "rational";
  try {
    if (betti->parsed()) return cmd_betti(input, format, degrees);
    if (ring->parsed())
      return cmd_cohomology_ring(input, p, q, format, rational_mode);
    if (gens->parsed()) return cmd_generators(input, format, degrees);
    if (verify->parsed()) return cmd_verify_relation(input, relation, format);
    if (solve->parsed())
      return cmd_solve_coefficients(input, relation, format, rational_mode);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
