#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <majorana/majorana.hpp>

#include "table1.hpp"

namespace majorana::cli {

using nlohmann::json;

namespace {

struct Globals {
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  int grid = 64;
  int restarts = 16;
  bool parallel = false;
};

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  json read(const std::string& path) {
    if (path.empty() || path == "-") {
      require(!stdin_used_, "standard input can only be read once");
      stdin_used_ = true;
      return json::parse(in_);
    }
    std::ifstream file(path);
    require(file.good(), "cannot open " + path);
    return json::parse(file);
  }

  void emit(const json& doc, const std::string& path) {
    if (path.empty() || path == "-") {
      out_ << doc.dump(2) << '\n';
      return;
    }
    std::ofstream file(path);
    require(file.good(), "cannot write " + path);
    file << doc.dump(2) << '\n';
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  return {re, normal(rng)};
}

Matrix2 parse_matrix(const std::string& text) {
  std::vector<Complex> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(parse_complex(item));
  require(entries.size() == 4, "matrix needs four comma separated entries m00,m01,m10,m11");
  Matrix2 m;
  m << entries[0], entries[1], entries[2], entries[3];
  return m;
}

std::vector<std::vector<int>> parse_keep_sets(const std::vector<std::string>& specs) {
  std::vector<std::vector<int>> out;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string group;
    while (std::getline(ss, group, ';')) {
      if (!group.empty()) out.push_back(parse_int_list(group));
    }
  }
  return out;
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  require(!text.empty(), "empty complex number");
  const auto to_double = [&raw](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == s.size(), "cannot parse complex number \"" + raw + "\"");
    return value;
  };
  if (text.back() != 'i' && text.back() != 'j') return {to_double(text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_double(body)};
  const std::string real_part = body.substr(0, split);
  require(!real_part.empty(), "cannot parse complex number \"" + raw + "\"");
  return {to_double(real_part), to_double(body.substr(split))};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == item.size() && !item.empty(), "cannot parse integer list \"" + text + "\"");
    out.push_back(value);
  }
  require(!out.empty(), "empty integer list");
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Globals g;
  Context ctx(in, out);
  std::function<int()> action;

  CLI::App app{"Majorana representation of permutation-symmetric multiqubit states", "majorana"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "State documents: {\"n\", \"basis\": \"dicke\"|\"computational\", \"re\", \"im\"}.\n"
      "Constellation documents ({\"n\", \"points\": [{\"alpha\", \"beta\", \"mult\"}]}) are accepted wherever a\n"
      "state is read. A missing input path or \"-\" reads standard input.\n"
      "CSV output: `points --csv` writes alpha,beta,multiplicity; `landscape` writes alpha,beta,F.\n"
      "Exit codes: 0 success, 1 table1 mismatch, 2 malformed input, 3 numerical failure.");
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random generation and multistart searches")->capture_default_str();
  app.add_option("--grid", g.grid, "Grid resolution per axis for entanglement searches")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Number of multistart restarts")->capture_default_str();
  app.add_flag("--parallel", g.parallel, "Run multistart work concurrently");

  std::string output;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a state document");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", output, "Write to a file instead of standard output");
  int n = 3;
  int l = 0;
  int k = 1;
  std::string d0_text = "0.6";
  std::string d1_text = "0.8";
  bool random_full = false;
  std::string coeff_path;

  auto* gen_ghz = gen->add_subcommand("ghz", "GHZ state (|0...0> + |1...1>)/sqrt2");
  gen_ghz->add_option("--n", n, "Qubit count")->required();
  gen_ghz->callback([&] { action = [&] { ctx.emit(to_json(ghz_state(n)), output); return kExitOk; }; });

  auto* gen_dicke = gen->add_subcommand("dicke", "Dicke state with l qubits in |1>");
  gen_dicke->add_option("--n", n, "Qubit count")->required();
  gen_dicke->add_option("--l", l, "Number of |1> qubits")->required();
  gen_dicke->callback([&] { action = [&] { ctx.emit(to_json(dicke_state(n, l)), output); return kExitOk; }; });

  auto* gen_dnk = gen->add_subcommand("dnk", "Member of the D_{N-k,k} family");
  gen_dnk->add_option("--n", n, "Qubit count")->required();
  gen_dnk->add_option("--k", k, "Multiplicity of the second spinor")->required();
  gen_dnk->add_option("--d0", d0_text, "Amplitude of |0> in the second spinor")->capture_default_str();
  gen_dnk->add_option("--d1", d1_text, "Amplitude of |1> in the second spinor")->capture_default_str();
  gen_dnk->callback([&] {
    action = [&] {
      ctx.emit(to_json(dnk_state(n, k, parse_complex(d0_text), parse_complex(d1_text))), output);
      return kExitOk;
    };
  });

  auto* gen_gdicke = gen->add_subcommand("gdicke", "Generalized (non-symmetric) Dicke state");
  gen_gdicke->add_option("--n", n, "Qubit count")->required();
  gen_gdicke->add_option("--k", k, "Largest excitation number")->required();
  gen_gdicke->add_option("--coefficients", coeff_path,
                         "JSON {\"alphas\": [[re,im],...], \"a\": [[[re,im],...],...]}; random when omitted");
  gen_gdicke->callback([&] {
    action = [&] {
      std::vector<Complex> alphas;
      std::vector<std::vector<Complex>> a;
      if (coeff_path.empty()) {
        std::mt19937_64 rng(g.seed);
        for (int r = 0; r <= k; ++r) {
          alphas.push_back(random_complex(rng));
          std::vector<Complex> block;
          for (int i = 0; i < static_cast<int>(binomial(n, r) + 0.5); ++i) block.push_back(random_complex(rng));
          a.push_back(std::move(block));
        }
      } else {
        const json doc = ctx.read(coeff_path);
        const auto pair = [](const json& v) {
          require(v.is_array() && v.size() == 2, "complex entries are [re, im] pairs");
          return Complex(v[0].get<double>(), v[1].get<double>());
        };
        for (const auto& v : doc.at("alphas")) alphas.push_back(pair(v));
        for (const auto& block : doc.at("a")) {
          std::vector<Complex> row;
          for (const auto& v : block) row.push_back(pair(v));
          a.push_back(std::move(row));
        }
      }
      ctx.emit(to_json(generalized_dicke_state(n, k, alphas, a)), output);
      return kExitOk;
    };
  });

  auto* gen_random = gen->add_subcommand("random", "Random state drawn from --seed");
  gen_random->add_option("--n", n, "Qubit count")->required();
  gen_random->add_flag("--full", random_full, "Random computational-basis state instead of a symmetric one");
  gen_random->callback([&] {
    action = [&] {
      require(n >= 1, "n must be positive");
      std::mt19937_64 rng(g.seed);
      if (random_full) {
        require(n <= kMaxDenseQubits, "too many qubits for a computational-basis state");
        Vector v(Eigen::Index{1} << n);
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_complex(rng);
        ctx.emit(to_json(FullState::from_amplitudes(v)), output);
      } else {
        Vector v(n + 1);
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = random_complex(rng);
        ctx.emit(to_json(SymmetricState::from_coefficients(v)), output);
      }
      return kExitOk;
    };
  });

  std::string input;
  std::string second_input;

  auto* points = app.add_subcommand("points", "Majorana constellation of a symmetric state");
  bool csv = false;
  points->add_option("input", input, "State document");
  points->add_flag("--csv", csv, "Write CSV rows alpha,beta,multiplicity instead of JSON");
  points->callback([&] {
    action = [&] {
      const Constellation c = majorana_points(symmetric_from_json(ctx.read(input), g.tol));
      if (!csv) {
        ctx.emit(to_json(c), "");
        return kExitOk;
      }
      ctx.out().precision(17);
      ctx.out() << "alpha,beta,multiplicity\n";
      for (const auto& p : c.points()) {
        ctx.out() << p.root.alpha() << ',' << p.root.beta() << ',' << p.multiplicity << '\n';
      }
      return kExitOk;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "SLOCC family D_{n1,...,nd} of a symmetric state");
  bool classify_json = false;
  classify_cmd->add_option("input", input, "State document");
  classify_cmd->add_flag("--json", classify_json, "Write the configuration as JSON");
  classify_cmd->callback([&] {
    action = [&] {
      const DegeneracyConfiguration d = classify(symmetric_from_json(ctx.read(input), g.tol));
      if (classify_json) {
        ctx.emit(to_json(d), "");
      } else {
        ctx.out() << d.label() << '\n' << "diversity: " << d.diversity() << '\n';
      }
      return kExitOk;
    };
  });

  auto* rotate = app.add_subcommand("rotate", "Collective rotation R(a, b, c) on every qubit");
  std::vector<double> euler;
  rotate->add_option("input", input, "State document");
  rotate->add_option("--euler", euler, "Euler angles alpha beta gamma (z-y-z)")->expected(3)->required();
  rotate->callback([&] {
    action = [&] {
      const SymmetricState s = symmetric_from_json(ctx.read(input), g.tol);
      ctx.emit(to_json(su2_rotate(s, euler_rotation(euler[0], euler[1], euler[2]))), "");
      return kExitOk;
    };
  });

  auto* ilo = app.add_subcommand("ilo", "Identical invertible local operation A on every qubit");
  std::string matrix_text;
  ilo->add_option("input", input, "State document");
  ilo->add_option("--matrix", matrix_text, "m00,m01,m10,m11 with complex entries such as 0.5-0.8i")->required();
  ilo->callback([&] {
    action = [&] {
      const SymmetricState s = symmetric_from_json(ctx.read(input), g.tol);
      const IloResult r = apply_ilo(s, LocalOperation(parse_matrix(matrix_text)));
      if (r.ill_conditioned) {
        err << "warning: operation is ill-conditioned (condition number " << r.condition_number << ")\n";
      }
      ctx.emit(to_json(r.state), "");
      return kExitOk;
    };
  });

  auto* rdm = app.add_subcommand("rdm", "Reduced density matrix on the kept qubits");
  std::string keep_text;
  bool symmetric_basis = false;
  rdm->add_option("input", input, "State document");
  rdm->add_option("--keep", keep_text, "Kept qubits, 1-based, e.g. 1,2,3")->required();
  rdm->add_flag("--symmetric", symmetric_basis, "Express the result in the Dicke basis (symmetric input only)");
  rdm->callback([&] {
    action = [&] {
      const json doc = ctx.read(input);
      const std::vector<int> keep = parse_int_list(keep_text);
      if (symmetric_basis) {
        ctx.emit(to_json(rdm_symmetric(symmetric_from_json(doc, g.tol), static_cast<int>(keep.size()))), "");
      } else {
        ctx.emit(to_json(rdm_full(full_from_json(doc), keep)), "");
      }
      return kExitOk;
    };
  });

  SearchOptions search;
  const auto search_options = [&] {
    search.restarts = g.restarts;
    search.seed = g.seed;
    search.parallel = g.parallel;
    return search;
  };

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover a state from its marginals on 1..N-1 and 2..N");
  reconstruct->add_option("rho_a", input, "Marginal on qubits 1..N-1")->required();
  reconstruct->add_option("rho_b", second_input, "Marginal on qubits 2..N")->required();
  reconstruct->callback([&] {
    action = [&] {
      const DensityMatrix a = density_from_json(ctx.read(input), g.tol);
      const DensityMatrix b = density_from_json(ctx.read(second_input), g.tol);
      const ReconstructionResult r = reconstruct_from_two_marginals(a, b, search_options());
      if (r.unique()) {
        ctx.emit(to_json(r.state()), "");
      } else {
        ctx.out() << "AMBIGUOUS\n";
      }
      return kExitOk;
    };
  });

  auto* falsify = app.add_subcommand("falsify", "Search for all states sharing the chosen marginals of a state");
  std::vector<std::string> marginal_specs;
  falsify->add_option("input", input, "State document");
  falsify->add_option("--marginals", marginal_specs, "Kept-qubit sets, e.g. --marginals 1,2 --marginals 1,3 or \"1,2;1,3\"")
      ->required();
  falsify->callback([&] {
    action = [&] {
      const FullState f = full_from_json(ctx.read(input));
      std::vector<MarginalTarget> targets;
      for (const auto& keep : parse_keep_sets(marginal_specs)) targets.push_back({keep, rdm_full(f, keep)});
      SearchOptions opts = search_options();
      opts.tol = std::max(g.tol, kOptimizationTol);
      const auto matches = marginal_match_search(targets, f.qubits(), opts);
      json list = json::array();
      for (const auto& m : matches) {
        list.push_back({{"state", to_json(m.state)}, {"residual", m.residual}, {"fidelity", fidelity(m.state, f)}});
      }
      ctx.emit({{"n", f.qubits()}, {"classes", matches.size()}, {"matches", list}}, "");
      return kExitOk;
    };
  });

  auto* entangle = app.add_subcommand("entangle", "Geometric measure of entanglement and closest product points");
  entangle->add_option("input", input, "State document");
  entangle->callback([&] {
    action = [&] {
      GeometricMeasureOptions opts;
      opts.grid = g.grid;
      opts.restarts = g.restarts;
      opts.parallel = g.parallel;
      ctx.emit(to_json(geometric_measure(symmetric_from_json(ctx.read(input), g.tol), opts)), "");
      return kExitOk;
    };
  });

  auto* landscape_cmd = app.add_subcommand("landscape", "Overlap landscape F(alpha, beta) as CSV rows alpha,beta,F");
  landscape_cmd->add_option("input", input, "State document");
  landscape_cmd->callback([&] {
    action = [&] {
      const auto samples = landscape(symmetric_from_json(ctx.read(input), g.tol), g.grid);
      ctx.out().precision(17);
      ctx.out() << "alpha,beta,F\n";
      for (const auto& s : samples) ctx.out() << s.alpha << ',' << s.beta << ',' << s.value << '\n';
      return kExitOk;
    };
  });

  auto* table1 = app.add_subcommand("table1", "Recompute the two- and three-qubit example table and diff it");
  table1->callback([&] {
    action = [&] { return report_table1(ctx.out(), std::max(g.tol, 1e-12)) ? kExitOk : kExitMismatch; };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    require(g.tol > 0.0, "--tol must be positive");
    require(g.grid >= 2, "--grid must be at least 2");
    require(g.restarts >= 1, "--restarts must be positive");
    return action ? action() : kExitBadInput;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace majorana::cli
