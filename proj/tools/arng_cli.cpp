// Command-line front end: decompositions, quotient matrices, spectra, and
// the verification suite, with machine-readable output.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "arng/cycle_type.hpp"
#include "arng/errors.hpp"
#include "arng/exact_linalg.hpp"
#include "arng/kperm.hpp"
#include "arng/oracle.hpp"
#include "arng/quotient.hpp"
#include "arng/spectra.hpp"
#include "arng/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInconsistent = 4;

struct Options {
  std::string command;
  std::string literal;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::string method = "auto";
  std::string ordering = "canonical";
  std::string format = "pretty";
  std::string check = "all";
  std::int64_t budget = arng::kDefaultVertexBudget;
  std::uint64_t seed = 0;
  bool trace = false;
};

arng::TypeOrdering parse_ordering(const std::string& s) {
  if (s == "canonical") return arng::TypeOrdering::canonical;
  if (s == "paper") return arng::TypeOrdering::paper;
  throw arng::input_error("unknown ordering: " + s);
}

std::string pick_method(const Options& opt) {
  if (opt.method != "auto") return opt.method;
  if (opt.n >= 2 * opt.k && opt.k <= 8) return "quotient";
  return "oracle";
}

arng::Spectrum compute_spectrum(const Options& opt, const std::string& method) {
  if (method == "quotient")
    return arng::graph_multiplicities(arng::build_quotient(static_cast<int>(opt.k)), opt.n);
  if (method == "oracle")
    return arng::exact_spectrum(
        arng::build_arrangement_graph(static_cast<int>(opt.n), static_cast<int>(opt.k),
                                      opt.budget),
        opt.seed);
  if (method == "closed-form") return arng::closed_form_spectrum(opt.n, opt.k);
  throw arng::input_error("unknown method: " + method);
}

int cmd_decompose(const Options& opt) {
  arng::KPermutation p = arng::KPermutation::parse(opt.literal, static_cast<int>(opt.n));
  if (opt.k != 0 && opt.k != p.k) throw arng::input_error("literal length differs from -k");
  arng::CyclicDecomposition d = arng::decompose(p);

  // type parts in the order the decomposition is written
  std::string type;
  auto append = [&type](int len, bool cycle) {
    if (!type.empty()) type += ' ';
    type += std::to_string(len);
    if (!cycle) type += '\'';
  };
  for (const auto& c : d.cycles) append(static_cast<int>(c.size()), true);
  for (const auto& q : d.paths) append(static_cast<int>(q.size()) - 1, false);

  if (opt.format == "json") {
    nlohmann::ordered_json out = {{"n", p.n},
                                  {"k", p.k},
                                  {"decomposition", arng::to_string(d)},
                                  {"type", type}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << arng::to_string(d) << '\n' << type << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const Options& opt) {
  if (opt.n < 1 || opt.k < 1 || opt.k > opt.n)
    throw arng::input_error("spectrum requires 1 <= k <= n");
  const std::string method = pick_method(opt);
  arng::Spectrum s = compute_spectrum(opt, method);

  std::vector<std::string> trace_lines;
  if (opt.trace && method == "quotient") {
    arng::QuotientMatrix q = arng::build_quotient(static_cast<int>(opt.k));
    std::vector<arng::BigInt> weights(q.order.size());
    std::int64_t one_idx = -1;
    for (size_t i = 0; i < q.order.size(); ++i) {
      weights[i] = arng::cell_size(q.order[i], opt.n);
      if (weights[i] == 1 && q.order[i].num_paths() == 0 &&
          q.order[i].cycle_mults.count(1))
        one_idx = static_cast<std::int64_t>(i);
    }
    for (const auto& [lambda, mult] : s.pairs) {
      arng::WeightedEigenbasis basis = arng::weighted_eigenbasis(q, opt.n, lambda);
      arng::Rational total = 0;
      std::string parts;
      for (const auto& v : basis.vectors) {
        arng::Rational nrm = 0;
        for (Eigen::Index i = 0; i < v.size(); ++i)
          nrm += arng::Rational(weights[i]) * v[i] * v[i];
        arng::Rational contrib = v[one_idx] * v[one_idx] / nrm;
        total += contrib;
        parts += " " + contrib.str();
      }
      total *= s.nu;
      trace_lines.push_back("lambda " + std::to_string(lambda) + ": dim " +
                            std::to_string(basis.vectors.size()) + ", nu*sum((x_j)_1^2) = " +
                            std::to_string(s.nu) + " * (" + parts.substr(1) + ") = " +
                            total.str());
    }
  }

  if (opt.format == "json") {
    nlohmann::ordered_json out = arng::to_json(s);
    out["method"] = method;
    if (!trace_lines.empty()) out["trace"] = trace_lines;
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& line : trace_lines) std::cout << "# " << line << '\n';
    std::cout << (opt.format == "csv" ? arng::to_csv(s) : arng::to_pretty(s));
  }
  return kExitOk;
}

int cmd_quotient(const Options& opt) {
  arng::QuotientMatrix q =
      arng::build_quotient(static_cast<int>(opt.k), parse_ordering(opt.ordering));
  if (opt.n == 0) {  // symbolic
    if (opt.format == "json") {
      std::cout << arng::to_json(q).dump(2) << '\n';
    } else if (opt.format == "csv") {
      for (std::int64_t i = 0; i < q.dim(); ++i) {
        for (std::int64_t j = 0; j < q.dim(); ++j)
          std::cout << (j ? "," : "") << arng::affine_token(q.at(i, j));
        std::cout << '\n';
      }
    } else {
      std::cout << arng::pretty(q);
    }
    return kExitOk;
  }
  arng::MatI64 qn = arng::evaluate(q, opt.n);
  if (opt.format == "json") {
    std::cout << arng::to_json_evaluated(q, opt.n).dump(2) << '\n';
  } else {
    for (std::int64_t i = 0; i < q.dim(); ++i) {
      const char* sep = (opt.format == "csv") ? "," : " ";
      if (opt.format != "csv") std::cout << q.order[i].str() << ":";
      for (std::int64_t j = 0; j < q.dim(); ++j)
        std::cout << (j || opt.format != "csv" ? sep : "") << qn(i, j);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

// prediction of the measured matrix over nonempty cells, valid for any n >= k
arng::MatI64 predicted_nonempty(int k, std::int64_t n,
                                std::vector<arng::CycleType>& cells_out) {
  arng::QuotientMatrix q = arng::build_quotient(k);
  std::vector<std::int64_t> keep;
  for (std::int64_t i = 0; i < q.dim(); ++i)
    if (arng::cell_size(q.order[i], n) > 0) {
      keep.push_back(i);
      cells_out.push_back(q.order[i]);
    }
  arng::MatI64 out(keep.size(), keep.size());
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      out(a, b) = q.at(keep[a], keep[b])(n);
  return out;
}

int cmd_verify(const Options& opt) {
  if (opt.n < 1 || opt.k < 1 || opt.k > opt.n)
    throw arng::input_error("verify requires 1 <= k <= n");
  const int n = static_cast<int>(opt.n), k = static_cast<int>(opt.k);
  nlohmann::ordered_json checks = nlohmann::json::array();
  bool all_pass = true;

  auto want = [&](const std::string& name) {
    return opt.check == "all" || opt.check == name;
  };
  auto record = [&](const std::string& name, bool pass, nlohmann::ordered_json detail) {
    detail["check"] = name;
    detail["pass"] = pass;
    checks.push_back(detail);
    all_pass = all_pass && pass;
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    checks.push_back({{"check", name}, {"skipped", why}});
  };

  arng::ArrangementGraph g;
  if (want("equitable") || want("quotient-match") || want("roundtrip"))
    g = arng::build_arrangement_graph(n, k, opt.budget);

  if (want("equitable")) {
    arng::EquitableReport r = arng::verify_equitable(g);
    nlohmann::ordered_json detail = {{"nonempty_cells", r.cells.size()}};
    if (!r.equitable) detail["witness"] = r.witness;
    record("equitable", r.equitable, detail);
  }
  if (want("quotient-match")) {
    arng::EquitableReport r = arng::verify_equitable(g);
    std::vector<arng::CycleType> cells;
    arng::MatI64 predicted = predicted_nonempty(k, opt.n, cells);
    bool pass = r.equitable && cells.size() == r.cells.size() && predicted == r.measured;
    record("quotient-match", pass,
           {{"cells", cells.size()}, {"full_partition", opt.n >= 2 * opt.k}});
  }
  if (want("roundtrip")) {
    bool pass = true;
    for (const auto& image : g.vertices) {
      arng::KPermutation p(n, image);
      if (arng::recompose(arng::decompose(p), n, k) != p) {
        pass = false;
        break;
      }
    }
    record("roundtrip", pass, {{"vertices", g.num_vertices()}});
  }
  if (want("johnson")) {
    arng::Spectrum s = compute_spectrum(opt, pick_method(opt));
    record("johnson", arng::johnson_containment_check(s, opt.n, opt.k), {});
  }
  if (want("smallest")) {
    if (opt.n < 2 * opt.k) {
      skip("smallest", "requires n >= 2k");
    } else {
      auto [lambda, bound] = arng::smallest_eigenvalue_bound(opt.n, opt.k);
      arng::Spectrum s = compute_spectrum(opt, pick_method(opt));
      bool pass = s.min_eigenvalue() == lambda && s.multiplicity_of(lambda) >= bound;
      record("smallest", pass,
             {{"lambda", lambda},
              {"bound", bound},
              {"multiplicity", s.multiplicity_of(lambda)}});
    }
  }
  if (want("incidence")) {
    if (opt.n < 2 * opt.k) {
      skip("incidence", "requires n >= 2k");
    } else {
      arng::IncidenceReport r = arng::incidence_check(n, k, opt.budget, opt.seed);
      nlohmann::ordered_json detail = {{"rows", r.rows},
                                       {"cols", r.cols},
                                       {"min_eigenvalue", r.min_eigenvalue},
                                       {"min_multiplicity", r.min_multiplicity},
                                       {"bound", r.multiplicity_bound}};
      if (!r.first_diff.empty()) detail["first_diff"] = r.first_diff;
      record("incidence", r.ok, detail);
    }
  }
  if (want("line-graph")) {
    if (opt.k != 2) {
      if (opt.check == "line-graph") throw arng::input_error("line-graph requires k = 2");
      skip("line-graph", "requires k = 2");
    } else {
      arng::LineGraphReport r = arng::line_graph_check(n, opt.budget, opt.seed);
      record("line-graph", r.ok, {});
    }
  }

  nlohmann::ordered_json out = {
      {"n", opt.n}, {"k", opt.k}, {"checks", checks}, {"pass", all_pass}};
  std::cout << out.dump(2) << '\n';
  return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of arrangement graphs via the cycle-type partition"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool need_n, bool need_k) {
    auto* n_opt = sub->add_option("-n,--n", opt.n, "ground-set size");
    auto* k_opt = sub->add_option("-k,--k", opt.k, "domain size");
    if (need_n) n_opt->required();
    if (need_k) k_opt->required();
    sub->add_option("--format", opt.format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--budget", opt.budget, "vertex-count cap for oracle graphs");
    sub->add_option("--seed", opt.seed, "seed for the modular-prime randomness");
  };

  CLI::App* dec = app.add_subcommand("decompose", "cyclic decomposition of a k-permutation");
  dec->add_option("literal", opt.literal, "comma-separated images, e.g. 2,3,1")->required();
  add_common(dec, true, false);

  CLI::App* spec = app.add_subcommand("spectrum", "spectrum of A(n,k)");
  add_common(spec, true, true);
  spec->add_option("--method", opt.method, "auto, quotient, oracle, or closed-form")
      ->check(CLI::IsMember({"auto", "quotient", "oracle", "closed-form"}));
  spec->add_flag("--trace", opt.trace, "print the per-eigenvalue multiplicity derivation");

  CLI::App* quo = app.add_subcommand("quotient", "quotient matrix of the cycle-type partition");
  add_common(quo, false, true);
  quo->add_option("--ordering", opt.ordering, "canonical or paper")
      ->check(CLI::IsMember({"canonical", "paper"}));

  CLI::App* ver = app.add_subcommand("verify", "verification checks");
  ver->add_option("check", opt.check,
                  "equitable, quotient-match, johnson, smallest, incidence, "
                  "line-graph, roundtrip, or all")
      ->check(CLI::IsMember({"equitable", "quotient-match", "johnson", "smallest",
                             "incidence", "line-graph", "roundtrip", "all"}));
  add_common(ver, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (dec->parsed()) return cmd_decompose(opt);
    if (spec->parsed()) return cmd_spectrum(opt);
    if (quo->parsed()) return cmd_quotient(opt);
    if (ver->parsed()) return cmd_verify(opt);
  } catch (const arng::input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const arng::unsupported_range& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const arng::budget_error& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const arng::consistency_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitInput;
}
