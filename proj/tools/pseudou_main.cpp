// pseudou: every library operation as a subcommand.  JSON in (stdin or
// --input), JSON out (stdout or --output).  Exit codes: 0 success, 2 input
// error, 3 internal-consistency failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "pseudou/acceptance.hpp"
#include "pseudou/blocks.hpp"
#include "pseudou/burau.hpp"
#include "pseudou/commutators.hpp"
#include "pseudou/cyclo.hpp"
#include "pseudou/pseudo_unitary.hpp"
#include "pseudou/recurrences.hpp"

using json = nlohmann::json;
using namespace pseudou;
using cyclo::BigInt;
using pu::Complex;
using pu::Matrix;
using pu::SignatureForm;

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  double tol = 1e-9;
  std::uint64_t seed = 20240817;
  int precision_bits = 256;
};

json read_json(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw std::invalid_argument("cannot open input file " + cfg.input);
    return json::parse(in);
  }
  return json::parse(std::cin);
}

void write_json(const RunConfig& cfg, const json& j) {
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out)
      throw std::invalid_argument("cannot open output file " + cfg.output);
    out << j.dump() << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

// {"dim": d, "entries": [[[re,im],...],...]}
Matrix parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument(
        "matrix must be {\"dim\": d, \"entries\": [[[re,im],...],...]}");
  const int d = j.at("dim").get<int>();
  const auto& rows = j.at("entries");
  if (d <= 0 || static_cast<int>(rows.size()) != d)
    throw std::invalid_argument("matrix entries do not match dim");
  Matrix M(d, d);
  for (int i = 0; i < d; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("matrix row has wrong length");
    for (int k = 0; k < d; ++k) {
      const auto& e = row.at(k);
      if (e.size() != 2)
        throw std::invalid_argument("matrix entry must be [re, im]");
      M(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return M;
}

json matrix_json(const Matrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < M.cols(); ++k)
      row.push_back({M(i, k).real(), M(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", M.rows()}, {"entries", std::move(rows)}};
}

// {"m": ..., "n": ...} for the standard diagonal form, or an explicit
// Hermitian matrix in matrix JSON
SignatureForm parse_form(const json& j) {
  if (j.is_object() && j.contains("m") && j.contains("n"))
    return SignatureForm::standard(j.at("m").get<int>(), j.at("n").get<int>());
  return SignatureForm::from_matrix(parse_matrix(j));
}

// decimal string beyond 53-bit precision, plain number otherwise
json bignum(const BigInt& v) {
  static const BigInt lim = BigInt(1) << 53;
  if (v < lim && v > -lim) return json(v.convert_to<long long>());
  return json(v.str());
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

int run_reproduce(const RunConfig& cfg) {
  const auto results = acceptance::run_all(cfg.seed);
  std::ostringstream os;
  const int failures = acceptance::report(results, os);
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    out << os.str();
  } else {
    std::cout << os.str();
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-unitary phases, conformal-block signatures, and "
               "Burau/Squier analysis"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the shared flags after the subcommand too

  RunConfig cfg;
  if (const char* env = std::getenv("PSEUDOU_PRECISION"))
    cfg.precision_bits = std::atoi(env);
  app.add_option("--input", cfg.input, "read the JSON payload from a file");
  app.add_option("--output", cfg.output, "write the result to a file");
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized property runs");
  app.add_option("--precision", cfg.precision_bits,
                 "working precision in bits for exact sign escalation");

  int g = 0, p = 0, zeta = 1, mod = 0;
  auto* c_phase = app.add_subcommand("dgw-phase", "phase of a group element");
  auto* c_cocycle = app.add_subcommand("cocycle", "cocycle of a pair");
  auto* c_canon = app.add_subcommand("canonical-form", "Krein canonical form");
  auto* c_comm =
      app.add_subcommand("commutators", "commutator decomposition");
  auto* c_verlinde = app.add_subcommand("verlinde", "block space dimension");
  c_verlinde->add_option("--g", g, "genus")->required();
  c_verlinde->add_option("--p", p, "level")->required();
  auto* c_theta = app.add_subcommand("theta", "order of the theta root");
  c_theta->add_option("--p", p, "level")->required();
  auto* c_sig = app.add_subcommand("signature", "signature of the block form");
  c_sig->add_option("--g", g, "genus");
  c_sig->add_option("--p", p, "level");
  c_sig->add_option("--zeta", zeta, "exponent of the primitive 2p-th root");
  auto* c_rec = app.add_subcommand("recurrence", "mod-m orbit of a sequence");
  c_rec->add_option("--p", p, "level")->required();
  c_rec->add_option("--zeta", zeta, "exponent of the primitive 2p-th root");
  c_rec->add_option("--mod", mod, "modulus")->required();
  auto* c_burau = app.add_subcommand("burau", "reduced Burau matrix");
  auto* c_count = app.add_subcommand("count-roots",
                                     "noncompact root classes for (g, p)");
  c_count->add_option("--g", g, "genus")->required();
  c_count->add_option("--p", p, "odd level")->required();
  auto* c_repro =
      app.add_subcommand("reproduce-paper", "run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.precision_bits < 64)
      throw std::invalid_argument("--precision must be at least 64");

    if (c_repro->parsed()) return run_reproduce(cfg);

    if (c_verlinde->parsed()) {
      write_json(cfg, {{"N", bignum(blocks::dim_blocks(g, p))}});
    } else if (c_theta->parsed()) {
      write_json(cfg, {{"theta", cyclo::theta(p)}});
    } else if (c_sig->parsed()) {
      if (!cfg.input.empty() || g == 0) {
        const json in = read_json(cfg);
        g = in.at("g").get<int>();
        p = in.at("p").get<int>();
        zeta = in.value("zeta_exponent", 1);
      }
      const auto rec = blocks::signature(g, p, cyclo::RootOfUnity(2 * p, zeta));
      write_json(cfg, {{"g", rec.g},
                       {"p", rec.p},
                       {"zeta", {{"order", rec.zeta.order},
                                 {"exponent", rec.zeta.exponent}}},
                       {"N", bignum(rec.N)},
                       {"sigma", bignum(rec.sigma)},
                       {"h_plus", bignum(rec.h_plus)}});
    } else if (c_rec->parsed()) {
      const auto z =
          recurrences::zero_locus(recurrences::builtin_spec(p, zeta), mod);
      write_json(cfg,
                 {{"period", z.period},
                  {"zeros_mod_" + std::to_string(z.period), z.classes}});
    } else if (c_count->parsed()) {
      const auto rc = burau::count_noncompact_roots(g, p);
      write_json(cfg, {{"count", rc.count},
                       {"inside_count", rc.inside_count},
                       {"window_count", rc.window_count},
                       {"lower_bound", rc.lower_bound},
                       {"window_bound", rc.window_bound},
                       {"meets_lower_bound", rc.meets_lower_bound}});
    } else if (c_burau->parsed()) {
      const json in = read_json(cfg);
      burau::BraidWord w;
      w.strands = in.at("strands").get<int>();
      w.letters = in.at("letters").get<std::vector<int>>();
      const auto& q = in.at("q");
      const Complex qv(q.at(0).get<double>(), q.at(1).get<double>());
      json out = {{"matrix", matrix_json(burau::reduced_burau(w, qv))}};
      try {
        out["definite"] = burau::squier_definite(w.strands, qv);
      } catch (const std::invalid_argument&) {
        out["definite"] = nullptr;  // singular at this root
      }
      const auto uc = burau::unitarizable(w.strands, qv);
      out["unitarizable"] =
          uc == burau::UnitarizabilityClass::DefiniteWindow ? "definite-window"
          : uc == burau::UnitarizabilityClass::PrincipalRoot
              ? "principal-root"
              : "non-unitarizable";
      write_json(cfg, out);
    } else if (c_phase->parsed()) {
      const json in = read_json(cfg);
      const auto F = parse_form(in.at("form"));
      write_json(cfg, {{"phase",
                        pu::dgw_phase(parse_matrix(in.at("matrix")), F,
                                      cfg.tol)}});
    } else if (c_cocycle->parsed()) {
      const json in = read_json(cfg);
      const auto F = parse_form(in.at("form"));
      const Matrix g1 = parse_matrix(in.at("g1"));
      const Matrix g2 = parse_matrix(in.at("g2"));
      const auto p1 = pu::make_path(g1, F, 64, cfg.tol);
      const auto p2 = pu::make_path(g2, F, 64, cfg.tol);
      write_json(cfg, {{"cocycle", pu::cocycle(g1, g2, p1, p2, F, cfg.tol)}});
    } else if (c_canon->parsed()) {
      const json in = read_json(cfg);
      const auto F = parse_form(in.at("form"));
      const auto can = pu::canonical_form(parse_matrix(in.at("matrix")), F,
                                          cfg.tol);
      json units = json::array();
      for (const auto& [lambda, sign] : can.report.unit_entries)
        units.push_back({complex_json(lambda), sign});
      json pairs = json::array();
      for (const auto& [a, b] : can.report.hyperbolic_pairs)
        pairs.push_back({complex_json(a), complex_json(b)});
      write_json(cfg, {{"C", matrix_json(can.C)},
                       {"block_diagonal", matrix_json(can.block_diagonal)},
                       {"form_in_basis", matrix_json(can.form_in_basis)},
                       {"unit_entries", std::move(units)},
                       {"hyperbolic_pairs", std::move(pairs)}});
    } else if (c_comm->parsed()) {
      const json in = read_json(cfg);
      const auto F = parse_form(in.at("form"));
      const auto list = commutators::commutator_decomposition(
          parse_matrix(in.at("matrix")), F, cfg.tol);
      json pairs = json::array();
      for (const auto& [a, b] : list.pairs)
        pairs.push_back({{"a", matrix_json(a)}, {"b", matrix_json(b)}});
      write_json(cfg, {{"count", pairs.size()},
                       {"residual", list.residual},
                       {"pairs", std::move(pairs)}});
    }
    return 0;
  } catch (const json::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 3;
  }
}
