// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Every verb reads JSON files, prints one JSON
// document on stdout and exits with:
//   0  success / the checked property holds
//   1  the property fails (the document carries the witness)
//   2  usage or input error
// Output is deterministic: identical inputs and flags give identical bytes.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orbit/json_io.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& body) { std::cout << body << "\n"; }

orbit::FiniteSequence load_sequence(const std::string& path) {
  return orbit::sequence_from_json(slurp(path));
}

int run_rearrange(const std::string& x_path) {
  emit(orbit::rearrangement_to_json(orbit::rearrange(load_sequence(x_path))));
  return kExitHolds;
}

int run_efunc(const std::string& x_path, const std::string& t_text) {
  const orbit::Rat t = orbit::parse_rat(t_text);
  const orbit::Rat value = orbit::e_functional(load_sequence(x_path), t);
  emit(json{{"t", orbit::rat_to_string(t)},
            {"value", orbit::rat_to_string(value)}}
           .dump());
  return kExitHolds;
}

int run_kfunc(const std::string& x_path, const std::string& t_text) {
  const orbit::FiniteSequence x = load_sequence(x_path);
  if (t_text.empty()) {
    emit(orbit::envelope_to_json(orbit::k_functional(x)));
    return kExitHolds;
  }
  const orbit::Rat t = orbit::parse_rat(t_text);
  emit(json{{"t", orbit::rat_to_string(t)},
            {"value", orbit::rat_to_string(orbit::k_eval(x, t))}}
           .dump());
  return kExitHolds;
}

int run_check(const std::string& a_path, const std::string& b_path,
              const std::string& c_text) {
  const orbit::OrbitVerdict v = orbit::check_orbit_criterion(
      load_sequence(a_path), load_sequence(b_path), orbit::parse_rat(c_text));
  emit(orbit::verdict_to_json(v));
  return v.holds ? kExitHolds : kExitFails;
}

int run_constant(const std::string& a_path, const std::string& b_path,
                 const std::string& precision_text) {
  const auto interval = orbit::orbit_constant(
      load_sequence(a_path), load_sequence(b_path),
      orbit::parse_rat(precision_text));
  if (!interval) {
    emit(json{{"finite", false}}.dump());
    return kExitFails;
  }
  emit(json{{"finite", true},
            {"lo", orbit::rat_to_string(interval->lo)},
            {"hi", orbit::rat_to_string(interval->hi)}}
           .dump());
  return kExitHolds;
}

int run_build(const std::string& a_path, const std::string& b_path,
              const std::string& c_text, const std::string& out_path) {
  const orbit::FiniteSequence a = load_sequence(a_path);
  const orbit::FiniteSequence b = load_sequence(b_path);
  const orbit::Rat C = orbit::parse_rat(c_text);
  try {
    const orbit::OperatorCertificate cert = orbit::build_orbit_operator(a, b, C);
    const std::string body = orbit::certificate_to_json(cert);
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw UsageError("cannot write '" + out_path + "'");
      out << body << "\n";
    }
    emit(body);
    return kExitHolds;
  } catch (const orbit::CriterionError& e) {
    emit(json{{"holds", false},
              {"witness_k", e.witness_k},
              {"constant", orbit::rat_to_string(C)}}
             .dump());
    return kExitFails;
  }
}

int run_verify(const std::string& op_path, const std::string& a_path,
               const std::string& b_path) {
  const orbit::OperatorCertificate cert =
      orbit::certificate_from_json(slurp(op_path));
  const orbit::Report report = orbit::verify_certificate(
      cert, load_sequence(a_path), load_sequence(b_path));
  emit(orbit::report_to_json(report));
  return orbit::report_passes(report) ? kExitHolds : kExitFails;
}

int run_apply(const std::string& op_path, const std::string& x_path) {
  const orbit::SparseOperator T = orbit::operator_from_json(slurp(op_path));
  emit(orbit::sequence_to_json(orbit::apply(T, load_sequence(x_path))));
  return kExitHolds;
}

int run_korbit(const std::string& a_path, const std::string& b_path) {
  const auto constant =
      orbit::k_orbit_constant(load_sequence(a_path), load_sequence(b_path));
  if (!constant) {
    emit(json{{"finite", false}}.dump());
    return kExitFails;
  }
  emit(json{{"finite", true}, {"constant", orbit::rat_to_string(*constant)}}
           .dump());
  return kExitHolds;
}

int run_marc(const std::string& x_path, const std::string& weight_path) {
  const orbit::WeightFamily w = orbit::weight_from_json(slurp(weight_path));
  const orbit::SandwichReport r =
      orbit::sandwich_check(load_sequence(x_path), w);
  emit(json{{"alpha_norm", orbit::rat_to_string(r.alpha_norm)},
            {"equiv_lo", orbit::rat_to_string(r.equiv.lo)},
            {"equiv_hi", orbit::rat_to_string(r.equiv.hi)},
            {"left_factor", orbit::rat_to_string(r.left_factor)},
            {"left_holds", r.left_holds},
            {"right_holds", r.right_holds},
            {"beta_exact", r.beta_exact},
            {"holds", r.holds()}}
           .dump());
  return r.holds() ? kExitHolds : kExitFails;
}

int run_selftest(const std::string& seed_text, std::int64_t trials) {
  std::uint64_t seed = 1;
  std::string text = seed_text;
  if (text.empty()) {
    if (const char* env = std::getenv("SEED")) text = env;
  }
  if (!text.empty()) {
    try {
      std::size_t used = 0;
      seed = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw UsageError("seed must be an unsigned integer, got '" + text + "'");
    }
  }
  const orbit::Report report = orbit::selftest(seed, trials);
  emit(orbit::report_to_json(report));
  return orbit::report_passes(report) ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orbit membership certificates for the pair (l0, l1)"};
  app.require_subcommand(1);

  std::string a_path, b_path, x_path, op_path, weight_path, out_path;
  std::string t_text, c_text = "1", precision_text = "1/64", seed_text;
  std::int64_t trials = 24;
  int rc = kExitHolds;

  auto* rearrange = app.add_subcommand(
      "rearrange", "Nonincreasing rearrangement with the recovery map");
  rearrange->add_option("--x", x_path, "sequence JSON")->required();
  rearrange->callback([&] { rc = run_rearrange(x_path); });

  auto* efunc =
      app.add_subcommand("efunc", "Best l1 approximation error at cost t");
  efunc->add_option("--x", x_path, "sequence JSON")->required();
  efunc->add_option("--t", t_text, "rational t >= 0")->required();
  efunc->callback([&] { rc = run_efunc(x_path, t_text); });

  auto* kfunc = app.add_subcommand(
      "kfunc", "K-functional envelope, or its value when --t is given");
  kfunc->add_option("--x", x_path, "sequence JSON")->required();
  kfunc->add_option("--t", t_text, "rational t > 0");
  kfunc->callback([&] { rc = run_kfunc(x_path, t_text); });

  auto* check = app.add_subcommand(
      "check", "Orbit criterion at a constant (1 = tail domination)");
  check->add_option("--a", a_path, "target sequence JSON")->required();
  check->add_option("--b", b_path, "source sequence JSON")->required();
  check->add_option("--constant", c_text, "rational C > 0");
  check->callback([&] { rc = run_check(a_path, b_path, c_text); });

  auto* constant = app.add_subcommand(
      "constant", "Bracket the least constant satisfying the criterion");
  constant->add_option("--a", a_path, "target sequence JSON")->required();
  constant->add_option("--b", b_path, "source sequence JSON")->required();
  constant->add_option("--precision", precision_text, "bracket width");
  constant->callback([&] { rc = run_constant(a_path, b_path, precision_text); });

  auto* build = app.add_subcommand(
      "build", "Construct an operator certificate at a constant");
  build->add_option("--a", a_path, "target sequence JSON")->required();
  build->add_option("--b", b_path, "source sequence JSON")->required();
  build->add_option("--constant", c_text, "rational C > 0");
  build->add_option("--out", out_path, "also write the certificate here");
  build->callback([&] { rc = run_build(a_path, b_path, c_text, out_path); });

  auto* verify =
      app.add_subcommand("verify", "Recompute everything a certificate claims");
  verify->add_option("--op", op_path, "certificate JSON")->required();
  verify->add_option("--a", a_path, "target sequence JSON")->required();
  verify->add_option("--b", b_path, "source sequence JSON")->required();
  verify->callback([&] { rc = run_verify(op_path, a_path, b_path); });

  auto* apply = app.add_subcommand("apply", "Apply an operator to a sequence");
  apply->add_option("--op", op_path, "operator JSON")->required();
  apply->add_option("--x", x_path, "sequence JSON")->required();
  apply->callback([&] { rc = run_apply(op_path, x_path); });

  auto* korbit = app.add_subcommand(
      "korbit", "Supremum of the K-functional ratio K(t,a)/K(t,b)");
  korbit->add_option("--a", a_path, "target sequence JSON")->required();
  korbit->add_option("--b", b_path, "source sequence JSON")->required();
  korbit->callback([&] { rc = run_korbit(a_path, b_path); });

  auto* marc = app.add_subcommand(
      "marc", "Weighted supremum norm against the tail-sum norm");
  marc->add_option("--x", x_path, "sequence JSON")->required();
  marc->add_option("--weight", weight_path, "weight family JSON")->required();
  marc->callback([&] { rc = run_marc(x_path, weight_path); });

  auto* selftest =
      app.add_subcommand("selftest", "Randomized sweep across the whole stack");
  selftest->add_option("--seed", seed_text, "RNG seed (SEED env as fallback)");
  selftest->add_option("--trials", trials, "trials per sweep")
      ->check(CLI::PositiveNumber);
  selftest->callback([&] { rc = run_selftest(seed_text, trials); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const orbit::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
