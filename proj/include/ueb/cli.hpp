// Copyright 2026 The ueb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. run() takes the arguments after the program name and
// returns the process exit status: 0 when every requested check passes, 1 when
// a check fails, 2 for usage or input errors.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ueb/error_basis.hpp"
#include "ueb/errors.hpp"
#include "ueb/fixtures.hpp"
#include "ueb/hadamard.hpp"
#include "ueb/json_io.hpp"
#include "ueb/quasigroup.hpp"
#include "ueb/repro.hpp"
#include "ueb/structures.hpp"
#include "ueb/teleport.hpp"

namespace ueb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline std::string read_stream(std::istream &in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) {
    throw ValidationError("cannot open '" + path + "'");
  }
  return read_stream(f);
}

inline bool looks_like_json(const std::string &s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (s[pos] == '{' || s[pos] == '[');
}

inline bool starts_with(const std::string &s, const std::string &prefix) {
  return s.rfind(prefix, 0) == 0;
}

/// group:<G> or a bare group name, d6, inline JSON, or a JSON file path.
inline LatinSquare parse_latin(const std::string &spec) {
  if (spec == "d6") {
    return d6_latin_square();
  }
  if (starts_with(spec, "group:")) {
    return cayley_table(GroupSpec::parse(spec.substr(6)));
  }
  if (looks_like_json(spec)) {
    return latin_from_json(parse_json(spec));
  }
  if (std::filesystem::exists(spec)) {
    return latin_from_json(parse_json(read_file(spec)));
  }
  if (!spec.empty() && (spec[0] == 'Z' || spec[0] == 'z')) {
    return cayley_table(GroupSpec::parse(spec));
  }
  throw ValidationError("unrecognised latin square '" + spec +
                        "' (use group:<G>, d6, inline JSON or a file)");
}

/// fourier:<G>, c6, or file:<path> holding a family or a single matrix.
inline HadamardFamily parse_hadamard(const std::string &spec, Tolerance tol) {
  if (spec == "c6") {
    return HadamardFamily::uniform(butson_c6());
  }
  if (starts_with(spec, "fourier:")) {
    return HadamardFamily::uniform(fourier_matrix(GroupSpec::parse(spec.substr(8))));
  }
  if (starts_with(spec, "file:")) {
    const Json j = parse_json(read_file(spec.substr(5)));
    if (j.is_object() && j.contains("members")) {
      return family_from_json(j, tol);
    }
    return HadamardFamily::uniform(HadamardMatrix::from(matrix_from_json(j), tol));
  }
  throw ValidationError("unrecognised Hadamard spec '" + spec + "' (use fourier:<G>, c6, file:<path>)");
}

/// Accepts a bare basis or a construct envelope.
inline ErrorBasis basis_from_text(const std::string &text) {
  const Json j = parse_json(text);
  if (j.is_object() && j.contains("report") && j["report"].contains("basis")) {
    return basis_from_json(j["report"]["basis"]);
  }
  return basis_from_json(j);
}

inline ErrorBasis load_basis(const std::string &path, std::istream &in) {
  if (path.empty() || path == "-") {
    return basis_from_text(read_stream(in));
  }
  return basis_from_text(read_file(path));
}

/// pauli, minimal:<G>, mub:<G>, sm-d6, gsm-d6, or a basis JSON file.
inline ErrorBasis basis_from_kind(const std::string &spec) {
  if (spec == "pauli") {
    return pauli_basis(0.0);
  }
  if (starts_with(spec, "minimal:")) {
    return minimal_shift_multiply(GroupSpec::parse(spec.substr(8)));
  }
  if (starts_with(spec, "mub:")) {
    return mub_basis(GroupSpec::parse(spec.substr(4)));
  }
  if (spec == "sm-d6") {
    return shift_multiply(d6_latin_square(), HadamardFamily::uniform(butson_c6()));
  }
  if (spec == "gsm-d6") {
    return generalized_shift_multiply(d6_latin_square(), HadamardFamily::uniform(butson_c6()), 0);
  }
  if (std::filesystem::exists(spec)) {
    return basis_from_text(read_file(spec));
  }
  throw ValidationError("unrecognised basis '" + spec +
                        "' (use a file, pauli, minimal:<G>, mub:<G>, sm-d6 or gsm-d6)");
}

inline std::string fmt(Complex z) {
  std::ostringstream ss;
  ss << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag())
     << "i";
  return ss.str();
}

inline std::string symbol_name(Symbol s) {
  return s < 26 ? std::string(1, static_cast<char>('a' + s)) : std::to_string(s);
}

struct Outcome {
  int code = kExitOk;
  Json report = Json::object();
};

}  // namespace detail

struct GlobalOptions {
  bool json = false;
  double eps = 1e-9;
};

inline detail::Outcome cmd_construct(const std::string &kind, const std::string &group,
                                     const std::string &latin, const std::string &hadamard,
                                     double theta, std::size_t k, const GlobalOptions &g,
                                     std::ostream &out) {
  const Tolerance tol(g.eps);
  ErrorBasis basis;
  if (kind == "pauli") {
    basis = pauli_basis(theta);
  } else if (kind == "minimal" || kind == "mub") {
    if (group.empty()) {
      throw CLI::ValidationError("--kind " + kind + " needs --group");
    }
    const GroupSpec gs = GroupSpec::parse(group);
    basis = kind == "minimal" ? minimal_shift_multiply(gs) : mub_basis(gs);
  } else {
    std::string latin_spec = latin;
    std::string hadamard_spec = hadamard;
    if (!group.empty()) {
      if (latin_spec.empty()) {
        latin_spec = "group:" + group;
      }
      if (hadamard_spec.empty()) {
        hadamard_spec = "fourier:" + group;
      }
    }
    if (latin_spec.empty() || hadamard_spec.empty()) {
      throw CLI::ValidationError("--kind " + kind + " needs --latin and --hadamard (or --group)");
    }
    LatinSquare l = detail::parse_latin(latin_spec);
    const HadamardFamily fam = detail::parse_hadamard(hadamard_spec, tol);
    if (kind == "sm") {
      basis = shift_multiply(l, fam);
    } else {
      if (!l.is_loop()) {
        l = normalize_to_loop(l).first;
      }
      if (k >= l.order()) {
        throw CLI::ValidationError("--k must be below the order " + std::to_string(l.order()));
      }
      basis = generalized_shift_multiply(l, fam, k);
    }
  }
  detail::Outcome o;
  o.report = {{"basis", basis_to_json(basis)}};
  if (!g.json) {
    out << basis_to_json(basis).dump() << "\n";
  }
  return o;
}

inline detail::Outcome cmd_verify(const std::string &path, const GlobalOptions &g, std::istream &in,
                                  std::ostream &out) {
  const ErrorBasis basis = detail::load_basis(path, in);
  const VerificationReport r = verify(basis, Tolerance(g.eps));
  detail::Outcome o;
  o.code = r.is_ueb ? kExitOk : kExitCheckFailed;
  o.report = report_to_json(r);
  o.report["dim"] = basis.dim;
  if (!g.json) {
    out << "dim: " << basis.dim << "\n"
        << "elements: " << basis.size() << "\n"
        << "all unitary: " << (r.all_unitary ? "yes" : "no") << "\n"
        << "max unitarity defect: " << r.max_unitarity_defect << "\n"
        << "max orthogonality defect: " << r.max_orthogonality_defect << "\n"
        << "unitary error basis: " << (r.is_ueb ? "yes" : "no") << "\n";
  }
  return o;
}

inline detail::Outcome cmd_axioms(const std::string &latin, const std::vector<std::string> &checks,
                                  const GlobalOptions &g, std::ostream &out) {
  const Tolerance tol(g.eps);
  LatinSquare l = detail::parse_latin(latin);
  const bool was_loop = l.is_loop();
  if (!was_loop) {
    l = normalize_to_loop(l).first;
  }
  const LatinSquareStructure s = ls_structure(l);
  const ClassicalStructure black = standard_structure(l.order());

  std::vector<std::string> wanted = checks;
  if (wanted.empty() || std::find(wanted.begin(), wanted.end(), "all") != wanted.end()) {
    wanted = {"unitarity", "bialgebra", "duality", "unital", "frobenius", "associative"};
  }
  Json results = Json::object();
  bool all_pass = true;
  for (const auto &c : wanted) {
    bool pass = false;
    if (c == "unitarity") {
      const auto [u1, u2] = check_ls_unitarity(s.mult, black, tol);
      results["ls1_unitary"] = u1;
      results["ls2_unitary"] = u2;
      pass = u1 && u2;
    } else if (c == "bialgebra") {
      pass = check_bialgebra(s.mult, black, tol, s.unit);
    } else if (c == "duality") {
      pass = check_duality(s.mult, black, tol);
    } else if (c == "unital") {
      const Matrix id = Matrix::identity(l.order());
      pass = approx_equal(s.mult * kron(s.unit, id), id, tol) &&
             approx_equal(s.mult * kron(id, s.unit), id, tol);
    } else if (c == "frobenius") {
      pass = check_frobenius_law(s.mult, s.comult, tol);
    } else if (c == "associative") {
      pass = is_associative(l);
    }
    results[c] = pass;
    all_pass = all_pass && pass;
  }
  detail::Outcome o;
  o.code = all_pass ? kExitOk : kExitCheckFailed;
  o.report = {{"order", l.order()}, {"normalized_to_loop", !was_loop}, {"checks", results}};
  if (!g.json) {
    out << "order: " << l.order() << "\n";
    if (!was_loop) {
      out << "input normalised to a loop isotope\n";
    }
    for (const auto &c : wanted) {
      out << c << ": " << (results[c].get<bool>() ? "true" : "false") << "\n";
    }
  }
  return o;
}

inline detail::Outcome cmd_repro_d6(std::size_t k, const GlobalOptions &g, std::ostream &out) {
  if (k >= 6) {
    throw CLI::ValidationError("--k must be below 6");
  }
  const ReproReport r = repro_d6(k, Tolerance(g.eps));
  detail::Outcome o;
  o.code = r.ok() ? kExitOk : kExitCheckFailed;
  Json entries = Json::array();
  for (const auto &e : r.entries) {
    entries.push_back({{"row", e.row},
                       {"col", e.col},
                       {"symbol", e.symbol},
                       {"coefficient", {e.coefficient.real(), e.coefficient.imag()}},
                       {"reference_symbol", e.reference_symbol},
                       {"reference_coefficient",
                        {e.reference_coefficient.real(), e.reference_coefficient.imag()}},
                       {"symbol_match", e.symbol_match},
                       {"coefficient_match", e.coefficient_match}});
  }
  o.report = {{"entries", entries},
              {"scale_factor", {r.scale_factor.real(), r.scale_factor.imag()}},
              {"symbols_match", r.symbols_match},
              {"coefficients_match", r.coefficients_match},
              {"coefficient_mismatches", r.coefficient_mismatches},
              {"max_d_off_diagonal", r.max_d_off_diagonal},
              {"max_d_unitarity_defect", r.max_d_unitarity_defect},
              {"verification", report_to_json(r.verification)}};
  if (!g.json) {
    out << "generalised product a*b (row a, column b), computed coefficient | printed coefficient\n";
    for (const auto &e : r.entries) {
      out << detail::symbol_name(e.row) << "*" << detail::symbol_name(e.col) << " = "
          << detail::symbol_name(e.symbol) << " x (" << detail::fmt(e.coefficient) << ") | "
          << detail::symbol_name(e.reference_symbol) << " x ("
          << detail::fmt(e.reference_coefficient) << ")";
      if (!e.symbol_match) {
        out << "  [symbol differs]";
      } else if (!e.coefficient_match) {
        out << "  [coefficient differs after scaling]";
      }
      out << "\n";
    }
    out << "fitted scale factor (printed / computed): " << detail::fmt(r.scale_factor) << "\n"
        << "symbol pattern matches: " << (r.symbols_match ? "yes" : "no") << "\n"
        << "coefficients matching after scaling: " << (r.entries.size() - r.coefficient_mismatches)
        << "/" << r.entries.size() << "\n"
        << "D_j max off-diagonal: " << r.max_d_off_diagonal << "\n"
        << "D_j max unitarity defect: " << r.max_d_unitarity_defect << "\n"
        << "generalised basis max unitarity defect: " << r.verification.max_unitarity_defect << "\n"
        << "generalised basis max orthogonality defect: "
        << r.verification.max_orthogonality_defect << "\n"
        << "generalised basis is a unitary error basis: " << (r.verification.is_ueb ? "yes" : "no")
        << "\n";
  }
  return o;
}

inline detail::Outcome cmd_normalize_d2(const std::string &path, const GlobalOptions &g,
                                        std::istream &in, std::ostream &out) {
  const Tolerance tol(g.eps);
  const ErrorBasis basis = detail::load_basis(path, in);
  detail::Outcome o;
  if (basis.dim != 2 || !verify(basis, tol).is_ueb) {
    o.code = kExitCheckFailed;
    o.report = {{"error", "input is not a dimension-2 unitary error basis"}};
    if (!g.json) {
      out << "input is not a dimension-2 unitary error basis\n";
    }
    return o;
  }
  const NormalizationResult r = normalize_d2(basis, tol);
  const ErrorBasis target = canonical_pauli();
  double deviation = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    deviation = std::max(deviation, max_abs_diff(r.basis.elements[a], target.elements[a]));
  }
  o.code = deviation <= tol.eps ? kExitOk : kExitCheckFailed;
  Json transcript = Json::array();
  for (const auto &s : r.transcript) {
    Json phases = Json::array();
    for (const auto &c : s.transform.phases) {
      phases.push_back({c.real(), c.imag()});
    }
    transcript.push_back({{"step", s.description},
                          {"left", matrix_to_json(s.transform.left)},
                          {"right", matrix_to_json(s.transform.right)},
                          {"phases", phases}});
  }
  o.report = {{"basis", basis_to_json(r.basis)},
              {"transcript", transcript},
              {"max_deviation_from_canonical", deviation}};
  if (!g.json) {
    for (std::size_t n = 0; n < r.transcript.size(); ++n) {
      out << "step " << n + 1 << ": " << r.transcript[n].description << "\n";
    }
    for (std::size_t a = 0; a < 4; ++a) {
      const Matrix &m = r.basis.elements[a];
      out << "element " << a << ": [[" << detail::fmt(m(0, 0)) << ", " << detail::fmt(m(0, 1))
          << "], [" << detail::fmt(m(1, 0)) << ", " << detail::fmt(m(1, 1)) << "]]\n";
    }
    out << "max deviation from canonical Pauli quadruple: " << deviation << "\n";
  }
  return o;
}

inline detail::Outcome cmd_teleport(const std::string &basis_spec, std::size_t states,
                                    std::uint64_t seed, const GlobalOptions &g, std::ostream &out) {
  const Tolerance tol(g.eps);
  const ErrorBasis basis = detail::basis_from_kind(basis_spec);
  detail::Outcome o;
  if (!verify(basis, tol).is_ueb) {
    o.code = kExitCheckFailed;
    o.report = {{"error", "corrections do not form a unitary error basis"}};
    if (!g.json) {
      out << "corrections do not form a unitary error basis\n";
    }
    return o;
  }
  Rng rng(seed);
  const auto traces = teleport_all_outcomes(basis, random_state(basis.dim, rng), tol);
  const TeleportSweep sweep = teleport_sweep(basis, states, seed, tol);
  o.code = sweep.passed ? kExitOk : kExitCheckFailed;
  Json outcomes = Json::array();
  for (const auto &t : traces) {
    outcomes.push_back(
        {{"i", t.i}, {"j", t.j}, {"probability", t.outcome_probability}, {"fidelity", t.fidelity}});
  }
  o.report = {{"dim", basis.dim},
              {"seed", seed},
              {"states", states},
              {"first_state_outcomes", outcomes},
              {"min_fidelity", sweep.min_fidelity},
              {"max_probability_defect", sweep.max_probability_defect},
              {"max_probability_sum_defect", sweep.max_probability_sum_defect},
              {"passed", sweep.passed}};
  if (!g.json) {
    out << "outcomes for the first random state (seed " << seed << "):\n"
        << "  i  j  probability  fidelity\n";
    for (const auto &t : traces) {
      out << "  " << t.i << "  " << t.j << "  " << t.outcome_probability << "  " << t.fidelity
          << "\n";
    }
    out << "states: " << states << "\n"
        << "min fidelity: " << sweep.min_fidelity << "\n"
        << "max |p - 1/d^2|: " << sweep.max_probability_defect << "\n"
        << "max |sum p - 1|: " << sweep.max_probability_sum_defect << "\n"
        << (sweep.passed ? "PASS" : "FAIL") << "\n";
  }
  return o;
}

inline detail::Outcome cmd_fingerprint(const std::string &path, const std::string &against,
                                       const GlobalOptions &g, std::istream &in, std::ostream &out) {
  const ErrorBasis basis = detail::load_basis(path, in);
  const std::vector<double> fp = fingerprint(basis);
  detail::Outcome o;
  o.report = {{"dim", basis.dim}, {"fingerprint", fp}};
  std::optional<bool> match;
  if (!against.empty()) {
    match = fingerprints_match(fp, fingerprint(detail::basis_from_kind(against)));
    o.report["matches"] = *match;
    o.code = *match ? kExitOk : kExitCheckFailed;
  }
  if (!g.json) {
    out << "dim: " << basis.dim << "\nfingerprint (" << fp.size() << " values):";
    for (std::size_t n = 0; n < fp.size(); ++n) {
      out << (n % 8 == 0 ? "\n  " : " ") << fp[n];
    }
    out << "\n";
    if (match) {
      out << "matches " << against << ": " << (*match ? "yes (not distinguished)" : "no") << "\n";
    }
  }
  return o;
}

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Construct and verify unitary error bases", "ueb"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit a JSON envelope {verb, ok, exit_code, report}");
  app.add_option("--tol", g.eps, "Absolute tolerance")->check(CLI::NonNegativeNumber);

  std::string kind, group, latin, hadamard, basis_path, against, basis_spec = "pauli";
  double theta = 0.0;
  std::size_t k = 0;
  std::size_t states = 100;
  std::uint64_t seed = 42;
  std::vector<std::string> checks;

  auto *construct = app.add_subcommand("construct", "Build an error basis and print it as JSON");
  construct->add_option("--kind", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"pauli", "sm", "minimal", "mub", "gsm"}));
  construct->add_option("--group", group, "Abelian group, e.g. Z6 or Z2xZ2");
  construct->add_option("--latin", latin, "group:<G>, d6, inline JSON or a file");
  construct->add_option("--hadamard", hadamard, "fourier:<G>, c6 or file:<path>");
  construct->add_option("--theta", theta, "Phase of the Pauli basis");
  construct->add_option("--k", k, "Index of the white structure for gsm");

  auto *verify_cmd = app.add_subcommand("verify", "Check a basis read from --basis or stdin");
  verify_cmd->add_option("--basis", basis_path, "Basis JSON file (default: stdin)");

  auto *axioms = app.add_subcommand("axioms", "Check latin square structure axioms");
  axioms->add_option("--latin", latin, "group:<G>, d6, inline JSON or a file")->required();
  axioms->add_option("--check", checks, "Checks to run")
      ->check(CLI::IsMember(
          {"all", "unitarity", "bialgebra", "duality", "unital", "frobenius", "associative"}));

  auto *repro = app.add_subcommand("repro-d6", "Rebuild the order-6 generalised table");
  repro->add_option("--k", k, "Index of the white structure");

  auto *normalize = app.add_subcommand("normalize-d2", "Normalise a d=2 basis to Pauli form");
  normalize->add_option("--basis", basis_path, "Basis JSON file (default: stdin)");

  auto *teleport = app.add_subcommand("teleport", "Teleport random states with a basis");
  teleport->add_option("--basis", basis_spec,
                       "Basis file, pauli, minimal:<G>, mub:<G>, sm-d6 or gsm-d6");
  teleport->add_option("--states", states, "Number of random states");
  teleport->add_option("--seed", seed, "Seed for mt19937_64");

  auto *fp = app.add_subcommand("fingerprint", "Print equivalence invariants of a basis");
  fp->add_option("--basis", basis_path, "Basis JSON file (default: stdin)");
  fp->add_option("--against", against, "Basis file or kind to compare with");

  for (auto *sub : app.get_subcommands([](const CLI::App *) { return true; })) {
    sub->fallthrough();
  }

  std::vector<const char *> argv{"ueb"};
  for (const auto &a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  detail::Outcome o;
  try {
    const auto saved = out.precision(12);
    if (verb == "construct") {
      o = cmd_construct(kind, group, latin, hadamard, theta, k, g, out);
    } else if (verb == "verify") {
      o = cmd_verify(basis_path, g, in, out);
    } else if (verb == "axioms") {
      o = cmd_axioms(latin, checks, g, out);
    } else if (verb == "repro-d6") {
      o = cmd_repro_d6(k, g, out);
    } else if (verb == "normalize-d2") {
      o = cmd_normalize_d2(basis_path, g, in, out);
    } else if (verb == "teleport") {
      o = cmd_teleport(basis_spec, states, seed, g, out);
    } else {
      o = cmd_fingerprint(basis_path, against, g, in, out);
    }
    out.precision(saved);
  } catch (const CLI::Error &e) {
    err << "ueb " << verb << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    err << "ueb " << verb << ": " << e.what() << "\n";
    return kExitUsage;
  }
  if (g.json) {
    const Json envelope = {
        {"verb", verb}, {"ok", o.code == kExitOk}, {"exit_code", o.code}, {"report", o.report}};
    out << envelope.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace ueb::cli
