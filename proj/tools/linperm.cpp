// linperm: compositional inverses of linearized permutation polynomials
// over GF(2^n).
//
// Exit codes: 0 success, 2 usage/config, 3 not a permutation polynomial,
// 4 not in the special class, 5 internal correctness mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linperm/dickson.hpp"
#include "linperm/field.hpp"
#include "linperm/linpoly.hpp"
#include "linperm/oracle.hpp"
#include "linperm/special.hpp"

using json = nlohmann::ordered_json;
using namespace linperm;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNotPP = 3;
constexpr int kExitNotSpecial = 4;
constexpr int kExitMismatch = 5;
constexpr int kBruteforceBenchCap = 13;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
};

json field_json(const Field& f) {
  return json{{"n", f.degree()}, {"modulus", f.modulus_hex()}};
}

json poly_json(const LinPoly& L) {
  json coeffs = json::array();
  for (int i = 0; i < L.length(); ++i) coeffs.push_back(L.coeff(i).to_hex());
  return json{{"n", L.field().degree()},
              {"modulus", L.field().modulus_hex()},
              {"coeffs", std::move(coeffs)}};
}

std::string coeff_csv(const LinPoly& L) {
  std::string s;
  for (int i = 0; i < L.length(); ++i) {
    if (i) s += ",";
    s += L.coeff(i).to_hex();
  }
  return s;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Field open_field(int n, const std::string& modulus_hex) {
  return modulus_hex.empty() ? make_field(n) : make_field(n, modulus_hex);
}

LinPoly parse_poly(const Field& f, const std::string& coeff_csv_arg) {
  const auto parts = split_csv(coeff_csv_arg);
  if (static_cast<int>(parts.size()) != f.degree()) {
    throw std::invalid_argument("expected " + std::to_string(f.degree()) + " coefficients");
  }
  std::vector<Felt> c;
  c.reserve(parts.size());
  for (const auto& p : parts) c.push_back(f.from_hex(p));
  return LinPoly(f, std::move(c));
}

Felt random_element(const Field& f, std::mt19937_64& rng) {
  const int digits = (f.degree() + 3) / 4;
  const int top_bits = f.degree() % 4 == 0 ? 4 : f.degree() % 4;
  std::string hex;
  for (int d = 0; d < digits; ++d) {
    int v = static_cast<int>(rng() & 0xf);
    if (d == 0) v &= (1 << top_bits) - 1;  // leading digit
    hex += "0123456789abcdef"[v];
  }
  return f.from_hex(hex);
}

Felt random_valid_a(const Field& f, std::mt19937_64& rng) {
  for (;;) {
    const Felt a = random_element(f, rng);
    if (!a.is_zero() && trace(inv(a)).is_one()) return a;
  }
}

std::int64_t median_ns(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

template <typename F>
std::int64_t timed_ns(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

void emit(const Options& opt, const json& j, const std::string& human) {
  if (opt.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << human << "\n";
  }
}

// ---- subcommand bodies ----

int run_field(const Options&, int n, const std::string& modulus) {
  const Field f = open_field(n, modulus);
  std::cout << field_json(f).dump() << "\n";
  return 0;
}

int run_invert(const Options& opt, int n, const std::string& modulus,
               const std::string& coeffs, const std::string& a_hex, const std::string& method,
               const std::string& verify, bool dump_matrix) {
  const Field f = open_field(n, modulus);
  std::optional<LinPoly> input;
  if (!coeffs.empty()) {
    input = parse_poly(f, coeffs);
  } else if (!a_hex.empty()) {
    try {
      input = build_special(f.from_hex(a_hex)).poly();
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      std::cerr << "error: " << what << "\n";
      return what == "n must be odd" ? kExitUsage : kExitNotSpecial;
    }
  } else {
    std::cerr << "error: provide --coeffs or --a\n";
    return kExitUsage;
  }
  const LinPoly& L = *input;

  if (dump_matrix) {
    const DicksonMatrix D = dickson_of(L);
    json rows = json::array();
    for (int i = 0; i < D.size(); ++i) {
      for (int j = 0; j < D.size(); ++j) rows.push_back(D.at(i, j).to_hex());
    }
    std::cout << rows.dump() << "\n";
  }

  if (!is_permutation(L)) {
    std::cerr << "error: not a permutation polynomial\n";
    return kExitNotPP;
  }

  std::optional<LinPoly> result;
  std::int64_t ns = 0;
  if (method == "cofactor") {
    ns = timed_ns([&] { result = generic_inverse(L); });
  } else if (method == "closed") {
    const auto P = match_special(L);
    if (!P) {
      std::cerr << "error: not in special class\n";
      return kExitNotSpecial;
    }
    ns = timed_ns([&] { result = closed_inverse_B(*P); });
  } else if (method == "bruteforce") {
    if (f.degree() > kMaxTableDegree) {
      std::cerr << "error: bruteforce inversion capped at n <= " << kMaxTableDegree << "\n";
      return kExitUsage;
    }
    ns = timed_ns([&] { result = linpoly_from_table(invert_table(table_of(L)), f); });
  } else {
    std::cerr << "error: unknown method '" << method << "'\n";
    return kExitUsage;
  }

  json verdicts;
  bool all_ok = true;
  const bool want_all = verify == "all";
  if (!verify.empty() && !want_all) {
    for (const auto& v : split_csv(verify)) {
      if (v != "compose" && v != "oracle" && v != "cofactor") {
        std::cerr << "error: unknown verify flag '" << v << "'\n";
        return kExitUsage;
      }
    }
  }
  const auto wants = [&](const std::string& what) {
    if (want_all) return true;
    for (const auto& v : split_csv(verify)) {
      if (v == what) return true;
    }
    return false;
  };
  if (!verify.empty()) {
    if (wants("compose")) {
      const bool ok =
          compose(L, *result).is_identity() && compose(*result, L).is_identity();
      verdicts["compose_identity"] = ok;
      all_ok = all_ok && ok;
    }
    if (wants("oracle")) {
      if (f.degree() > kMaxTableDegree) {
        std::cerr << "error: oracle verification capped at n <= " << kMaxTableDegree << "\n";
        return kExitUsage;
      }
      const bool ok = invert_table(table_of(L)) == table_of(*result);
      verdicts["oracle_match"] = ok;
      all_ok = all_ok && ok;
    }
    if (wants("cofactor")) {
      const bool ok = *result == generic_inverse(L);
      verdicts["cofactor_match"] = ok;
      all_ok = all_ok && ok;
    }
  }

  json report{{"command", "invert"},
              {"field", field_json(f)},
              {"input", poly_json(L)},
              {"inverse", poly_json(*result)},
              {"method", method}};
  if (!verdicts.empty()) report["verdicts"] = verdicts;
  report["timing_ns"] = json{{method, ns}};

  std::string human = "inverse: " + coeff_csv(*result);
  for (auto& [key, val] : verdicts.items()) {
    human += "\n" + key + ": " + (val.get<bool>() ? "pass" : "FAIL");
  }
  emit(opt, report, human);
  return all_ok ? 0 : kExitMismatch;
}

int run_special(const Options& opt, int n, const std::string& modulus,
                const std::string& a_hex, const std::string& form, bool dump_cofactors) {
  if (form != "B" && form != "C") {
    std::cerr << "error: form must be B or C\n";
    return kExitUsage;
  }
  const Field f = open_field(n, modulus);
  std::optional<SpecialPP> P;
  try {
    P = build_special(f.from_hex(a_hex));
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what == "n must be odd" ? kExitUsage : kExitNotSpecial;
  }
  const LinPoly inv_poly = form == "C" ? closed_inverse_C(*P) : closed_inverse_B(*P);

  json report{{"command", "special"},
              {"field", field_json(f)},
              {"a", P->a().to_hex()},
              {"form", form},
              {"inverse", poly_json(inv_poly)}};
  std::string human = coeff_csv(inv_poly);

  if (dump_cofactors) {
    const DicksonMatrix D = dickson_of(P->normalized_transform());
    json lemma = json::array(), matrix = json::array();
    bool match = true;
    std::string table;
    for (int i = 0; i < n; ++i) {
      const Felt from_lemma = ptilde_cofactor(*P, i);
      const Felt from_matrix = cofactor_col0(D, i);
      lemma.push_back(from_lemma.to_hex());
      matrix.push_back(from_matrix.to_hex());
      match = match && from_lemma == from_matrix;
      table += "\np~_" + std::to_string(i) + ": lemma " + from_lemma.to_hex() + ", matrix " +
               from_matrix.to_hex() + (from_lemma == from_matrix ? "" : "  << MISMATCH");
    }
    report["cofactors"] = json{{"lemma", lemma}, {"matrix", matrix}, {"match", match}};
    human += table;
    if (!match) {
      emit(opt, report, human);
      std::cerr << "error: cofactor formulas disagree with the matrix\n";
      return kExitMismatch;
    }
  }
  emit(opt, report, human);
  return 0;
}

int run_p1(const Options& opt, int n, const std::string& modulus, const std::string& form) {
  if (form != "corollary" && form != "weighted") {
    std::cerr << "error: form must be corollary or weighted\n";
    return kExitUsage;
  }
  const Field f = open_field(n, modulus);
  const LinPoly r = form == "weighted" ? p1_inverse_weighted_form(f) : p1_inverse(f);
  emit(opt,
       json{{"command", "p1"}, {"field", field_json(f)}, {"form", form},
            {"inverse", poly_json(r)}},
       coeff_csv(r));
  return 0;
}

int run_verify(const Options& opt, int n, const std::string& modulus,
               const std::string& coeffs, const std::string& inverse_csv,
               const std::string& mode) {
  if (mode != "compose" && mode != "bruteforce" && mode != "both") {
    std::cerr << "error: mode must be compose, bruteforce, or both\n";
    return kExitUsage;
  }
  const Field f = open_field(n, modulus);
  const LinPoly L = parse_poly(f, coeffs);
  const LinPoly M = parse_poly(f, inverse_csv);
  json verdicts;
  bool all_ok = true;
  std::string human;
  if (mode == "compose" || mode == "both") {
    const bool ok = compose(L, M).is_identity() && compose(M, L).is_identity();
    verdicts["compose_identity"] = ok;
    human += std::string(human.empty() ? "" : "\n") + "compose_identity: " +
             (ok ? "pass" : "FAIL");
    all_ok = all_ok && ok;
  }
  if (mode == "bruteforce" || mode == "both") {
    if (f.degree() > kMaxTableDegree) {
      std::cerr << "error: bruteforce verification capped at n <= " << kMaxTableDegree << "\n";
      return kExitUsage;
    }
    const bool ok = verify_pointwise(L, M) && verify_pointwise(M, L);
    verdicts["pointwise_identity"] = ok;
    human += std::string(human.empty() ? "" : "\n") + "pointwise_identity: " +
             (ok ? "pass" : "FAIL");
    all_ok = all_ok && ok;
  }
  emit(opt,
       json{{"command", "verify"}, {"field", field_json(f)}, {"verdicts", verdicts},
            {"ok", all_ok}},
       human);
  return all_ok ? 0 : kExitMismatch;
}

int run_bench(const Options& opt, const std::string& n_list, int samples,
              const std::string& methods_csv, bool parallel) {
  const auto method_names = split_csv(methods_csv);
  for (const auto& m : method_names) {
    if (m != "closed" && m != "cofactor" && m != "bruteforce") {
      std::cerr << "error: unknown method '" << m << "'\n";
      return kExitUsage;
    }
  }
  if (samples < 1) {
    std::cerr << "error: samples must be positive\n";
    return kExitUsage;
  }
  const auto has_method = [&](const std::string& m) {
    return std::find(method_names.begin(), method_names.end(), m) != method_names.end();
  };

  struct Row {
    int n;
    std::string method;
    std::int64_t median;
  };
  std::vector<Row> rows;

  for (const auto& n_str : split_csv(n_list)) {
    const int n = std::stoi(n_str);
    if (n % 2 == 0) {
      std::cerr << "error: n must be odd\n";
      return kExitUsage;
    }
    if (has_method("bruteforce") && n > kBruteforceBenchCap) {
      std::cerr << "error: bruteforce capped at n <= " << kBruteforceBenchCap << "\n";
      return kExitUsage;
    }
    const Field f = make_field(n);
    std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));
    std::vector<SpecialPP> cases;
    cases.reserve(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) cases.push_back(build_special(random_valid_a(f, rng)));

    std::vector<std::vector<std::int64_t>> ns(method_names.size());
    for (auto& v : ns) v.resize(static_cast<std::size_t>(samples));
    std::vector<std::uint8_t> agree(static_cast<std::size_t>(samples), 1);

    // reference method: closed when requested, else cofactor, else whatever runs
    const std::string ref = has_method("closed") ? "closed"
                            : has_method("cofactor") ? "cofactor"
                                                     : method_names.front();
    std::size_t ref_index = 0;
    for (std::size_t mi = 0; mi < method_names.size(); ++mi) {
      if (method_names[mi] == ref) ref_index = mi;
    }
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int s = 0; s < samples; ++s) {
      const SpecialPP& P = cases[static_cast<std::size_t>(s)];
      std::vector<std::optional<LinPoly>> outs(method_names.size());
      for (std::size_t mi = 0; mi < method_names.size(); ++mi) {
        const std::string& m = method_names[mi];
        std::int64_t t = 0;
        if (m == "closed") {
          t = timed_ns([&] { outs[mi] = closed_inverse_B(P); });
        } else if (m == "cofactor") {
          t = timed_ns([&] { outs[mi] = generic_inverse(P.poly()); });
        } else {
          t = timed_ns(
              [&] { outs[mi] = linpoly_from_table(invert_table(table_of(P.poly())), f); });
        }
        ns[mi][static_cast<std::size_t>(s)] = t;
      }
      for (std::size_t mi = 0; mi < method_names.size(); ++mi) {
        if (!(*outs[mi] == *outs[ref_index])) agree[static_cast<std::size_t>(s)] = 0;
      }
    }

    for (std::uint8_t ok : agree) {
      if (!ok) {
        std::cerr << "error: methods disagree on n=" << n << "; no timings reported\n";
        return kExitMismatch;
      }
    }
    for (std::size_t mi = 0; mi < method_names.size(); ++mi) {
      rows.push_back({n, method_names[mi], median_ns(ns[mi])});
    }
  }

  if (opt.json) {
    for (const auto& r : rows) {
      std::cout << json{{"command", "bench"},
                        {"n", r.n},
                        {"method", r.method},
                        {"samples", samples},
                        {"median_ns", r.median},
                        {"agreement", true}}
                       .dump()
                << "\n";
    }
  } else {
    std::cout << "n    method      median_ns\n";
    for (const auto& r : rows) {
      std::cout << r.n << std::string(r.n >= 10 ? 3 : 4, ' ') << r.method
                << std::string(r.method.size() < 12 ? 12 - r.method.size() : 1, ' ')
                << r.median << "\n";
    }
    std::cout << "all methods agree on every sample\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional inverses of linearized permutation polynomials over GF(2^n)"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "line-delimited JSON output");
  app.add_option("--seed", opt.seed, "RNG seed for sampling");

  int n = 0;
  std::string modulus, coeffs, a_hex, inverse_csv;
  std::string method = "cofactor", form = "B", verify_flags, mode = "both";
  std::string bench_n, bench_methods = "closed,cofactor";
  int samples = 10;
  bool dump_matrix = false, dump_cofactors = false, parallel = false;

  auto* c_field = app.add_subcommand("field", "construct a field and print its spec");
  c_field->add_option("--n", n, "extension degree")->required();
  c_field->add_option("--modulus", modulus, "modulus bits in hex (default: least irreducible)");

  auto* c_invert = app.add_subcommand("invert", "invert a linearized permutation polynomial");
  c_invert->add_option("--n", n)->required();
  c_invert->add_option("--modulus", modulus);
  c_invert->add_option("--coeffs", coeffs, "comma-separated hex coefficients a_0..a_{n-1}");
  c_invert->add_option("--a", a_hex, "build the input as x + x^2 + tr(x/a)");
  c_invert->add_option("--method", method, "cofactor | closed | bruteforce");
  c_invert->add_option("--verify", verify_flags, "compose,oracle,cofactor or all");
  c_invert->add_flag("--dump-matrix", dump_matrix, "print the Dickson matrix row-major");

  auto* c_special = app.add_subcommand("special", "closed-form inverse of x + x^2 + tr(x/a)");
  c_special->add_option("--n", n)->required();
  c_special->add_option("--modulus", modulus);
  c_special->add_option("--a", a_hex)->required();
  c_special->add_option("--form", form, "B | C");
  c_special->add_flag("--dump-cofactors", dump_cofactors,
                      "print the transform cofactors from both routes");

  auto* c_p1 = app.add_subcommand("p1", "inverse of x + x^2 + tr(x)");
  c_p1->add_option("--n", n)->required();
  c_p1->add_option("--modulus", modulus);
  c_p1->add_option("--form", form, "corollary | weighted");

  auto* c_verify = app.add_subcommand("verify", "check that two polynomials are mutual inverses");
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--modulus", modulus);
  c_verify->add_option("--coeffs", coeffs)->required();
  c_verify->add_option("--inverse", inverse_csv)->required();
  c_verify->add_option("--mode", mode, "compose | bruteforce | both");

  auto* c_bench = app.add_subcommand("bench", "compare inversion strategies");
  c_bench->add_option("--n", bench_n, "comma-separated odd degrees")->required();
  c_bench->add_option("--samples", samples, "random valid a values per degree");
  c_bench->add_option("--methods", bench_methods, "subset of closed,cofactor,bruteforce");
  c_bench->add_flag("--parallel", parallel, "distribute samples across threads");

  // let --json / --seed appear after the subcommand as well
  for (CLI::App* sc : {c_field, c_invert, c_special, c_p1, c_verify, c_bench}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_field->parsed()) return run_field(opt, n, modulus);
    if (c_invert->parsed())
      return run_invert(opt, n, modulus, coeffs, a_hex, method, verify_flags, dump_matrix);
    if (c_special->parsed())
      return run_special(opt, n, modulus, a_hex, form == "C" ? "C" : form, dump_cofactors);
    if (c_p1->parsed()) return run_p1(opt, n, modulus, form == "B" ? "corollary" : form);
    if (c_verify->parsed()) return run_verify(opt, n, modulus, coeffs, inverse_csv, mode);
    if (c_bench->parsed()) return run_bench(opt, bench_n, samples, bench_methods, parallel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
