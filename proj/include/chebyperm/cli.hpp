#pragma once

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebyperm/bounds.hpp"
#include "chebyperm/codes.hpp"
#include "chebyperm/identities.hpp"
#include "chebyperm/matrices.hpp"
#include "chebyperm/omega.hpp"
#include "chebyperm/permanent.hpp"
#include "chebyperm/reports.hpp"
#include "chebyperm/volume_cache.hpp"

namespace chebyperm {

namespace detail {

// Accepts an integer or "p/q".
inline BigRat parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    return BigRat(num, den);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::domain_error("cannot parse rational: " + s);
  }
}

inline std::string rational_str(const BigRat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return v.str();
}

}  // namespace detail

// Exit codes: 0 success (and all checks hold), 1 domain or verification
// failure, 2 capacity (result exists but exceeds the configured engines).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Chebyshev-ball combinatorics on permutations"};
  app.name("chebyperm");
  app.require_subcommand(1);

  std::string format_str = "table";
  int workers = 1;
  long long budget = EngineLimits{}.enumeration_budget;
  app.add_option("--format", format_str, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--workers", workers, "threads for the inclusion-exclusion engine")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "max states the enumeration engine may visit")
      ->check(CLI::NonNegativeNumber);

  const auto limits = [&] {
    EngineLimits l;
    l.enumeration_budget = budget;
    return l;
  };
  const auto fmt = [&] { return parse_format(format_str); };
  int rc = 0;

  auto* matrix = app.add_subcommand("matrix", "print a band, klove, or omega matrix");
  matrix->fallthrough();
  std::string mat_family;
  long long mat_d = 0;
  long long mat_n = 0;
  long long mat_x = 0;
  matrix->add_option("--family", mat_family, "band | klove | omega")
      ->required()
      ->check(CLI::IsMember({"band", "klove", "omega"}));
  matrix->add_option("--d", mat_d, "bandwidth parameter")->required();
  auto* mat_n_opt = matrix->add_option("--n", mat_n, "matrix order (band, klove)");
  auto* mat_x_opt = matrix->add_option("--x", mat_x, "substitute x (omega)");
  matrix->callback([&] {
    if (mat_family == "omega") {
      const PolyMatrix m = build_omega_matrix(mat_d);
      if (mat_x_opt->count() > 0)
        emit_matrix(out, substitute(m, mat_x), fmt());
      else
        emit_matrix(out, m, fmt());
      return;
    }
    if (mat_n_opt->count() == 0)
      throw std::domain_error("--n is required for family " + mat_family);
    const IntMatrix m =
        mat_family == "band" ? build_band_matrix(mat_d, mat_n) : build_klove_matrix(mat_d, mat_n);
    emit_matrix(out, m, fmt());
  });

  auto* volume = app.add_subcommand("volume", "exact ball volume V(d,n)");
  volume->fallthrough();
  long long vol_d = 0;
  long long vol_n = 0;
  std::string vol_cache;
  volume->add_option("--d", vol_d, "ball radius")->required();
  volume->add_option("--n", vol_n, "permutation length")->required();
  auto* vol_cache_opt =
      volume->add_option("--cache", vol_cache, "CSV cache file (default $CHEBYPERM_VOLUME_CACHE)");
  volume->callback([&] {
    std::string path = vol_cache;
    if (vol_cache_opt->count() == 0) {
      if (const char* env = std::getenv("CHEBYPERM_VOLUME_CACHE")) path = env;
    }
    BigInt v;
    if (path.empty()) {
      v = ball_volume(vol_d, vol_n, limits(), workers);
    } else {
      VolumeCache cache{path};
      v = cache.get_or_compute(vol_d, vol_n, limits(), workers);
    }
    emit_volume(out, {vol_d, vol_n, v}, fmt());
  });

  auto* omega = app.add_subcommand("omega", "the ball-volume polynomial Omega_d");
  omega->fallthrough();
  long long om_d = 0;
  std::string om_x;
  bool om_poly = false;
  bool om_shifted = false;
  omega->add_option("--d", om_d, "degree parameter")->required();
  auto* om_x_opt = omega->add_option("--x", om_x, "evaluation point, integer or p/q");
  omega->add_flag("--poly", om_poly, "print coefficients low to high");
  omega->add_flag("--shifted", om_shifted, "use Omega_d(x+1)");
  omega->callback([&] {
    const IntPolynomial p = om_shifted ? omega_shifted_form(om_d) : omega_closed_form(om_d);
    if (om_x_opt->count() > 0) {
      const std::string vs = detail::rational_str(p(detail::parse_rational(om_x)));
      switch (fmt()) {
        case OutputFormat::table:
          out << vs << "\n";
          break;
        case OutputFormat::json: {
          nlohmann::json j{{"d", om_d}, {"x", om_x}, {"shifted", om_shifted}, {"value", vs}};
          out << j.dump() << "\n";
          break;
        }
        case OutputFormat::csv:
          out << "d,x,value\n" << om_d << "," << om_x << "," << vs << "\n";
          break;
      }
      return;
    }
    if (om_poly) {
      emit_poly_coeffs(out, p);
      return;
    }
    switch (fmt()) {
      case OutputFormat::table:
        out << p.str() << "\n";
        break;
      case OutputFormat::json: {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
        nlohmann::json j{{"d", om_d}, {"shifted", om_shifted}, {"coefficients", coeffs}};
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::csv:
        emit_poly_coeffs(out, p);
        break;
    }
  });

  auto* verify = app.add_subcommand("verify", "check exact identities");
  verify->fallthrough();
  verify->require_subcommand(1);

  auto emit_checks = [&](std::vector<IdentityReport> reports) {
    if (fmt() == OutputFormat::table) {
      std::size_t failed = 0;
      for (const auto& r : reports)
        if (!r.holds()) ++failed;
      emit_identity_reports(out, reports, fmt());
      out << (failed == 0 ? "all hold" : std::to_string(failed) + " failed") << " ("
          << reports.size() << " checks)\n";
    } else {
      emit_identity_reports(out, reports, fmt());
    }
    rc = all_hold(reports) ? 0 : 1;
  };

  auto* v_conj = verify->add_subcommand(
      "conjecture", "Omega_d closed form against the enumerated permanent");
  v_conj->fallthrough();
  long long conj_max_d = 5;
  v_conj->add_option("--max-d", conj_max_d, "check d = 1..max-d");
  v_conj->callback([&] {
    std::vector<IdentityReport> all;
    bool ok = true;
    for (long long d = 1; d <= conj_max_d; ++d) {
      auto reports = verify_omega_closed_form(d, limits());
      const bool d_ok = all_hold(reports);
      ok = ok && d_ok;
      if (fmt() == OutputFormat::table) {
        out << "d=" << d << (d_ok ? " ok" : " FAIL") << " value=" << omega_value(d)
            << " checks=" << reports.size() << "\n";
        if (!d_ok) {
          std::vector<IdentityReport> bad;
          for (const auto& r : reports)
            if (!r.holds()) bad.push_back(r);
          emit_identity_reports(out, bad, fmt());
        }
      }
      for (auto& r : reports) all.push_back(std::move(r));
    }
    if (fmt() != OutputFormat::table) emit_identity_reports(out, all, fmt());
    rc = ok ? 0 : 1;
  });

  auto* v_lemma =
      verify->add_subcommand("lemma", "ordered chain sums against the closed form");
  v_lemma->fallthrough();
  long long lemma_max_m = 4;
  long long lemma_max_n = 8;
  v_lemma->add_option("--max-m", lemma_max_m, "chain length sweep 1..max-m");
  v_lemma->add_option("--max-n", lemma_max_n, "upper endpoint sweep 1..max-n");
  v_lemma->callback([&] {
    std::vector<IdentityReport> reports;
    for (long long m = 1; m <= lemma_max_m; ++m)
      for (long long n = 1; n <= lemma_max_n; ++n)
        reports.push_back(check_chain_sum(m, n, budget));
    emit_checks(std::move(reports));
  });

  auto* v_tel = verify->add_subcommand(
      "telescoping", "single telescoping steps of the chain sum");
  v_tel->fallthrough();
  long long tel_max_i = 4;
  long long tel_max_n = 8;
  v_tel->add_option("--max-i", tel_max_i, "binomial order sweep 0..max-i");
  v_tel->add_option("--max-n", tel_max_n, "upper endpoint sweep 1..max-n");
  v_tel->callback([&] {
    std::vector<IdentityReport> reports;
    for (long long i = 0; i <= tel_max_i; ++i)
      for (long long n = 1; n <= tel_max_n; ++n)
        for (long long c = 1; c <= n; ++c) reports.push_back(check_telescoping_step(i, n, c));
    emit_checks(std::move(reports));
  });

  auto* v_bm = verify->add_subcommand(
      "bm", "shifted-coefficient counts against closed form and chain sums");
  v_bm->fallthrough();
  long long bm_max_d = 8;
  v_bm->add_option("--max-d", bm_max_d, "check d = 1..max-d, m = 0..d");
  v_bm->callback([&] {
    std::vector<IdentityReport> reports;
    for (long long d = 1; d <= bm_max_d; ++d)
      for (long long m = 0; m <= d; ++m) {
        const BigInt counted = shifted_coeff_count(d, m);
        reports.push_back({"shifted_coeff_closed_form",
                           {{"d", d}, {"m", m}},
                           counted,
                           binomial(d, m) * ipow(BigInt(d - m + 1), d)});
        reports.push_back({"shifted_coeff_chain_sum",
                           {{"d", d}, {"m", m}},
                           counted,
                           chain_sum(m, d - m + 1, budget)});
      }
    emit_checks(std::move(reports));
  });

  auto* bounds = app.add_subcommand("bounds", "lower bounds for ln V(d,n)");
  bounds->fallthrough();
  long long bnd_d = 0;
  long long bnd_n = 0;
  bool bnd_exact = false;
  bounds->add_option("--d", bnd_d, "ball radius")->required();
  bounds->add_option("--n", bnd_n, "permutation length")->required();
  bounds->add_flag("--exact", bnd_exact, "also compute ln of the exact volume");
  bounds->callback(
      [&] { emit_bound_report(out, make_bound_report(bnd_d, bnd_n, bnd_exact, limits()), fmt()); });

  auto* crossover = app.add_subcommand(
      "crossover", "first n where the omega bound beats the pow2 bound");
  crossover->fallthrough();
  long long cr_d = 0;
  long long cr_n_max = 1000000;
  crossover->add_option("--d", cr_d, "ball radius")->required();
  crossover->add_option("--n-max", cr_n_max, "search range 1..n-max");
  crossover->callback([&] {
    emit_crossover(out, {cr_d, cr_n_max, bound_crossover(cr_d, cr_n_max)}, fmt());
  });

  auto* codebounds = app.add_subcommand(
      "codebounds", "Gilbert-Varshamov and sphere-packing bounds for permutation codes");
  codebounds->fallthrough();
  long long cb_n = 0;
  long long cb_dist = 0;
  codebounds->add_option("--n", cb_n, "permutation length")->required();
  codebounds->add_option("--dist", cb_dist, "minimum Chebyshev distance")->required();
  codebounds->callback(
      [&] { emit_code_bounds(out, make_code_bounds(cb_n, cb_dist, limits()), fmt()); });

  auto* search = app.add_subcommand("code-search", "build permutation codes by search");
  search->fallthrough();
  long long cs_n = 0;
  long long cs_dist = 0;
  std::string cs_method = "greedy";
  std::string cs_order = "lex";
  bool cs_words = false;
  search->add_option("--n", cs_n, "permutation length")->required();
  search->add_option("--dist", cs_dist, "minimum Chebyshev distance")->required();
  search->add_option("--method", cs_method, "greedy | exact")
      ->check(CLI::IsMember({"greedy", "exact"}));
  search->add_option("--order", cs_order, "scan order for greedy: lex | revlex")
      ->check(CLI::IsMember({"lex", "revlex"}));
  search->add_flag("--words", cs_words, "list the codewords (table format)");
  search->callback([&] {
    const Code c = cs_method == "greedy"
                       ? greedy_code(static_cast<int>(cs_n), static_cast<int>(cs_dist),
                                     cs_order == "lex" ? ScanOrder::lex : ScanOrder::revlex)
                       : exact_max_code(static_cast<int>(cs_n), static_cast<int>(cs_dist));
    emit_code_search(out, {cs_n, cs_dist, cs_method, cs_order, c.words}, fmt(), cs_words);
  });

  // CLI11 consumes the vector back to front.
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

}  // namespace chebyperm
