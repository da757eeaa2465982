#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "gsp4local/cosets.hpp"
#include "gsp4local/errors.hpp"
#include "gsp4local/hilbert.hpp"
#include "gsp4local/sampling.hpp"
#include "gsp4local/verifier.hpp"

namespace gsp4::cli {

namespace {

using sugano::PlaceData;
using sugano::SatakeData;
using verifier::Mode;
using verifier::SplitConvention;
using verifier::Tamper;
using verifier::VerifyReport;

struct VerifyOptions {
  std::string place_case = "inert";
  std::string mode = "univariate";
  int order = 10;
  int samples = 20;
  std::uint64_t seed = 0;
  std::vector<long> q_list;
  std::string output;
  std::string convention = "proof";
  std::string tamper = "none";
};

bool is_prime_power(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return true;  // n itself is prime
}

long isqrt_exact(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

Rational parse_rational(const std::string& s) { return Rational::parse(s); }

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  PlaceCase pc = opt.place_case == "inert" ? PlaceCase::inert : PlaceCase::split;
  Mode mode = opt.mode == "symbolic"     ? Mode::symbolic
              : opt.mode == "univariate" ? Mode::univariate
                                         : Mode::series;
  SplitConvention conv =
      opt.convention == "paper-A" ? SplitConvention::paper_a : SplitConvention::proof;
  Tamper tamper = opt.tamper == "inert-sign"   ? Tamper::inert_sign
                  : opt.tamper == "split-sign" ? Tamper::split_sign
                                               : Tamper::none;

  std::vector<VerifyReport> reports;
  if (mode == Mode::symbolic) {
    reports.push_back(verifier::verify(pc, mode, SatakeData::symbolic(),
                                       PlaceData::symbolic(pc), opt.order, opt.seed, conv,
                                       tamper));
  } else {
    sampling::SampleRng rng(opt.seed);
    if (!opt.q_list.empty()) {
      for (long q : opt.q_list) {
        long r = isqrt_exact(q);
        if (r < 2 || !is_prime_power(r))
          throw CLI::ValidationError("--q-list",
                                     "q must be the square of a prime power: " +
                                         std::to_string(q));
      }
      rng.set_q_pool(opt.q_list);
    }
    for (int i = 0; i < opt.samples; ++i) {
      SatakeData s = rng.sample_satake();
      PlaceData p = rng.sample_place(pc, s);
      reports.push_back(verifier::verify(pc, mode, s, p, opt.order, opt.seed, conv, tamper));
    }
  }

  int failures = 0, total = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    out << "[" << i << "]";
    for (const auto& [k, v] : rep.params) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& chk : rep.checks) {
      ++total;
      out << "      " << chk.name << ": " << (chk.pass ? "pass" : "FAIL");
      if (chk.first_mismatch) {
        ++failures;
        out << " (first mismatch at t^" << chk.first_mismatch->t_power
            << ": lhs = " << chk.first_mismatch->lhs << ", rhs = " << chk.first_mismatch->rhs
            << ")";
      }
      out << "\n";
    }
  }
  out << (failures == 0 ? "PASS" : "FAIL") << " (" << (total - failures) << "/" << total
      << " checks)\n";

  if (!opt.output.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) arr.push_back(rep.to_json());
    std::ofstream f(opt.output);
    if (!f) throw Error("cannot write " + opt.output);
    f << arr.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

struct ParamOptions {
  std::string chi0, chi1, chi2, q, nu1;
  std::string place_case = "inert";

  SatakeData satake() const {
    if (chi0.empty() && chi1.empty() && chi2.empty()) return SatakeData::symbolic();
    if (chi0.empty() || chi1.empty() || chi2.empty())
      throw CLI::ValidationError("--chi*", "give all three chi values or none");
    return SatakeData::exact(parse_rational(chi0), parse_rational(chi1),
                             parse_rational(chi2));
  }

  PlaceData place() const {
    PlaceCase pc = place_case == "inert" ? PlaceCase::inert : PlaceCase::split;
    if (q.empty()) {
      PlaceData p = PlaceData::symbolic(pc);
      if (!nu1.empty() && pc == PlaceCase::split) p.nu1 = parse_rational(nu1);
      return p;
    }
    std::optional<Rational> u;
    if (!nu1.empty()) u = parse_rational(nu1);
    return PlaceData::exact(parse_rational(q), pc == PlaceCase::inert ? -1 : +1, u);
  }
};

int run_bessel(const ParamOptions& par, int lmax, int mmax, std::ostream& out) {
  SatakeData s = par.satake();
  PlaceData p = par.place();
  auto g = sugano::GeneratingFunction::build(s, p);
  auto grid = g.coefficient_grid(mmax, lmax);
  for (int ell = 0; ell <= lmax; ++ell)
    for (int m = 0; m <= mmax; ++m) {
      RationalFunction value(grid.coeff(m, ell), g.hden);
      out << "l=" << ell << " m=" << m << ": " << value.to_string() << "\n";
    }
  return 0;
}

int run_lfactor(const ParamOptions& par, int twist, std::ostream& out) {
  SatakeData s = par.satake();
  auto lf = lfactor::local_lfactor(s, twist);
  out << "L-factor (twist " << (twist > 0 ? "+1" : "-1") << "): " << lf.to_string() << "\n";
  out << "reciprocal roots:";
  for (const auto& lambda : lfactor::eigenvalues(s).values)
    out << " " << lambda.scaled(Rational(twist)).to_string() << ";";
  out << "\n";
  return 0;
}

int run_hilbert(const std::string& a, const std::string& b, const std::string& v,
                std::ostream& out) {
  hilbert::LocalPlace place = (v == "real" || v == "inf")
                                  ? hilbert::LocalPlace::real()
                                  : hilbert::LocalPlace::prime(mpz_class(v));
  int sym = hilbert::hilbert_symbol(parse_rational(a), parse_rational(b), place);
  out << (sym > 0 ? "+1" : "-1") << "\n";
  return 0;
}

int run_classify(const std::string& rho, const std::string& p, std::ostream& out) {
  int c = hilbert::classify_place({parse_rational(rho)}, mpz_class(p));
  const char* name = c < 0 ? "inert" : c > 0 ? "split" : "ramified";
  out << (c > 0 ? "+" : "") << c << " (" << name << ")\n";
  return 0;
}

int run_coset_index(long p, long rho, int m, std::ostream& out) {
  long brute = cosets::index_bruteforce(p, rho, m);
  int leg = hilbert::legendre(mpz_class(rho), mpz_class(p));
  long formula = cosets::index_formula(p, leg, m);
  out << "brute force:  " << brute << "\n";
  out << "q^(m-1)(q-(E/v)) with (E/v)=" << leg << ": " << formula << "\n";
  out << (brute == formula ? "match" : "MISMATCH") << "\n";
  return brute == formula ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the unramified local zeta integral for GSp(4)"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the local integral identities and report");
  verify_cmd->add_option("--case", vopt.place_case, "inert or split")
      ->check(CLI::IsMember({"inert", "split"}));
  verify_cmd->add_option("--mode", vopt.mode, "symbolic, univariate, or series")
      ->check(CLI::IsMember({"symbolic", "univariate", "series"}));
  verify_cmd->add_option("--order", vopt.order, "series truncation order")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--samples", vopt.samples, "number of random parameter sets")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopt.seed, "sampling seed");
  verify_cmd->add_option("--q-list", vopt.q_list,
                         "residue cardinalities to sample from (squares of prime powers)")
      ->delimiter(',');
  verify_cmd->add_option("--output", vopt.output, "write the JSON report array here");
  verify_cmd->add_option("--convention", vopt.convention,
                         "split-case coset enumeration convention")
      ->check(CLI::IsMember({"proof", "paper-A"}));
  verify_cmd
      ->add_option("--tamper", vopt.tamper, "inject a sign flip into a closed form")
      ->check(CLI::IsMember({"none", "inert-sign", "split-sign"}))
      ->group("");  // test hook, hidden from help

  ParamOptions par;
  int lmax = 3, mmax = 3, twist = 1;
  auto add_param_opts = [&par](CLI::App* cmd, bool with_place) {
    cmd->add_option("--chi0", par.chi0, "chi_0 value (rational; omit for symbolic)");
    cmd->add_option("--chi1", par.chi1, "chi_1 value");
    cmd->add_option("--chi2", par.chi2, "chi_2 value");
    if (with_place) {
      cmd->add_option("--case", par.place_case, "inert or split")
          ->check(CLI::IsMember({"inert", "split"}));
      cmd->add_option("--q", par.q, "residue cardinality (square of a rational)");
      cmd->add_option("--nu1", par.nu1, "nu(Pi_1) for the split case");
    }
  };

  auto* bessel_cmd = app.add_subcommand("bessel-coeffs", "Table of spherical Bessel values");
  add_param_opts(bessel_cmd, true);
  bessel_cmd->add_option("--lmax", lmax, "largest ell")->check(CLI::NonNegativeNumber);
  bessel_cmd->add_option("--mmax", mmax, "largest m")->check(CLI::NonNegativeNumber);

  auto* lfactor_cmd = app.add_subcommand("lfactor", "Degree-five local L-factor");
  add_param_opts(lfactor_cmd, false);
  lfactor_cmd->add_option("--twist", twist, "+1 or -1")->check(CLI::IsMember({1, -1}));

  std::string ha, hb, hv;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Local Hilbert symbol (a, b)_v");
  hilbert_cmd->add_option("a", ha, "first argument (rational)")->required();
  hilbert_cmd->add_option("b", hb, "second argument (rational)")->required();
  hilbert_cmd->add_option("v", hv, "prime, or 'real'")->required();

  std::string crho, cp;
  auto* classify_cmd =
      app.add_subcommand("classify", "Inert/ramified/split classification of Q(sqrt(rho))");
  classify_cmd->add_option("rho", crho, "rho (rational)")->required();
  classify_cmd->add_option("p", cp, "prime")->required();

  long ip = 3, irho = 1;
  int im = 1;
  auto* coset_cmd =
      app.add_subcommand("coset-index", "Brute-force vs closed-form coset index");
  coset_cmd->add_option("--p", ip, "odd prime")->required();
  coset_cmd->add_option("--rho", irho, "unit mod p")->required();
  coset_cmd->add_option("--m", im, "level m >= 1")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());  // CLI11 wants reversed
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(vopt, out);
    if (bessel_cmd->parsed()) return run_bessel(par, lmax, mmax, out);
    if (lfactor_cmd->parsed()) return run_lfactor(par, twist, out);
    if (hilbert_cmd->parsed()) return run_hilbert(ha, hb, hv, out);
    if (classify_cmd->parsed()) return run_classify(crho, cp, out);
    if (coset_cmd->parsed()) return run_coset_index(ip, irho, im, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gsp4::cli
