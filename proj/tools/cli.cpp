#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "hsob/bessel.hpp"
#include "hsob/hermite.hpp"
#include "hsob/mehler_heine.hpp"
#include "hsob/suites.hpp"
#include "hsob/zeros.hpp"
#include "table.hpp"

namespace hsob::cli {

namespace {

constexpr int kDigits = 40;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  long precision = 0;  // 0: environment or built-in default
  std::string format = "csv";
  std::string output;

  int n = -1;
  std::string family = "hermite";
  std::string m0 = "0", m1 = "0", lambda = "0";
  std::string masses;
  std::string parity;
  std::string nlist = "25,50,100,200";
  int kmax = 3;
  std::string grid_max = "12.1";
  int grid_points = 121;
  double slack = 1.02;
  double final_tol = 0.05;
  double sign_x = 0.1;
  std::string suite;
};

std::string real_str(const Real& x) { return x.to_string(kDigits); }

// report names end in ",even"/",odd"; the parity has its own column
std::string base_name(const std::string& family) {
  const auto cut = family.rfind(',');
  return cut == std::string::npos ? family : family.substr(0, cut);
}

std::vector<Parity> parities(const std::string& p, Parity fallback_single, bool allow_both) {
  if (p.empty()) return allow_both ? std::vector<Parity>{Parity::Even, Parity::Odd} : std::vector{fallback_single};
  if (p == "even") return {Parity::Even};
  if (p == "odd") return {Parity::Odd};
  if (p == "both" && allow_both) return {Parity::Even, Parity::Odd};
  throw UsageError("--parity must be even, odd" + std::string(allow_both ? " or both" : ""));
}

ScaledFamily make_family(const Options& o, Parity p) {
  if (o.family == "hermite") return ScaledFamily::hermite(p);
  if (o.family == "q")
    return ScaledFamily::qlambda(
        TwoByTwoCase::make(parse_rational(o.m0), parse_rational(o.m1), parse_rational(o.lambda)), p);
  if (o.family == "s") {
    if (o.masses.empty()) throw UsageError("--family s needs --masses M0,M1,...");
    return ScaledFamily::diagonal_s(parse_rational_list(o.masses), p);
  }
  throw UsageError("--family must be hermite, q or s");
}

void emit(const Options& o, const std::string& command, const Table& t, const std::string& status, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw std::ios_base::failure("cannot open " + o.output);
    os = &file;
  }
  if (o.format == "json") {
    write_json(*os, command, t, status);
  } else {
    write_csv(*os, t);
  }
  os->flush();
  if (!*os) throw std::ios_base::failure("write failed");
}

int cmd_hermite(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n must be given and nonnegative");
  Table t{{"n", "coefficients", "norm_sq", "value_at_0"}, {}};
  std::string coeffs;
  for (const auto& c : hermite_monic_exact(o.n)) coeffs += (coeffs.empty() ? "" : " ") + c.get_str();
  t.add({std::to_string(o.n), coeffs, real_str(hermite_norm_sq(o.n)), hermite_at_zero_exact(o.n).get_str()});
  emit(o, "hermite", t, "ok", out);
  return kOk;
}

Table mh_table() { return {{"family", "parity", "limit", "n", "sup_error", "sup_x"}, {}}; }

void add_mh_rows(Table& t, const MHReport& rep, Parity p) {
  for (size_t i = 0; i < rep.n_list.size(); ++i)
    t.add({base_name(rep.family), to_string(p), rep.limit.name(), std::to_string(rep.n_list[i]), real_str(rep.sup_errors[i]),
           real_str(rep.sup_points[i])});
}

void describe_mh(const MHReport& rep, std::ostream& err) {
  err << rep.family << ": limit " << rep.limit.name() << ", decreasing " << (rep.decreasing ? "yes" : "no")
      << ", final sup below bound " << (rep.final_below ? "yes" : "no") << ", sign at " << rep.sign_x.to_string(3) << " "
      << (rep.sign_ok ? "ok" : "wrong") << "\n";
}

int cmd_mh(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<int> nl = parse_n_list(o.nlist);
  if (o.grid_points < 1) throw UsageError("--grid-points must be positive");
  const auto grid = default_grid(Real::parse(o.grid_max), o.grid_points);
  const MHThresholds th{o.slack, o.final_tol, o.sign_x};
  Table t = mh_table();

  // r >= 3 with every mass positive: conjectured limits, reported only
  if (o.family == "s") {
    const auto m = parse_rational_list(o.masses);
    bool all_positive = true;
    for (const auto& v : m) all_positive = all_positive && v > 0;
    if (m.size() >= 6 && m.size() % 2 == 0 && all_positive) {
      const auto probe = conjecture_probe(static_cast<int>(m.size()) / 2, m, nl, grid, th);
      for (size_t i = 0; i < probe.reports.size(); ++i) {
        add_mh_rows(t, probe.reports[i], i == 0 ? Parity::Even : Parity::Odd);
        describe_mh(probe.reports[i], err);
      }
      err << "conjectured limits: trends are reported, not asserted\n";
      emit(o, "mh", t, "reported", out);
      return kOk;
    }
  }

  bool all = true;
  for (Parity p : parities(o.parity, Parity::Even, true)) {
    const MHReport rep = mh_report(make_family(o, p), nl, grid, th);
    add_mh_rows(t, rep, p);
    describe_mh(rep, err);
    all = all && rep.passed();
  }
  emit(o, "mh", t, all ? "pass" : "fail", out);
  return all ? kOk : kCheckFailed;
}

int cmd_zeros(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<int> nl = parse_n_list(o.nlist);
  if (o.kmax < 1) throw UsageError("--kmax must be positive");
  Table t{{"family", "parity", "limit", "n", "k", "kind", "zero", "scaled_2sqrt", "scaled_sqrt", "accelerated", "target",
           "relative_error"},
          {}};
  bool all = true;
  for (Parity p : parities(o.parity, Parity::Even, true)) {
    const ScaledFamily fam = make_family(o, p);
    if (!fam.symmetric()) throw UsageError("zeros need a symmetric family (lambda = 0)");
    const auto rep = zero_asymptotics_report(fam, nl, o.kmax, ZeroThresholds{o.slack, o.final_tol, ZeroThresholds{}.settled_relative});
    for (const auto& e : rep.entries)
      t.add({base_name(rep.family), to_string(p), rep.limit.name(), std::to_string(e.n), std::to_string(e.k),
             e.imaginary ? "imaginary" : "real", real_str(e.zero), real_str(e.scaled_2sqrt), real_str(e.scaled_sqrt),
             e.accelerated ? "yes" : "no", e.target ? real_str(*e.target) : "", e.relative_error ? real_str(*e.relative_error) : ""});
    err << rep.family << ": limit " << rep.limit.name() << ", accelerated " << accelerated_zero_count(rep.limit)
        << ", interlacing with H_n " << (rep.interlacing ? "yes" : "no")
        << (rep.interlacing_asserted ? "" : " (not asserted)") << "\n";
    for (const auto& tr : rep.trends) {
      err << "  k=" << tr.k << (tr.accelerated ? " sqrt(n)|xi| decreasing " : " approaching target ");
      if (!tr.tracked)
        err << "n/a (imaginary, no stated limit)\n";
      else
        err << (tr.ok() ? "yes" : "no") << "\n";
    }
    bool any_imag = false;
    for (int c : rep.imaginary_pairs) any_imag = any_imag || c > 0;
    if (any_imag) err << "  note: one zero pair lies on the imaginary axis\n";
    all = all && rep.passed();
  }
  emit(o, "zeros", t, all ? "pass" : "fail", out);
  return all ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto res = suites::run_named(o.suite);
  Table t{{"suite", "check", "passed", "detail"}, {}};
  for (const auto& c : res.checks) t.add({res.suite, c.name, c.passed ? "yes" : "no", c.detail});
  err << res.suite << ": " << res.checks.size() - res.failures() << "/" << res.checks.size() << " checks passed\n";
  for (const auto& c : res.checks)
    if (!c.passed) err << "  failed: " << c.name << ": " << c.detail << "\n";
  emit(o, "verify", t, res.passed() ? "pass" : "fail", out);
  return res.passed() ? kOk : kCheckFailed;
}

long precision_from_env() {
  const char* v = std::getenv("HSOB_PRECISION");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long bits = std::strtol(v, &end, 10);
  if (*end != '\0') throw UsageError("HSOB_PRECISION must be an integer number of bits");
  return bits;
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, frac)) {
    const mpz_class den(m[2].str(), 10);
    if (den == 0) throw UsageError("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(m[1].str(), 10), den);
    q.canonicalize();
    return q;
  }
  if (!std::regex_match(text, m, dec) || (m[2].length() == 0 && m[3].length() == 0))
    throw UsageError("not a number: '" + text + "'");
  const std::string digits = m[2].str() + m[3].str();
  mpq_class q{mpz_class(digits.empty() ? "0" : digits, 10)};
  long exp10 = -static_cast<long>(m[3].length());
  if (m[4].matched) exp10 += std::stol(m[4].str());
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    q *= p10;
  else
    q /= p10;
  if (m[1].str() == "-") q = -q;
  q.canonicalize();
  return q;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(parse_rational(tok));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + tok + "'");
    }
    if (used != tok.size() || v < 1) throw UsageError("n values must be positive integers: '" + tok + "'");
    if (!out.empty() && v <= out.back()) throw UsageError("--nlist must be strictly increasing");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty --nlist");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hermite-Sobolev polynomials: Mehler-Heine asymptotics, zeros and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", o.precision, "working precision in bits (>= 64); default $HSOB_PRECISION or 256");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", o.output, "write the report to this file instead of stdout");

  auto family_opts = [&o](CLI::App* sub) {
    sub->add_option("--family", o.family, "hermite, q (2x2 masses) or s (diagonal masses)")
        ->check(CLI::IsMember({"hermite", "q", "s"}));
    sub->add_option("--M0", o.m0, "mass on P(0)Q(0) for --family q");
    sub->add_option("--M1", o.m1, "mass on P'(0)Q'(0) for --family q");
    sub->add_option("--lambda", o.lambda, "off-diagonal mass for --family q");
    sub->add_option("--masses", o.masses, "M0,M1,...,M_{2r-1} for --family s");
    sub->add_option("--parity", o.parity, "even, odd or both");
    sub->add_option("--nlist", o.nlist, "comma-separated n values");
    sub->add_option("--slack", o.slack, "allowed growth factor between consecutive n")->check(CLI::Range(1.0, 10.0));
    sub->add_option("--final-tol", o.final_tol, "bound on the last sup-error or relative zero error")
        ->check(CLI::PositiveNumber);
  };

  auto* hermite = app.add_subcommand("hermite", "coefficients, norm and value at 0 of H_n");
  hermite->add_option("--n", o.n, "degree")->required();
  auto* mh = app.add_subcommand("mh", "sup-errors of the scaled family against its limit function");
  family_opts(mh);
  mh->add_option("--grid-max", o.grid_max, "right end of the grid");
  mh->add_option("--grid-points", o.grid_points, "number of grid points");
  mh->add_option("--sign-x", o.sign_x, "point of the sign check")->check(CLI::PositiveNumber);
  auto* zeros = app.add_subcommand("zeros", "scaled zeros and their limits");
  family_opts(zeros);
  zeros->add_option("--kmax", o.kmax, "number of zeros per n");
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites::suite_names()));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, msg;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    long bits = o.precision ? o.precision : precision_from_env();
    if (bits == 0) bits = kDefaultPrecisionBits;
    if (bits < kMinPrecisionBits) throw UsageError("precision must be at least 64 bits");
    PrecisionScope scope(bits);
    if (*hermite) return cmd_hermite(o, out);
    if (*mh) return cmd_mh(o, out, err);
    if (*zeros) return cmd_zeros(o, out, err);
    return cmd_verify(o, out, err);
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // bad flags, uncovered cases and non-PSD masses
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace hsob::cli
