#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "niven/legendre.hpp"
#include "niven/report.hpp"

namespace {

using namespace niven;

struct Options {
  std::string eps_str = "1e-30";
  unsigned long cap = kDefaultScanCap;
  bool cap_set = false;
  bool json = false;
  std::string out;

  Rational eps() const { return parse_rational(eps_str); }
};

void emit(const Options& opt, const Report& report, const std::string& text) {
  std::string payload = opt.json ? render(report) : text;
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::domain_error("cannot open output file: " + opt.out);
    f << payload;
  }
}

int exit_code(const Report& report) {
  if (report.status == "indeterminate") return 4;
  return 0;
}

std::string narrative(const Certificate& c) {
  std::ostringstream os;
  if (c.kind == "fourier-e") {
    os << "candidate: e = p/" << rat_str(c.candidate) << " for some integer p\n"
       << "integer side   q!*e - sum_{k<=q} q!/k!  must be an integer if so\n"
       << "computed S = " << c.integer_side.get_str() << "\n"
       << "enclosed   q!*e - S in [" << approx_str(c.enclosed_side.lo()) << ", "
       << approx_str(c.enclosed_side.hi()) << "]\n"
       << "required bound: remainder <= " << rat_str(c.bound) << "\n";
  } else {
    os << "candidate: pi = " << rat_str(c.candidate);
    if (c.n) os << "   (n = " << *c.n << ")";
    os << "\n"
       << "integer side  b^n (F(a/b) + F(0))/n! = " << c.integer_side.get_str()
       << "\n"
       << "enclosed side (b^n/n!) int_0^{a/b} x^n (a-bx)^n sin x dx in ["
       << approx_str(c.enclosed_side.lo(), 40) << ", "
       << approx_str(c.enclosed_side.hi(), 40) << "]\n"
       << "crude upper bound a^(2n+1)/(b n!) = " << approx_str(c.bound) << "\n";
  }
  os << "verdict: " << to_string(c.verdict) << "\n";
  if (c.verdict == Verdict::falsified)
    os << "the enclosed side lies strictly between 0 and 1 while the other\n"
          "side is an integer; no integer lies strictly between 0 and 1,\n"
          "so the candidate is impossible\n";
  return os.str();
}

int cmd_witness_e(const Options& opt, unsigned long q) {
  Certificate c = fourier_witness(q, opt.eps());
  Report r;
  r.command = "witness e";
  r.inputs = {{"q", std::to_string(q)}, {"eps", rat_str(opt.eps())}};
  r.results = to_json(c);
  r.precision = rat_str(c.precision);
  r.status = to_string(c.verdict);
  emit(opt, r, narrative(c));
  return exit_code(r);
}

int cmd_witness_pi(const Options& opt, const std::string& candidate,
                   long n_flag) {
  Rational cand = parse_rational(candidate);
  if (cand <= 0 || cand.get_num() <= 0)
    throw std::domain_error("candidate must be a positive rational a/b");
  unsigned long a = cand.get_num().get_ui();
  unsigned long b = cand.get_den().get_ui();
  std::optional<unsigned long> n;
  if (n_flag >= 0) n = static_cast<unsigned long>(n_flag);
  Certificate c = niven_falsify(a, b, n, opt.eps(), opt.cap);
  Report r;
  r.command = "witness pi";
  r.inputs = {{"candidate", rat_str(cand)}, {"eps", rat_str(opt.eps())}};
  if (n) r.inputs.emplace_back("n", std::to_string(*n));
  r.results = to_json(c);
  r.precision = rat_str(c.precision);
  r.status = to_string(c.verdict);
  emit(opt, r, narrative(c));
  return exit_code(r);
}

int cmd_bounds_solve(const Options& opt, const std::string& kind,
                     unsigned long rr, unsigned long q,
                     const std::string& candidate) {
  Report r;
  r.command = "bounds solve " + kind;
  r.precision = rat_str(opt.eps());
  Json res;
  std::ostringstream text;
  if (kind == "exp") {
    unsigned long n = minimal_n_exp(rr, q, opt.cap);
    r.inputs = {{"r", std::to_string(rr)}, {"q", std::to_string(q)}};
    res["minimal_n"] = n;
    res["bound_at_n"] = rat_str(crude_bound_exp(rr, q, n));
    text << "q r^(2n+1) E/n! < 1 first holds at n = " << n << "\n";
  } else if (kind == "cbs") {
    unsigned long n = minimal_n_cbs(rr, q, opt.cap);
    r.inputs = {{"r", std::to_string(rr)}, {"q", std::to_string(q)}};
    res["minimal_n"] = n;
    res["bound_at_n"] = rat_str(cbs_bound(n, rr, q));
    text << "2 q r^(2n+1)/(n!(2n+1)) < 1 first holds at n = " << n << "\n";
  } else if (kind == "pi") {
    Rational cand = parse_rational(candidate);
    if (cand <= 0) throw std::domain_error("candidate must be positive");
    unsigned long a = cand.get_num().get_ui();
    unsigned long b = cand.get_den().get_ui();
    unsigned long n = minimal_n_pi(a, b, opt.cap);
    r.inputs = {{"candidate", rat_str(cand)}};
    res["minimal_n"] = n;
    text << "a^(2n+1)/(b n!) < 1 first holds at n = " << n << "\n";
  } else {
    throw std::domain_error("bounds solve: kind must be exp, pi or cbs");
  }
  r.results = std::move(res);
  emit(opt, r, text.str());
  return 0;
}

int cmd_legendre_verify(const Options& opt, unsigned long n_max,
                        unsigned long rr) {
  Rational r_rat(rr);
  bool all_ok = true;
  Json checks = Json::array();
  auto record = [&](const std::string& name, bool ok) {
    Json c;
    c["check"] = name;
    c["ok"] = ok;
    checks.push_back(std::move(c));
    all_ok = all_ok && ok;
  };
  for (unsigned long n = 0; n <= n_max; ++n) {
    RatPoly a = shifted_legendre(n, r_rat);
    RatPoly b = rodrigues_shifted(n, r_rat);
    RatPoly c = affine_substitute(legendre_sum_formula(n), Rational(2) / r_rat,
                                  Rational(-1));
    record("routes agree n=" + std::to_string(n), a == b && a == c);
  }
  for (unsigned long n = 1; n <= n_max; ++n)
    for (unsigned long m = 0; m < n; ++m)
      record("orthogonal m=" + std::to_string(m) + " n=" + std::to_string(n),
             inner_product(shifted_legendre(m, r_rat),
                           shifted_legendre(n, r_rat), r_rat) == 0);
  for (unsigned long n = 0; n <= n_max; ++n)
    record("norm n=" + std::to_string(n),
           inner_product(shifted_legendre(n, r_rat), shifted_legendre(n, r_rat),
                         r_rat) == r_rat / Rational(2 * n + 1));
  Report rep;
  rep.command = "legendre verify";
  rep.inputs = {{"n_max", std::to_string(n_max)}, {"r", std::to_string(rr)}};
  rep.results = Json{{"checks", checks}, {"all_ok", all_ok}};
  rep.precision = rat_str(opt.eps());
  rep.status = all_ok ? "ok" : "error";
  std::ostringstream text;
  text << (all_ok ? "all" : "NOT all") << " " << checks.size()
       << " identity checks passed\n";
  emit(opt, rep, text.str());
  return all_ok ? 0 : 5;
}

int cmd_identity_check(const Options& opt, unsigned long count,
                       unsigned long seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 6);
  std::uniform_int_distribution<int> cnum(1, 4);
  std::uniform_int_distribution<int> cden(1, 3);
  std::uniform_int_distribution<int> which(0, 1);
  Rational eps = opt.eps();
  unsigned long agreed = 0;
  for (unsigned long i = 0; i < count; ++i) {
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& v : cs) v = Rational(coef(rng));
    RatPoly f(cs);
    Rational c(cnum(rng), cden(rng));
    c.canonicalize();
    bool use_exp = which(rng) == 0;
    Enclosure exact = use_exp ? exp_integral_exact(f, c).enclose(eps)
                              : sin_integral_exact(f, c).enclose(eps);
    Enclosure series = enclose_integral_series(
        f, c, use_exp ? Kernel::exp : Kernel::sin, eps);
    if (exact.intersects(series)) ++agreed;
  }
  bool all_ok = agreed == count;
  Report rep;
  rep.command = "identity check";
  rep.inputs = {{"count", std::to_string(count)},
                {"seed", std::to_string(seed)},
                {"eps", rat_str(eps)}};
  rep.results = Json{{"agreed", agreed}, {"total", count}};
  rep.precision = rat_str(eps);
  rep.status = all_ok ? "ok" : "error";
  std::ostringstream text;
  text << agreed << "/" << count
       << " random integrals: exact linear form and series enclosure agree\n";
  emit(opt, rep, text.str());
  return all_ok ? 0 : 5;
}

int cmd_approx_e(const Options& opt, unsigned long rr, unsigned long n_max) {
  auto rows = er_error_table(rr, n_max, opt.eps());
  Json table = Json::array();
  std::ostringstream text;
  text << "rational approximations to e^" << rr << "\n";
  for (const auto& row : rows) {
    table.push_back(to_json(row));
    if (row.degenerate) {
      text << "n=" << row.n << "  (degenerate)\n";
    } else {
      text << "n=" << row.n << "  " << rat_str(row.approximant) << " ~ "
           << approx_str(row.approximant, 12) << "  |error| <= "
           << approx_str(rat_abs(row.error.lo()) > rat_abs(row.error.hi())
                             ? rat_abs(row.error.lo())
                             : rat_abs(row.error.hi()),
                         12)
           << "\n";
    }
  }
  Report rep;
  rep.command = "approx e";
  rep.inputs = {{"r", std::to_string(rr)},
                {"n_max", std::to_string(n_max)},
                {"eps", rat_str(opt.eps())}};
  rep.results = Json{{"rows", table}};
  rep.precision = rat_str(opt.eps());
  emit(opt, rep, text.str());
  return 0;
}

int cmd_fourier_demo(const Options& opt, unsigned long q_max) {
  Json certs = Json::array();
  std::ostringstream text;
  bool all = true;
  for (unsigned long q = 1; q <= q_max; ++q) {
    Certificate c = fourier_witness(q, opt.eps());
    certs.push_back(to_json(c));
    all = all && c.verdict == Verdict::falsified;
    text << "q=" << q << "  T in (" << approx_str(c.enclosed_side.lo(), 12)
         << ", " << approx_str(c.enclosed_side.hi(), 12)
         << ")  bound 1/" << q << "  " << to_string(c.verdict) << "\n";
  }
  text << (all ? "e has no representation p/q for any q above\n"
               : "some q left indeterminate; retry with smaller --eps\n");
  Report rep;
  rep.command = "fourier demo";
  rep.inputs = {{"q_max", std::to_string(q_max)}, {"eps", rat_str(opt.eps())}};
  rep.results = Json{{"certificates", certs}};
  rep.precision = rat_str(opt.eps());
  rep.status = all ? "falsified" : "indeterminate";
  emit(opt, rep, text.str());
  return all ? 0 : 4;
}

int cmd_naive_bound_demo(const Options& opt) {
  Json rows = Json::array();
  std::ostringstream text;
  text << "geometric tail bound r^(q+1)/(q+1-r) on the scaled e^r series\n";
  for (unsigned long rr = 1; rr <= 3; ++rr) {
    for (unsigned long q : {2ul, 5ul, 10ul, 20ul}) {
      if (q + 1 <= rr) continue;
      auto [bound, fails] = naive_er_bound(rr, q);
      Json row;
      row["r"] = rr;
      row["q"] = q;
      row["bound"] = rat_str(bound);
      row["fails"] = fails;
      rows.push_back(std::move(row));
      text << "r=" << rr << " q=" << q << "  bound " << rat_str(bound) << " ~ "
           << approx_str(bound, 6) << (fails ? "  (useless, >= 1)" : "")
           << "\n";
    }
  }
  text << "only r = 1 ever gets below 1: the direct attack stalls for e^r\n";
  Report rep;
  rep.command = "naive-bound demo";
  rep.results = Json{{"rows", rows}};
  rep.precision = rat_str(opt.eps());
  emit(opt, rep, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mechanized irrationality witnesses for e and pi"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("NIVEN_CAP")) {
    try {
      opt.cap = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: NIVEN_CAP is not a number\n";
      return 2;
    }
  }
  app.add_option("--eps", opt.eps_str,
                 "target enclosure width, e.g. 1e-30 or 1/10^30");
  app.add_option("--cap", opt.cap, "scan cap for minimal-n searches");
  app.add_flag("--json", opt.json, "emit the JSON report instead of text");
  app.add_option("--out", opt.out, "write output to FILE instead of stdout");
  app.fallthrough();

  unsigned long q = 10, q_max = 8, rr = 1, n_max = 6, count = 50, seed = 1;
  long n_flag = -1;
  std::string candidate = "22/7", kind;

  auto* witness = app.add_subcommand("witness", "contradiction engines");
  auto* we = witness->add_subcommand("e", "Fourier's e witness");
  we->add_option("--q", q, "hypothesized denominator");
  auto* wpi = witness->add_subcommand("pi", "Niven's pi-candidate falsifier");
  wpi->add_option("--candidate", candidate, "candidate rational a/b");
  wpi->add_option("--n", n_flag, "polynomial degree parameter (default: minimal)");

  auto* bounds = app.add_subcommand("bounds", "minimal-n solvers");
  auto* solve = bounds->add_subcommand("solve", "find minimal n with bound < 1");
  solve->add_option("kind", kind, "exp, pi or cbs")->required();
  solve->add_option("--r", rr, "exponent r");
  solve->add_option("--q", q, "denominator q");
  solve->add_option("--candidate", candidate, "pi candidate a/b");

  auto* legendre = app.add_subcommand("legendre", "orthogonal polynomials");
  auto* lv = legendre->add_subcommand("verify", "exact identity checks");
  lv->add_option("--n-max", n_max, "largest degree");
  lv->add_option("--r", rr, "interval endpoint");

  auto* identity = app.add_subcommand("identity", "oracle cross-checks");
  auto* ic = identity->add_subcommand("check", "random-f integral agreement");
  ic->add_option("--count", count, "number of random instances");
  ic->add_option("--seed", seed, "RNG seed");

  auto* approx = app.add_subcommand("approx", "rational approximation tables");
  auto* ae = approx->add_subcommand("e", "approximants to e^r with errors");
  ae->add_option("--r", rr, "exponent r");
  ae->add_option("--n-max", n_max, "last table row");

  auto* fd = app.add_subcommand("fourier", "integer-remainder demo");
  auto* fdd = fd->add_subcommand("demo", "witnesses for q = 1..q-max");
  fdd->add_option("--q-max", q_max, "largest denominator");

  auto* nb = app.add_subcommand("naive-bound", "failed scale-up demo");
  nb->add_subcommand("demo", "tabulate the geometric tail bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (we->parsed()) return cmd_witness_e(opt, q);
    if (wpi->parsed()) return cmd_witness_pi(opt, candidate, n_flag);
    if (solve->parsed()) return cmd_bounds_solve(opt, kind, rr, q, candidate);
    if (lv->parsed()) return cmd_legendre_verify(opt, n_max, rr);
    if (ic->parsed()) return cmd_identity_check(opt, count, seed);
    if (ae->parsed()) return cmd_approx_e(opt, rr, n_max);
    if (fdd->parsed()) return cmd_fourier_demo(opt, q_max);
    if (nb->parsed()) return cmd_naive_bound_demo(opt);
    std::cerr << "error: missing subcommand\n";
    return 2;
  } catch (const niven::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const niven::indeterminate_error& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return 4;
  } catch (const niven::defect_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 5;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
