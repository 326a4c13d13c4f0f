// fcq: command line front end. Subcommands cover class groups, form
// coefficients, Siegel lift queries, central values, the resonance
// moment report, the local identity and random model checks, sign
// change and large value counts, and the acceptance selftest.
//
// Exit codes: 0 success, 2 validation error, 3 numerical tolerance
// failure. Output is CSV or JSON on stdout (or --out); every run
// prints its resolved configuration first, and identical
// configurations produce byte-identical output.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fc/acceptance.hpp"
#include "fc/arith.hpp"
#include "fc/classgroup.hpp"
#include "fc/halfint.hpp"
#include "fc/lfun.hpp"
#include "fc/resonance.hpp"
#include "fc/satake.hpp"
#include "fc/siegel.hpp"
#include "fc/stats.hpp"
#include "json.hpp"

using fc::Eigenform;
using njson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitValidation = 2, kExitTolerance = 3;

std::string f17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string rat(const mpq_class& q) { return q.get_str(); }

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Shared output plumbing: resolved config first, then rows (CSV) or a
// single object (JSON).
struct Output {
  bool json = false;
  std::ostream* os = &std::cout;
  std::ofstream file;
  njson j;
  std::ostringstream csv;

  void open(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    os = &file;
  }
  void config(const njson& cfg) {
    if (json) {
      j["config"] = cfg;
    } else {
      for (auto it = cfg.begin(); it != cfg.end(); ++it)
        csv << "# " << it.key() << "=" <<
            (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
  void flush() {
    if (json)
      *os << j.dump(2) << "\n";
    else
      *os << csv.str();
  }
};

int64_t checked_i64(double x, const std::string& name) {
  if (!(x >= -4.6e18 && x <= 4.6e18) || x != std::floor(x))
    throw CLI::ValidationError(name, "must be an integer");
  return static_cast<int64_t>(x);
}

fc::ClassGroup group_for(int64_t d) {
  if (d >= 0 || !fc::is_fundamental(d))
    throw CLI::ValidationError("--d", "needs a negative fundamental "
                                      "discriminant");
  return fc::class_group(d);
}

Eigenform eigenform_for_twists(const std::string& label, int64_t dmax,
                               int threads) {
  // the central value cutoff needs coefficients up to 10.6 |d|
  int64_t need = static_cast<int64_t>(10.6 * static_cast<double>(dmax)) + 10;
  return fc::eigenform(label, need, threads);
}

int cmd_classgroup(int64_t d, Output& out) {
  auto G = group_for(d);
  if (out.json) {
    out.j["h"] = G.h();
    out.j["structure"] = G.cyclic_orders;
    out.j["unit_count"] = G.unit_count;
    njson forms = njson::array();
    for (const auto& f : G.forms) forms.push_back({f.a, f.b, f.c});
    out.j["forms"] = forms;
  } else {
    out.csv << "a,b,c\n";
    for (const auto& f : G.forms)
      out.csv << f.a << "," << f.b << "," << f.c << "\n";
  }
  return kExitOk;
}

int cmd_coeffs(const std::string& form, int64_t max_n, bool normalized,
               Output& out, int threads) {
  auto f = fc::builtin_form(form, max_n, threads);
  if (out.json) {
    njson rows = njson::array();
    for (int64_t n = 1; n <= max_n; ++n) {
      if (f.raw(n) == 0) continue;
      if (normalized)
        rows.push_back({n, f.c(n)});
      else
        rows.push_back({n, rat(f.raw(n) * f.scale)});
    }
    out.j["sqrt_arg"] = rat(f.sqrt_arg);
    out.j["coefficients"] = rows;
  } else {
    out.csv << "n," << (normalized ? "c" : "a") << "\n";
    for (int64_t n = 1; n <= max_n; ++n) {
      if (f.raw(n) == 0) continue;
      out.csv << n << ",";
      if (normalized)
        out.csv << f17(f.c(n)) << "\n";
      else
        out.csv << rat(f.raw(n) * f.scale) << "\n";
    }
  }
  return kExitOk;
}

int cmd_siegel(int k, const std::string& op, int64_t a, int64_t b, int64_t c,
               int64_t p, int64_t max_n, int64_t d, Output& out,
               int threads) {
  if (op == "coeff") {
    fc::Lambda2Matrix S{a, b, c};
    if (!S.valid())
      throw CLI::ValidationError("--a/--b/--c",
                                 "needs a>0 and b^2-4ac<0");
    auto F = fc::sk_lift(k, -S.disc() + 1, threads);
    out.j["disc"] = S.disc();
    out.j["content"] = S.content();
    out.j["coefficient"] = rat(fc::sk_coefficient(F, S));
    out.j["sqrt_arg"] = rat(F.source.sqrt_arg);
    if (!out.json) {
      out.csv << "disc,content,coefficient\n"
              << S.disc() << "," << S.content() << ","
              << rat(fc::sk_coefficient(F, S)) << "\n";
    }
    return kExitOk;
  }
  if (op == "hp") {
    if (p < 2 || !fc::is_prime64(static_cast<uint64_t>(p)))
      throw CLI::ValidationError("--p", "needs a prime");
    auto F = fc::sk_lift(k, 4 * p * max_n, threads);
    auto h = fc::h_p_construct(F, p, max_n);
    if (out.json) {
      njson rows = njson::array();
      for (int64_t n = 1; n <= h.max_index(); ++n)
        if (h.raw(n) != 0) rows.push_back({n, rat(h.raw(n))});
      out.j["kappa"] = h.kappa;
      out.j["level"] = h.level;
      out.j["sqrt_arg"] = rat(h.sqrt_arg);
      out.j["coefficients"] = rows;
    } else {
      out.csv << "n,a\n";
      for (int64_t n = 1; n <= h.max_index(); ++n)
        if (h.raw(n) != 0) out.csv << n << "," << rat(h.raw(n)) << "\n";
    }
    return kExitOk;
  }
  if (op == "bessel") {
    auto G = group_for(d);
    auto F = fc::sk_lift(k, -d + 1, threads);
    auto chis = fc::characters(G);
    auto inv = fc::bessel_invert_exact(F, G);
    if (out.json) {
      out.j["h"] = G.h();
      out.j["trivial_period"] = rat(fc::bessel_trivial_exact(F, G));
      njson vanish = njson::array();
      for (size_t i = 1; i < chis.size(); ++i)
        vanish.push_back(fc::bessel_vanishes_exactly(F, G, chis[i]));
      out.j["nontrivial_vanish"] = vanish;
      njson rows = njson::array();
      for (int i = 0; i < G.h(); ++i)
        rows.push_back({{"form", {G.forms[i].a, G.forms[i].b, G.forms[i].c}},
                        {"coefficient", rat(inv[static_cast<size_t>(i)])}});
      out.j["classes"] = rows;
    } else {
      out.csv << "a,b,c,coefficient\n";
      for (int i = 0; i < G.h(); ++i)
        out.csv << G.forms[i].a << "," << G.forms[i].b << "," << G.forms[i].c
                << "," << rat(inv[static_cast<size_t>(i)]) << "\n";
    }
    return kExitOk;
  }
  throw CLI::ValidationError("--op", "one of coeff, hp, bessel");
}

int cmd_lvalue(const std::string& glabel, int64_t d, bool waldspurger,
               const std::string& form, const std::string& pairs_path,
               double tol, Output& out, int threads) {
  if (!waldspurger) {
    auto g = eigenform_for_twists(glabel, -d, threads);
    auto L = fc::central_value_twist(g, d);
    if (out.json) {
      out.j["L_half"] = L.value;
      out.j["est_error"] = L.est_error;
      out.j["method"] = L.method;
    } else {
      out.csv << "d,L_half,est_error\n"
              << d << "," << f17(L.value) << "," << f17(L.est_error) << "\n";
    }
    return kExitOk;
  }
  std::ifstream in(pairs_path);
  if (!in) throw CLI::ValidationError("--pairs", "cannot open " + pairs_path);
  std::vector<std::pair<int64_t, int64_t>> pairs;
  int64_t nmax = 0;
  std::string line;
  while (std::getline(in, line)) {
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    int64_t n1, n2;
    if (ls >> n1 >> n2) {
      pairs.emplace_back(n1, n2);
      nmax = std::max({nmax, n1, n2});
    }
  }
  if (pairs.empty()) throw CLI::ValidationError("--pairs", "no pairs read");
  auto f = fc::builtin_form(form, nmax + 1, threads);
  auto g = eigenform_for_twists(glabel, nmax, threads);
  double worst = 0;
  njson rows = njson::array();
  if (!out.json) out.csv << "n1,n2,deviation\n";
  for (auto [n1, n2] : pairs) {
    double dev = fc::waldspurger_pair_deviation(f, g, n1, n2);
    worst = std::max(worst, dev);
    if (out.json)
      rows.push_back({n1, n2, dev});
    else
      out.csv << n1 << "," << n2 << "," << f17(dev) << "\n";
  }
  if (out.json) {
    out.j["pairs"] = rows;
    out.j["worst_deviation"] = worst;
    out.j["tolerance"] = tol;
  }
  return worst < tol ? kExitOk : kExitTolerance;
}

int cmd_resonance(double X, int64_t u, double L_override, double M_override,
                  Output& out, int threads) {
  int64_t need = static_cast<int64_t>(21.2 * X) + 100;
  auto g = fc::eigenform("g18", std::max<int64_t>(need, 1000), threads);
  auto Phi = std::function<double(double)>(fc::smooth_bump);
  auto lhs = fc::twisted_moment_lhs(g, u, X, Phi, threads);
  double main = fc::twisted_moment_main(g, u, X, Phi);
  out.csv << "quantity,value\n";
  out.csv << "lhs," << f17(lhs.value) << "\n";
  out.csv << "main," << f17(main) << "\n";
  out.csv << "ratio," << f17(lhs.value / main) << "\n";
  out.csv << "terms," << lhs.terms << "\n";
  auto P = fc::resonator_params(X, g, 1, L_override, M_override);
  auto rep = fc::estimates_report(P, g, threads);
  out.csv << rep.csv();
  return kExitOk;
}

int cmd_grh(const std::string& op, int64_t d, double x, uint64_t seed,
            double sigma, double C0, double V, int l, bool ramified,
            int64_t samples, Output& out, int threads) {
  if (op == "integral") {
    double res = fc::gaussian_integral_check(sigma);
    bool ok = res < 1e-8;
    if (out.json) {
      out.j["sigma"] = sigma;
      out.j["residual"] = res;
      out.j["ok"] = ok;
    } else {
      out.csv << "residual " << f17(res) << (ok ? " < 1e-8" : " >= 1e-8")
              << "\n";
    }
    return ok ? kExitOk : kExitTolerance;
  }
  if (op == "identities") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    double worst = 0, worst_bound = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      fc::SatakeGSp4 s{std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng))};
      worst = std::max(
          worst, std::abs(fc::a_pi(s, 2) -
                          (fc::a_ad(s, 1) - fc::a_std(s, 1) - 1)));
      worst = std::max(
          worst, std::abs(fc::a_pi(s, 1) * fc::a_pi(s, 1) -
                          (fc::a_ad(s, 1) + fc::a_std(s, 1) + 1)));
      double th = ang(rng);
      fc::AIParams split{std::polar(1.0, th), std::polar(1.0, -th),
                         fc::SplitType::split};
      fc::AIParams split_sq{std::polar(1.0, 2 * th), std::polar(1.0, -2 * th),
                            fc::SplitType::split};
      worst = std::max(worst,
                       fc::rs_square_identity_check(s, split, split_sq, 1));
      for (int n = 1; n <= 20; ++n)
        worst_bound = std::max(worst_bound,
                               std::abs(fc::a_pi(s, n) * fc::a_ai(split, n)));
    }
    bool ok = worst <= 1e-12 && worst_bound <= 8 + 1e-12;
    if (out.json) {
      out.j["worst_residual"] = worst;
      out.j["worst_product"] = worst_bound;
      out.j["ok"] = ok;
    } else {
      out.csv << "worst_residual," << f17(worst) << "\nworst_product,"
              << f17(worst_bound) << "\n";
    }
    return ok ? kExitOk : kExitTolerance;
  }
  if (op == "mc") {
    std::map<int64_t, double> b;
    for (int64_t p : fc::primes_up_to(static_cast<int64_t>(x) - 1)) b[p] = 1;
    auto st = fc::random_model_mc(b, d, static_cast<int64_t>(x), samples,
                                  seed);
    if (out.json) {
      out.j["mean"] = st.mean;
      out.j["variance"] = st.variance;
      out.j["predicted_variance"] = st.predicted_variance;
      out.j["histogram"] = st.histogram;
    } else {
      out.csv << "mean," << f17(st.mean) << "\nvariance," << f17(st.variance)
              << "\npredicted_variance," << f17(st.predicted_variance)
              << "\n";
      out.csv << "histogram";
      for (auto h : st.histogram) out.csv << "," << h;
      out.csv << "\n";
    }
    return kExitOk;
  }
  // the remaining ops walk a genuine class group
  auto G = group_for(d);
  if (op == "moments") {
    std::map<int64_t, double> b;
    for (int64_t p : fc::primes_up_to(static_cast<int64_t>(x)))
      b[p] = 1.0 / std::log(2.0 * p);
    auto res = fc::moment_bound_check(G, b, x, l, ramified);
    if (out.json) {
      out.j["lhs"] = res.lhs;
      out.j["rhs"] = res.rhs;
      out.j["ok"] = res.ok;
    } else {
      out.csv << "lhs," << f17(res.lhs) << "\nrhs," << f17(res.rhs) << "\n";
    }
    return res.ok ? kExitOk : kExitTolerance;
  }
  int64_t px = static_cast<int64_t>(x) + 1;
  auto g18 = fc::eigenform("g18", std::max<int64_t>(px, 100), threads);
  auto g22 = fc::eigenform("g22", std::max<int64_t>(px, 100), threads);
  auto pi = fc::yoshida_pi(g18, g22, px);
  if (op == "chandee") {
    auto chis = fc::characters(G);
    if (!out.json) out.csv << "character,chandee_sum\n";
    njson rows = njson::array();
    for (size_t i = 0; i < chis.size(); ++i) {
      double v = fc::chandee_sum(pi, G, chis[i], x, C0);
      if (out.json)
        rows.push_back(v);
      else
        out.csv << i << "," << f17(v) << "\n";
    }
    if (out.json) out.j["chandee_sums"] = rows;
    return kExitOk;
  }
  if (op == "adev") {
    double frac = fc::A_K(pi, G, V, x);
    if (out.json) {
      out.j["V"] = V;
      out.j["fraction_above"] = frac;
    } else {
      out.csv << "V,fraction_above\n" << f17(V) << "," << f17(frac) << "\n";
    }
    return kExitOk;
  }
  throw CLI::ValidationError(
      "--op", "one of identities, chandee, adev, moments, mc, integral");
}

int cmd_signs(const std::string& form, double X, bool with_pairs,
              Output& out, int threads) {
  int64_t Xi = checked_i64(X, "--X");
  auto s = fc::series_from_halfint(fc::builtin_form(form, Xi, threads));
  auto sc = fc::sign_changes(s, 1, Xi);
  if (out.json) {
    out.j["count"] = sc.count;
    if (with_pairs) {
      njson rows = njson::array();
      for (auto [n1, n2] : sc.pairs) rows.push_back({n1, n2});
      out.j["pairs"] = rows;
    }
  } else {
    out.csv << "count," << sc.count << "\n";
    if (with_pairs) {
      out.csv << "n1,n2\n";
      for (auto [n1, n2] : sc.pairs) out.csv << n1 << "," << n2 << "\n";
    }
  }
  return kExitOk;
}

int cmd_large(const std::string& form, double X, double X2, Output& out,
              int threads) {
  int64_t lo = checked_i64(X, "--X");
  int64_t hi = X2 > 0 ? checked_i64(X2, "--X2") : 10 * lo;
  if (lo < 2 || hi <= lo)
    throw CLI::ValidationError("--X", "needs 2 <= X < X2");
  auto s = fc::series_from_halfint(fc::builtin_form(form, hi, threads));
  // the raw scale is arbitrary; rescale to unit mean square over the
  // window before comparing against the threshold
  int64_t cnt = 0;
  for (int64_t n = lo; n <= hi; ++n)
    if (s.masked(n)) ++cnt;
  double rms = std::sqrt(fc::moment_sums(s, lo, hi, 2) /
                         static_cast<double>(cnt));
  for (auto& c : s.c) c /= rms;
  auto big = fc::large_values(s, lo, hi);
  if (out.json) {
    out.j["rms_rescale"] = rms;
    out.j["count"] = big.size();
    njson rows = njson::array();
    for (int64_t n : big) rows.push_back({n, s.c[static_cast<size_t>(n)],
                                          fc::large_value_threshold(n)});
    out.j["values"] = rows;
  } else {
    out.csv << "n,c,threshold\n";
    for (int64_t n : big)
      out.csv << n << "," << f17(s.c[static_cast<size_t>(n)]) << ","
              << f17(fc::large_value_threshold(n)) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental coefficient toolkit"};
  app.require_subcommand(1);
  int threads = default_threads();
  app.add_option("--threads", threads, "worker thread cap")
      ->capture_default_str();

  // shared option storage; each subcommand wires what it needs
  int64_t d = -23, u = 1, p = 3, Sa = 1, Sb = 1, Sc = 1, samples = 100000;
  double X = 0, X2 = 0, maxn = 0, x = 100, sigma = 1.0, C0 = 2.0, V = 0,
         tol = 1e-4, L_override = -1, M_override = -1;
  uint64_t seed = 1;
  int k = 10, l = 1;
  bool json = false, csv = false, normalized = false, waldspurger = false,
       ramified = false, with_pairs = false;
  std::string form = "f19/2", glabel = "g18", op, pairs_path, out_path;

  auto* c_class = app.add_subcommand("classgroup", "class group of an "
                                     "imaginary quadratic discriminant");
  c_class->add_option("--d", d, "negative fundamental discriminant")
      ->required();
  c_class->add_flag("--json", json);
  c_class->add_flag("--csv", csv);

  auto* c_coeffs = app.add_subcommand("coeffs", "coefficients of a built-in "
                                      "half-integral weight form");
  c_coeffs->add_option("--form", form)->check(CLI::IsMember({"f19/2",
                                                             "f23/2"}));
  c_coeffs->add_option("--max", maxn, "largest index")->required();
  c_coeffs->add_flag("--normalized", normalized);
  c_coeffs->add_flag("--csv", csv);
  c_coeffs->add_flag("--json", json);

  auto* c_siegel = app.add_subcommand("siegel", "Siegel lift queries");
  c_siegel->add_option("--k", k)->check(CLI::IsMember({10, 12}));
  c_siegel->add_option("--op", op, "coeff, hp or bessel")->required();
  c_siegel->add_option("--a", Sa);
  c_siegel->add_option("--b", Sb);
  c_siegel->add_option("--c", Sc);
  c_siegel->add_option("--p", p);
  c_siegel->add_option("--max", maxn);
  c_siegel->add_option("--d", d);
  c_siegel->add_flag("--json", json);
  c_siegel->add_flag("--csv", csv);

  auto* c_lvalue = app.add_subcommand("lvalue", "central values of quadratic "
                                      "twists");
  c_lvalue->add_option("--g", glabel)->check(CLI::IsMember({"g18", "g22"}));
  c_lvalue->add_option("--d", d);
  c_lvalue->add_flag("--waldspurger", waldspurger);
  c_lvalue->add_option("--form", form)->check(CLI::IsMember({"f19/2",
                                                             "f23/2"}));
  c_lvalue->add_option("--pairs", pairs_path, "file of n1,n2 pairs");
  c_lvalue->add_option("--tol", tol)->capture_default_str();
  c_lvalue->add_flag("--json", json);
  c_lvalue->add_flag("--csv", csv);

  auto* c_res = app.add_subcommand("resonance", "twisted first moment and "
                                   "resonator report");
  c_res->add_option("--X", X, "family scale")->required();
  c_res->add_option("--u", u)->capture_default_str();
  c_res->add_option("--L-override", L_override);
  c_res->add_option("--M-override", M_override);
  c_res->add_option("--out", out_path, "output file, - for stdout");

  auto* c_grh = app.add_subcommand("grh", "local identity, deviation and "
                                   "random model checks");
  c_grh->add_option("--op", op)->required();
  c_grh->add_option("--d", d);
  c_grh->add_option("--x", x);
  c_grh->add_option("--seed", seed)->capture_default_str();
  c_grh->add_option("--sigma", sigma)->capture_default_str();
  c_grh->add_option("--C0", C0)->capture_default_str();
  c_grh->add_option("--V", V);
  c_grh->add_option("--l", l)->capture_default_str();
  c_grh->add_flag("--ramified", ramified);
  c_grh->add_option("--samples", samples)->capture_default_str();
  c_grh->add_flag("--json", json);
  c_grh->add_flag("--csv", csv);

  auto* c_signs = app.add_subcommand("signs", "sign changes over odd "
                                     "squarefree indices");
  c_signs->add_option("--form", form)->check(CLI::IsMember({"f19/2",
                                                            "f23/2"}));
  c_signs->add_option("--X", X, "largest index")->required();
  c_signs->add_flag("--pairs", with_pairs, "list the flip pairs");
  c_signs->add_flag("--csv", csv);
  c_signs->add_flag("--json", json);

  auto* c_large = app.add_subcommand("large", "coefficients above the large "
                                     "value threshold");
  c_large->add_option("--form", form)->check(CLI::IsMember({"f19/2",
                                                            "f23/2"}));
  c_large->add_option("--X", X, "window start")->required();
  c_large->add_option("--X2", X2, "window end, default 10X");
  c_large->add_flag("--csv", csv);
  c_large->add_flag("--json", json);

  auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");

  // let options like --threads appear after the subcommand name
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  if (threads < 1) threads = 1;

  try {
    if (c_self->parsed())
      return fc::run_acceptance(std::cout, threads) == 0 ? kExitOk
                                                         : kExitTolerance;

    Output out;
    out.json = json && !csv;
    out.open(out_path);
    njson cfg;
    cfg["threads"] = threads;
    cfg["format"] = out.json ? "json" : "csv";
    int rc = kExitValidation;
    if (c_class->parsed()) {
      cfg["subcommand"] = "classgroup";
      cfg["d"] = d;
      out.config(cfg);
      rc = cmd_classgroup(d, out);
    } else if (c_coeffs->parsed()) {
      cfg["subcommand"] = "coeffs";
      cfg["form"] = form;
      cfg["max"] = checked_i64(maxn, "--max");
      cfg["normalized"] = normalized;
      out.config(cfg);
      rc = cmd_coeffs(form, checked_i64(maxn, "--max"), normalized, out,
                      threads);
    } else if (c_siegel->parsed()) {
      cfg["subcommand"] = "siegel";
      cfg["k"] = k;
      cfg["op"] = op;
      if (op == "coeff") cfg["matrix"] = {Sa, Sb, Sc};
      if (op == "hp") {
        cfg["p"] = p;
        cfg["max"] = checked_i64(maxn, "--max");
      }
      if (op == "bessel") cfg["d"] = d;
      out.config(cfg);
      rc = cmd_siegel(k, op, Sa, Sb, Sc, p,
                      maxn > 0 ? checked_i64(maxn, "--max") : 100, d, out,
                      threads);
    } else if (c_lvalue->parsed()) {
      cfg["subcommand"] = "lvalue";
      cfg["g"] = glabel;
      if (waldspurger) {
        cfg["form"] = form;
        cfg["pairs"] = pairs_path;
        cfg["tol"] = tol;
      } else {
        cfg["d"] = d;
      }
      out.config(cfg);
      rc = cmd_lvalue(glabel, d, waldspurger, form, pairs_path, tol, out,
                      threads);
    } else if (c_res->parsed()) {
      cfg["subcommand"] = "resonance";
      cfg["X"] = X;
      cfg["u"] = u;
      cfg["L_override"] = L_override;
      cfg["M_override"] = M_override;
      out.json = false;
      out.config(cfg);
      rc = cmd_resonance(X, u, L_override, M_override, out, threads);
    } else if (c_grh->parsed()) {
      cfg["subcommand"] = "grh";
      cfg["op"] = op;
      if (op != "integral" && op != "identities") cfg["d"] = d;
      if (op != "integral") cfg["x"] = x;
      if (op == "integral") cfg["sigma"] = sigma;
      if (op == "identities" || op == "mc") cfg["seed"] = seed;
      if (op == "chandee") cfg["C0"] = C0;
      if (op == "adev") cfg["V"] = V;
      if (op == "moments") {
        cfg["l"] = l;
        cfg["ramified"] = ramified;
      }
      if (op == "mc") cfg["samples"] = samples;
      out.config(cfg);
      rc = cmd_grh(op, d, x, seed, sigma, C0, V, l, ramified, samples, out,
                   threads);
    } else if (c_signs->parsed()) {
      cfg["subcommand"] = "signs";
      cfg["form"] = form;
      cfg["X"] = checked_i64(X, "--X");
      cfg["pairs"] = with_pairs;
      out.config(cfg);
      rc = cmd_signs(form, X, with_pairs, out, threads);
    } else if (c_large->parsed()) {
      cfg["subcommand"] = "large";
      cfg["form"] = form;
      cfg["X"] = checked_i64(X, "--X");
      cfg["X2"] = X2 > 0 ? checked_i64(X2, "--X2")
                         : 10 * checked_i64(X, "--X");
      out.config(cfg);
      rc = cmd_large(form, X, X2, out, threads);
    }
    out.flush();
    return rc;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
