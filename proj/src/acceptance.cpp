#include "fc/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fc/arith.hpp"
#include "fc/classgroup.hpp"
#include "fc/halfint.hpp"
#include "fc/lfun.hpp"
#include "fc/resonance.hpp"
#include "fc/satake.hpp"
#include "fc/siegel.hpp"
#include "fc/stats.hpp"

namespace fc {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void line(int idx, bool ok, const std::string& msg) {
    out << "[" << (idx < 10 ? " " : "") << idx << "] "
        << (ok ? "PASS" : "FAIL") << " " << msg << "\n";
    if (!ok) ++failures;
  }

  void run(int idx, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
      auto [ok, msg] = fn();
      line(idx, ok, msg);
    } catch (const std::exception& e) {
      line(idx, false, std::string("exception: ") + e.what());
    }
  }
};

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string f17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// A workload that exercises the threaded code paths and serializes
// every result; any nondeterminism across thread counts breaks the
// hash comparison in check 12.
std::string fingerprint(const Eigenform& g_big, int threads) {
  std::ostringstream os;
  for (const auto& a : eigenform_ap("g18", 5000, threads))
    os << a.get_str() << ",";
  auto f = builtin_form("f19/2", 5000, threads);
  for (int64_t n = 0; n <= f.max_index(); ++n) os << f.raw(n).get_str() << ";";
  auto Phi = std::function<double(double)>(smooth_bump);
  auto lhs = twisted_moment_lhs(g_big, 1, 500, Phi, threads);
  os << f17(lhs.value) << "|" << lhs.terms;
  return os.str();
}

}  // namespace

int run_acceptance(std::ostream& out, int threads) {
  Reporter R{out};
  if (threads < 1) threads = 1;

  // Shared heavyweight tables; both are disk-cached after a first run.
  SKLift F = sk_lift(10, 100000, threads);
  Eigenform g18 = eigenform("g18", 106000, threads);

  // 1: class group structure against brute-force composition, and the
  // analytic class number round trip.
  R.run(1, [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    const std::map<int64_t, int64_t> want = {{-23, 3}, {-47, 5}, {-71, 7}};
    for (auto [dd, hh] : want) {
      auto G = class_group(dd);
      ok = ok && G.h() == hh;
      ok = ok && static_cast<int64_t>(G.cyclic_orders.size()) == 1 &&
           G.cyclic_orders[0] == hh;
      for (int i = 0; i < G.h() && ok; ++i)
        for (int j = 0; j < G.h() && ok; ++j)
          ok = G.compose(i, j) ==
               G.index_of(compose_forms(G.forms[i], G.forms[j]));
    }
    int checked = 0;
    for (int64_t ad = 9999; checked < 50 && ad >= 3; --ad) {
      int64_t d = -ad;
      if (!is_fundamental(d)) continue;
      if (class_number_from_L1(d) != class_group(d).h()) ok = false;
      ++checked;
    }
    std::ostringstream m;
    m << "class groups h(-23,-47,-71)=(3,5,7) cyclic, composition "
         "brute-forced, class number formula round trip exact for "
      << checked << " discriminants";
    return {ok && checked == 50, m.str()};
  });

  // 2: local square identities and the bound, fuzzed plus the worked
  // point alpha=i, beta=1.
  R.run(2, [&]() -> std::pair<bool, std::string> {
    SatakeGSp4 w{{0, 1}, {1, 0}};
    double worked = std::abs(a_pi(w, 1) - 2) + std::abs(a_std(w, 1) - 1) +
                    std::abs(a_ad(w, 1) - 2) + std::abs(a_pi(w, 2) - 0);
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    double worst = 0, worst_bound = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      SatakeGSp4 s{std::polar(1.0, ang(rng)), std::polar(1.0, ang(rng))};
      worst = std::max(worst,
                       std::abs(a_pi(s, 2) - (a_ad(s, 1) - a_std(s, 1) - 1)));
      worst = std::max(worst, std::abs(a_pi(s, 1) * a_pi(s, 1) -
                                       (a_ad(s, 1) + a_std(s, 1) + 1)));
      double th = ang(rng);
      AIParams split{std::polar(1.0, th), std::polar(1.0, -th),
                     SplitType::split};
      AIParams split_sq{std::polar(1.0, 2 * th), std::polar(1.0, -2 * th),
                        SplitType::split};
      AIParams inert{1.0, -1.0, SplitType::inert};
      AIParams ram{(trial % 2) ? 1.0 : -1.0, 0.0, SplitType::ramified};
      AIParams ram_sq{1.0, 0.0, SplitType::ramified};
      worst = std::max(worst, rs_square_identity_check(s, split, split_sq, 1));
      worst = std::max(worst, rs_square_identity_check(s, inert, inert, -1));
      worst = std::max(worst, rs_square_identity_check(s, ram, ram_sq, 0));
      for (int n = 1; n <= 20; ++n)
        for (const AIParams* a : {&split, &inert, &ram})
          worst_bound =
              std::max(worst_bound, std::abs(a_pi(s, n) * a_ai(*a, n)));
    }
    bool ok = worked <= 1e-12 && worst <= 1e-12 && worst_bound <= 8 + 1e-12;
    std::ostringstream m;
    m << "square identities: worked point (2,1,2,0), 1000 fuzzed draws, "
         "residual<=1e-12, |a_pi a_AI|<=8";
    return {ok, m.str()};
  });

  // 3: character family moment bound by full enumeration. The spec
  // equality case runs at x=2, the largest even prime power admissible
  // under x^l < sqrt|d|/2 at d=-23.
  R.run(3, [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    for (int64_t dd : {-23, -47, -71, -163}) {
      auto G = class_group(dd);
      for (int l : {1, 2}) {
        double xmax = std::pow(std::sqrt(static_cast<double>(-dd)) / 2.0,
                               1.0 / l);
        double x = xmax * 0.999;
        std::map<int64_t, double> b;
        for (int64_t p : primes_up_to(static_cast<int64_t>(x)))
          b[p] = 1.0 / std::log(2.0 * p);
        if (b.empty()) continue;
        ok = ok && moment_bound_check(G, b, x, l, false).ok;
        ok = ok && moment_bound_check(G, b, x, l, true).ok;
      }
    }
    auto eq = moment_bound_check(class_group(-23), {{2, 1.0}}, 2, 1, false);
    ok = ok && eq.ok && std::abs(eq.lhs - 1) <= 1e-12 &&
         std::abs(eq.rhs - 1) <= 1e-12;
    return {ok, "moment bound holds for d in {-23,-47,-71,-163}, l in {1,2}; "
                "equality case lhs=rhs=1 at d=-23, l=1, b_2=1, x=2"};
  });

  // 4: the index p series from the weight 10 lift collapses to twice
  // the source coefficient, exactly, on m coprime to 4p.
  R.run(4, [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    int64_t nonzero = 0;
    for (int64_t p : {3, 5, 7}) {
      auto h = h_p_construct(F, p, 2000);
      for (int64_t m = 1; m <= 2000 && ok; ++m) {
        if (gcd64(m, 4 * p) != 1) continue;
        bool solvable = false;
        for (int64_t mu = 0; mu < 2 * p && !solvable; ++mu)
          if ((mu * mu + m) % (4 * p) == 0) solvable = true;
        if (solvable) {
          ok = h.raw(m) == 2 * F.source.raw(m) * F.source.scale;
          if (h.raw(m) != 0) ++nonzero;
        } else {
          ok = h.raw(m) == 0;
        }
      }
    }
    std::ostringstream m;
    m << "h_p = 2 a_source on (m,4p)=1 with -m square mod 4p, 0 otherwise, "
         "exact for m<=2000, p in {3,5,7} (" << nonzero << " nonzero)";
    return {ok && nonzero > 300, m.str()};
  });

  // 5: period sums over class groups vanish exactly off the trivial
  // character, and exact inversion recovers every class coefficient.
  R.run(5, [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    for (int64_t dd : {-23, -47}) {
      auto G = class_group(dd);
      auto chis = characters(G);
      for (size_t i = 1; i < chis.size(); ++i) {
        ok = ok && bessel_vanishes_exactly(F, G, chis[i]);
        ok = ok && std::abs(bessel_period(F, G, chis[i])) <= 1e-12;
      }
      mpq_class total = 0;
      auto inv = bessel_invert_exact(F, G);
      for (int i = 0; i < G.h(); ++i) {
        Lambda2Matrix S{G.forms[i].a, G.forms[i].b, G.forms[i].c};
        ok = ok && inv[static_cast<size_t>(i)] == sk_coefficient(F, S);
        total += sk_coefficient(F, S);
      }
      ok = ok && bessel_trivial_exact(F, G) == total;
    }
    return {ok, "period sums vanish exactly for nontrivial characters at "
                "d=-23,-47; exact inversion recovers all class coefficients"};
  });

  // 6: squared coefficient over central value is constant across
  // twists, for both built-in pairs, 20 pairs each.
  R.run(6, [&]() -> std::pair<bool, std::string> {
    auto g22 = eigenform("g22", 22000, threads);
    auto f23 = builtin_form("f23/2", 2100, threads);
    double worst = 0;
    int pairs_total = 0;
    auto run_pairs = [&](const HalfIntForm& f, const Eigenform& g) {
      std::vector<int64_t> ns;
      for (int64_t n = 3; n <= 2000 && ns.size() < 21; n += 4)
        if (is_fundamental(-n) && f.raw(n) != 0) ns.push_back(n);
      for (size_t i = 1; i < ns.size(); ++i) {
        worst = std::max(worst, waldspurger_pair_deviation(f, g, ns[0], ns[i]));
        ++pairs_total;
      }
    };
    run_pairs(F.source, g18);
    run_pairs(f23, g22);
    std::ostringstream m;
    m << "central value ratio flat across " << pairs_total
      << " twist pairs (two source/target pairs), deviation < 1e-4";
    return {pairs_total >= 40 && worst < 1e-4, m.str()};
  });

  // 7: eigenvalues read off the half-integral coefficients match the
  // weight 18 eigenform, p <= 50, including a(2) = -528.
  R.run(7, [&]() -> std::pair<bool, std::string> {
    bool ok = eigenform_ap("g18", 2, threads)[0] == -528;
    for (int64_t p : primes_up_to(50)) {
      double lam_f = lambda_extract(F.source, p);
      ok = ok && std::fabs(lam_f - g18.lambda(p)) < 1e-9;
    }
    return {ok, "half-integral eigenvalues match the weight 18 eigenform "
                "for p<=50 to 1e-9, including a(2)=-528"};
  });

  // 8: desk-scale counts. The coefficient scale is arbitrary, so the
  // large value count runs on the series rescaled to unit mean square
  // over the window.
  R.run(8, [&]() -> std::pair<bool, std::string> {
    auto s = series_from_halfint(F.source);
    auto sc = sign_changes(s, 1, 100000);
    int64_t masked_count = 0;
    for (int64_t n = 10000; n <= 100000; ++n)
      if (s.masked(n)) ++masked_count;
    double rms = std::sqrt(moment_sums(s, 10000, 100000, 2) /
                           static_cast<double>(masked_count));
    CoeffSeries r = s;
    for (auto& c : r.c) c /= rms;
    auto big = large_values(r, 10000, 100000);
    std::ostringstream m;
    m << "sign changes over odd squarefree n<=1e5: " << sc.count
      << " (>=500); large values in [1e4,1e5] on the unit mean square "
         "rescale: " << big.size() << " (>=100)";
    return {sc.count >= 500 && static_cast<int64_t>(big.size()) >= 100,
            m.str()};
  });

  // 9: twisted first moment, direct sum against the main term.
  R.run(9, [&]() -> std::pair<bool, std::string> {
    auto Phi = std::function<double(double)>(smooth_bump);
    // the 5 minute budget is a single-thread requirement, so run this
    // one on one thread regardless of the cap
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int64_t u : {int64_t(1), int64_t(9)}) {
      auto lhs2 = twisted_moment_lhs(g18, u, 2000, Phi, 1);
      ok = ok && std::abs(lhs2.value / twisted_moment_main(g18, u, 2000, Phi) -
                          1) <= 0.25;
      auto lhs4 = twisted_moment_lhs(g18, u, 4000, Phi, 1);
      ok = ok && std::abs(lhs4.value / twisted_moment_main(g18, u, 4000, Phi) -
                          1) <= 0.20;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    ok = ok && secs < 300;
    return {ok, "twisted first moment within 0.25 of the main term at X=2000 "
                "and 0.20 at X=4000 for u in {1,9}, under the time budget"};
  });

  // 10: Gaussian integral identity and the seeded unit-circle model.
  R.run(10, [&]() -> std::pair<bool, std::string> {
    bool ok = true;
    for (double sigma : {0.5, 1.0, 2.6, 10.0})
      ok = ok && gaussian_integral_check(sigma) < 1e-8;
    std::map<int64_t, double> b;
    for (int64_t p : primes_up_to(99)) b[p] = 1.0;
    auto st = random_model_mc(b, -23, 100, 100000, 424242);
    ok = ok && std::abs(st.variance / st.predicted_variance - 1) <= 0.05;
    return {ok, "Gaussian integral residual < 1e-8 for sigma in "
                "{0.5,1,2.6,10}; Monte Carlo variance within 5% of "
                "2 sum b^2/p over split p at 1e5 samples"};
  });

  // 11: moment growth across doublings, on the unit mean square
  // normalization so the fourth moment bound is scale-free.
  R.run(11, [&]() -> std::pair<bool, std::string> {
    auto s = series_from_halfint(F.source);
    int64_t masked_count = 0;
    for (int64_t n = 6250; n <= 100000; ++n)
      if (s.masked(n)) ++masked_count;
    double rms = std::sqrt(moment_sums(s, 6250, 100000, 2) /
                           static_cast<double>(masked_count));
    for (auto& c : s.c) c /= rms;
    bool ok = true;
    std::vector<double> m4x;
    double prev2 = 0;
    for (int64_t X : {int64_t(6250), int64_t(12500), int64_t(25000),
                      int64_t(50000)}) {
      double m2 = moment_sums(s, X, 2 * X, 2);
      if (prev2 > 0) {
        double ratio = m2 / prev2;
        ok = ok && ratio >= 1.5 && ratio <= 2.5;
      }
      prev2 = m2;
      m4x.push_back(moment_sums(s, X, 2 * X, 4) / static_cast<double>(X));
    }
    for (double v : m4x) ok = ok && v < 50;
    return {ok, "second moment doubles within [1.5,2.5] and fourth "
                "moment / X stays bounded across three doublings"};
  });

  // 12: determinism of the threaded pipeline, hashed.
  R.run(12, [&]() -> std::pair<bool, std::string> {
    uint64_t h1a = fnv1a(fingerprint(g18, 1));
    uint64_t h1b = fnv1a(fingerprint(g18, 1));
    uint64_t h8 = fnv1a(fingerprint(g18, 8));
    std::ostringstream m;
    m << "deterministic output: fingerprint " << std::hex << h1a
      << " identical across two runs and across 1 vs 8 threads";
    return {h1a == h1b && h1a == h8, m.str()};
  });

  out << (R.failures == 0 ? "all 12 checks passed"
                          : std::to_string(R.failures) + " check(s) FAILED")
      << "\n";
  return R.failures;
}

}  // namespace fc
