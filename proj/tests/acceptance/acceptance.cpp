// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

#include "../oracle.hpp"
#include "spinbell/closed_form.hpp"
#include "spinbell/correlations.hpp"
#include "spinbell/lhv_oracle.hpp"
#include "spinbell/optimizer.hpp"
#include "spinbell/sampler.hpp"
#include "spinbell/scan.hpp"

using namespace spinbell;
namespace cf = spinbell::closed_form;

namespace {

constexpr double kTol = 1e-12;
const SignPair kPP{Sign::Plus, Sign::Plus};
const SignPair kPM{Sign::Plus, Sign::Minus};
const SignPair kMP{Sign::Minus, Sign::Plus};
const SignPair kMM{Sign::Minus, Sign::Minus};

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s criterion %d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Direction random_direction(std::mt19937_64& rng) {
  const auto a = oracle::random_angles(rng);
  return {a.theta, a.phi};
}

EntangledState random_state(std::mt19937_64& rng, Polarization pol) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  return {u(rng), u(rng), pol};
}

Polarization pol_of(int i) { return i % 2 ? Polarization::Parallel : Polarization::Antiparallel; }

void singlet_dot_product() {
  Stopwatch t;
  std::mt19937_64 rng(1);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Direction a = random_direction(rng), b = random_direction(rng);
    worst = std::max(worst,
                     std::abs(spin_correlation(EntangledState::singlet(), a, b).total + dot(a, b)));
  }
  const double s = t.seconds();
  report(1, worst <= kTol && s < 1.0, "singlet P(a,b) = -a.b over 1e3 pairs",
         fmt("max |err| %.3g, %.3f s", worst, s));
}

void chsh_maximum() {
  Stopwatch t;
  const auto r = maximize_chsh(EntangledState::singlet(), SearchConfig{});
  const double s = t.seconds();
  const double err = std::abs(r.best_value - 2 * std::sqrt(2.0));
  report(2, err <= 1e-6 && s < 5.0, "max CHSH(singlet) = 2 sqrt 2",
         fmt("best %.15g, |err| %.3g, %d restarts, %.3f s", r.best_value, err, r.restarts_used, s));
}

void wigner_antiparallel() {
  const Direction x(kPi / 2, 0.0), mx(kPi / 2, kPi);
  const auto w = wigner_w(EntangledState::triplet(), kPP, mx, mx, x).value;
  const auto r = maximize_w(EntangledState::triplet(), SearchConfig{});
  const bool ok = std::abs(w.total - 0.5) <= kTol && std::abs(w.local + 0.25) <= kTol &&
                  std::abs(w.nonlocal - 0.75) <= kTol && std::abs(r.best_value - 0.5) <= 1e-6;
  report(3, ok, "triplet W = 1/2 = -1/4 + 3/4; max W(triplet) = 1/2",
         fmt("W %.15g = %.15g + %.15g; optimizer %.15g", w.total, w.local, w.nonlocal,
             r.best_value));
}

void wigner_parallel() {
  const Direction a(kPi / 2, kPi / 2), c(kPi / 2, 3 * kPi / 2);
  const auto w = wigner_w(EntangledState::bell_parallel(), kPM, a, a, c).value;
  const auto r = maximize_w(EntangledState::bell_parallel(), SearchConfig{});
  const bool ok = std::abs(w.total - 0.5) <= kTol && std::abs(r.best_value - 0.5) <= 1e-6;
  report(4, ok, "parallel Bell W = 1/2; max W(parallel Bell) = 1/2",
         fmt("W %.15g; optimizer %.15g", w.total, r.best_value));
}

void local_realism() {
  Stopwatch t;
  std::mt19937_64 rng(5);
  long positive = 0, chain = 0, samples = 0;
  double first_ta = 0, first_tb = 0, first_tc = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto pol = pol_of(i);
    const auto s = random_state(rng, pol);
    const Direction a = random_direction(rng), b = random_direction(rng), c = random_direction(rng);
    const SignPair pairs[2] = {canonical_signs(pol),
                               pol == Polarization::Antiparallel ? kMM : kMP};
    for (const SignPair sp : pairs) {
      ++samples;
      const double wl = wigner_w(s, sp, a, b, c).value.local;
      const double term = cf::wigner_local_chain_term(a.theta(), c.theta());
      if (wl > kTol) ++positive;
      if (!(0.0 >= term && term >= wl - kTol)) {
        if (chain == 0) first_ta = a.theta(), first_tb = b.theta(), first_tc = c.theta();
        ++chain;
      }
    }
  }
  const double s = t.seconds();
  report(5, positive == 0 && chain == 0 && s < 10.0,
         "W_lc <= 0 and 0 >= -sin^2(tc/2)cos^2(ta/2) >= W_lc",
         fmt("%ld samples; W_lc > 0: %ld; chain violated: %ld (first at ta=%.4f tb=%.4f "
             "tc=%.4f; exact case a=+z, b=c=-z gives W_lc=0 > term=-1); %.3f s",
             samples, positive, chain, first_ta, first_tb, first_tc, s));
}

void universal_bound() {
  Stopwatch t;
  std::mt19937_64 rng(6);
  long evaluations = 0;
  double worst = -INFINITY;
  for (int i = 0; i < 600000; ++i) {
    const auto pol = pol_of(i);
    const auto s = random_state(rng, pol);
    const double w =
        wigner_w(s, canonical_signs(pol), random_direction(rng), random_direction(rng),
                 random_direction(rng))
            .value.total;
    worst = std::max(worst, w);
    ++evaluations;
  }
  ScanSpec grid;
  for (auto& axis : grid.axes) axis = AxisBinding::grid(6);
  const EntangledState states[] = {
      EntangledState::triplet(), EntangledState::singlet(), EntangledState::bell_parallel(),
      {0.3, 0.0, Polarization::Antiparallel}, {0.3, 1.0, Polarization::Parallel},
      {1.1, 2.0, Polarization::Antiparallel}, {1.1, 4.5, Polarization::Parallel},
      {kPi / 4, kPi / 4, Polarization::Antiparallel}, {kPi / 4, kPi / 4, Polarization::Parallel},
      {2.0, 0.5, Polarization::Antiparallel}};
  for (const auto& s : states) {
    for (const auto& row : scan_w(s, canonical_signs(s.polarization()), grid)) {
      worst = std::max(worst, row.w.total);
      ++evaluations;
    }
  }
  std::uniform_real_distribution<double> th(0.0, kPi);
  double worst_f = -INFINITY;
  for (int i = 0; i < 1000000; ++i) worst_f = std::max(worst_f, wigner_bound_F(th(rng), th(rng), th(rng)));
  const bool ok = evaluations >= 1000000 && worst <= 0.5 + 1e-9 && worst_f <= 0.5 + 1e-9;
  report(6, ok, "W <= 1/2 over random and grid search; F <= 1/2",
         fmt("%ld evaluations, max W %.15g; 1e6 F samples, max F %.15g; %.3f s", evaluations,
             worst, worst_f, t.seconds()));
}

void lhv_fuzz() {
  Stopwatch t;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long broken = 0;
  for (int i = 0; i < 1000000; ++i) {
    std::array<double, 8> n{};
    for (auto& x : n) x = u(rng) < 0.25 ? 0.0 : u(rng);
    if (std::all_of(n.begin(), n.end(), [](double x) { return x == 0.0; })) n[i % 8] = 1.0;
    const auto r = verify_wigner(Population8(n));
    if (!r.holds_plus_minus || !r.holds_minus_plus) ++broken;
  }
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto pol = pol_of(i);
    const bool anti = pol == Polarization::Antiparallel;
    const auto s = random_state(rng, pol);
    const Direction d[3] = {random_direction(rng), random_direction(rng), random_direction(rng)};
    const auto pop = population_from_local_state(s, d[0], d[1], d[2]);
    const std::pair<Axis, Axis> pairs[3] = {{Axis::A, Axis::B}, {Axis::A, Axis::C},
                                            {Axis::C, Axis::B}};
    for (const auto& [x, y] : pairs) {
      const Direction& p = d[static_cast<int>(x)];
      const Direction& q = d[static_cast<int>(y)];
      // closed forms: antiparallel (+,+)/(-,-), parallel (+,-)/(-,+)
      const double hi = population_correlation(pop, Sign::Plus, x, anti ? Sign::Plus : Sign::Minus,
                                               y, pol);
      const double lo = population_correlation(pop, Sign::Minus, x, anti ? Sign::Minus : Sign::Plus,
                                               y, pol);
      worst = std::max(worst, std::abs(hi - cf::number_local_pp(s.xi(), p, q)));
      worst = std::max(worst, std::abs(lo - cf::number_local_mm(s.xi(), p, q)));
      for (const SignPair sp : {kPP, kPM, kMP, kMM}) {
        worst = std::max(worst, std::abs(population_correlation(pop, sp.first, x, sp.second, y, pol) -
                                         number_correlation(s, sp, p, q).value.local));
      }
    }
  }
  report(7, broken == 0 && worst <= kTol, "LHV inequalities hold; population marginals = N_lc",
         fmt("1e6 populations, %ld violations; 1e3 bridge cases, max |err| %.3g; %.3f s", broken,
             worst, t.seconds()));
}

void oracle_equivalence() {
  Stopwatch t;
  std::mt19937_64 rng(8);
  double worst = 0;
  const auto track = [&](double x, double y) { worst = std::max(worst, std::abs(x - y)); };
  for (int i = 0; i < 10000; ++i) {
    const auto pol = pol_of(i);
    const bool anti = pol == Polarization::Antiparallel;
    const auto s = random_state(rng, pol);
    const double xi = s.xi(), eta = s.eta();
    const Direction a = random_direction(rng), b = random_direction(rng), c = random_direction(rng);

    const auto p = spin_correlation(s, a, b);
    track(p.local, anti ? cf::spin_local_antiparallel(a, b) : cf::spin_local_parallel(a, b));
    track(p.nonlocal, anti ? cf::spin_nonlocal_antiparallel(xi, eta, a, b)
                           : cf::spin_nonlocal_parallel(xi, eta, a, b));
    track(p.total, oracle::spin_corr(xi, eta, !anti, a.theta(), a.phi(), b.theta(), b.phi()));

    double from_n = 0;
    for (const SignPair sp : {kPP, kPM, kMP, kMM}) {
      const auto n = number_correlation(s, sp, a, b).value;
      from_n += static_cast<int>(sp.first) * static_cast<int>(sp.second) * n.total;
      track(n.total, oracle::number(xi, eta, !anti, static_cast<int>(sp.first), a.theta(),
                                    a.phi(), static_cast<int>(sp.second), b.theta(), b.phi()));
    }
    track(p.total, from_n);

    const auto hi = number_correlation(s, anti ? kPP : kPM, a, b).value;
    const auto lo = number_correlation(s, anti ? kMM : kMP, a, b).value;
    track(hi.local, cf::number_local_pp(xi, a, b));
    track(lo.local, cf::number_local_mm(xi, a, b));
    const double nl = anti ? cf::number_nonlocal_antiparallel(xi, eta, a, b)
                           : cf::number_nonlocal_parallel(xi, eta, a, b);
    track(hi.nonlocal, nl);
    track(lo.nonlocal, nl);

    const auto w = wigner_w(s, canonical_signs(pol), a, b, c).value;
    track(w.local, cf::wigner_local(a.theta(), b.theta(), c.theta()));
    track(w.local, cf::wigner_local_cosines(a.theta(), b.theta(), c.theta()));
    track(w.nonlocal, anti ? cf::wigner_nonlocal_antiparallel(xi, eta, a, b, c)
                           : cf::wigner_nonlocal_parallel(xi, eta, a, b, c));
    track(w.total, w.local + w.nonlocal);
  }
  report(8, worst <= kTol, "trace = closed form = state-vector oracle; P = N++ - N+- - N-+ + N--",
         fmt("1e4 cases, max |err| %.3g; %.3f s", worst, t.seconds()));
}

void sampler_convergence() {
  Stopwatch t;
  const Direction x(kPi / 2, 0.0), mx(kPi / 2, kPi);
  const auto first = estimate_wigner(EntangledState::triplet(), kPP, mx, mx, x, 1000000, 42);
  const auto second = estimate_wigner(EntangledState::triplet(), kPP, mx, mx, x, 1000000, 42);
  const double s = t.seconds();
  const auto& e = first.estimate;
  const bool within = std::abs(e.value - 0.5) <= 5 * e.std_error;
  const bool same = first.experiments == second.experiments &&
                    std::memcmp(&e.value, &second.estimate.value, sizeof(double)) == 0 &&
                    std::memcmp(&e.std_error, &second.estimate.std_error, sizeof(double)) == 0;
  report(9, within && same && s < 10.0, "sampled W at triplet optimum = 1/2 within 5 se",
         fmt("estimate %.6f +- %.6f (%.2f se), reproducible: %s, %.3f s", e.value, e.std_error,
             std::abs(e.value - 0.5) / e.std_error, same ? "yes" : "no", s));
}

}  // namespace

int main() {
  singlet_dot_product();
  chsh_maximum();
  wigner_antiparallel();
  wigner_parallel();
  local_realism();
  universal_bound();
  lhv_fuzz();
  oracle_equivalence();
  sampler_convergence();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
