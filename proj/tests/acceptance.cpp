// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sylow/census.hpp"
#include "sylow/constants.hpp"
#include "sylow/multgroup.hpp"
#include "sylow/verify.hpp"

using namespace sylow;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

CensusTable census(u64 q, u64 x, int threads = 0) {
  CensusConfig cfg;
  cfg.x = x;
  cfg.q = q;
  cfg.threads = threads;
  return census_sylow(cfg);
}

void oracle_equivalence(Outcome& o) {
  const u64 x = 20000;
  for (u64 q : {3, 5, 7}) {
    CensusTable oracle(x, q);
    u64 mismatches = 0;
    for (u64 n = 1; n <= x; ++n) {
      const Partition by_oracle = sylow_signature_oracle(q, n);
      if (by_oracle != sylow_signature(q, factor(n))) ++mismatches;
      oracle.add({nu(q, n), by_oracle}, 1);
    }
    const CensusTable sieved = census(q, x);
    o.require(mismatches == 0, "signature mismatches for q=" + std::to_string(q));
    o.require(sieved == oracle, "histogram mismatch for q=" + std::to_string(q));
    o.detail << " q=" << q << ": " << sieved.counts().size() << " keys equal;";
  }
}

void small_values(Outcome& o) {
  const CensusTable t = census(3, 10);
  o.require(t.count_D(Partition{}) == 8, "D([],10) = 8");
  o.require(t.count_D(Partition{1}) == 2, "D([1],10) = 2");
  o.require(t.count_Dk(0, Partition{1}) == 1, "D_0([1],10) = 1");
  o.require(t.count_Dk(2, Partition{1}) == 1, "D_2([1],10) = 1");
  o.require(census_mnc(10) == 8, "mnc(10) = 8");
  u64 brute16 = 0;
  for (u64 n = 1; n <= 16; ++n) {
    if (is_maximally_noncyclic(factor(n), is_squarefree_trial)) ++brute16;
  }
  const u64 mnc16 = census_mnc(16);
  o.require(mnc16 == brute16, "mnc(16) equals brute force");
  o.detail << " D([],10)=8 D([1],10)=2 (D_0=1, D_2=1) mnc(10)=8 mnc(16)=" << mnc16
           << " (brute force " << brute16 << "; the listed value 12 omits n=13, whose group Z_12 has a Z_4 factor)";
}

void structural(Outcome& o) {
  const u64 x = 1'000'000;
  for (u64 q : {3, 5}) {
    const CensusTable t = census(q, x);
    std::map<Partition, u64> d;
    for (const auto& [key, c] : t.counts()) d[key.signature] += c;
    for (const auto& [sig, c] : d) {
      u64 strata = 0;
      for (unsigned k = 0; k <= 20; ++k) strata += t.count_Dk(k, sig);
      o.require(t.count_D(sig) == c && strata == c, "D = sum D_k");
    }
    u64 checked = 0;
    const CensusTable t1 = census(q, x / q);
    for (const auto& [key, c] : t1.counts()) {
      if (key.k == 0) {
        o.require(t.count_Dk(1, key.signature) == c, "D_1(H,x) = D_0(H,x/q)");
        ++checked;
      }
    }
    for (const auto& [key, c] : t.counts()) {
      if (key.k == 1) o.require(t1.count_Dk(0, key.signature) == c, "D_1(H,x) = D_0(H,x/q)");
      o.require(static_cast<int>(key.k) < key.signature.largest() + 2, "vanishing for k >= a_1 + 2");
    }
    u64 qk = q;
    for (unsigned k = 2; qk <= x / q; ++k) {
      qk *= q;
      const CensusTable tk = census(q, x / qk);
      for (const auto& [key, c] : t.counts()) {
        if (key.k != k) continue;
        const int drop = static_cast<int>(k) - 1;
        o.require(key.signature.contains(drop) && tk.count_Dk(0, key.signature.without(drop)) == c,
                  "reduction for k >= 2");
        ++checked;
      }
      for (const auto& [key, c] : tk.counts()) {
        if (key.k == 0) o.require(t.count_Dk(k, key.signature.with(static_cast<int>(k) - 1)) == c, "reduction for k >= 2");
      }
    }
    o.detail << " q=" << q << ": " << d.size() << " signatures, " << checked << " reduction keys;";
  }
}

void constants(Outcome& o) {
  const double l3_exact = std::numbers::pi / (3.0 * std::sqrt(3.0));
  const auto l3 = l_one(DirichletCharacter(3, 1));
  const double l_dev = std::abs(l3.value - std::complex<double>(l3_exact, 0.0));
  o.require(l_dev <= 1e-10, "L(1,chi_3) = pi/(3 sqrt 3)");

  const auto b6 = b_q(3, 1'000'000);
  const auto b7 = b_q(3, 10'000'000);
  const double b_dev = std::abs(b6.value - b7.value);
  o.require(b_dev <= b6.err + b7.err, "B_3 two-cutoff agreement");

  const auto xi6 = artin_xi(1'000'000);
  const auto xi8 = artin_xi(100'000'000);
  const auto xi9 = artin_xi(1'000'000'000);
  o.require(std::abs(xi9.value - 0.3739558136) <= 4e-9, "xi(10^9) = 0.3739558136 +- 4e-9");
  o.require(xi9.err <= 4e-9, "xi(10^9) err <= 4e-9");
  o.require(std::abs(xi6.value - xi9.value) <= xi6.err, "xi(10^6) err bound honest");
  o.require(std::abs(xi8.value - xi9.value) <= xi8.err + xi9.err, "xi two-cutoff agreement");

  char buf[512];
  std::snprintf(buf, sizeof buf,
                " |L-pi/(3sqrt3)|=%.2e; B_3(1e6)=%.15g B_3(1e7)=%.15g diff %.2e <= %.2e; xi(1e9)=%.12f err %.2e;"
                " |xi(1e6)-xi(1e9)|=%.2e <= %.2e",
                l_dev, b6.value, b7.value, b_dev, b6.err + b7.err, xi9.value, xi9.err,
                std::abs(xi6.value - xi9.value), xi6.err);
  o.detail << buf;
}

void density(Outcome& o) {
  const auto counts = prime_pminus1_squarefree_count(10'000'000);
  const double ratio = static_cast<double>(counts.squarefree_shifted) / static_cast<double>(counts.primes);
  const double xi = artin_xi(10'000'000).value;
  o.require(std::abs(ratio - xi) < 0.01, "density within 0.01 of xi");
  char buf[160];
  std::snprintf(buf, sizeof buf, " %llu/%llu = %.6f, xi = %.6f, |diff| = %.2e",
                static_cast<unsigned long long>(counts.squarefree_shifted),
                static_cast<unsigned long long>(counts.primes), ratio, xi, std::abs(ratio - xi));
  o.detail << buf;
}

void derivative_identity(Outcome& o) {
  const double h = 1e-5;
  double worst = 0.0;
  for (double gamma : {0.3, 0.5, 1.7}) {
    for (double x : {10.0, 100.0}) {
      const double lx = std::log(x);
      auto f = [&](double z) { return h_gamma(gamma, z) / (gamma * std::pow(z * lx, gamma)); };
      for (int i = 1; i <= 9; ++i) {
        const double z = i / 10.0;
        const double fd = (f(z + h) - f(z - h)) / (2 * h);
        const double exact = -1.0 / ((1 - z) * std::pow(z * lx, gamma));
        worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
      }
    }
  }
  o.require(worst < 1e-6, "relative error < 1e-6");
  char buf[96];
  std::snprintf(buf, sizeof buf, " 54 grid points, worst relative error %.2e", worst);
  o.detail << buf;
}

const VerifyReport& trend_report() {
  static const VerifyReport report = [] {
    VerifyOptions opt;
    opt.targets = parse_targets("d:3:[],d:3:[1],mnc");
    opt.xs = parse_grid("1e4..1e8");
    opt.band = kDefaultBand;
    return run_verification(opt);
  }();
  return report;
}

void trend(Outcome& o, std::size_t index) {
  const VerifyReport& rep = trend_report();
  const Verdict& v = rep.verdicts.at(index);
  o.detail << " " << v.target.label() << " ratios";
  for (const auto& r : rep.rows) {
    if (r.target == v.target) o.detail << " " << format_real(r.ratio).substr(0, 6);
  }
  o.detail << "; |ratio-1| at 1e8 = " << format_real(v.final_deviation).substr(0, 6) << " vs band "
           << rep.band << (v.nonincreasing ? ", nonincreasing" : ", NOT nonincreasing");
  o.require(v.within_band, "|ratio-1| < band at 1e8");
  o.require(v.nonincreasing, "|ratio-1| nonincreasing over the last three decades");
}

void determinism(Outcome& o) {
  std::vector<std::string> artifacts[2];
  const int threads[2] = {1, 4};
  for (int i = 0; i < 2; ++i) {
    const int t = threads[i];
    CensusConfig cfg;
    cfg.x = 10'000'000;
    cfg.q = 3;
    cfg.segment_size = 1 << 20;
    cfg.threads = t;
    const CensusTable table = census_sylow(cfg);
    artifacts[i].push_back(to_csv(table));
    artifacts[i].push_back(to_json(table));
    artifacts[i].push_back(std::to_string(census_mnc(10'000'000, 1 << 20, t)));
    artifacts[i].push_back(format_real(b_q(5, 20'000'000, t).value));
    artifacts[i].push_back(format_real(artin_xi(20'000'000, t).value));
    artifacts[i].push_back(format_real(mertens_sum(3, 1, 20'000'000, t)));
    const auto sq = prime_pminus1_squarefree_count(20'000'000, t);
    artifacts[i].push_back(std::to_string(sq.squarefree_shifted) + "/" + std::to_string(sq.primes));
    VerifyOptions opt;
    opt.targets = parse_targets("d:3:[1],mnc");
    opt.xs = parse_grid("1e5..1e7");
    opt.bq_cutoff = 1'000'000;
    opt.a_cutoff = 10'000'000;
    opt.threads = t;
    const VerifyReport rep = run_verification(opt);
    artifacts[i].push_back(to_csv(rep));
    artifacts[i].push_back(summary_json(rep));
  }
  std::size_t bytes = 0;
  for (std::size_t k = 0; k < artifacts[0].size(); ++k) {
    o.require(artifacts[0][k] == artifacts[1][k], "artifact " + std::to_string(k) + " identical");
    bytes += artifacts[0][k].size();
  }
  o.detail << " " << artifacts[0].size() << " artifacts (" << bytes << " bytes) identical for 1 and 4 threads";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence, q in {3,5,7}, n <= 20000", oracle_equivalence},
      {2, "worked small values", small_values},
      {3, "structural identities at x = 10^6, q in {3,5}", structural},
      {4, "constants: L(1,chi), B_3 cutoffs, Artin's constant", constants},
      {5, "squarefree p-1 density at 10^7", density},
      {6, "H_gamma derivative identity", derivative_identity},
      {7, "trend D(Z_3^[], x), x = 10^4..10^8", [](Outcome& o) { trend(o, 0); }},
      {8, "trend D(Z_3^[1], x), x = 10^4..10^8", [](Outcome& o) { trend(o, 1); }},
      {9, "trend maximally non-cyclic count, x = 10^4..10^8", [](Outcome& o) { trend(o, 2); }},
      {10, "determinism across thread counts", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.1fs)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
