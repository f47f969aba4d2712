// sylowcount: census, constants, and main-term verification for the Sylow
// subgroups of (Z/nZ)^x.
//
// Exit codes: 0 success, 2 usage error, 3 verification FAIL.

#include <omp.h>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sylow/census.hpp"
#include "sylow/constants.hpp"
#include "sylow/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace sylow;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {}

  void write(const std::string& name, const std::string& content) {
    fs::create_directories(dir_);
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir_ / name).string());
    out << content;
    artifacts_.push_back({{"path", name}, {"sha256", sha256_hex(content)}, {"bytes", content.size()}});
  }

  void manifest(const std::string& command, ordered_json config, double seconds) {
    ordered_json m;
    m["command"] = command;
    m["config"] = std::move(config);
    m["artifacts"] = artifacts_;
    m["wall_time_seconds"] = seconds;
    fs::create_directories(dir_);
    std::ofstream(dir_ / (command + "_manifest.json"), std::ios::binary) << m.dump(2) << "\n";
  }

 private:
  fs::path dir_;
  ordered_json artifacts_ = ordered_json::array();
};

u64 count_flag(const std::string& name, const std::string& text) {
  try {
    return parse_count(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

ordered_json constant_json(const ConstantRecord& c) {
  ordered_json rec;
  rec["name"] = c.name;
  rec["q"] = c.q ? ordered_json(*c.q) : ordered_json(nullptr);
  rec["alpha"] = c.alpha ? ordered_json(to_string(*c.alpha)) : ordered_json(nullptr);
  rec["value"] = format_real(c.value.value);
  rec["err"] = format_real(c.value.err);
  rec["cutoff"] = c.cutoff;
  if (c.value.heuristic_tail > 0) rec["heuristic_tail"] = format_real(c.value.heuristic_tail);
  if (c.exact) rec["exact"] = *c.exact;
  return rec;
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << numerator(r);
  if (denominator(r) != 1) s << '/' << denominator(r);
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Sylow-subgroup censuses of (Z/nZ)^x and their asymptotic constants"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = OpenMP default); outputs do not depend on it")
      ->check(CLI::NonNegativeNumber);

  std::string x_text;
  std::string q_text = "3";
  std::string segment_text = std::to_string(kDefaultSegmentSize);
  std::string out_dir = ".";

  auto* census = app.add_subcommand("census", "histogram of Sylow signatures of Z_n^x for n <= x");
  census->add_option("--x", x_text, "limit, e.g. 1e6")->required();
  census->add_option("--q", q_text, "odd prime");
  census->add_option("--segment-size", segment_text, "integers per sieve segment");
  census->add_option("--out", out_dir, "output directory");

  std::string alpha_text = "[]";
  std::string cutoff_text = std::to_string(kDefaultBqCutoff);
  bool with_mnc = false;
  std::string const_q_text;
  std::string const_out;
  auto* constants = app.add_subcommand("constants", "B_q, C, E_q, K and optionally xi, A as JSON");
  constants->add_option("--q", const_q_text, "odd prime");
  constants->add_option("--alpha", alpha_text, "partition such as [2,1]");
  constants->add_option("--cutoff", cutoff_text, "Euler-product cutoff P");
  constants->add_flag("--mnc", with_mnc, "also report Artin's constant and A");
  constants->add_option("--out", const_out, "write the JSON to this file as well");

  std::string mnc_x_text;
  std::string mnc_out;
  auto* mnc = app.add_subcommand("mnc", "count n <= x with Z_n^x maximally non-cyclic");
  mnc->add_option("--x", mnc_x_text, "limit")->required();
  mnc->add_option("--segment-size", segment_text, "integers per sieve segment");
  mnc->add_option("--out", mnc_out, "output directory");

  std::string targets_text = "d:3:[],d:3:[1],mnc";
  std::string xs_text = "1e4..1e8";
  double band = kDefaultBand;
  std::string a_cutoff_text = "1e8";
  std::string verify_out = ".";
  auto* verify = app.add_subcommand("verify", "compare census counts with the main terms");
  verify->add_option("--targets", targets_text, "comma list of d:Q:[..], d0:Q:[..], mnc");
  verify->add_option("--xs", xs_text, "decade range lo..hi or comma list");
  verify->add_option("--band", band, "allowed |ratio - 1| at the largest x")->check(CLI::PositiveNumber);
  verify->add_option("--cutoff", cutoff_text, "Euler-product cutoff for B_q");
  verify->add_option("--a-cutoff", a_cutoff_text, "Euler-product cutoff for xi and A");
  verify->add_option("--segment-size", segment_text, "integers per sieve segment");
  verify->add_option("--out", verify_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (threads > 0) omp_set_num_threads(threads);

    if (census->parsed()) {
      CensusConfig cfg;
      cfg.x = count_flag("x", x_text);
      cfg.q = count_flag("q", q_text);
      cfg.segment_size = count_flag("segment-size", segment_text);
      cfg.threads = threads;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const CensusTable table = census_sylow(cfg);
      const std::string stem = "census_q" + std::to_string(cfg.q) + "_x" + std::to_string(cfg.x);
      Outputs out(out_dir);
      out.write(stem + ".csv", to_csv(table));
      out.write(stem + ".json", to_json(table));
      out.manifest("census",
                   {{"x", cfg.x}, {"q", cfg.q}, {"segment_size", cfg.segment_size}, {"threads", threads}},
                   seconds_since(t0));
      std::cout << "census q=" << cfg.q << " x=" << cfg.x << ": " << table.counts().size()
                << " (k, signature) classes, total " << table.total() << "\n";
      return 0;
    }

    if (constants->parsed()) {
      const u64 cutoff = count_flag("cutoff", cutoff_text);
      if (cutoff < 100) throw UsageError("--cutoff must be at least 100");
      if (const_q_text.empty() && !with_mnc) throw UsageError("constants: give --q and/or --mnc");
      ordered_json records = ordered_json::array();
      if (!const_q_text.empty()) {
        const u64 q = count_flag("q", const_q_text);
        Partition alpha;
        try {
          require_odd_prime(q);
          alpha = parse_partition(alpha_text);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        const PrecisionValue bq = b_q(q, cutoff, threads);
        const Rational c = c_alpha(alpha);
        const Rational e = e_q_alpha(q, alpha);
        const PrecisionValue k = scaled(bq, (c * e).convert_to<double>());
        records.push_back(constant_json({"B", q, std::nullopt, bq, cutoff, std::nullopt}));
        records.push_back(constant_json(
            {"C", std::nullopt, alpha, {c.convert_to<double>(), 0.0, 0.0}, 0, rational_text(c)}));
        records.push_back(constant_json({"E", q, alpha, {e.convert_to<double>(), 0.0, 0.0}, 0, rational_text(e)}));
        records.push_back(constant_json({"K", q, alpha, k, cutoff, std::nullopt}));
      }
      if (with_mnc) {
        const PrecisionValue xi = artin_xi(cutoff, threads);
        const PrecisionValue a = constant_A(cutoff, squarefree_sieve(cutoff), threads);
        records.push_back(constant_json({"xi", std::nullopt, std::nullopt, xi, cutoff, std::nullopt}));
        records.push_back(constant_json({"A", std::nullopt, std::nullopt, a, cutoff, std::nullopt}));
      }
      const std::string text = records.dump(2) + "\n";
      std::cout << text;
      if (!const_out.empty()) std::ofstream(const_out, std::ios::binary) << text;
      return 0;
    }

    if (mnc->parsed()) {
      const u64 x = count_flag("x", mnc_x_text);
      if (x < 1 || x > kMaxCensusLimit) throw UsageError("--x must be in [1, 10^9]");
      const u64 seg = count_flag("segment-size", segment_text);
      if (seg < 2) throw UsageError("--segment-size must be at least 2");
      const u64 count = census_mnc(x, seg, threads);
      std::cout << count << "\n";
      if (!mnc_out.empty()) {
        Outputs out(mnc_out);
        ordered_json j{{"x", x}, {"count", count}};
        out.write("mnc_x" + std::to_string(x) + ".json", j.dump(2) + "\n");
        out.manifest("mnc", {{"x", x}, {"segment_size", seg}, {"threads", threads}}, seconds_since(t0));
      }
      return 0;
    }

    if (verify->parsed()) {
      VerifyOptions opt;
      try {
        opt.targets = parse_targets(targets_text);
        opt.xs = parse_grid(xs_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      for (u64 x : opt.xs) {
        if (x < 16 || x > kMaxCensusLimit) throw UsageError("--xs entries must lie in [16, 10^9]");
      }
      opt.band = band;
      opt.bq_cutoff = count_flag("cutoff", cutoff_text);
      opt.a_cutoff = count_flag("a-cutoff", a_cutoff_text);
      if (opt.bq_cutoff < 100 || opt.a_cutoff < 100) throw UsageError("cutoffs must be at least 100");
      opt.segment_size = count_flag("segment-size", segment_text);
      if (opt.segment_size < 2) throw UsageError("--segment-size must be at least 2");
      opt.threads = threads;

      const VerifyReport report = run_verification(opt);
      Outputs out(verify_out);
      out.write("verify.csv", to_csv(report));
      out.write("verify_summary.json", summary_json(report));
      ordered_json targets = ordered_json::array();
      for (const auto& t : opt.targets) targets.push_back(t.label());
      out.manifest("verify",
                   {{"targets", targets},
                    {"xs", opt.xs},
                    {"band", band},
                    {"bq_cutoff", opt.bq_cutoff},
                    {"a_cutoff", opt.a_cutoff},
                    {"segment_size", opt.segment_size},
                    {"threads", threads}},
                   seconds_since(t0));
      for (const auto& v : report.verdicts) {
        std::cout << (v.pass ? "PASS " : "FAIL ") << v.target.label() << "  ratio(" << opt.xs.back()
                  << ") = " << format_real(v.final_ratio) << "\n";
      }
      return report.all_pass() ? 0 : kExitVerifyFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
