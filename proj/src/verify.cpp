#include "sylow/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sylow/census.hpp"
#include "sylow/constants.hpp"

namespace sylow {

namespace {

double log_shape(u64 q, const Partition& alpha, double x) {
  if (!(x >= 16.0)) throw std::domain_error("main term requires x >= 16");
  require_odd_prime(q);
  const double lx = std::log(x);
  return x * std::pow(std::log(lx), static_cast<double>(alpha.length())) /
         std::pow(lx, 1.0 / static_cast<double>(q - 1));
}

}  // namespace

double predicted_D(u64 q, const Partition& alpha, double x, double bq) {
  const double ce = (c_alpha(alpha) * e_q_alpha(q, alpha)).convert_to<double>();
  return bq * ce * log_shape(q, alpha, x);
}

double predicted_D0(u64 q, const Partition& alpha, double x, double bq) {
  const Rational c = c_alpha(alpha) / Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(q),
                                                                         static_cast<unsigned>(alpha.sum())));
  return bq * c.convert_to<double>() * log_shape(q, alpha, x);
}

double predicted_mnc(double x, double a, double xi) {
  if (!(x > 1.0)) throw std::domain_error("mnc main term requires x > 1");
  return a * x / std::pow(std::log(x), 1.0 - xi);
}

std::string Target::label() const {
  switch (kind) {
    case Kind::D:
      return "d:" + std::to_string(q) + ":" + to_string(alpha);
    case Kind::D0:
      return "d0:" + std::to_string(q) + ":" + to_string(alpha);
    case Kind::Mnc:
      return "mnc";
  }
  return {};
}

Target parse_target(std::string_view text) {
  if (text == "mnc") return Target{Target::Kind::Mnc, 0, {}};
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("target must be d:Q:[..], d0:Q:[..] or mnc");
  const std::string_view kind = text.substr(0, c1);
  Target t;
  if (kind == "d") {
    t.kind = Target::Kind::D;
  } else if (kind == "d0") {
    t.kind = Target::Kind::D0;
  } else {
    throw std::invalid_argument("unknown target kind '" + std::string(kind) + "'");
  }
  t.q = parse_count(text.substr(c1 + 1, c2 - c1 - 1));
  require_odd_prime(t.q);
  t.alpha = parse_partition(text.substr(c2 + 1));
  return t;
}

std::vector<Target> parse_targets(std::string_view text) {
  std::vector<Target> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '[') ++depth;
    if (i < text.size() && text[i] == ']') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      if (i > start) out.push_back(parse_target(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("no verification targets given");
  return out;
}

Verdict judge(const std::vector<ComparisonRow>& rows, double band) {
  if (rows.empty()) throw std::invalid_argument("judge: no comparison rows");
  Verdict v;
  v.target = rows.front().target;
  v.final_ratio = rows.back().ratio;
  v.final_deviation = std::fabs(rows.back().ratio - 1.0);
  v.within_band = v.final_deviation < band;
  v.nonincreasing = true;
  const std::size_t first = rows.size() >= 3 ? rows.size() - 3 : 0;
  for (std::size_t i = first + 1; i < rows.size(); ++i) {
    if (std::fabs(rows[i].ratio - 1.0) > std::fabs(rows[i - 1].ratio - 1.0)) v.nonincreasing = false;
  }
  v.pass = v.within_band && v.nonincreasing;
  return v;
}

bool VerifyReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

VerifyReport convergence_report(const std::vector<std::vector<ComparisonRow>>& per_target, double band) {
  VerifyReport report;
  report.band = band;
  for (const auto& rows : per_target) {
    report.verdicts.push_back(judge(rows, band));
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  if (!per_target.empty()) {
    for (const auto& r : per_target.front()) report.xs.push_back(r.x);
  }
  return report;
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.targets.empty()) throw std::invalid_argument("no verification targets given");
  if (options.xs.empty()) throw std::invalid_argument("no limits given");
  for (u64 x : options.xs) {
    if (x < 16) throw std::invalid_argument("verification limits must be >= 16");
  }

  std::map<u64, std::vector<CensusTable>> tables;
  std::map<u64, PrecisionValue> bq;
  std::vector<u64> mnc_counts;
  PrecisionValue a_value;
  PrecisionValue xi_value;
  std::vector<ConstantRecord> constants;

  for (const auto& t : options.targets) {
    if (t.kind == Target::Kind::Mnc) {
      if (mnc_counts.empty()) {
        mnc_counts = census_mnc_at(options.xs, options.segment_size, options.threads);
        xi_value = artin_xi(options.a_cutoff, options.threads);
        a_value = constant_A(options.a_cutoff, squarefree_sieve(options.a_cutoff), options.threads);
        constants.push_back({"xi", std::nullopt, std::nullopt, xi_value, options.a_cutoff, std::nullopt});
        constants.push_back({"A", std::nullopt, std::nullopt, a_value, options.a_cutoff, std::nullopt});
      }
      continue;
    }
    if (!tables.contains(t.q)) {
      CensusConfig cfg;
      cfg.q = t.q;
      cfg.segment_size = options.segment_size;
      cfg.threads = options.threads;
      tables[t.q] = census_sylow_at(cfg, options.xs);
      bq[t.q] = b_q(t.q, options.bq_cutoff, options.threads);
      constants.push_back({"B", t.q, std::nullopt, bq[t.q], options.bq_cutoff, std::nullopt});
    }
  }

  std::vector<std::vector<ComparisonRow>> per_target;
  for (const auto& t : options.targets) {
    std::vector<ComparisonRow> rows;
    for (std::size_t i = 0; i < options.xs.size(); ++i) {
      const u64 x = options.xs[i];
      ComparisonRow row{t, x, 0, 0.0, 0.0};
      const double xd = static_cast<double>(x);
      switch (t.kind) {
        case Target::Kind::D:
          row.empirical = tables[t.q][i].count_D(t.alpha);
          row.predicted = predicted_D(t.q, t.alpha, xd, bq[t.q].value);
          break;
        case Target::Kind::D0:
          row.empirical = tables[t.q][i].count_Dk(0, t.alpha);
          row.predicted = predicted_D0(t.q, t.alpha, xd, bq[t.q].value);
          break;
        case Target::Kind::Mnc:
          row.empirical = mnc_counts[i];
          row.predicted = predicted_mnc(xd, a_value.value, xi_value.value);
          break;
      }
      row.ratio = static_cast<double>(row.empirical) / row.predicted;
      rows.push_back(row);
    }
    per_target.push_back(std::move(rows));
  }
  VerifyReport report = convergence_report(per_target, options.band);
  report.constants = std::move(constants);
  return report;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "target,q,alpha,x,empirical,predicted,ratio\n";
  for (const auto& r : report.rows) {
    const bool mnc = r.target.kind == Target::Kind::Mnc;
    const char* kind = mnc ? "mnc" : (r.target.kind == Target::Kind::D ? "d" : "d0");
    out << kind << ',';
    if (!mnc) out << r.target.q;
    out << ',';
    if (!mnc) out << '"' << to_string(r.target.alpha) << '"';
    out << ',' << r.x << ',' << r.empirical << ',' << format_real(r.predicted) << ',' << format_real(r.ratio)
        << '\n';
  }
  return out.str();
}

std::string summary_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["band"] = format_real(report.band);
  j["xs"] = report.xs;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"target", v.target.label()},
                        {"verdict", v.pass ? "PASS" : "FAIL"},
                        {"final_ratio", format_real(v.final_ratio)},
                        {"final_deviation", format_real(v.final_deviation)},
                        {"within_band", v.within_band},
                        {"nonincreasing", v.nonincreasing}});
  }
  j["verdicts"] = verdicts;
  nlohmann::ordered_json constants = nlohmann::ordered_json::array();
  for (const auto& c : report.constants) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["q"] = c.q ? nlohmann::ordered_json(*c.q) : nlohmann::ordered_json(nullptr);
    rec["alpha"] = c.alpha ? nlohmann::ordered_json(to_string(*c.alpha)) : nlohmann::ordered_json(nullptr);
    rec["value"] = format_real(c.value.value);
    rec["err"] = format_real(c.value.err);
    rec["cutoff"] = c.cutoff;
    if (c.value.heuristic_tail > 0) rec["heuristic_tail"] = format_real(c.value.heuristic_tail);
    constants.push_back(rec);
  }
  j["constants"] = constants;
  j["overall"] = report.all_pass() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

u64 parse_count(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> u64 { throw std::invalid_argument("not an exact nonnegative integer: '" + s + "'"); };
  if (s.empty()) return fail();

  std::string mantissa = s;
  long exponent = 0;
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    if (s.substr(0, caret) != "10") return fail();
    mantissa = "1";
    const std::string e = s.substr(caret + 1);
    if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit)) return fail();
    exponent = std::stol(e);
  } else if (const auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string e = s.substr(epos + 1);
    if (!e.empty() && e[0] == '+') e.erase(0, 1);
    if (e.empty() || !std::all_of(e.begin(), e.end(), ::isdigit)) return fail();
    exponent = std::stol(e);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_dot) --exponent;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  while (exponent < 0) {
    if (digits.back() != '0') return fail();
    digits.pop_back();
    ++exponent;
    if (digits.empty()) digits = "0";
  }
  u64 v = 0;
  const u64 max = std::numeric_limits<u64>::max();
  for (char c : digits) {
    const u64 d = static_cast<u64>(c - '0');
    if (v > (max - d) / 10) return fail();
    v = v * 10 + d;
  }
  for (long i = 0; i < exponent; ++i) {
    if (v > max / 10) return fail();
    v *= 10;
  }
  return v;
}

std::vector<u64> parse_grid(std::string_view text) {
  std::vector<u64> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const u64 lo = parse_count(text.substr(0, dots));
    const u64 hi = parse_count(text.substr(dots + 2));
    if (lo == 0 || hi < lo) throw std::invalid_argument("grid range must satisfy 0 < lo <= hi");
    for (u64 x = lo; x <= hi; x *= 10) {
      out.push_back(x);
      if (x > hi / 10) break;
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (i > start) out.push_back(parse_count(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw std::invalid_argument("grid must be strictly increasing");
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

}  // namespace sylow
