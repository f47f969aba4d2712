#include "sylow/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "sylow/arith.hpp"

namespace sylow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::multiplicity(int value) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::without(int value) const {
  auto it = std::find(parts_.begin(), parts_.end(), value);
  if (it == parts_.end()) throw std::invalid_argument("partition does not contain the part to remove");
  Partition out;
  out.parts_ = parts_;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  return out;
}

Partition Partition::with(int value) const {
  std::vector<int> p = parts_;
  p.push_back(value);
  return Partition(std::move(p));
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.largest()));
  for (int j = 1; j <= p.largest(); ++j) {
    int count = 0;
    for (int v : p.parts()) {
      if (v >= j) ++count;
    }
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Rational c_alpha(const Partition& p) {
  const Partition a = conjugate(p);
  boost::multiprecision::cpp_int denom = 1;
  for (std::size_t u = 0; u < a.length(); ++u) {
    const int next = u + 1 < a.length() ? a[u + 1] : 0;
    for (int f = 2; f <= a[u] - next; ++f) denom *= f;
  }
  return Rational(1) / Rational(denom);
}

Rational e_q_alpha(std::uint64_t q, const Partition& p) {
  require_odd_prime(q);
  boost::multiprecision::cpp_int denom = boost::multiprecision::pow(boost::multiprecision::cpp_int(q),
                                                                   static_cast<unsigned>(1 + p.sum()));
  return Rational(boost::multiprecision::cpp_int(q + 1), denom);
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("partition must be written as [a,b,...]: " + std::string(text));
  }
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

}  // namespace sylow
