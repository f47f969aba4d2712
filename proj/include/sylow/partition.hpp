#pragma once

// Integer partitions as labels of finite abelian q-groups.
//
// A partition (a_1 >= a_2 >= ... >= a_j >= 1) names the group
// Z_{q^a_1} x ... x Z_{q^a_j}; the empty partition names the trivial group.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylow {

using Rational = boost::multiprecision::cpp_rational;

class Partition {
 public:
  Partition() = default;

  /// Accepts parts in any order; stores them nonincreasing.  Throws on a part <= 0.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int sum() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  std::size_t multiplicity(int value) const;
  bool contains(int value) const { return multiplicity(value) > 0; }

  /// A copy with one occurrence of `value` removed.  Throws if absent.
  Partition without(int value) const;
  /// A copy with `value` inserted.
  Partition with(int value) const;

  /// Lexicographic order on the nonincreasing part sequence; [] sorts first.
  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Transpose of the Ferrers diagram: result[j-1] = #{k : p[k] >= j}.
Partition conjugate(const Partition& p);

/// C(alpha) = prod_u 1/(a_u - a_{u+1})! over the conjugate partition a,
/// i.e. 1/prod_j (multiplicity of j)!.
Rational c_alpha(const Partition& p);

/// E_q(alpha) = (q+1) / q^{1 + sum(alpha)}.  q must be an odd prime.
Rational e_q_alpha(std::uint64_t q, const Partition& p);

/// "[3,1]" form; "[]" for the empty partition.
std::string to_string(const Partition& p);

/// Inverse of to_string.  Whitespace around parts is tolerated.  Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

}  // namespace sylow
