#ifndef KGROTH_GEXPANSION_HPP
#define KGROTH_GEXPANSION_HPP

#include <map>
#include <string>

#include "kgroth/permutation.hpp"
#include "kgroth/rational.hpp"

namespace kgroth {

struct SequenceKeyLess {
  bool operator()(const IntegerSequence& a, const IntegerSequence& b) const {
    return sequence_key_less(a, b);
  }
};

// Strip trailing zeros; the G value of a sequence is unchanged by them.
IntegerSequence canonical_sequence(IntegerSequence s);

// Finite integer combination of G-basis elements keyed by integer sequences.
// Keys are canonicalized (trailing zeros stripped) and zero coefficients are
// never stored, so equality is plain map equality.
class GExpansion {
 public:
  using Map = std::map<IntegerSequence, Integer, SequenceKeyLess>;

  GExpansion() = default;

  void add(const IntegerSequence& key, const Integer& coeff);
  Integer coeff(const IntegerSequence& key) const;  // 0 when absent

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // True when every key is a partition (weakly decreasing, positive entries).
  bool all_partition_keys() const;

  GExpansion& operator+=(const GExpansion& o);
  GExpansion scaled(const Integer& c) const;
  friend bool operator==(const GExpansion& a, const GExpansion& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const GExpansion& a, const GExpansion& b) {
    return !(a == b);
  }

  // "G(1,1) + 2*G(2) - 2*G(2,1) - G(3) + G(3,1)"; the empty key prints as a
  // bare integer. A zero expansion prints "0".
  std::string to_text() const;

  // [{"index":[1,1],"coeff":1},...] in canonical key order.
  std::string to_json() const;

  // Terms grouped by total degree with the group sign factored out when the
  // group is sign-homogeneous, e.g. "G_{1,1}+2G_{2}-\left(2G_{2,1}+G_{3}\right)+G_{3,1}".
  std::string to_latex() const;

 private:
  Map entries_;
};

}  // namespace kgroth

#endif
