#ifndef KGROTH_PERMUTATION_HPP
#define KGROTH_PERMUTATION_HPP

#include <string>
#include <vector>

#include "kgroth/rational.hpp"

namespace kgroth {

// Arbitrary (possibly non-partition) integer index sequence.
using IntegerSequence = std::vector<int>;
// Weakly decreasing positive entries.
using Partition = std::vector<int>;

bool is_partition(const IntegerSequence& s);
int sequence_weight(const IntegerSequence& s);
// Shorter sequences first, then lexicographic; the global key order for
// expansion tables.
bool sequence_key_less(const IntegerSequence& a, const IntegerSequence& b);
// All partitions fitting in max_rows x max_cols (empty partition included),
// sorted by sequence_key_less.
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);
Partition conjugate_partition(const Partition& p);
std::string sequence_to_string(const IntegerSequence& s);
IntegerSequence parse_sequence(const std::string& text);

// Permutation of {1..n} in one-line notation, 1-based everywhere.
class Permutation {
public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation longest(int n);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;  // inversion count
  bool ascent_at(int i) const { return (*this)(i) < (*this)(i + 1); }
  std::vector<int> descents() const;

  // w * s_i: swap the entries in positions i and i+1.
  Permutation times_swap(int i) const;
  // 1^m x w: prepend m fixed points, shifting all values by m.
  Permutation shifted(int m) const;
  // Extend to S_n with fixed points on the right.
  Permutation padded(int n) const;
  Permutation inverse() const;

  // Lehmer code: c_i = #{j > i : w(j) < w(i)}.
  std::vector<int> code() const;

  bool operator==(const Permutation& o) const = default;

  std::string to_string() const;
  // Accepts "321" (digits, n <= 9) or "3,2,1".
  static Permutation from_string(const std::string& text);

private:
  std::vector<int> w_;
};

// Weakly decreasing Lehmer code; such permutations have a closed product
// formula for their Grothendieck polynomial.
bool is_dominant(const Permutation& w);
// The code with trailing zeros stripped; throws when w is not dominant.
Partition dominant_shape(const Permutation& w);

// At most one descent. When true and descent is non-null, *descent is the
// descent position (0 for the identity).
bool is_grassmannian(const Permutation& w, int* descent = nullptr);
// The unique permutation in S_(p + lambda_1) with descent only at p and
// w(i) = i + lambda_(p+1-i) for i <= p. Requires p >= number of parts.
Permutation grassmannian_perm(const Partition& lambda, int p);

// Reduced word s_1, s_2 s_1, ..., s_(p-1) ... s_1 for the longest element of
// S_p, as a flat list of positions.
std::vector<int> longest_element_word(int p);

}  // namespace kgroth

#endif
