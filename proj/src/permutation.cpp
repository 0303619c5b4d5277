#include "kgroth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kgroth {

bool is_partition(const IntegerSequence& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) return false;
    if (i > 0 && s[i] > s[i - 1]) return false;
  }
  return true;
}

int sequence_weight(const IntegerSequence& s) {
  return std::accumulate(s.begin(), s.end(), 0);
}

bool sequence_key_less(const IntegerSequence& a, const IntegerSequence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int part = max_part; part >= 1; --part) {
      cur.push_back(part);
      self(self, part);
      cur.pop_back();
    }
  };
  rec(rec, max_cols);
  std::sort(out.begin(), out.end(), sequence_key_less);
  return out;
}

Partition conjugate_partition(const Partition& p) {
  if (!is_partition(p)) throw Error("conjugate_partition: not a partition");
  Partition out;
  for (int i = 1; p.empty() ? false : i <= p.front(); ++i) {
    int count = 0;
    for (int part : p) {
      if (part >= i) ++count;
    }
    out.push_back(count);
  }
  return out;
}

std::string sequence_to_string(const IntegerSequence& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ",";
    out << s[i];
  }
  return out.str();
}

IntegerSequence parse_sequence(const std::string& text) {
  IntegerSequence out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw Error("parse_sequence: bad entry '" + piece + "'");
    }
    if (used != piece.size()) throw Error("parse_sequence: bad entry '" + piece + "'");
    out.push_back(value);
  }
  if (text.back() == ',') throw Error("parse_sequence: trailing comma");
  return out;
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size(), false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<size_t>(v - 1)]) {
      throw Error("Permutation: not a permutation of 1..n");
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < w_.size(); ++i)
    for (size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if (!ascent_at(i)) out.push_back(i);
  return out;
}

Permutation Permutation::times_swap(int i) const {
  if (i < 1 || i >= size()) throw Error("times_swap: position out of range");
  std::vector<int> w = w_;
  std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
  return Permutation(std::move(w));
}

Permutation Permutation::shifted(int m) const {
  std::vector<int> w(static_cast<size_t>(m));
  std::iota(w.begin(), w.end(), 1);
  for (int v : w_) w.push_back(v + m);
  return Permutation(std::move(w));
}

Permutation Permutation::padded(int n) const {
  if (n < size()) throw Error("padded: target smaller than current size");
  std::vector<int> w = w_;
  for (int v = size() + 1; v <= n; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(w_.size());
  for (int i = 1; i <= size(); ++i) w[static_cast<size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(w));
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(w_.size(), 0);
  for (size_t i = 0; i < w_.size(); ++i)
    for (size_t j = i + 1; j < w_.size(); ++j)
      if (w_[j] < w_[i]) ++c[i];
  return c;
}

std::string Permutation::to_string() const {
  if (size() <= 9) {
    std::string out;
    for (int v : w_) out += static_cast<char>('0' + v);
    return out;
  }
  return sequence_to_string(w_);
}

Permutation Permutation::from_string(const std::string& text) {
  if (text.empty()) throw Error("Permutation: empty string");
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    for (int v : parse_sequence(text)) w.push_back(v);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error("Permutation: expected digits 1-9 or comma form");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

bool is_dominant(const Permutation& w) {
  auto c = w.code();
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] > c[i - 1]) return false;
  return true;
}

Partition dominant_shape(const Permutation& w) {
  if (!is_dominant(w)) throw Error("dominant_shape: permutation is not dominant");
  auto c = w.code();
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

bool is_grassmannian(const Permutation& w, int* descent) {
  auto d = w.descents();
  if (d.size() > 1) return false;
  if (descent) *descent = d.empty() ? 0 : d.front();
  return true;
}

Permutation grassmannian_perm(const Partition& lambda, int p) {
  if (!is_partition(lambda)) throw Error("grassmannian_perm: not a partition");
  if (static_cast<int>(lambda.size()) > p) {
    throw Error("grassmannian_perm: descent position smaller than number of parts");
  }
  const int cols = lambda.empty() ? 0 : lambda.front();
  const int n = p + cols;
  std::vector<int> w;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  for (int i = 1; i <= p; ++i) {
    int part = p - i < static_cast<int>(lambda.size()) ? lambda[static_cast<size_t>(p - i)] : 0;
    w.push_back(i + part);
    used[static_cast<size_t>(i + part)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<size_t>(v)]) w.push_back(v);
  }
  return Permutation(std::move(w));
}

std::vector<int> longest_element_word(int p) {
  std::vector<int> word;
  for (int a = 2; a <= p; ++a)
    for (int i = a - 1; i >= 1; --i) word.push_back(i);
  return word;
}

}  // namespace kgroth
