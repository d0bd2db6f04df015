#ifndef UMBRAL_COMBINATORICS_HPP
#define UMBRAL_COMBINATORICS_HPP

#include <umbral/poly.hpp>

#include <span>
#include <vector>

namespace umbral {

// Partition of a positive integer, parts weakly decreasing.
struct IntPartition {
  std::vector<int> parts;

  int sum() const;
  int length() const { return static_cast<int>(parts.size()); }
  // (part value, multiplicity) pairs, part values decreasing
  std::vector<std::pair<int, int>> multiplicities() const;
};

// All partitions of n in reverse-lexicographic order; n = 0 gives the single
// empty partition. Cached per n (cap configurable via UMBRACAL_MEMO_CAP).
const std::vector<IntPartition>& partitions(int n);

// n!/(r1! r2! ... (1!)^{r1} (2!)^{r2} ...): the number of set partitions of an
// n-set with block sizes given by lambda (n = lambda's sum).
Rational set_partition_count(const IntPartition& lambda);

// Exponential partial Bell polynomial B_{n,k}(a[0], ..., a[n-k]); the span
// holds a_1, a_2, ... in order.
Poly partial_bell(int n, int k, std::span<const Poly> a);

// Complete Bell polynomial Y_n = sum_k B_{n,k}; Y_0 = 1.
Poly complete_bell(int n, std::span<const Poly> a);

// Signed Stirling number of the first kind, (t)_n = sum_k s(n,k) t^k.
Rational stirling_first(int n, int k);

// Falling factorial (t)_n as an expanded polynomial in the given variable.
Poly lower_factorial(int n, const Poly& t);
Poly lower_factorial(int n); // in variable "t"

// Multi-index in N_0^d.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);
  static MultiIndex zero(int dim);
  static MultiIndex unit(int dim, int j);

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int j) const { return e_[j]; }
  int total() const; // |i|
  bool is_zero() const { return total() == 0; }
  const std::vector<int>& entries() const { return e_; }

  Rational factorial() const;                    // i! = prod i_j!
  static Rational binomial(const MultiIndex& i, const MultiIndex& k);

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const; // requires o <= *this
  bool leq(const MultiIndex& o) const;             // componentwise

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.e_ <=> b.e_; }

  std::string str() const;

private:
  std::vector<int> e_;
};

// all k with 0 <= k <= i componentwise, ascending lex
std::vector<MultiIndex> multi_indices_below(const MultiIndex& i);
// all i in N_0^d with 1 <= |i| <= max_total, ascending (total, lex)
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_total);

// Partition of a multi-index: a multiset of nonzero multi-indices (columns)
// summing to the target, distinct columns kept in ascending lex order.
struct MultiIndexPartition {
  std::vector<std::pair<MultiIndex, int>> columns; // (column, multiplicity)

  int length() const; // l(lambda) = total number of columns
  Rational multiplicity_factorial() const; // m(lambda)! = prod r_j!
  Rational column_factorial() const;       // lambda! = prod (col!)^{r_j}
};

// Complete, duplicate-free enumeration for |i| >= 1.
std::vector<MultiIndexPartition> multi_index_partitions(const MultiIndex& i);

} // namespace umbral

#endif
