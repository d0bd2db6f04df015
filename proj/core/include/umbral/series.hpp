#ifndef UMBRAL_SERIES_HPP
#define UMBRAL_SERIES_HPP

#include <umbral/poly.hpp>

#include <span>
#include <vector>

namespace umbral {

// Truncated exponential generating function: coefficients c_0..c_N where c_k
// multiplies z^k/k!. Coefficients are exact Polys, so every operation below
// is an identity of truncated series over the coefficient ring.
class Series {
public:
  explicit Series(int order);
  static Series constant(const Poly& c, int order);
  static Series one(int order) { return constant(Poly(1L), order); }
  static Series z(int order); // the identity series z

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& operator[](int k) const { return c_.at(k); }
  Poly& operator[](int k) { return c_.at(k); }
  std::span<const Poly> coefficients() const { return c_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const; // EGF product h_n = sum C(n,k) f_k g_{n-k}
  Series operator*(const Poly& c) const;

  // exp(f): requires f_0 = 0
  Series exp() const;
  // log(f): requires f_0 = 1; result has zero constant term
  Series log() const;
  // f^e = exp(e log f): requires f_0 = 1
  Series pow(const Poly& e) const;
  // integer power via repeated products (no constant-term restriction)
  Series ipow(int e) const;
  // f(g(z) - 1): requires g_0 = 1
  Series compose_shifted(const Series& g) const;
  // this / o: requires o_0 to be an invertible term
  Series divide(const Series& o) const;
  // coefficient-wise z -> c z (scale of the underlying umbra)
  Series dilate(const Poly& c) const;
  // d/dz, same order (top coefficient drops to 0)
  Series derivative() const;

  // Compositional reversion: for f with f_0 = 1 and f_1 an invertible term,
  // returns h with h_0 = 1 and f(h(z) - 1) = 1 + z up to the order.
  Series revert() const;

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
  std::vector<Poly> c_;
};

// Series with c_0 = 1 and c_k = moments[k]: the generating function of the
// umbra representing that moment sequence.
Series series_from_moments(std::span<const Poly> moments, int order);

} // namespace umbral

#endif
