#ifndef UMBRAL_MULTIVAR_HPP
#define UMBRAL_MULTIVAR_HPP

#include <umbral/combinatorics.hpp>
#include <umbral/tsh.hpp>
#include <umbral/umbra.hpp>

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace umbral {

// Truncated d-variate exponential generating function: sparse coefficients
// c_i of z^i/i!, kept for |i| <= order.
class MSeries {
public:
  MSeries(int dim, int order);
  static MSeries one(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const Poly& at(const MultiIndex& i) const; // zero if absent
  void set(const MultiIndex& i, Poly c);
  const std::map<MultiIndex, Poly>& coefficients() const { return c_; }

  MSeries operator+(const MSeries& o) const;
  MSeries operator-(const MSeries& o) const;
  MSeries operator*(const MSeries& o) const; // h_i = sum_{k<=i} binom(i,k) f_k g_{i-k}
  MSeries operator*(const Poly& c) const;
  MSeries exp() const;            // requires zero constant term
  MSeries log() const;            // requires constant term 1
  MSeries pow(const Poly& e) const; // requires constant term 1

  friend bool operator==(const MSeries& a, const MSeries& b)
  {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

private:
  int dim_, order_;
  std::map<MultiIndex, Poly> c_; // nonzero entries only
};

// d-tuple of umbral monomials identified with its joint moment sequence
// g_i (g_0 = 1), produced lazily and cached.
class MultiUmbra {
public:
  using MomentFn = std::function<Poly(const MultiIndex&)>;

  MultiUmbra(int dim, MomentFn fn, std::string name = {});
  static MultiUmbra from_moments(int dim, std::map<MultiIndex, Poly> moments,
                                 std::string name = {});

  int dim() const { return dim_; }
  const Poly& moment(const MultiIndex& i) const;
  MSeries egf(int order) const;
  // univariate umbra along coordinate j (all other indices zero)
  Umbra marginal(int j) const;
  const std::string& name() const { return name_; }

private:
  struct State;
  int dim_;
  std::shared_ptr<State> st_;
  std::string name_;
};

// Table-7 special d-tuples.
MultiUmbra unity_tuple(int dim);                 // e^{z_1+...+z_d}
MultiUmbra gaussian_tuple(int dim);              // 1 + z z^T/2
MultiUmbra bernoulli_tuple(int dim);             // (sum z)/(e^{sum z}-1)
MultiUmbra euler_tuple(int dim);                 // 2 e^{sum z}/(e^{2 sum z}+1)
MultiUmbra special_tuple(std::string_view name, int dim);

// fully correlated tuple (xi, ..., xi): g_i = E[xi^{|i|}]
MultiUmbra correlated_tuple(const Umbra& xi, int dim, std::string name = {});
// Gaussian tuple delta C^T with covariance Sigma = C C^T
MultiUmbra gaussian_covariance_tuple(const std::vector<std::vector<Poly>>& C);

MultiUmbra add(const MultiUmbra& a, const MultiUmbra& b);
MultiUmbra scale(const Poly& c, const MultiUmbra& a);
MultiUmbra disjoint_sum(const MultiUmbra& a, const MultiUmbra& b);

// dot-product e . mu via multi-index partitions:
// E[(e.mu)^i] = sum_{lambda |- i} i!/(m(lambda)! lambda!) (e)_{l(lambda)} g_lambda
MultiUmbra dot(const Poly& e, const MultiUmbra& mu);
// same partition sum with arbitrary weights L(k) replacing (e)_k; the
// partition-route oracle behind the cumulant/partition transforms
Poly dot_weighted_moment(const std::function<Poly(int)>& weight,
                         const MultiUmbra& mu, const MultiIndex& i);

// moment <-> cumulant transforms through the d-variate EGF (log/exp route)
MultiUmbra cumulants_multi(const MultiUmbra& mu);
MultiUmbra partition_multi(const MultiUmbra& mu);

struct MultiLevyTriplet {
  std::vector<Poly> drift;               // m, length d
  std::vector<std::vector<Poly>> c;      // C with Sigma = C C^T (may be empty)
  std::map<MultiIndex, Poly> jump_moments; // gamma; first-order entries vanish

  int dim() const { return static_cast<int>(drift.size()); }
  void validate() const;
  MultiUmbra cumulant_tuple() const; // chi.m +. delta C^T +. gamma
};

MultiUmbra levy_multi(const MultiLevyTriplet& triplet);

// multivariate TSH basis Q_i(x,t) = E[(x - t.mu)^i]
Poly q_poly_multi(const MultiUmbra& mu, const MultiIndex& i, const TshVars& vars = {});

// sum_{k<=i} binom(i,k) m_k(x + (t-s).mu) m_{i-k}(-t.mu) == Q_i(x,s)
CheckResult martingale_check_multi(const MultiUmbra& mu, const MultiIndex& i,
                                   const TshVars& vars = {});

// rebuild P(x,t) = sum_{k<=v} p_k(t) x^k from its t = 0 coefficients
Poly tsh_from_initial_multi(const MultiUmbra& mu,
                            const std::map<MultiIndex, Poly>& p0,
                            const MultiIndex& v, const TshVars& vars = {});
CheckResult tsh_check_multi(const MultiUmbra& mu, const Poly& P,
                            const MultiIndex& v, const TshVars& vars = {});

enum class MultiFamily { hermite, bernoulli, euler };
MultiFamily multi_family_from_name(std::string_view name);

// Table-8/9 processes and polynomials; sigma applies to hermite only.
MultiUmbra multi_family_process(MultiFamily f, int dim,
                                const std::vector<std::vector<Poly>>& c_matrix = {});
Poly family_multi(MultiFamily f, const MultiIndex& i,
                  const std::vector<std::vector<Poly>>& c_matrix = {},
                  const TshVars& vars = {});

// V_k(x,t) = E[(t.mu + (x_1+...+x_d).beta.nu)^k]
Poly levy_sheffer_multi(const MultiUmbra& mu, const MultiUmbra& nu,
                        const MultiIndex& k, const TshVars& vars = {});

// coordinate variables x1..xd of the multivariate polynomials
Variable multi_x(int j); // 1-based

} // namespace umbral

#endif
