#include <umbral/combinatorics.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace umbral {

int IntPartition::sum() const
{
  int s = 0;
  for (int p : parts)
    s += p;
  return s;
}

std::vector<std::pair<int, int>> IntPartition::multiplicities() const
{
  std::vector<std::pair<int, int>> m;
  for (int p : parts) {
    if (!m.empty() && m.back().first == p)
      ++m.back().second;
    else
      m.emplace_back(p, 1);
  }
  return m;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& prefix,
                    std::vector<IntPartition>& out)
{
  if (n == 0) {
    out.push_back(IntPartition{prefix});
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<IntPartition> make_partitions(int n)
{
  std::vector<IntPartition> out;
  std::vector<int> prefix;
  gen_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

int memo_cap()
{
  static int cap = [] {
    if (const char* env = std::getenv("UMBRACAL_MEMO_CAP"))
      return std::max(0, std::atoi(env));
    return 64;
  }();
  return cap;
}

} // namespace

const std::vector<IntPartition>& partitions(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions: negative n");
  if (n > memo_cap()) {
    // over the cap: computed per call into thread-local scratch; the
    // reference stays valid until the next over-cap query on this thread
    thread_local std::pair<int, std::vector<IntPartition>> scratch{-1, {}};
    if (scratch.first != n)
      scratch = {n, make_partitions(n)};
    return scratch.second;
  }
  static std::mutex mu;
  static std::map<int, std::vector<IntPartition>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, make_partitions(n)).first;
  return it->second;
}

Rational set_partition_count(const IntPartition& lambda)
{
  Rational d = factorial(static_cast<unsigned>(lambda.sum()));
  for (const auto& [part, r] : lambda.multiplicities()) {
    d /= factorial(static_cast<unsigned>(r));
    d /= umbral::pow(factorial(static_cast<unsigned>(part)), static_cast<unsigned>(r));
  }
  return d;
}

Poly partial_bell(int n, int k, std::span<const Poly> a)
{
  if (k < 1 || k > n)
    throw std::invalid_argument("partial_bell: k out of range");
  if (static_cast<int>(a.size()) < n - k + 1)
    throw std::invalid_argument("partial_bell: too few arguments");
  Poly sum;
  for (const auto& lambda : partitions(n)) {
    if (lambda.length() != k)
      continue;
    Poly prod(set_partition_count(lambda));
    for (int part : lambda.parts)
      prod *= a[part - 1];
    sum += prod;
  }
  return sum;
}

Poly complete_bell(int n, std::span<const Poly> a)
{
  if (n == 0)
    return Poly(1L);
  if (static_cast<int>(a.size()) < n)
    throw std::invalid_argument("complete_bell: too few arguments");
  Poly sum;
  for (int k = 1; k <= n; ++k)
    sum += partial_bell(n, k, a);
  return sum;
}

Rational stirling_first(int n, int k)
{
  if (n < 0 || k < 0)
    throw std::invalid_argument("stirling_first: negative index");
  if (k > n)
    return Rational(0);
  auto extend = [](std::vector<std::vector<Rational>>& t, int upto) {
    while (static_cast<int>(t.size()) <= upto) {
      int m = static_cast<int>(t.size()); // building row m from row m-1
      const auto& prev = t.back();
      std::vector<Rational> row(m + 1, Rational(0));
      for (int j = 1; j <= m; ++j) {
        row[j] = prev[j - 1];
        if (j < m)
          row[j] -= Rational(m - 1) * prev[j];
      }
      t.push_back(std::move(row));
    }
  };
  static std::mutex mu;
  static std::vector<std::vector<Rational>> table{{Rational(1)}}; // s(0,0)=1
  std::lock_guard lock(mu);
  extend(table, std::min(n, memo_cap()));
  if (n < static_cast<int>(table.size()))
    return table[n][k];
  // over the cap: finish the rows locally without retaining them
  std::vector<std::vector<Rational>> local = table;
  extend(local, n);
  return local[n][k];
}

Poly lower_factorial(int n, const Poly& t)
{
  if (n < 0)
    throw std::invalid_argument("lower_factorial: negative n");
  Poly r(1L);
  for (int j = 0; j < n; ++j)
    r *= t - Poly(static_cast<long>(j));
  return r;
}

Poly lower_factorial(int n)
{
  return lower_factorial(n, Poly::var("t"));
}

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e))
{
  for (int x : e_)
    if (x < 0)
      throw std::invalid_argument("MultiIndex: negative entry");
}

MultiIndex MultiIndex::zero(int dim)
{
  return MultiIndex(std::vector<int>(dim, 0));
}

MultiIndex MultiIndex::unit(int dim, int j)
{
  std::vector<int> e(dim, 0);
  e.at(j) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total() const
{
  int s = 0;
  for (int x : e_)
    s += x;
  return s;
}

Rational MultiIndex::factorial() const
{
  Rational f(1);
  for (int x : e_)
    f *= umbral::factorial(static_cast<unsigned>(x));
  return f;
}

Rational MultiIndex::binomial(const MultiIndex& i, const MultiIndex& k)
{
  if (i.dim() != k.dim())
    throw std::invalid_argument("MultiIndex::binomial: dimension mismatch");
  Rational b(1);
  for (int j = 0; j < i.dim(); ++j)
    b *= umbral::binomial(static_cast<unsigned>(i[j]), static_cast<unsigned>(k[j]));
  return b;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
  if (dim() != o.dim())
    throw std::invalid_argument("MultiIndex::+: dimension mismatch");
  std::vector<int> e(e_);
  for (int j = 0; j < o.dim(); ++j)
    e[j] += o[j];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
  if (dim() != o.dim())
    throw std::invalid_argument("MultiIndex::-: dimension mismatch");
  std::vector<int> e(e_);
  for (int j = 0; j < o.dim(); ++j) {
    e[j] -= o[j];
    if (e[j] < 0)
      throw std::invalid_argument("MultiIndex::-: would go negative");
  }
  return MultiIndex(std::move(e));
}

bool MultiIndex::leq(const MultiIndex& o) const
{
  if (dim() != o.dim())
    return false;
  for (int j = 0; j < dim(); ++j)
    if (e_[j] > o[j])
      return false;
  return true;
}

std::string MultiIndex::str() const
{
  std::ostringstream os;
  os << "(";
  for (int j = 0; j < dim(); ++j)
    os << (j ? "," : "") << e_[j];
  os << ")";
  return os.str();
}

namespace {

void gen_below(const MultiIndex& i, int pos, std::vector<int>& cur,
               std::vector<MultiIndex>& out)
{
  if (pos == i.dim()) {
    out.push_back(MultiIndex(cur));
    return;
  }
  for (int v = 0; v <= i[pos]; ++v) {
    cur.push_back(v);
    gen_below(i, pos + 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<MultiIndex> multi_indices_below(const MultiIndex& i)
{
  std::vector<MultiIndex> out;
  std::vector<int> cur;
  gen_below(i, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_total)
{
  std::vector<MultiIndex> out;
  std::vector<int> cur(dim, 0);
  // odometer over the box [0, max_total]^d, then filter by total
  while (true) {
    MultiIndex m{std::vector<int>(cur)};
    int t = m.total();
    if (t >= 1 && t <= max_total)
      out.push_back(std::move(m));
    int j = dim - 1;
    while (j >= 0 && cur[j] == max_total) {
      cur[j] = 0;
      --j;
    }
    if (j < 0)
      break;
    ++cur[j];
  }
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.total() != b.total())
      return a.total() < b.total();
    return a < b;
  });
  return out;
}

int MultiIndexPartition::length() const
{
  int l = 0;
  for (const auto& [c, r] : columns)
    l += r;
  return l;
}

Rational MultiIndexPartition::multiplicity_factorial() const
{
  Rational f(1);
  for (const auto& [c, r] : columns)
    f *= factorial(static_cast<unsigned>(r));
  return f;
}

Rational MultiIndexPartition::column_factorial() const
{
  Rational f(1);
  for (const auto& [c, r] : columns)
    f *= umbral::pow(c.factorial(), static_cast<unsigned>(r));
  return f;
}

namespace {

void gen_mpartitions(const MultiIndex& remaining, const MultiIndex& max_col,
                     std::vector<MultiIndex>& cols,
                     std::vector<MultiIndexPartition>& out)
{
  if (remaining.is_zero()) {
    MultiIndexPartition p;
    // cols were generated in weakly decreasing lex order
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
      if (!p.columns.empty() && p.columns.back().first == *it)
        ++p.columns.back().second;
      else
        p.columns.emplace_back(*it, 1);
    }
    out.push_back(std::move(p));
    return;
  }
  auto candidates = multi_indices_below(remaining);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    if (it->is_zero())
      continue;
    if (max_col < *it)
      continue;
    cols.push_back(*it);
    gen_mpartitions(remaining - *it, *it, cols, out);
    cols.pop_back();
  }
}

} // namespace

std::vector<MultiIndexPartition> multi_index_partitions(const MultiIndex& i)
{
  if (i.total() < 1)
    throw std::invalid_argument("multi_index_partitions: |i| must be >= 1");
  std::vector<MultiIndexPartition> out;
  std::vector<MultiIndex> cols;
  gen_mpartitions(i, i, cols, out);
  return out;
}

} // namespace umbral
