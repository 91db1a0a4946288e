#include "kaclim/series.hpp"

#include <algorithm>
#include <map>

#include "kaclim/error.hpp"

namespace kaclim {

Poly Poly::monomial(int power, Int coeff) {
  Poly p;
  p.c.assign(power + 1, Int(0));
  p.c[power] = std::move(coeff);
  return p;
}

int Poly::degree() const {
  for (int i = int(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0) return i;
  return -1;
}

bool Poly::is_zero() const { return degree() < 0; }

void Poly::trim() { c.resize(degree() + 1); }

Poly Poly::operator+(const Poly& rhs) const {
  Poly out;
  out.c.assign(std::max(c.size(), rhs.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (size_t i = 0; i < rhs.c.size(); ++i) out.c[i] += rhs.c[i];
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  Poly out;
  out.c.assign(std::max(c.size(), rhs.c.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
  for (size_t i = 0; i < rhs.c.size(); ++i) out.c[i] -= rhs.c[i];
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero();
  Poly out;
  out.c.assign(c.size() + rhs.c.size() - 1, Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < rhs.c.size(); ++j)
      if (rhs.c[j] != 0) out.c[i + j] += c[i] * rhs.c[j];
  }
  out.trim();
  return out;
}

bool Poly::operator==(const Poly& rhs) const { return (*this - rhs).is_zero(); }

Poly Poly::times_one_minus(int k) const {
  Poly out;
  out.c.assign(c.size() + k, Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    out.c[i] += c[i];
    out.c[i + k] -= c[i];
  }
  out.trim();
  return out;
}

std::optional<Poly> Poly::divided_by_one_minus(int k) const {
  if (is_zero()) return zero();
  // Quotient coefficients satisfy q[i] = c[i] + q[i-k].
  int deg = degree();
  if (deg < k) return std::nullopt;
  Poly q;
  q.c.assign(deg - k + 1, Int(0));
  for (int i = 0; i <= deg; ++i) {
    Int v = (i < int(c.size())) ? c[i] : Int(0);
    if (i - k >= 0 && i - k < int(q.c.size())) v += q.c[i - k];
    if (i <= deg - k)
      q.c[i] = v;
    else if (v != 0)
      return std::nullopt;  // remainder
  }
  q.trim();
  return q;
}

PoincareSeries PoincareSeries::one_over(std::vector<int> factors) {
  std::sort(factors.begin(), factors.end());
  return {Poly::one(), std::move(factors)};
}

namespace {

// Multiset max of denominators; returns the numerator multipliers.
std::vector<int> merged_denominator(const std::vector<int>& a, const std::vector<int>& b,
                                    std::vector<int>* a_missing, std::vector<int>* b_missing) {
  std::map<int, int> ca, cb, cm;
  for (int k : a) ++ca[k];
  for (int k : b) ++cb[k];
  for (const auto& [k, c] : ca) cm[k] = std::max(cm[k], c);
  for (const auto& [k, c] : cb) cm[k] = std::max(cm[k], c);
  std::vector<int> merged;
  for (const auto& [k, c] : cm) {
    for (int i = 0; i < c; ++i) merged.push_back(k);
    for (int i = ca[k]; i < c; ++i) a_missing->push_back(k);
    for (int i = cb[k]; i < c; ++i) b_missing->push_back(k);
  }
  return merged;
}

}  // namespace

PoincareSeries PoincareSeries::operator+(const PoincareSeries& rhs) const {
  std::vector<int> a_missing, b_missing;
  PoincareSeries out;
  out.denom = merged_denominator(denom, rhs.denom, &a_missing, &b_missing);
  Poly lhs_num = num, rhs_num = rhs.num;
  for (int k : a_missing) lhs_num = lhs_num.times_one_minus(k);
  for (int k : b_missing) rhs_num = rhs_num.times_one_minus(k);
  out.num = lhs_num + rhs_num;
  return out;
}

PoincareSeries PoincareSeries::operator-() const {
  PoincareSeries out = *this;
  out.num = Poly::zero() - out.num;
  return out;
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& rhs) const { return *this + (-rhs); }

PoincareSeries PoincareSeries::shifted(int power) const {
  PoincareSeries out = *this;
  out.num = out.num * Poly::monomial(power);
  return out;
}

std::vector<Int> PoincareSeries::expand(int n) const {
  std::vector<Int> c(n + 1, Int(0));
  for (int i = 0; i <= n && i < int(num.c.size()); ++i) c[i] = num.c[i];
  for (int k : denom)
    for (int i = k; i <= n; ++i) c[i] += c[i - k];
  return c;
}

bool PoincareSeries::is_zero() const { return num.is_zero(); }

PoincareSeries PoincareSeries::canonical() const {
  PoincareSeries out = *this;
  if (out.num.is_zero()) return {Poly::zero(), {}};
  for (;;) {
    bool cancelled = false;
    for (size_t i = 0; i < out.denom.size(); ++i) {
      if (auto q = out.num.divided_by_one_minus(out.denom[i])) {
        out.num = std::move(*q);
        out.denom.erase(out.denom.begin() + i);
        cancelled = true;
        break;
      }
    }
    if (!cancelled) return out;
  }
}

std::string PoincareSeries::to_string() const {
  std::string n;
  int deg = num.degree();
  if (deg < 0) return "0";
  bool first = true;
  for (int i = 0; i <= deg; ++i) {
    const Int& v = num.c[i];
    if (v == 0) continue;
    std::string term;
    Int a = v > 0 ? v : Int(-v);
    if (i == 0)
      term = a.get_str();
    else {
      if (a != 1) term = a.get_str() + "*";
      term += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
    if (first)
      n = (v < 0 ? "-" : "") + term;
    else
      n += (v < 0 ? " - " : " + ") + term;
    first = false;
  }
  if (denom.empty()) return n;
  std::string d;
  std::map<int, int> counts;
  for (int k : denom) ++counts[k];
  for (const auto& [k, c] : counts) {
    std::string f = "(1-t^" + std::to_string(k) + ")";
    d += f;
    if (c > 1) d += "^" + std::to_string(c);
  }
  bool simple = num.c.size() == size_t(deg + 1) && [&] {
    int nonzero = 0;
    for (const Int& v : num.c) nonzero += (v != 0);
    return nonzero == 1;
  }();
  return (simple ? n : "(" + n + ")") + " / (" + d + ")";
}

PoincareSeries euler_characteristic_series(const FinitePoset& poset,
                                           const std::vector<PoincareSeries>& per_element) {
  if (int(per_element.size()) != poset.size())
    throw Error(ErrorCode::BadInput, "one series per poset element required");
  std::vector<long> weight(poset.size(), 0);
  auto chains = poset.chains();
  for (size_t p = 0; p < chains.size(); ++p)
    for (const auto& chain : chains[p]) weight[chain.front()] += (p % 2 == 0) ? 1 : -1;
  PoincareSeries out = PoincareSeries::zero();
  for (int i = 0; i < poset.size(); ++i) {
    if (weight[i] == 0) continue;
    PoincareSeries scaled = per_element[i];
    scaled.num = scaled.num * Poly{{Int(weight[i])}};
    out = out + scaled;
  }
  return out;
}

std::optional<std::vector<int>> greedy_denominator_fit(const std::vector<Int>& coeffs) {
  if (coeffs.empty() || coeffs[0] != 1) return std::nullopt;
  std::vector<Int> c = coeffs;
  int n = int(c.size()) - 1;
  std::vector<int> factors;
  for (;;) {
    int k = 0;
    for (int i = 1; i <= n; ++i)
      if (c[i] != 0) {
        k = i;
        break;
      }
    if (k == 0) break;
    if (c[k] < 0) return std::nullopt;
    factors.push_back(k);
    if (int(factors.size()) > n) return std::nullopt;
    for (int i = n; i >= k; --i) c[i] -= c[i - k];
  }
  return factors;
}

}  // namespace kaclim
