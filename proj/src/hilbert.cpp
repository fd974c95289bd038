#include "gindepth/hilbert.hpp"

#include <algorithm>

#include "gindepth/errors.hpp"

namespace gindepth {

namespace {

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::overflow, "integer polynomial coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::overflow, "integer polynomial coefficient overflow");
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::one() { return IntPoly({1}); }

IntPoly IntPoly::term(long long c, std::size_t k) {
  std::vector<long long> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

long long IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : 0;
}

long long IntPoly::at_one() const {
  long long s = 0;
  for (long long c : coeffs_) s = checked_add(s, c);
  return s;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (var.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += var;
    }
  }
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = checked_add(a.coeff(k), b.coeff(k));
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = checked_add(a.coeff(k), checked_mul(-1, b.coeff(k)));
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<long long> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_by_one_minus_t(const IntPoly& g) {
  // g = (1-t) h means h_k = g_k + h_{k-1}; the running sum must end at zero.
  std::vector<long long> h;
  long long acc = 0;
  for (long long c : g.coeffs()) {
    acc = checked_add(acc, c);
    h.push_back(acc);
  }
  if (acc != 0) return std::nullopt;
  if (!h.empty()) h.pop_back();  // final entry is the zero remainder
  return IntPoly(std::move(h));
}

IntPoly hilbert_numerator(const MonomialIdeal& j, PivotRule rule) {
  if (j.is_unit()) return IntPoly();
  const auto& gens = j.generators();
  std::size_t n = j.ambient();

  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 1; v <= n; ++v)
      if (g.exponent(v) > 0) ++count[v - 1];

  std::size_t pivot = 0;  // 1-based once found
  if (rule == PivotRule::most_frequent) {
    std::size_t best = 0;
    for (std::size_t v = 1; v <= n; ++v)
      if (count[v - 1] > best) best = count[v - 1], pivot = v;
    if (best < 2) pivot = 0;
  } else {
    for (std::size_t v = n; v >= 1; --v)
      if (count[v - 1] >= 2) {
        pivot = v;
        break;
      }
  }

  if (pivot == 0) {
    // Pairwise-coprime generators: the Koszul complex on them is exact.
    IntPoly g = IntPoly::one();
    for (const auto& gen : gens)
      g = g * (IntPoly::one() - IntPoly::term(1, gen.degree()));
    return g;
  }

  Monomial xv = Monomial::variable(n, pivot);
  return hilbert_numerator(add(j, xv), rule) +
         IntPoly::term(1, 1) * hilbert_numerator(colon(j, xv), rule);
}

HilbertSummary hilbert_summary(const MonomialIdeal& j) {
  HilbertSummary s;
  s.numerator = hilbert_numerator(j);
  s.ambient = j.ambient();
  if (s.numerator.is_zero()) {
    s.dimension = -1;
    s.degree = 0;
    return s;
  }
  IntPoly q = s.numerator;
  std::size_t divisions = 0;
  while (q.at_one() == 0) {
    auto next = divide_by_one_minus_t(q);
    if (!next || divisions == s.ambient)
      fail(ErrorKind::internal, "numerator reduction exceeded the ambient dimension");
    q = std::move(*next);
    ++divisions;
  }
  s.reduced = std::move(q);
  s.dimension = static_cast<int>(s.ambient - divisions);
  s.degree = s.reduced.at_one();
  return s;
}

std::vector<long long> hilbert_coefficients(const IntPoly& reduced,
                                            std::size_t count) {
  // Repeated synthetic division by (t - 1): q = c_0 + (t-1) q_1, and so on.
  std::vector<long long> out;
  std::vector<long long> cur = reduced.coeffs();
  for (std::size_t i = 0; i < count; ++i) {
    if (cur.empty()) {
      out.push_back(0);
      continue;
    }
    long long rem = 0;
    std::vector<long long> quot(cur.size() > 1 ? cur.size() - 1 : 0, 0);
    long long carry = 0;
    for (std::size_t k = cur.size(); k-- > 0;) {
      carry = checked_add(carry, cur[k]);
      if (k == 0)
        rem = carry;
      else
        quot[k - 1] = carry;
    }
    out.push_back(rem);
    cur = std::move(quot);
  }
  return out;
}

std::vector<long long> hilbert_function(const IntPoly& numerator,
                                        std::size_t ambient,
                                        std::uint32_t max_degree) {
  std::vector<long long> h(max_degree + 1, 0);
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = numerator.coeff(k);
  // Multiplying a power series by 1/(1-t) is a running prefix sum.
  for (std::size_t round = 0; round < ambient; ++round)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] = checked_add(h[k], h[k - 1]);
  return h;
}

RankResult rank_quotient(const MonomialIdeal& j, std::size_t r) {
  MonomialIdeal inner = big_pi(j, r);
  MonomialIdeal outer = bar_phi(j, r);
  IntPoly diff = hilbert_numerator(inner) - hilbert_numerator(outer);
  for (std::size_t i = 0; i < r; ++i) {
    auto next = divide_by_one_minus_t(diff);
    if (!next) return {false, 0};
    diff = std::move(*next);
  }
  for (long long c : diff.coeffs())
    if (c < 0) fail(ErrorKind::internal, "negative graded dimension in rank computation");
  return {true, diff.at_one()};
}

}  // namespace gindepth
