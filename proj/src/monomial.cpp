#include "gindepth/monomial.hpp"

namespace gindepth {

namespace {

constexpr std::uint64_t kExponentCap = 1u << 30;

void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient())
    fail(ErrorKind::dimension_mismatch,
         "monomials in different ambients: " + std::to_string(a.ambient()) +
             " vs " + std::to_string(b.ambient()));
}

}  // namespace

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  std::uint64_t d = 0;
  for (auto e : exps_) {
    if (e >= kExponentCap) fail(ErrorKind::overflow, "monomial exponent overflow");
    d += e;
  }
  if (d >= kExponentCap) fail(ErrorKind::overflow, "monomial degree overflow");
  degree_ = static_cast<std::uint32_t>(d);
}

Monomial Monomial::one(std::size_t ambient) {
  return Monomial(std::vector<std::uint32_t>(ambient, 0));
}

Monomial Monomial::variable(std::size_t ambient, std::size_t var) {
  return power(ambient, var, 1);
}

Monomial Monomial::power(std::size_t ambient, std::size_t var, std::uint32_t e) {
  if (var < 1 || var > ambient)
    fail(ErrorKind::dimension_mismatch,
         "variable index " + std::to_string(var) + " outside ambient " + std::to_string(ambient));
  std::vector<std::uint32_t> exps(ambient, 0);
  exps[var - 1] = e;
  return Monomial(std::move(exps));
}

std::uint32_t Monomial::exponent(std::size_t var) const {
  if (var < 1 || var > ambient())
    fail(ErrorKind::dimension_mismatch,
         "variable index " + std::to_string(var) + " outside ambient " + std::to_string(ambient()));
  return exps_[var - 1];
}

std::size_t Monomial::max_variable() const {
  for (std::size_t i = ambient(); i >= 1; --i)
    if (exps_[i - 1] > 0) return i;
  return 0;
}

bool Monomial::operator==(const Monomial& o) const {
  check_same_ambient(*this, o);
  return exps_ == o.exps_;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i >= 1; --i) {
    if (ea[i - 1] != eb[i - 1])
      return ea[i - 1] < eb[i - 1] ? 1 : -1;
  }
  return 0;
}

bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; }
bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; }

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  for (std::size_t i = 0; i < a.ambient(); ++i)
    if (a.exponents()[i] > b.exponents()[i]) return false;
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<std::uint32_t> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint64_t s = std::uint64_t(a.exponents()[i]) + b.exponents()[i];
    if (s >= kExponentCap) fail(ErrorKind::overflow, "monomial exponent overflow");
    e[i] = static_cast<std::uint32_t>(s);
  }
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b))
    fail(ErrorKind::contract, a.to_string() + " does not divide " + b.to_string());
  std::vector<std::uint32_t> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b.exponents()[i] - a.exponents()[i];
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<std::uint32_t> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  std::vector<std::uint32_t> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial colon_step(const Monomial& u, const Monomial& m) {
  return quotient(u, gcd(u, m));
}

bool coprime(const Monomial& a, const Monomial& b) {
  return gcd(a, b).is_one();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.push_back(Monomial(e));
      e[pos] = 0;
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[pos] = left - k;
      self(self, pos + 1, k);
    }
    e[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace gindepth
