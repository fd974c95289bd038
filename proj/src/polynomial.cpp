#include "gindepth/polynomial.hpp"

#include <algorithm>
#include <random>

namespace gindepth {

namespace {

constexpr int kSamplerAttempts = 64;
constexpr std::uint64_t kRationalWindow = 10000;

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.ambient() != b.ambient())
    fail(ErrorKind::dimension_mismatch,
         "polynomials in different ambients: " + std::to_string(a.ambient()) +
             " vs " + std::to_string(b.ambient()));
  if (!(a.field() == b.field()))
    fail(ErrorKind::field_mismatch, "polynomials over different fields");
}

// Window draw that avoids std::uniform_int_distribution, whose output is not
// pinned by the standard; raw engine output keeps runs reproducible anywhere.
Scalar sample_scalar(std::mt19937_64& gen, const Field& f) {
  if (f.is_rational())
    return Scalar::from_int(static_cast<long long>(gen() % kRationalWindow), f);
  return Scalar::from_int(static_cast<long long>(gen() % f.prime), f);
}

}  // namespace

Polynomial::Polynomial(std::size_t ambient, const Field& f)
    : ambient_(ambient), field_(f) {}

Polynomial::Polynomial(std::size_t ambient, const Field& f, std::vector<Term> terms)
    : ambient_(ambient), field_(f) {
  normalize(std::move(terms));
}

void Polynomial::normalize(std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.ambient() != ambient_)
      fail(ErrorKind::dimension_mismatch, "term ambient differs from polynomial ambient");
    if (!(t.coeff.field() == field_))
      fail(ErrorKind::field_mismatch, "term coefficient over a different field");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_greater(a.mono, b.mono);
  });
  terms_.clear();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff = terms_.back().coeff + t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

Polynomial Polynomial::constant(std::size_t ambient, const Scalar& c) {
  Polynomial p(ambient, c.field());
  if (!c.is_zero()) p.terms_.push_back({c, Monomial::one(ambient)});
  return p;
}

Polynomial Polynomial::term(const Scalar& c, const Monomial& m) {
  Polynomial p(m.ambient(), c.field());
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::variable(std::size_t ambient, std::size_t var, const Field& f) {
  return term(Scalar::one(f), Monomial::variable(ambient, var));
}

const Term& Polynomial::leading_term() const {
  if (is_zero()) fail(ErrorKind::contract, "leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::degree() const {
  if (is_zero()) fail(ErrorKind::contract, "degree of the zero polynomial");
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial out(ambient_, field_);
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end()) {
      out.terms_.push_back(*b++);
    } else {
      int cmp = grevlex_compare(a->mono, b->mono);
      if (cmp > 0) {
        out.terms_.push_back(*a++);
      } else if (cmp < 0) {
        out.terms_.push_back(*b++);
      } else {
        Scalar c = a->coeff + b->coeff;
        if (!c.is_zero()) out.terms_.push_back({c, a->mono});
        ++a;
        ++b;
      }
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ambient_, field_);
  Polynomial out(ambient_, field_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    out.terms_.push_back({t.coeff * c, mul(t.mono, m)});
  return out;  // multiplying by a fixed monomial preserves grevlex order
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  return times_term(c, Monomial::one(ambient_));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(*this, o);
  Polynomial out(ambient_, field_);
  for (const auto& t : o.terms_) out = out + times_term(t.coeff, t.mono);
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial out = constant(ambient_, Scalar::one(field_));
  for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::monic() const {
  return scaled(leading_coefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_compatible(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string cs = t.coeff.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string piece;
    if (t.mono.is_one())
      piece = mag;
    else if (mag == "1")
      piece = t.mono.to_string();
    else
      piece = mag + "*" + t.mono.to_string();
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

LinearForm::LinearForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    fail(ErrorKind::dimension_mismatch, "linear form needs at least one variable");
  for (const auto& c : coeffs_)
    if (!(c.field() == coeffs_.front().field()))
      fail(ErrorKind::field_mismatch, "linear form coefficients over different fields");
  bool all_zero = true;
  for (const auto& c : coeffs_) all_zero = all_zero && c.is_zero();
  if (all_zero) fail(ErrorKind::contract, "zero linear form");
}

const Scalar& LinearForm::coefficient(std::size_t var) const {
  if (var < 1 || var > coeffs_.size())
    fail(ErrorKind::dimension_mismatch, "linear form coefficient index out of range");
  return coeffs_[var - 1];
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      terms.push_back({coeffs_[i], Monomial::variable(coeffs_.size(), i + 1)});
  return Polynomial(coeffs_.size(), field(), std::move(terms));
}

std::string LinearForm::to_string() const { return to_polynomial().to_string(); }

LinearChange::LinearChange(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols())
    fail(ErrorKind::dimension_mismatch, "coordinate change must be square");
  if (determinant(matrix_).is_zero())
    fail(ErrorKind::singular_matrix, "coordinate change is singular");
}

LinearChange LinearChange::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return LinearChange(std::move(m));
}

LinearChange LinearChange::random(std::size_t n, std::uint64_t seed, const Field& f) {
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kSamplerAttempts; ++attempt) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = sample_scalar(gen, f);
    if (!determinant(m).is_zero()) {
      LinearChange a(std::move(m));
      a.seed_ = seed;
      return a;
    }
  }
  fail(ErrorKind::degenerate_sampler, "degenerate sampler: no invertible draw");
}

LinearChange LinearChange::inverted() const {
  auto inv = inverse(matrix_);
  if (!inv) fail(ErrorKind::internal, "invertible matrix failed to invert");
  LinearChange a(std::move(*inv));
  a.seed_ = std::nullopt;
  return a;
}

Polynomial apply_change(const Polynomial& f, const LinearChange& a) {
  if (f.ambient() != a.ambient())
    fail(ErrorKind::dimension_mismatch, "coordinate change ambient differs from polynomial");
  if (!(f.field() == a.field()))
    fail(ErrorKind::field_mismatch, "coordinate change over a different field");
  std::size_t n = f.ambient();
  std::vector<Polynomial> image;
  image.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
      if (!a.matrix().at(i, j).is_zero())
        terms.push_back({a.matrix().at(i, j), Monomial::variable(n, i + 1)});
    image.emplace_back(n, f.field(), std::move(terms));
  }
  // Powers of each variable image, grown on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto image_power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, Scalar::one(f.field())));
    while (cache.size() <= e) cache.push_back(cache.back() * image[j]);
    return cache[e];
  };
  Polynomial out(n, f.field());
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(n, t.coeff);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t e = t.mono.exponents()[j];
      if (e > 0) prod = prod * image_power(j, e);
    }
    out = out + prod;
  }
  return out;
}

Polynomial project_pi(const Polynomial& f, const LinearForm& l) {
  std::size_t n = f.ambient();
  if (n == 0) fail(ErrorKind::dimension_mismatch, "projection from the empty ring");
  if (l.ambient() != n)
    fail(ErrorKind::dimension_mismatch, "linear form ambient differs from polynomial");
  if (!(l.field() == f.field()))
    fail(ErrorKind::field_mismatch, "linear form over a different field");
  const Scalar& cn = l.coefficient(n);
  if (cn.is_zero())
    fail(ErrorKind::projection_undefined,
         "projection undefined: coefficient of x" + std::to_string(n) + " vanishes");
  // x_n maps to -(c1 x1 + ... + c_{n-1} x_{n-1}) / c_n in k[x1..x_{n-1}].
  std::vector<Term> lterms;
  for (std::size_t i = 1; i < n; ++i) {
    Scalar c = -(l.coefficient(i) / cn);
    if (!c.is_zero()) lterms.push_back({c, Monomial::variable(n - 1, i)});
  }
  Polynomial subst(n - 1, f.field(), std::move(lterms));
  std::vector<Polynomial> substPow = {
      Polynomial::constant(n - 1, Scalar::one(f.field()))};
  Polynomial out(n - 1, f.field());
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono.exponents()[n - 1];
    while (substPow.size() <= e) substPow.push_back(substPow.back() * subst);
    std::vector<std::uint32_t> head(t.mono.exponents().begin(),
                                    t.mono.exponents().end() - 1);
    out = out + substPow[e].times_term(t.coeff, Monomial(std::move(head)));
  }
  return out;
}

Polynomial project_chain(const Polynomial& f, const std::vector<LinearForm>& forms) {
  Polynomial cur = f;
  std::vector<Polynomial> pending;
  pending.reserve(forms.size());
  for (const auto& l : forms) {
    if (l.ambient() != f.ambient())
      fail(ErrorKind::dimension_mismatch, "chain forms must live in the original ring");
    pending.push_back(l.to_polynomial());
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    auto lf = as_linear_form(pending[i]);
    if (!lf || lf->coefficient(cur.ambient()).is_zero())
      fail(ErrorKind::projection_undefined,
           "projection chain undefined at stage " + std::to_string(i + 1));
    cur = project_pi(cur, *lf);
    for (std::size_t j = i + 1; j < pending.size(); ++j)
      pending[j] = project_pi(pending[j], *lf);
  }
  return cur;
}

LinearForm random_linear_form(std::size_t n, std::uint64_t seed, const Field& f) {
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kSamplerAttempts; ++attempt) {
    std::vector<Scalar> coeffs;
    coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(sample_scalar(gen, f));
    bool all_zero = true;
    for (const auto& c : coeffs) all_zero = all_zero && c.is_zero();
    if (!all_zero) return LinearForm(std::move(coeffs));
  }
  fail(ErrorKind::degenerate_sampler, "degenerate sampler: no nonzero form");
}

std::optional<LinearForm> as_linear_form(const Polynomial& f) {
  if (f.is_zero() || f.degree() != 1 || !f.is_homogeneous()) return std::nullopt;
  std::vector<Scalar> coeffs(f.ambient(), Scalar::zero(f.field()));
  for (const auto& t : f.terms())
    coeffs[t.mono.max_variable() - 1] = t.coeff;
  return LinearForm(std::move(coeffs));
}

}  // namespace gindepth
