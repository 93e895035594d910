#include "nsarith/exponent.hpp"

#include "nsarith/errors.hpp"

namespace nsarith {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > Exponent::kMaxDim) throw PreconditionError("dimension must be 1 or 2");
}

void check_same(const Exponent& a, const Exponent& b) {
  if (a.dim() != b.dim()) throw InvariantViolation("exponent dimensions differ");
}

}  // namespace

Exponent::Exponent(int dim) : dim_(dim) { check_dim(dim); }

Exponent::Exponent(std::initializer_list<Rational> components) : dim_(static_cast<int>(components.size())) {
  check_dim(dim_);
  std::size_t i = 0;
  for (const auto& q : components) c_[i++] = q;
}

Exponent Exponent::unit(int dim) {
  Exponent e(dim);
  e.c_[0] = 1;
  return e;
}

int Exponent::sign() const {
  for (int i = 0; i < dim_; ++i) {
    const int s = sgn(c_[static_cast<std::size_t>(i)]);
    if (s != 0) return s;
  }
  return 0;
}

int Exponent::rank() const {
  for (int i = 0; i < dim_; ++i)
    if (sgn(c_[static_cast<std::size_t>(i)]) != 0) return i;
  return dim_;
}

Exponent Exponent::operator+(const Exponent& o) const {
  check_same(*this, o);
  Exponent r(dim_);
  for (std::size_t i = 0; i < kMaxDim; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  check_same(*this, o);
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
  return *this;
}

Exponent Exponent::operator-(const Exponent& o) const {
  check_same(*this, o);
  Exponent r(dim_);
  for (std::size_t i = 0; i < kMaxDim; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Exponent Exponent::operator-() const {
  Exponent r(dim_);
  for (std::size_t i = 0; i < kMaxDim; ++i) r.c_[i] = -c_[i];
  return r;
}

Exponent Exponent::scaled(const Rational& s) const {
  Exponent r(dim_);
  for (std::size_t i = 0; i < kMaxDim; ++i) r.c_[i] = c_[i] * s;
  return r;
}

int compare(const Exponent& a, const Exponent& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < Exponent::kMaxDim; ++i) {
    const int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool archimedean_dominated(const Exponent& v, const Exponent& w) {
  check_same(v, w);
  if (v.is_zero()) return true;
  return v.rank() > w.rank();
}

bool archimedean_equivalent(const Exponent& v, const Exponent& w) {
  check_same(v, w);
  return v.rank() == w.rank();
}

std::string to_string(const Exponent& e) {
  if (e.dim() == 1) return to_string(e[0]);
  std::string s = "(";
  for (int i = 0; i < e.dim(); ++i) {
    if (i) s += ',';
    s += to_string(e[i]);
  }
  return s + ")";
}

}  // namespace nsarith
