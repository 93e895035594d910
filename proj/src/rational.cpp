#include "nsarith/rational.hpp"

#include <stdexcept>

namespace nsarith {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits(num, true) || !digits(den, false)) throw bad();
  std::string num_s(num);
  if (num_s[0] == '+') num_s.erase(0, 1);
  Integer n(num_s, 10);
  Integer d{std::string(den), 10};
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

Integer floor_mod(const Integer& n, const Integer& d) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

namespace {

std::optional<Integer> exact_int_root(const Integer& z, unsigned long k) {
  if (z < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_int_root(Integer(-z), k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
  if (k == 0) throw std::invalid_argument("zeroth root");
  auto num = exact_int_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = exact_int_root(q.get_den(), k);
  if (!den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

}  // namespace nsarith
