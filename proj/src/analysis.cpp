#include "nsarith/analysis.hpp"

#include "nsarith/equiv.hpp"
#include "nsarith/errors.hpp"

namespace nsarith::analysis {

namespace {

void require_nonstandard(const Element& a) {
  if (a.is_standard()) throw StandardInput();
}

unsigned long two_to(std::size_t n) {
  if (n >= 63) throw PreconditionError("sequence index too large");
  return 1UL << n;
}

// x^K <= a, settled by degree unless the degrees tie.
bool power_at_most(const Element& x, unsigned long K, const Element& a) {
  if (x.is_zero()) return true;
  if (!a.is_zero()) {
    const int c = compare(x.deg()->scaled(Rational(K)), *a.deg());
    if (c != 0) return c < 0;
  }
  return pow(x, K) <= a;
}

bool divides(const Element& a, const Element& b, const ModelConfig& cfg) {
  try {
    return divmod(b, a, cfg).remainder.is_zero();
  } catch (const NonTerminatingQuotient&) {
    // An exact quotient is found after as many steps as it has terms.
    return false;
  }
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::Up ? "up" : "down"; }

Direction parse_direction(std::string_view text) {
  if (text == "up") return Direction::Up;
  if (text == "down") return Direction::Down;
  throw PreconditionError("direction must be up or down");
}

ClassSequence e0_seq(const Element& a, std::size_t k, Direction dir) {
  require_nonstandard(a);
  ClassSequence seq{dir, 0, {}};
  for (std::size_t i = 0; i < k; ++i) {
    const Integer step(static_cast<unsigned long>(i));
    seq.terms.push_back(add_integer(a, dir == Direction::Up ? step : Integer(-step)));
  }
  return seq;
}

ClassSequence e2_seq(const Element& a, std::size_t k, Direction dir) {
  require_nonstandard(a);
  ClassSequence seq{dir, 2, {}};
  for (std::size_t i = 0; i < k; ++i) {
    const Integer n(static_cast<unsigned long>(i + 1));
    if (dir == Direction::Up) {
      seq.terms.push_back(a * Element::constant(n, a.dim()));
    } else {
      const ScalarDivision d = divmod_scalar(a, n);
      seq.terms.push_back(d.remainder == 0 ? d.quotient : add_integer(d.quotient, 1));
    }
  }
  return seq;
}

bool b11_up_predicate(const Element& a, const Element& b, unsigned long K, const ModelConfig& cfg) {
  if (!divides(a, b, cfg)) return false;
  return power_at_most(floor_quotient(b, a, cfg), K, a);
}

bool b11_down_predicate(const Element& a, const Element& b, unsigned long K, const ModelConfig& cfg) {
  if (b.is_zero()) return false;
  return power_at_most(floor_quotient(a, b, cfg), K, a);
}

ClassSequence b11_seq(const Element& a, std::size_t k, Direction dir, const ModelConfig& cfg) {
  require_nonstandard(a);
  ClassSequence seq{dir, 3, {}};
  const Element one = Element::one(a.dim());
  for (std::size_t n = 1; n <= k; ++n) {
    const Element m = root_floor(a, two_to(n), cfg);
    if (dir == Direction::Up)
      seq.terms.push_back(a * m);
    else
      seq.terms.push_back(floor_quotient(a, m + one, cfg) + one);
  }
  return seq;
}

bool b11_certify(const ClassSequence& seq, std::size_t i, const Element& a, const ModelConfig& cfg) {
  const unsigned long K = two_to(i + 1);
  const Element& T = seq.terms.at(i);
  if (equiv::decide(3, a, T, cfg).equivalent) return false;
  if (seq.direction == Direction::Up) {
    if (!(a < T)) return false;
    return b11_up_predicate(a, T, K, cfg) && !b11_up_predicate(a, add_integer(T, -1), K, cfg) &&
           !b11_up_predicate(a, add_integer(T, 1), K, cfg) && !b11_up_predicate(a, T + a, K, cfg);
  }
  if (!(T < a)) return false;
  return b11_down_predicate(a, T, K, cfg) && !b11_down_predicate(a, add_integer(T, -1), K, cfg);
}

std::size_t passing_index(const ClassSequence& seq, const Element& a, const Element& b, const ModelConfig& cfg) {
  if (seq.level != 0 && seq.level != 2) throw PreconditionError("passing index is defined for e0 and e2 sequences");
  const Integer n = equiv::minimal_bound_n(seq.level, a, b, cfg);
  // a+n > b, a-n < b (E0); n*a > b (E2 up, index n-1); a/(n+1) < b (E2 down).
  const Integer idx = (seq.level == 2 && seq.direction == Direction::Up) ? Integer(n - 1) : n;
  return idx.get_ui();
}

bool passes(const ClassSequence& seq, std::size_t i, const Element& b) {
  if (i >= seq.terms.size()) return false;
  return seq.direction == Direction::Up ? b < seq.terms[i] : seq.terms[i] < b;
}

bool is_monotone(const ClassSequence& seq) {
  for (std::size_t i = 1; i < seq.terms.size(); ++i) {
    const bool up = seq.terms[i - 1] < seq.terms[i];
    // b11 up terms approach the class from above.
    const bool want_up = (seq.direction == Direction::Up) != (seq.level == 3);
    if (up != want_up || seq.terms[i - 1] == seq.terms[i]) return false;
  }
  return true;
}

Embedding real_embed(const Element& a, const Element& b, const ModelConfig& cfg) {
  if (!equiv::decide(4, a, b, cfg).equivalent) throw NotEquivalent(4);
  const Exponent db = *b.deg();
  if (b.dim() == 1) return {db[0], false};
  if (sgn(db[0]) > 0) return {db[0], false};
  return {db[1], true};
}

}  // namespace nsarith::analysis
