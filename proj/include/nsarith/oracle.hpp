#pragma once

#include <optional>
#include <vector>

#include "nsarith/equiv.hpp"

namespace nsarith::oracle {

/// Definitional semantics of E0..E4. Existential inequalities are evaluated
/// exactly; the "for every standard n" clauses are discharged by exact degree
/// comparison (n*c < a for all n iff deg(c) < deg(a); c^n < a for all n iff
/// deg(c) is Archimedean-dominated by deg(a)), never by sampling n.
bool check_witness(int level, const Element& a, const Element& b, const Witness& w);

/// n*c < x for every standard n.
bool linearly_small(const Element& c, const Element& x);
/// c^n < x for every standard n.
bool multiplicatively_small(const Element& c, const Element& x);

/// Definitional refutation of a E^level b: true when no witness of any size
/// can exist. With lo <= hi the inputs and D = deg(hi) - deg(lo):
///   E0  hi - lo is nonstandard
///   E1  a != b and every admissible c (deg c < deg lo) falls below hi - lo
///   E2  D > 0, so n*lo < hi for every n
///   E3  D > 0 is not dominated by deg(lo), so every admissible product
///       lo*c stays below hi
///   E4  deg(lo) is dominated by deg(hi), so lo^n < hi for every n
/// Independent of the closed forms in equiv::decide.
bool refutes(int level, const Element& a, const Element& b);

struct SearchBounds {
  std::uint64_t n_max = 64;
  std::vector<Element> companion_pool;
};

/// Candidate companions built from the degree lattice of a and b: standard
/// numbers up to n_max, and t^e, t^e + 1, 2t^e for exponents e drawn from the
/// inputs' exponents, their differences and midpoints, and (0,k) in d=2.
SearchBounds lattice_bounds(const Element& a, const Element& b, std::uint64_t n_max);

/// Brute-force existential search; nullopt means Exhausted within bounds,
/// which is not a proof of non-equivalence.
std::optional<Witness> search(int level, const Element& a, const Element& b, const SearchBounds& bounds);

}  // namespace nsarith::oracle
