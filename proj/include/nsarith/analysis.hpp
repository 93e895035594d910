#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nsarith/element.hpp"

namespace nsarith::analysis {

enum class Direction { Up, Down };

const char* to_string(Direction d);
Direction parse_direction(std::string_view text);

/// A strictly monotone run of elements, inside or bounding a class of E^level.
/// For e0/e2 sequences the direction is the direction of travel; for b11
/// sequences (level 3) it is the side of the class the terms lie on, and the
/// terms travel towards the class.
struct ClassSequence {
  Direction direction = Direction::Up;
  int level = 0;
  std::vector<Element> terms;
};

/// a + i (up) or a - i (down) for i < k: cofinal and coinitial in a's E0-class.
ClassSequence e0_seq(const Element& a, std::size_t k, Direction dir);

/// (i+1)*a (up) or ceil(a/(i+1)) (down) for i < k: cofinal and coinitial in
/// a's E2-class.
ClassSequence e2_seq(const Element& a, std::size_t k, Direction dir);

/// Terms for n = 1..k with K = 2^n and m = root_floor(a, K).
///   up:   a*m, the largest multiple b of a with floor(b/a)^K <= a. Strictly
///         decreasing, above the E3-class of a.
///   down: floor(a/(m+1)) + 1, the least b with floor(a/b)^K <= a. Strictly
///         increasing, below the E3-class of a.
/// Propagates CoefficientNotRepresentable and NonTerminatingQuotient.
ClassSequence b11_seq(const Element& a, std::size_t k, Direction dir, const ModelConfig& cfg = {});

/// The defining predicate of the up terms: a divides b and floor(b/a)^K <= a.
bool b11_up_predicate(const Element& a, const Element& b, unsigned long K, const ModelConfig& cfg = {});
/// The defining predicate of the down terms: b > 0 and floor(a/b)^K <= a.
bool b11_down_predicate(const Element& a, const Element& b, unsigned long K, const ModelConfig& cfg = {});

/// Extremality certificate for term i (n = i+1) of a b11 sequence: the term
/// satisfies its predicate, the neighbours T-1 and T+1 fail it on the up
/// side along with the next multiple T+a, and T-1 fails it on the down side.
bool b11_certify(const ClassSequence& seq, std::size_t i, const Element& a, const ModelConfig& cfg = {});

/// Index at which an e0/e2 sequence of a must strictly pass the class-mate b
/// (term > b going up, term < b going down), derived from the minimal bound
/// witness of a E^level b. Throws NotEquivalent.
std::size_t passing_index(const ClassSequence& seq, const Element& a, const Element& b, const ModelConfig& cfg = {});

bool passes(const ClassSequence& seq, std::size_t i, const Element& b);

/// Strictly monotone in the stated direction.
bool is_monotone(const ClassSequence& seq);

struct Embedding {
  Rational value;
  /// The anchor's class has first degree component 0 (d=2), so the value is
  /// the second component rather than the first.
  bool degenerate = false;
};

/// Additive, order-preserving embedding of the E3-classes inside the
/// E4-class of a: the first degree component of b (d=2), or deg(b) (d=1).
/// Throws NotEquivalent(4).
Embedding real_embed(const Element& a, const Element& b, const ModelConfig& cfg = {});

}  // namespace nsarith::analysis
