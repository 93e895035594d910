#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nsarith/element.hpp"

namespace nsarith::automorph {

class Descriptor;

struct Identity {};

/// Identity on every E0-class at or below the class of `center`; above it,
/// the representative r of a class goes to center + scale*(r - center) and
/// the rest of the class follows by translation. Representatives are the
/// elements with zero constant term, except that `anchor` represents its
/// own class. f(anchor) = center + scale*(anchor - center) = image.
struct E2Affine {
  Element anchor;
  Element image;
  Integer scale;
  Element center;
};

/// Relation x ~ y iff x - y has no term whose exponent has positive first
/// component. Identity on the class of 0; representative r of any other
/// class goes to factor*r, offsets inside the class preserved. The default
/// representative keeps only the positive-first-component terms; `a1` and
/// `a2` represent their own classes. `factor` is a monomial t^(0,s), s > 0.
struct E3Shift {
  Element a1;
  Element a2;
  Element factor;
};

/// x -> x + offset on the E0-class of `anchor` (nonstandard), identity elsewhere.
struct E0ClassShift {
  Element anchor;
  Integer offset;
};

/// g(x) = below(x) for x < a and b + (x - a) for x >= a.
struct SegmentExtend {
  std::shared_ptr<const Descriptor> below;
  Element a;
  Element b;
};

/// parts[0] o parts[1] o ... : the last part is applied first.
struct Compose {
  std::vector<Descriptor> parts;
};

struct Inverse {
  std::shared_ptr<const Descriptor> inner;
};

/// A point the map is required to send somewhere specific.
struct Pin {
  Element from;
  Element to;
};

/// Finite, evaluable, invertible description of an order-automorphism of
/// the model. Immutable; copies share structure.
class Descriptor {
 public:
  using Kind = std::variant<Identity, E2Affine, E3Shift, E0ClassShift, SegmentExtend, Compose, Inverse>;

  Descriptor();
  explicit Descriptor(Kind kind, std::vector<Pin> pins = {});

  const Kind& kind() const;
  const std::vector<Pin>& pins() const;
  std::string kind_name() const;

  Descriptor with_pins(std::vector<Pin> pins) const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

}  // namespace nsarith::automorph
