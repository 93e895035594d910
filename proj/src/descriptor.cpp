#include "nsarith/descriptor.hpp"

namespace nsarith::automorph {

struct Descriptor::Node {
  Kind kind;
  std::vector<Pin> pins;
};

Descriptor::Descriptor() : Descriptor(Identity{}) {}

Descriptor::Descriptor(Kind kind, std::vector<Pin> pins)
    : node_(std::make_shared<const Node>(Node{std::move(kind), std::move(pins)})) {}

const Descriptor::Kind& Descriptor::kind() const { return node_->kind; }

const std::vector<Pin>& Descriptor::pins() const { return node_->pins; }

std::string Descriptor::kind_name() const {
  static constexpr const char* names[] = {"identity",       "e2_affine", "e3_shift", "e0_class_shift",
                                          "segment_extend", "compose",   "inverse"};
  return names[node_->kind.index()];
}

Descriptor Descriptor::with_pins(std::vector<Pin> pins) const { return Descriptor(node_->kind, std::move(pins)); }

}  // namespace nsarith::automorph
