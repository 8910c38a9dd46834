#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f2geom/algebra.hpp"

namespace f2geom {

// Letter names for the known classes. Each entry is a representative given
// by its products in the display basis; for inner classes index 0 is the unit.
struct LabelEntry {
    int n;
    std::string label;
    bool inner;
    std::string products;
};

constexpr int kLabelMapVersion = 1;

const std::vector<LabelEntry>& label_map();
std::vector<std::string> labels(int n, bool inner);
// Representative tensor for (n, label). Throws UnknownLabel.
StructureConstants label_rep(int n, const std::string& label);
// Label whose representative is isomorphic to v, if any.
std::optional<std::string> label_for(const StructureConstants& v);

}  // namespace f2geom
