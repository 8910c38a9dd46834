#pragma once

#include <cstdint>
#include <vector>

#include "f2geom/algebra.hpp"

namespace f2geom {

struct OrbitReport {
    StructureConstants canonical;
    std::vector<StructureConstants> members;  // ascending packed order
    std::vector<Matrix> isotropy;             // stabilizer of canonical
    std::size_t orbit_size = 0;
    // How many of the input solutions fell in this orbit; equals orbit_size
    // when the input set is closed under the group.
    std::size_t input_count = 0;
};

// GL(n,2) with the row masks of each element and its inverse, built once per n.
struct GroupCache {
    int n = 0;
    std::vector<Matrix> elements;
    std::vector<std::vector<std::uint32_t>> rows, inv_rows;
};
const GroupCache& group_cache(int n);

// act() specialised to a cached group element.
StructureConstants act_cached(const GroupCache& g, std::size_t idx, const StructureConstants& v);

StructureConstants canonical_rep(const StructureConstants& v);
std::vector<Matrix> isotropy(const StructureConstants& v);
// Partition of the input into group orbits, sorted by canonical representative.
std::vector<OrbitReport> orbits(const std::vector<StructureConstants>& solutions, int n, int jobs = 1);

// Some g with act(g, from) == to, if one exists.
std::optional<Matrix> find_isomorphism(const StructureConstants& from, const StructureConstants& to);

}  // namespace f2geom
