#include "f2geom/labels.hpp"

#include <map>
#include <mutex>

#include "f2geom/orbits.hpp"

namespace f2geom {

const std::vector<LabelEntry>& label_map()
{
    static const std::vector<LabelEntry> entries = {
        {2, "A", true, "x*x=0"},
        {2, "B", true, "x*x=x"},
        {2, "C", true, "x*x=e+x"},
        // Non-inner, non-zero calculi in two variables.
        {2, "D", false, "e*e=e"},
        {2, "E", false, "e*e=x"},

        {3, "A", true, "x*y=0; x*x=0; y*y=0"},
        {3, "B", true, "x*y=0; x*x=x; y*y=y"},
        {3, "C", true, "x*y=0; x*x=x; y*y=0"},
        {3, "D", true, "x*y=x+y; x*x=y; y*y=x"},
        {3, "E", true, "x*y=0; x*x=y; y*y=0"},
        // The product table form; x*y=x+y would not be associative.
        {3, "F", true, "x*y=e+x; x*x=e+x+y; y*y=x"},

        {4, "A", true, ""},
        {4, "B", true, "x*x=z"},
        {4, "C", true, "x*x=x"},
        {4, "D", true, "x*x=x; x*y=y"},
        {4, "E", true, "x*y=z"},
        {4, "F", true, "x*x=z; x*y=z"},
        {4, "G", true, "x*x=y; x*y=z"},
        {4, "H", true, "x*x=e+x; x*y=y+z; x*z=y"},
        {4, "I", true, "x*x=y; x*y=x+y; y*y=x"},
        {4, "J", true, "x*x=x+z; x*y=x+z; y*y=x"},
        {4, "K", true, "x*x=x; y*y=y"},
        {4, "L", true, "x*x=z; x*z=e+y; y*y=y; z*z=x"},
        {4, "M", true, "x*x=e+x+y+z; x*z=e+x+y; y*y=y; z*z=x"},
        {4, "N", true, "x*x=z; x*z=x+z; y*y=e+x+y+z; z*z=x"},
        {4, "O", true, "x*x=e+z; x*y=z; x*z=e+y; y*z=e; y*y=x+y; z*z=x"},
        {4, "P", true, "x*x=x; y*y=y; z*z=z"},
    };
    return entries;
}

std::vector<std::string> labels(int n, bool inner)
{
    std::vector<std::string> out;
    for (const auto& e : label_map())
        if (e.n == n && e.inner == inner)
            out.push_back(e.label);
    return out;
}

StructureConstants label_rep(int n, const std::string& label)
{
    for (const auto& e : label_map())
        if (e.n == n && e.label == label)
            return parse_products(n, e.products, e.inner);
    throw UnknownLabel("no class '" + label + "' for n=" + std::to_string(n));
}

std::optional<std::string> label_for(const StructureConstants& v)
{
    static std::mutex mu;
    static std::map<int, std::vector<std::pair<StructureConstants, std::string>>> canon;
    const int n = v.n();
    {
        std::lock_guard<std::mutex> lock(mu);
        if (!canon.count(n)) {
            auto& list = canon[n];
            for (const auto& e : label_map())
                if (e.n == n)
                    list.emplace_back(canonical_rep(parse_products(n, e.products, e.inner)), e.label);
        }
    }
    const auto c = canonical_rep(v);
    for (const auto& [rep, label] : canon.at(n))
        if (rep == c)
            return label;
    return std::nullopt;
}

}  // namespace f2geom
