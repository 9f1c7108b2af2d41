#include "plumbline/curve_periods.hpp"

#include <cstdlib>

namespace plumbline {

const char* to_string(ScaleMode mode) { return mode == ScaleMode::ExactUnits ? "exact" : "numeric"; }

bool is_banded(const std::set<Edge>& support, int band)
{
    if (band < 1) throw RangeError("band must be >= 1");
    for (const Edge& e : support)
        if (e.v - e.u > band - 1) return false;
    return true;
}

int banded_locus_dimension(int genus, int band)
{
    if (genus < 1) throw RangeError("genus must be >= 1");
    if (band < 1) throw RangeError("band must be >= 1");
    int dim = genus;
    for (int d = 1; d <= band - 1 && d < genus; ++d) dim += genus - d;
    return dim;
}

} // namespace plumbline

namespace plumbline {

std::vector<std::string> star_variables(int genus)
{
    std::vector<std::string> out;
    for (int i = 1; i <= genus; ++i) out.push_back("t" + std::to_string(i));
    return out;
}

std::vector<std::string> edge_variables(const Alkane& a)
{
    std::vector<std::string> out;
    for (const Edge& e : a.edges()) out.push_back("t" + std::to_string(e.u + 1) + "_" + std::to_string(e.v + 1));
    return out;
}

} // namespace plumbline
