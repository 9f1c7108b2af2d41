#include "plumbline/relations.hpp"

#include <algorithm>

namespace plumbline {

OcticIndex::OcticIndex(int a, int b, int c, int d) : idx_{a, b, c, d}
{
    std::sort(idx_.begin(), idx_.end());
    if (idx_[0] < 0) throw RangeError("octic index must be nonnegative");
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
        throw RangeError("octic indices must be four distinct values");
}

std::vector<OcticIndex> octic_indices(int genus)
{
    std::vector<OcticIndex> out;
    for (int i = 0; i < genus; ++i)
        for (int j = i + 1; j < genus; ++j)
            for (int k = j + 1; k < genus; ++k)
                for (int l = k + 1; l < genus; ++l) out.emplace_back(i, j, k, l);
    return out;
}

const char* to_string(OcticVariant v) { return v == OcticVariant::Corrected ? "corrected" : "printed"; }

} // namespace plumbline
