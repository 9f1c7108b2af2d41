#include "plumbline/surfaces.hpp"

namespace plumbline {

int dim_period_domain(int h)
{
    if (h < 1) throw RangeError("h must be >= 1");
    return h * (10 * h + 8) + h * (h - 1) / 2;
}

int dim_K(int j)
{
    if (j < 0 || j > 4) throw RangeError("K_j is defined for 0 <= j <= 4");
    return 18 - 4 * j;
}

int dim_V_Gamma_closed_form(int h) { return 9 * h + 9; }

int dim_V_Gamma(const Alkane& a)
{
    const int h = a.genus();
    int sum = 0;
    for (int v = 0; v < h; ++v) sum += dim_K(a.degree(v));
    const int dim = sum - (h - 1);
    if (dim != dim_V_Gamma_closed_form(h))
        throw FormulaViolation("valency count " + std::to_string(dim) + " disagrees with 9h+9 = " +
                               std::to_string(dim_V_Gamma_closed_form(h)));
    return dim;
}

int dim_W(std::span<const int> parts)
{
    if (parts.empty()) throw RangeError("dim_W needs at least one part");
    int h = 0;
    for (int p : parts) {
        if (p < 1) throw RangeError("parts of h must be >= 1");
        h += p;
    }
    return 2 * h - (static_cast<int>(parts.size()) - 1);
}

AmbientShape::AmbientShape(const std::vector<SurfaceBlockShape>& shapes)
{
    for (const auto& s : shapes) {
        row_offset.push_back(rows);
        col_offset.push_back(cols);
        rows += s.rows;
        cols += s.cols();
    }
}

BlockRange skew_block(const std::vector<SurfaceBlockShape>& shapes, int vertex)
{
    const AmbientShape amb(shapes);
    const auto& s = shapes.at(vertex);
    return {static_cast<std::size_t>(amb.row_offset[vertex]),
            static_cast<std::size_t>(amb.col_offset[vertex] + s.cols() - s.skew_width()),
            static_cast<std::size_t>(s.skew_width())};
}

} // namespace plumbline
