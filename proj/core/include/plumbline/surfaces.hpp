#pragma once

// Surface side, at the level of linear algebra: dimension counts for the
// period-domain strata, rank-1 edge matrices Pi_e, first-order assembly of
// the surface period matrix, and the span of the Pi_e.
//
// Column layout per vertex i with h_i rows: 11 h_i + 4 columns (the four
// all-zero columns of the designated D4-tilde fibre are discarded). The last
// h_i columns form the skew block, whose integrals vanish.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "plumbline/alkanes.hpp"
#include "plumbline/errors.hpp"
#include "plumbline/field.hpp"
#include "plumbline/jet.hpp"
#include "plumbline/linalg.hpp"
#include "plumbline/matrix.hpp"
#include "plumbline/rng.hpp"

namespace plumbline {

/// dim V_h = h(10h + 8) + h(h - 1)/2.
int dim_period_domain(int h);
/// dim K_j = 18 - 4j for 0 <= j <= 4.
int dim_K(int j);
/// 9h + 9.
int dim_V_Gamma_closed_form(int h);
/// Sum over carbons of dim K_{deg v}, minus (h - 1); checked against 9h + 9.
int dim_V_Gamma(const Alkane& a);
/// 2 sum(h_i) - (r - 1).
int dim_W(std::span<const int> parts);

struct SurfaceBlockShape {
    int rows = 1;

    explicit SurfaceBlockShape(int h) : rows(h)
    {
        if (h < 1) throw ShapeMismatch("surface block needs h_i >= 1");
    }
    int cols() const { return 11 * rows + 4; }
    /// Width of the trailing skew block.
    int skew_width() const { return rows; }
};

/// Row and column offsets of each vertex block inside the ambient matrix.
struct AmbientShape {
    std::vector<int> row_offset;
    std::vector<int> col_offset;
    int rows = 0;
    int cols = 0;

    explicit AmbientShape(const std::vector<SurfaceBlockShape>& shapes);
};

/// Square sub-block [row0, row0 + size) x [col0, col0 + size).
struct BlockRange {
    std::size_t row0 = 0;
    std::size_t col0 = 0;
    std::size_t size = 0;
};

/// Data of one edge e = {u, v}: the row vector omega_e = [omega_u, omega_v]
/// (omega_v already carries the minus sign of -omega_v(P_vu)) and the column
/// vectors I_uv, I_vu. The trailing skew coordinates of each I vector are
/// forced to zero on construction, as are any caller-listed columns.
template <CoefficientField F>
class EdgeData {
public:
    EdgeData(Edge e, std::vector<F> omega_u, std::vector<F> omega_v, std::vector<F> integrals_u,
             std::vector<F> integrals_v, const std::vector<SurfaceBlockShape>& shapes,
             const std::vector<std::vector<int>>& zero_columns = {})
        : edge_(e), omega_u_(std::move(omega_u)), omega_v_(std::move(omega_v)), integrals_u_(std::move(integrals_u)),
          integrals_v_(std::move(integrals_v))
    {
        if (e.v >= static_cast<int>(shapes.size()) || e.u < 0) throw ShapeMismatch("edge endpoint has no block shape");
        check(shapes[e.u], omega_u_, integrals_u_);
        check(shapes[e.v], omega_v_, integrals_v_);
        zero_trailing(shapes[e.u], integrals_u_);
        zero_trailing(shapes[e.v], integrals_v_);
        if (!zero_columns.empty()) {
            zero_listed(zero_columns.at(e.u), integrals_u_);
            zero_listed(zero_columns.at(e.v), integrals_v_);
        }
    }

    /// omega_e = [w_u, -w_v] built from the raw form values w_u, w_v.
    static EdgeData from_form_values(Edge e, const std::vector<F>& w_u, const std::vector<F>& w_v,
                                     std::vector<F> integrals_u, std::vector<F> integrals_v,
                                     const std::vector<SurfaceBlockShape>& shapes)
    {
        std::vector<F> neg;
        for (const auto& x : w_v) neg.push_back(-x);
        return EdgeData(e, w_u, std::move(neg), std::move(integrals_u), std::move(integrals_v), shapes);
    }

    const Edge& edge() const { return edge_; }
    const std::vector<F>& omega_u() const { return omega_u_; }
    const std::vector<F>& omega_v() const { return omega_v_; }
    const std::vector<F>& integrals_u() const { return integrals_u_; }
    const std::vector<F>& integrals_v() const { return integrals_v_; }

    friend bool operator==(const EdgeData&, const EdgeData&) = default;

private:
    static void check(const SurfaceBlockShape& s, const std::vector<F>& omega, const std::vector<F>& integrals)
    {
        if (static_cast<int>(omega.size()) != s.rows) throw ShapeMismatch("omega length must equal h_i");
        if (static_cast<int>(integrals.size()) != s.cols()) throw ShapeMismatch("I vector length must equal 11 h_i + 4");
    }
    static void zero_trailing(const SurfaceBlockShape& s, std::vector<F>& integrals)
    {
        for (int c = s.cols() - s.skew_width(); c < s.cols(); ++c) integrals[c] = F(0);
    }
    static void zero_listed(const std::vector<int>& cols, std::vector<F>& integrals)
    {
        for (int c : cols) integrals.at(c) = F(0);
    }

    Edge edge_;
    std::vector<F> omega_u_;
    std::vector<F> omega_v_;
    std::vector<F> integrals_u_;
    std::vector<F> integrals_v_;
};

template <CoefficientField F>
struct SurfaceGraphModel {
    Alkane alkane;
    std::vector<SurfaceBlockShape> shapes;
    std::vector<Matrix<F>> blocks; // constant Psi(Y_i)
    std::vector<EdgeData<F>> edges;
    std::vector<std::string> vars; // t_e, parallel to edges

    int h() const
    {
        int sum = 0;
        for (const auto& s : shapes) sum += s.rows;
        return sum;
    }

    void validate() const
    {
        const auto n = static_cast<std::size_t>(alkane.genus());
        if (shapes.size() != n || blocks.size() != n) throw ShapeMismatch("one block shape and block per vertex");
        for (std::size_t i = 0; i < n; ++i)
            if (static_cast<int>(blocks[i].rows()) != shapes[i].rows ||
                static_cast<int>(blocks[i].cols()) != shapes[i].cols())
                throw ShapeMismatch("vertex block " + std::to_string(i + 1) + " has the wrong shape");
        if (vars.size() != edges.size()) throw ShapeMismatch("one variable per edge");
        for (const auto& e : edges)
            if (!alkane.has_edge(e.edge().u, e.edge().v))
                throw InvalidConfiguration("edge data on a pair that is not an edge of the alkane");
    }
};

/// Outer product of omega_e (in the two vertex row slots) with [I_uv, I_vu]
/// (in the two vertex column slots), zero elsewhere.
template <CoefficientField F>
Matrix<F> build_Pi(const EdgeData<F>& e, const std::vector<SurfaceBlockShape>& shapes)
{
    const AmbientShape amb(shapes);
    const int u = e.edge().u, v = e.edge().v;
    if (v >= static_cast<int>(shapes.size())) throw ShapeMismatch("edge outside the ambient shape");
    if (static_cast<int>(e.omega_u().size()) != shapes[u].rows ||
        static_cast<int>(e.omega_v().size()) != shapes[v].rows ||
        static_cast<int>(e.integrals_u().size()) != shapes[u].cols() ||
        static_cast<int>(e.integrals_v().size()) != shapes[v].cols())
        throw ShapeMismatch("edge data does not match the vertex block shapes");

    Matrix<F> pi(amb.rows, amb.cols, F(0));
    struct Slot {
        int offset;
        const std::vector<F>* values;
    };
    const Slot row_slots[] = {{amb.row_offset[u], &e.omega_u()}, {amb.row_offset[v], &e.omega_v()}};
    const Slot col_slots[] = {{amb.col_offset[u], &e.integrals_u()}, {amb.col_offset[v], &e.integrals_v()}};
    for (const auto& rs : row_slots)
        for (std::size_t r = 0; r < rs.values->size(); ++r)
            for (const auto& cs : col_slots)
                for (std::size_t c = 0; c < cs.values->size(); ++c)
                    pi(rs.offset + r, cs.offset + c) = (*rs.values)[r] * (*cs.values)[c];
    return pi;
}

/// [Psi(Y_1), ..., Psi(Y_r)] (block diagonal) + sum_e t_e Pi_e mod (t)^2.
template <CoefficientField F>
Matrix<Jet<F>> assemble_surface_period(const SurfaceGraphModel<F>& m, const JetRing<F>& ring)
{
    m.validate();
    if (ring.truncation_order() < 1) throw RangeError("surface assembly needs truncation order >= 1");
    const AmbientShape amb(m.shapes);
    Matrix<Jet<F>> out(amb.rows, amb.cols, ring.zero());
    for (std::size_t i = 0; i < m.blocks.size(); ++i)
        for (std::size_t r = 0; r < m.blocks[i].rows(); ++r)
            for (std::size_t c = 0; c < m.blocks[i].cols(); ++c)
                if (!(m.blocks[i](r, c) == F(0)))
                    out(amb.row_offset[i] + r, amb.col_offset[i] + c) = ring.constant(m.blocks[i](r, c));

    for (std::size_t k = 0; k < m.edges.size(); ++k) {
        const Matrix<F> pi = build_Pi(m.edges[k], m.shapes);
        std::vector<int> e(ring.num_variables(), 0);
        e[ring.index_of(m.vars[k])] = 1;
        const Monomial t(e);
        for (std::size_t r = 0; r < pi.rows(); ++r)
            for (std::size_t c = 0; c < pi.cols(); ++c)
                if (!(pi(r, c) == F(0))) out(r, c).add_term(t, pi(r, c));
    }
    return out;
}

/// Dimension of the span of {Pi_e}, by row reduction of the vectorized matrices.
template <CoefficientField F>
std::size_t span_dimension_E_Gamma(const SurfaceGraphModel<F>& m, double tol = kDefaultTolerance)
{
    m.validate();
    std::vector<std::vector<F>> rows;
    for (const auto& e : m.edges) rows.push_back(build_Pi(e, m.shapes).data());
    return rank(std::move(rows), tol);
}

/// The implication "rank(M) <= 1 and B = -B^T  =>  B = 0" for the block B.
template <CoefficientField F>
bool skew_block_rank_one_vanishing(const Matrix<F>& m, const BlockRange& block, double tol = kDefaultTolerance)
{
    if (block.row0 + block.size > m.rows() || block.col0 + block.size > m.cols())
        throw ShapeMismatch("block outside the matrix");
    if (!all_2x2_minors_vanish(m, tol)) return true;
    const double scale = max_magnitude(m);
    bool skew = true;
    bool zero = true;
    for (std::size_t a = 0; a < block.size; ++a)
        for (std::size_t b = 0; b < block.size; ++b) {
            const F& x = m(block.row0 + a, block.col0 + b);
            const F& y = m(block.row0 + b, block.col0 + a);
            if (!FieldTraits<F>::negligible(F(x + y), scale, tol)) skew = false;
            if (!FieldTraits<F>::negligible(x, scale, tol)) zero = false;
        }
    return !skew || zero;
}

/// The h_i x h_i block of vertex i's rows against its trailing skew columns.
BlockRange skew_block(const std::vector<SurfaceBlockShape>& shapes, int vertex);

/// Random rational blocks and edge data on the given alkane; h_i = parts[i]
/// (all 1 when parts is empty).
template <CoefficientField F>
SurfaceGraphModel<F> random_surface_model(const Alkane& a, Rng& rng, std::vector<int> parts = {})
{
    if (parts.empty()) parts.assign(a.genus(), 1);
    if (static_cast<int>(parts.size()) != a.genus()) throw ShapeMismatch("one h_i per vertex");
    SurfaceGraphModel<F> m{a, {}, {}, {}, {}};
    for (int h : parts) m.shapes.emplace_back(h);
    for (const auto& s : m.shapes) {
        Matrix<F> b(s.rows, s.cols(), F(0));
        for (int r = 0; r < s.rows; ++r)
            for (int c = 0; c < s.cols(); ++c) b(r, c) = rng.scalar<F>();
        m.blocks.push_back(std::move(b));
    }
    auto draw = [&](std::size_t n, bool nonzero) {
        std::vector<F> v(n);
        for (auto& x : v) x = rng.scalar<F>(nonzero);
        return v;
    };
    for (const Edge& e : a.edges()) {
        m.edges.emplace_back(e, draw(m.shapes[e.u].rows, true), draw(m.shapes[e.v].rows, true),
                             draw(m.shapes[e.u].cols(), true), draw(m.shapes[e.v].cols(), true), m.shapes);
        m.vars.push_back("t" + std::to_string(e.u + 1) + "_" + std::to_string(e.v + 1));
    }
    return m;
}

} // namespace plumbline
