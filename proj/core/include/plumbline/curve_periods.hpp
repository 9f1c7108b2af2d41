#pragma once

// First-order period matrices of Fay-plumbed families, as jets in the
// plumbing parameters. Plumbing fixtures follow t = q^2 - v^2.

#include <cstddef>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "plumbline/alkanes.hpp"
#include "plumbline/elliptic.hpp"
#include "plumbline/errors.hpp"
#include "plumbline/field.hpp"
#include "plumbline/jet.hpp"
#include "plumbline/linalg.hpp"
#include "plumbline/matrix.hpp"
#include "plumbline/rng.hpp"

namespace plumbline {

/// ExactUnits divides the transcendental 2 pi sqrt(-1) out of every
/// plumbing constant; Numeric keeps it as a float.
enum class ScaleMode { ExactUnits, Numeric };

const char* to_string(ScaleMode mode);

/// 1/denominator in ExactUnits, 2 pi sqrt(-1)/denominator in Numeric.
template <CoefficientField F>
F plumbing_constant(ScaleMode mode, long denominator)
{
    if (mode == ScaleMode::ExactUnits) return F(1) / F(denominator);
    if constexpr (FieldTraits<F>::exact) {
        throw InvalidConfiguration("numeric scale mode needs a float coefficient field");
    } else {
        return Complex(0.0, 2.0 * std::numbers::pi) / static_cast<double>(denominator);
    }
}

template <CoefficientField F>
struct PeriodMatrixJet {
    Matrix<Jet<F>> entries;
    ScaleMode mode = ScaleMode::ExactUnits;
    std::vector<std::string> notes;

    std::size_t genus() const { return entries.rows(); }
    const Jet<F>& operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
    const JetRing<F>& ring() const { return entries(0, 0).ring(); }

    bool is_symmetric() const
    {
        for (std::size_t i = 0; i < genus(); ++i)
            for (std::size_t j = i + 1; j < genus(); ++j)
                if (!(entries(i, j) == entries(j, i))) return false;
        return true;
    }
};

template <CoefficientField F>
PeriodMatrixJet<F> constant_period_matrix(const std::vector<F>& diagonal, const JetRing<F>& ring, ScaleMode mode)
{
    PeriodMatrixJet<F> m{Matrix<Jet<F>>(diagonal.size(), diagonal.size(), ring.zero()), mode, {}};
    for (std::size_t i = 0; i < diagonal.size(); ++i) m.entries(i, i) = ring.constant(diagonal[i]);
    return m;
}

/// Adds lambda * t * u (x) u, with t the named ring variable.
template <CoefficientField F>
void add_rank_one_term(PeriodMatrixJet<F>& m, const std::string& var, const F& lambda, const std::vector<F>& u)
{
    const auto& ring = m.ring();
    const std::size_t k = ring.index_of(var);
    std::vector<int> e(ring.num_variables(), 0);
    e[k] = 1;
    const Monomial t(e);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == F(0)) continue;
        for (std::size_t j = i; j < u.size(); ++j) {
            if (u[j] == F(0)) continue;
            const F value = lambda * u[i] * u[j];
            m.entries(i, j).add_term(t, value);
            if (j != i) m.entries(j, i).add_term(t, value);
        }
    }
}

// ---------------------------------------------------------------------------
// Pairwise plumbing
// ---------------------------------------------------------------------------

/// One side of a pairwise plumbing: the constant period block tau(C) and the
/// values omega_C(a) of its normalized forms at the plumbing point.
template <CoefficientField F>
struct PlumbingSide {
    Matrix<F> block;
    std::vector<F> omega;
};

template <CoefficientField F>
struct PairPlumbing {
    PlumbingSide<F> a;
    PlumbingSide<F> b;
    std::string var = "t";

    static PairPlumbing from_curves(const MarkedEllipticCurve<F>& curve_a, std::size_t mark_a,
                                    const MarkedEllipticCurve<F>& curve_b, std::size_t mark_b, std::string var = "t")
    {
        PairPlumbing p;
        p.a = {Matrix<F>(1, 1, curve_a.tau().value()), {curve_a.form_value(mark_a)}};
        p.b = {Matrix<F>(1, 1, curve_b.tau().value()), {curve_b.form_value(mark_b)}};
        p.var = std::move(var);
        return p;
    }
};

/// diag(tau(C_a), tau(C_b)) + lambda t u (x) u mod t^2, u = [omega_a, -omega_b].
template <CoefficientField F>
PeriodMatrixJet<F> pair_period_first_order(const PairPlumbing<F>& p, const JetRing<F>& ring, ScaleMode mode)
{
    if (ring.truncation_order() < 1) throw RangeError("pair plumbing needs truncation order >= 1");
    for (const auto* side : {&p.a, &p.b})
        if (!side->block.square() || side->block.rows() != side->omega.size() || side->omega.empty())
            throw ShapeMismatch("plumbing side block must be square and match its omega vector");
    ring.index_of(p.var);

    const std::size_t ga = p.a.omega.size();
    const std::size_t g = ga + p.b.omega.size();
    PeriodMatrixJet<F> m{Matrix<Jet<F>>(g, g, ring.zero()), mode, {}};
    for (std::size_t i = 0; i < ga; ++i)
        for (std::size_t j = 0; j < ga; ++j) m.entries(i, j) = ring.constant(p.a.block(i, j));
    for (std::size_t i = ga; i < g; ++i)
        for (std::size_t j = ga; j < g; ++j) m.entries(i, j) = ring.constant(p.b.block(i - ga, j - ga));

    std::vector<F> u;
    u.reserve(g);
    for (const auto& w : p.a.omega) u.push_back(w);
    for (const auto& w : p.b.omega) u.push_back(-w);
    add_rank_one_term(m, p.var, plumbing_constant<F>(mode, 4), u);
    return m;
}

// ---------------------------------------------------------------------------
// Star configuration: E_1..E_g plumbed onto a rational curve at b_1..b_g
// ---------------------------------------------------------------------------

template <CoefficientField F>
struct StarConfig {
    std::vector<MarkedEllipticCurve<F>> curves; // mark 0 of each is a_i
    std::vector<F> attach;                      // b_i on the rational curve
    std::vector<std::string> vars;              // t_i

    std::size_t genus() const { return curves.size(); }

    void validate(double tol = kDefaultTolerance) const
    {
        if (curves.empty()) throw InvalidConfiguration("star configuration needs at least one curve");
        if (attach.size() != curves.size() || vars.size() != curves.size())
            throw InvalidConfiguration("star configuration: curves, attachment points and variables differ in count");
        for (const auto& c : curves)
            if (c.marks().empty()) throw InvalidConfiguration("star configuration: curve without a mark");
        if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size())
            throw InvalidConfiguration("star configuration: variables must be distinct");
        for (std::size_t i = 0; i < attach.size(); ++i)
            for (std::size_t j = i + 1; j < attach.size(); ++j) {
                const F d = attach[i] - attach[j];
                const double scale = std::max(FieldTraits<F>::magnitude(attach[i]), 1.0);
                if (FieldTraits<F>::negligible(d, scale, tol) || d == F(0))
                    throw InvalidConfiguration("star configuration: attachment points " + std::to_string(i + 1) +
                                               " and " + std::to_string(j + 1) + " coincide");
            }
    }

    F form_value(std::size_t i) const { return curves.at(i).form_value(0); }
};

/// Leading off-diagonal periods kappa t_i t_j v_i v_j / (b_i - b_j)^2 with
/// kappa = lambda/4; the diagonal keeps only tau_i.
template <CoefficientField F>
PeriodMatrixJet<F> star_period_leading(const StarConfig<F>& s, const JetRing<F>& ring, ScaleMode mode)
{
    s.validate();
    if (ring.truncation_order() < 2) throw RangeError("star periods need truncation order >= 2");
    const std::size_t g = s.genus();
    std::vector<F> diag;
    for (const auto& c : s.curves) diag.push_back(c.tau().value());
    auto m = constant_period_matrix(diag, ring, mode);
    m.notes.push_back("diagonal first-order corrections are not modelled (leading off-diagonal terms only)");

    const F kappa = plumbing_constant<F>(mode, 16);
    std::vector<std::size_t> idx;
    for (const auto& v : s.vars) idx.push_back(ring.index_of(v));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j) {
            const F diff = s.attach[i] - s.attach[j];
            std::vector<int> e(ring.num_variables(), 0);
            ++e[idx[i]];
            ++e[idx[j]];
            const Monomial titj(e);
            const F value = kappa * s.form_value(i) * s.form_value(j) / (diff * diff);
            m.entries(i, j).add_term(titj, value);
            m.entries(j, i).add_term(titj, value);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Alkane trees of elliptic curves glued at 2-torsion points
// ---------------------------------------------------------------------------

template <CoefficientField F>
struct TreeEdge {
    Edge edge;          // 0-based, edge.u < edge.v
    std::string var;    // t_e
    Mark<F> at_u;       // a_{uv} on E_u
    Mark<F> at_v;       // a_{vu} on E_v
};

template <CoefficientField F>
struct TreeConfig {
    Alkane alkane;
    std::vector<TauPoint<F>> taus;
    std::vector<TreeEdge<F>> edges;

    /// The marked curve at each vertex, validating mark distinctness and c != 0.
    std::vector<MarkedEllipticCurve<F>> curves() const
    {
        std::vector<std::vector<Mark<F>>> marks(alkane.genus());
        for (const auto& e : edges) {
            marks.at(e.edge.u).push_back(e.at_u);
            marks.at(e.edge.v).push_back(e.at_v);
        }
        std::vector<MarkedEllipticCurve<F>> out;
        for (int v = 0; v < alkane.genus(); ++v) out.emplace_back(taus.at(v), std::move(marks[v]));
        return out;
    }

    void validate() const
    {
        if (static_cast<int>(taus.size()) != alkane.genus())
            throw InvalidConfiguration("tree configuration needs one tau per vertex");
        if (edges.size() != alkane.edges().size())
            throw InvalidConfiguration("tree configuration needs plumbing data for every edge");
        std::set<Edge> seen;
        std::set<std::string> vars;
        for (const auto& e : edges) {
            if (!alkane.has_edge(e.edge.u, e.edge.v))
                throw InvalidConfiguration("plumbing edge is not an edge of the alkane");
            if (!seen.insert(e.edge).second) throw InvalidConfiguration("edge plumbed twice");
            if (!vars.insert(e.var).second) throw InvalidConfiguration("edge variables must be distinct");
            for (const auto* m : {&e.at_u, &e.at_v})
                if (!std::holds_alternative<TwoTorsionLabel>(m->point))
                    throw InvalidConfiguration("tree plumbing marks must be 2-torsion points");
        }
        curves();
    }
};

/// diag(tau_i) + sum_e lambda t_e u_e (x) u_e mod (t)^2, with u_e carrying
/// v_u(a_uv) in slot u and -v_v(a_vu) in slot v.
template <CoefficientField F>
PeriodMatrixJet<F> tree_period_first_order(const TreeConfig<F>& c, const JetRing<F>& ring, ScaleMode mode)
{
    c.validate();
    if (ring.truncation_order() < 1) throw RangeError("tree plumbing needs truncation order >= 1");
    std::vector<F> diag;
    for (const auto& t : c.taus) diag.push_back(t.value());
    auto m = constant_period_matrix(diag, ring, mode);
    const F lambda = plumbing_constant<F>(mode, 4);
    for (const auto& e : c.edges) {
        std::vector<F> u(diag.size(), F(0));
        u[e.edge.u] = normalized_form_value(e.at_u);
        u[e.edge.v] = -normalized_form_value(e.at_v);
        add_rank_one_term(m, e.var, lambda, u);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Patterns
// ---------------------------------------------------------------------------

/// Off-diagonal pairs (u < v) whose entry is a nonzero jet. Float entries
/// count as zero below tol times the largest off-diagonal coefficient.
template <CoefficientField F>
std::set<Edge> offdiag_support(const PeriodMatrixJet<F>& m, double tol = kDefaultTolerance)
{
    const std::size_t g = m.genus();
    double scale = 0.0;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            if (i != j) scale = std::max(scale, m(i, j).max_magnitude());
    std::set<Edge> out;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            for (const auto& [mono, coeff] : m(i, j).terms())
                if (!FieldTraits<F>::negligible(coeff, scale, tol)) {
                    out.emplace(static_cast<int>(i), static_cast<int>(j));
                    break;
                }
    return out;
}

/// band 2 = tridiagonal, band 3 = quadridiagonal: support within |i-j| <= band-1.
bool is_banded(const std::set<Edge>& support, int band);

template <CoefficientField F>
bool is_banded(const PeriodMatrixJet<F>& m, int band, double tol = kDefaultTolerance)
{
    return is_banded(offdiag_support(m, tol), band);
}

/// Dimension g + sum_{d=1}^{band-1} (g-d) of the symmetric banded locus.
int banded_locus_dimension(int genus, int band);

/// Matrix of coefficients of the monomial `var` (degree-1 part in var).
template <CoefficientField F>
Matrix<F> coefficient_matrix(const PeriodMatrixJet<F>& m, const std::string& var)
{
    const auto& ring = m.ring();
    std::vector<int> e(ring.num_variables(), 0);
    e[ring.index_of(var)] = 1;
    Matrix<F> out(m.genus(), m.genus(), F(0));
    for (std::size_t i = 0; i < m.genus(); ++i)
        for (std::size_t j = 0; j < m.genus(); ++j) out(i, j) = m(i, j).coefficient(e);
    return out;
}

template <CoefficientField F>
bool derivative_rank_one_check(const PeriodMatrixJet<F>& m, const std::string& var, double tol = kDefaultTolerance)
{
    return all_2x2_minors_vanish(coefficient_matrix(m, var), tol);
}

// ---------------------------------------------------------------------------
// Random configurations
// ---------------------------------------------------------------------------

/// Upper half-plane point with small rational coordinates.
template <CoefficientField F>
TauPoint<F> random_tau(Rng& rng)
{
    mpq_class re = rng.rational();
    mpq_class im{mpz_class(rng.uniform_int(1, 9)), mpz_class(rng.uniform_int(1, 7))};
    im.canonicalize();
    return TauPoint<F>(FieldTraits<F>::make(re, im));
}

/// "t1", "t2", ...
std::vector<std::string> star_variables(int genus);
/// "t1_2" for the edge joining vertices 1 and 2 (1-based), in edge order.
std::vector<std::string> edge_variables(const Alkane& a);

template <CoefficientField F>
StarConfig<F> random_star_config(int genus, Rng& rng)
{
    StarConfig<F> s;
    for (int i = 0; i < genus; ++i) {
        auto tau = random_tau<F>(rng);
        s.curves.emplace_back(tau, std::vector<Mark<F>>{{TwoTorsionLabel::O, rng.scalar<F>(true)}});
    }
    while (s.attach.size() < static_cast<std::size_t>(genus)) {
        F b = rng.scalar<F>();
        bool fresh = true;
        for (const auto& x : s.attach)
            if (x == b) fresh = false;
        if (fresh) s.attach.push_back(b);
    }
    s.vars = star_variables(genus);
    return s;
}

/// Random taus, distinct random 2-torsion marks at each vertex and random
/// nonzero coordinate coefficients.
template <CoefficientField F>
TreeConfig<F> random_tree_config(const Alkane& a, Rng& rng)
{
    std::vector<std::vector<TwoTorsionLabel>> free_labels(a.genus());
    for (auto& labels : free_labels) {
        labels.assign(kTwoTorsionLabels.begin(), kTwoTorsionLabels.end());
        for (std::size_t k = labels.size(); k > 1; --k)
            std::swap(labels[k - 1], labels[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(k) - 1))]);
    }
    TreeConfig<F> c{a, {}, {}};
    for (int v = 0; v < a.genus(); ++v) c.taus.push_back(random_tau<F>(rng));
    const auto vars = edge_variables(a);
    for (std::size_t k = 0; k < a.edges().size(); ++k) {
        const Edge& e = a.edges()[k];
        TreeEdge<F> te{e, vars[k], {free_labels[e.u].back(), rng.scalar<F>(true)},
                       {free_labels[e.v].back(), rng.scalar<F>(true)}};
        free_labels[e.u].pop_back();
        free_labels[e.v].pop_back();
        c.edges.push_back(std::move(te));
    }
    return c;
}

} // namespace plumbline
