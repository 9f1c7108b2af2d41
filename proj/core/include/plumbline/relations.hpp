#pragma once

// Octic relations among off-diagonal periods. With y_ij^2 = 1/tau_ij, the
// Plücker quadric y_ij y_kl - y_ik y_jl + y_il y_jk = 0 squares twice into
//
//   f = 2 P Q R (P + Q + R) - (P^2 Q^2 + P^2 R^2 + Q^2 R^2),
//   P = tau_ij tau_kl,  Q = tau_ik tau_jl,  R = tau_il tau_jk,
//
// which is free of square-root branch choices.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumbline/curve_periods.hpp"
#include "plumbline/errors.hpp"
#include "plumbline/field.hpp"
#include "plumbline/jet.hpp"
#include "plumbline/matrix.hpp"
#include "plumbline/rng.hpp"

namespace plumbline {

/// Four distinct 0-based indices, stored sorted.
class OcticIndex {
public:
    OcticIndex(int a, int b, int c, int d);

    int i() const { return idx_[0]; }
    int j() const { return idx_[1]; }
    int k() const { return idx_[2]; }
    int l() const { return idx_[3]; }
    const std::array<int, 4>& indices() const { return idx_; }

    friend auto operator<=>(const OcticIndex&, const OcticIndex&) = default;

private:
    std::array<int, 4> idx_;
};

/// All C(g,4) index quadruples in lexicographic order.
std::vector<OcticIndex> octic_indices(int genus);

/// `Printed` reproduces a typeset variant whose first negative monomial is
/// tau_ij^2 tau_il^2 tau_jk^2 tau_jl^2; it does not vanish on the cone and
/// exists only as a negative control.
enum class OcticVariant { Corrected, Printed };

const char* to_string(OcticVariant v);

/// The six signed monomials of f; their sum is f.
template <class V>
std::array<V, 6> octic_terms(const Matrix<V>& m, const OcticIndex& q, OcticVariant variant = OcticVariant::Corrected)
{
    const int i = q.i(), j = q.j(), k = q.k(), l = q.l();
    const V& ij = m(i, j);
    const V& kl = m(k, l);
    const V& ik = m(i, k);
    const V& jl = m(j, l);
    const V& il = m(i, l);
    const V& jk = m(j, k);
    const V p = ij * kl;
    const V qq = ik * jl;
    const V r = il * jk;
    V pqr = p * qq * r;
    pqr = pqr + pqr;
    const V p2 = p * p;
    const V q2 = qq * qq;
    const V r2 = r * r;
    if (variant == OcticVariant::Corrected) return {pqr * p, pqr * qq, pqr * r, -(q2 * r2), -(p2 * q2), -(p2 * r2)};
    const V first = ij * ij * il * il * jk * jk * jl * jl;
    return {pqr * p, pqr * qq, pqr * r, -first, -(q2 * r2), -(p2 * q2)};
}

template <class V>
V octic_eval(const Matrix<V>& m, const OcticIndex& q, OcticVariant variant = OcticVariant::Corrected)
{
    auto terms = octic_terms(m, q, variant);
    V sum = terms[0];
    for (std::size_t n = 1; n < terms.size(); ++n) sum = sum + terms[n];
    return sum;
}

/// Exact: f == 0. Float: |f| <= tol times the largest monomial magnitude.
template <CoefficientField F>
bool octic_vanishes(const Matrix<F>& m, const OcticIndex& q, OcticVariant variant = OcticVariant::Corrected,
                    double tol = kDefaultTolerance)
{
    auto terms = octic_terms(m, q, variant);
    F sum = terms[0];
    double scale = FieldTraits<F>::magnitude(terms[0]);
    for (std::size_t n = 1; n < terms.size(); ++n) {
        sum += terms[n];
        scale = std::max(scale, FieldTraits<F>::magnitude(terms[n]));
    }
    return FieldTraits<F>::negligible(sum, scale, tol);
}

// ---------------------------------------------------------------------------
// Grassmannian frames and the cone chart y -> y^-2
// ---------------------------------------------------------------------------

/// Antisymmetric g x g matrix of 2x2 minors of a 2 x g frame.
template <CoefficientField F>
Matrix<F> plucker_coordinates(const Matrix<F>& frame, double tol = kDefaultTolerance)
{
    if (frame.rows() != 2) throw ShapeMismatch("a Grassmannian frame has exactly two rows");
    const std::size_t g = frame.cols();
    Matrix<F> y(g, g, F(0));
    double scale = 0.0;
    for (const auto& x : frame.data()) scale = std::max(scale, FieldTraits<F>::magnitude(x));
    bool full_rank = false;
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            const F minor = frame(0, a) * frame(1, b) - frame(0, b) * frame(1, a);
            y(a, b) = minor;
            y(b, a) = -minor;
            if (!FieldTraits<F>::negligible(minor, scale * scale, tol)) full_rank = true;
        }
    if (!full_rank) throw DegenerateFrame("frame has rank < 2");
    return y;
}

/// y_ij y_kl - y_ik y_jl + y_il y_jk.
template <CoefficientField F>
F plucker_quadric(const Matrix<F>& y, const OcticIndex& q)
{
    const int i = q.i(), j = q.j(), k = q.k(), l = q.l();
    return y(i, j) * y(k, l) - y(i, k) * y(j, l) + y(i, l) * y(j, k);
}

/// Symmetric matrix with zero diagonal holding off-diagonal tau-bar values.
template <CoefficientField F>
struct TangentConePoint {
    Matrix<F> tau_bar;
};

template <CoefficientField F>
TangentConePoint<F> plucker_to_cone(const Matrix<F>& y)
{
    if (!y.square()) throw ShapeMismatch("Plücker coordinate matrix must be square");
    const std::size_t g = y.rows();
    Matrix<F> t(g, g, F(0));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            if (y(a, b) == F(0))
                throw ConeChartViolation("y_" + std::to_string(a + 1) + std::to_string(b + 1) + " = 0");
            const F v = F(1) / (y(a, b) * y(a, b));
            t(a, b) = v;
            t(b, a) = v;
        }
    return {std::move(t)};
}

/// tau-bar_ij read off as the coefficient of t_i t_j in entry (i, j).
template <CoefficientField F>
TangentConePoint<F> leading_cone_point(const PeriodMatrixJet<F>& m, const std::vector<std::string>& vars)
{
    const auto& ring = m.ring();
    const std::size_t g = m.genus();
    if (vars.size() != g) throw ShapeMismatch("one variable per row expected");
    Matrix<F> t(g, g, F(0));
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b) {
            if (a == b) continue;
            std::vector<int> e(ring.num_variables(), 0);
            ++e[ring.index_of(vars[a])];
            ++e[ring.index_of(vars[b])];
            t(a, b) = m(a, b).coefficient(e);
        }
    return {std::move(t)};
}

/// Random 2 x g frame with rational entries and every Plücker coordinate nonzero.
template <CoefficientField F>
Matrix<F> random_frame(int genus, Rng& rng)
{
    for (;;) {
        Matrix<F> f(2, genus, F(0));
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < genus; ++c) f(r, c) = rng.scalar<F>();
        bool generic = true;
        for (int a = 0; a < genus && generic; ++a)
            for (int b = a + 1; b < genus && generic; ++b)
                if (f(0, a) * f(1, b) - f(0, b) * f(1, a) == F(0)) generic = false;
        if (generic) return f;
    }
}

// ---------------------------------------------------------------------------
// Vanishing modulo T^9
// ---------------------------------------------------------------------------

struct AsymptoticOptions {
    int order = 17;
    /// Multiply every leading entry by 1 + (random rational linear form).
    bool perturb = true;
    /// Negative control: replace tau-bar on this edge by tau-bar + 1.
    std::optional<Edge> off_cone_shift;
    OcticVariant variant = OcticVariant::Corrected;
    double tol = kDefaultTolerance;
};

struct AsymptoticReport {
    int genus = 0;
    ScaleMode mode = ScaleMode::ExactUnits;
    std::size_t octics_checked = 0;
    int vanish_through = 16;
    /// Lowest degree of any surviving octic coefficient; empty if all vanish.
    std::optional<int> min_surviving_degree;
    bool pass = false;
};

inline constexpr int kOcticVanishingDegree = 16;
inline constexpr int kMinAsymptoticOrder = 17;

/// Builds tau_ij(t) = tau-bar_ij (1 + l_ij(t)) from the star configuration,
/// evaluates every octic as a jet and checks that all coefficients of total
/// degree <= 16 vanish.
template <CoefficientField F>
AsymptoticReport verify_asymptotic_vanishing(const StarConfig<F>& s, ScaleMode mode, std::uint64_t seed,
                                             const AsymptoticOptions& opt = {})
{
    if (opt.order < kMinAsymptoticOrder)
        throw RangeError("asymptotic vanishing needs truncation order >= 17, got " + std::to_string(opt.order));
    const JetRing<F> ring(s.vars, opt.order);
    const auto leading = star_period_leading(s, ring, mode);
    const std::size_t g = s.genus();
    Rng rng = Rng(seed).substream("relations.perturbation");

    Matrix<Jet<F>> tau(g, g, ring.zero());
    for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = a + 1; b < g; ++b) {
            Jet<F> entry = leading(a, b);
            if (opt.off_cone_shift && opt.off_cone_shift->u == static_cast<int>(a) &&
                opt.off_cone_shift->v == static_cast<int>(b))
                entry += ring.one();
            if (opt.perturb) {
                Jet<F> unit = ring.one();
                for (std::size_t k = 0; k < g; ++k) unit += ring.variable(k) * rng.scalar<F>();
                entry = entry * unit;
            }
            tau(a, b) = entry;
            tau(b, a) = entry;
        }

    AsymptoticReport report;
    report.genus = static_cast<int>(g);
    report.mode = mode;
    report.pass = true;
    for (const auto& q : octic_indices(static_cast<int>(g))) {
        const Jet<F> f = octic_eval(tau, q, opt.variant);
        ++report.octics_checked;
        if (auto low = f.lowest_degree(opt.tol)) {
            if (!report.min_surviving_degree || *low < *report.min_surviving_degree) report.min_surviving_degree = low;
            if (*low <= kOcticVanishingDegree) report.pass = false;
        }
    }
    return report;
}

} // namespace plumbline
