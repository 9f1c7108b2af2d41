#pragma once

// Elliptic curves E_tau = C / (Z tau + Z) with marked points. The period tau
// is input data; nothing transcendental is computed here.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "plumbline/errors.hpp"
#include "plumbline/field.hpp"

namespace plumbline {

/// The four fixed points of z -> -z: 0, 1/2, tau/2, (1+tau)/2.
enum class TwoTorsionLabel { O, Half, TauHalf, HalfPlusTauHalf };

inline constexpr std::array<TwoTorsionLabel, 4> kTwoTorsionLabels = {
    TwoTorsionLabel::O, TwoTorsionLabel::Half, TwoTorsionLabel::TauHalf, TwoTorsionLabel::HalfPlusTauHalf};

const char* to_string(TwoTorsionLabel label);
/// Throws DomainError on unknown text.
TwoTorsionLabel parse_two_torsion_label(std::string_view text);

/// Point of the upper half-plane.
template <CoefficientField F>
class TauPoint {
public:
    explicit TauPoint(F tau) : tau_(std::move(tau))
    {
        if (!(FieldTraits<F>::imag(tau_) > 0)) throw DomainError("tau must lie in the upper half-plane");
    }
    const F& value() const { return tau_; }
    friend bool operator==(const TauPoint&, const TauPoint&) = default;

private:
    F tau_;
};

/// Either a 2-torsion label or an explicit representative in C.
template <CoefficientField F>
using MarkPoint = std::variant<TwoTorsionLabel, F>;

/// A marked point with local coordinate w = c (z - a) + O((z - a)^2).
template <CoefficientField F>
struct Mark {
    MarkPoint<F> point;
    F coord_leading_coeff;
};

/// v(a) = (dz/dw)(a) = 1/c for the normalized form v = dz.
template <CoefficientField F>
F normalized_form_value(const Mark<F>& m)
{
    if (m.coord_leading_coeff == F(0)) throw InvalidMark("local coordinate leading coefficient must be nonzero");
    return F(1) / m.coord_leading_coeff;
}

template <CoefficientField F>
std::array<F, 4> two_torsion_representatives(const TauPoint<F>& tau)
{
    const F half = FieldTraits<F>::make(mpq_class(1, 2), 0);
    const F& t = tau.value();
    return {F(0), half, t * half, (F(1) + t) * half};
}

template <CoefficientField F>
F point_value(const MarkPoint<F>& p, const TauPoint<F>& tau)
{
    if (const auto* label = std::get_if<TwoTorsionLabel>(&p))
        return two_torsion_representatives(tau)[static_cast<std::size_t>(*label)];
    return std::get<F>(p);
}

/// True iff z lies in the lattice Z tau + Z.
template <CoefficientField F>
bool in_lattice(const F& z, const TauPoint<F>& tau, double tol = kDefaultTolerance)
{
    using T = FieldTraits<F>;
    const F& t = tau.value();
    using Real = typename T::Real;
    const Real n = T::imag(z) / T::imag(t);
    const Real m = T::real(z) - n * T::real(t);
    if constexpr (T::exact) {
        return n.get_den() == 1 && m.get_den() == 1;
    } else {
        return std::abs(n - std::round(n)) <= tol && std::abs(m - std::round(m)) <= tol;
    }
}

template <CoefficientField F>
class MarkedEllipticCurve {
public:
    MarkedEllipticCurve(TauPoint<F> tau, std::vector<Mark<F>> marks) : tau_(std::move(tau)), marks_(std::move(marks))
    {
        for (const auto& m : marks_)
            if (m.coord_leading_coeff == F(0)) throw InvalidMark("local coordinate leading coefficient must be nonzero");
        for (std::size_t a = 0; a < marks_.size(); ++a)
            for (std::size_t b = a + 1; b < marks_.size(); ++b)
                if (in_lattice(F(point_value(marks_[a].point, tau_) - point_value(marks_[b].point, tau_)), tau_))
                    throw InvalidMark("marks " + std::to_string(a) + " and " + std::to_string(b) +
                                      " are the same point of the curve");
    }

    const TauPoint<F>& tau() const { return tau_; }
    const std::vector<Mark<F>>& marks() const { return marks_; }
    const Mark<F>& mark(std::size_t k) const
    {
        if (k >= marks_.size()) throw InvalidMark("mark index " + std::to_string(k) + " out of range");
        return marks_[k];
    }
    F form_value(std::size_t k) const { return normalized_form_value(mark(k)); }

private:
    TauPoint<F> tau_;
    std::vector<Mark<F>> marks_;
};

/// Integer matrix [[a, b], [c, d]] acting by tau -> (a tau + b)/(c tau + d).
struct SL2Z {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    friend SL2Z operator*(const SL2Z& x, const SL2Z& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    template <CoefficientField F>
    F apply(const F& tau) const
    {
        return (F(static_cast<long>(a)) * tau + F(static_cast<long>(b))) /
               (F(static_cast<long>(c)) * tau + F(static_cast<long>(d)));
    }
    friend bool operator==(const SL2Z&, const SL2Z&) = default;
};

/// Gauss reduction into |Re| <= 1/2, |tau| >= 1. On the boundary, Re = 1/2
/// is sent to -1/2 and points of the unit circle with Re > 0 are inverted.
template <CoefficientField F>
std::pair<TauPoint<F>, SL2Z> reduce_to_fundamental_domain(const TauPoint<F>& tau, double tol = kDefaultTolerance)
{
    using T = FieldTraits<F>;
    using Real = typename T::Real;
    const SL2Z S{0, -1, 1, 0};
    auto equals = [&](const Real& x, const Real& y) {
        if constexpr (T::exact)
            return x == y;
        else
            return std::abs(x - y) <= tol;
    };
    auto norm = [](const F& w) { return Real(T::real(w) * T::real(w) + T::imag(w) * T::imag(w)); };
    Real half;
    if constexpr (T::exact)
        half = mpq_class(1, 2);
    else
        half = 0.5;

    F z = tau.value();
    SL2Z m;
    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw DomainError("fundamental domain reduction did not terminate");
        const std::int64_t n = T::round_half_up(Real(T::real(z)));
        if (n != 0) {
            z = z - F(static_cast<long>(n));
            m = SL2Z{1, -n, 0, 1} * m;
        }
        const Real r = norm(z);
        if (r < Real(1) && !equals(r, Real(1))) {
            z = F(-1) / z;
            m = S * m;
            continue;
        }
        break;
    }
    if (equals(Real(T::real(z)), half)) {
        z = z - F(1);
        m = SL2Z{1, -1, 0, 1} * m;
    }
    if (equals(norm(z), Real(1)) && T::real(z) > Real(0) && !equals(Real(T::real(z)), Real(0))) {
        z = F(-1) / z;
        m = S * m;
    }
    if constexpr (!T::exact) {
        // Snap float noise onto the boundary so equal classes compare equal.
        if (equals(T::real(z), -0.5)) z = F(-0.5, T::imag(z));
    }
    return {TauPoint<F>(z), m};
}

template <CoefficientField F>
bool are_isomorphic(const TauPoint<F>& x, const TauPoint<F>& y, double tol = kDefaultTolerance)
{
    const F rx = reduce_to_fundamental_domain(x, tol).first.value();
    const F ry = reduce_to_fundamental_domain(y, tol).first.value();
    if constexpr (FieldTraits<F>::exact)
        return rx == ry;
    else
        return std::abs(rx - ry) <= tol * std::max(1.0, std::abs(rx));
}

} // namespace plumbline
