#pragma once

// Sparse truncated multivariate polynomials ("jets"). A JetRing fixes the
// variable names, the coefficient field and a total-degree truncation order;
// every Jet in the ring silently drops monomials above that order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plumbline/errors.hpp"
#include "plumbline/field.hpp"

namespace plumbline {

/// Exponent vector with its cached total degree. Ordered by degree first so
/// that iteration visits low-degree terms first.
struct Monomial {
    int degree = 0;
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exponents(std::move(exps))
    {
        for (int e : exponents) {
            if (e < 0) throw RangeError("negative exponent");
            degree += e;
        }
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        // Within a degree, larger leading exponents come first (t1 before t2).
        return b.exponents <=> a.exponents;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        m.exponents.resize(a.exponents.size());
        for (std::size_t k = 0; k < a.exponents.size(); ++k) m.exponents[k] = a.exponents[k] + b.exponents[k];
        m.degree = a.degree + b.degree;
        return m;
    }
};

template <CoefficientField F>
class Jet;

template <CoefficientField F>
class JetRing {
public:
    JetRing(std::vector<std::string> variables, int truncation_order)
        : data_(std::make_shared<Data>(Data{std::move(variables), truncation_order}))
    {
        if (truncation_order < 0) throw RangeError("truncation order must be >= 0");
        auto sorted = data_->variables;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw StructuralError("jet ring variable names must be distinct");
    }

    const std::vector<std::string>& variables() const { return data_->variables; }
    std::size_t num_variables() const { return data_->variables.size(); }
    int truncation_order() const { return data_->order; }
    static constexpr FieldKind field() { return FieldTraits<F>::kind; }

    std::size_t index_of(const std::string& name) const
    {
        const auto& vars = data_->variables;
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw StructuralError("variable '" + name + "' is not declared in the jet ring");
        return static_cast<std::size_t>(it - vars.begin());
    }
    bool has_variable(const std::string& name) const
    {
        const auto& vars = data_->variables;
        return std::find(vars.begin(), vars.end(), name) != vars.end();
    }

    Jet<F> zero() const { return Jet<F>(*this); }
    Jet<F> constant(const F& c) const { return monomial(std::vector<int>(num_variables(), 0), c); }
    Jet<F> one() const { return constant(F(1)); }
    Jet<F> variable(const std::string& name) const { return variable(index_of(name)); }
    Jet<F> variable(std::size_t index) const
    {
        if (index >= num_variables()) throw RangeError("variable index out of range");
        std::vector<int> e(num_variables(), 0);
        e[index] = 1;
        return monomial(std::move(e), F(1));
    }
    Jet<F> monomial(std::vector<int> exponents, const F& coeff) const
    {
        Jet<F> j(*this);
        j.add_term(Monomial(check_length(std::move(exponents))), coeff);
        return j;
    }

    friend bool operator==(const JetRing& a, const JetRing& b)
    {
        return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->variables == b.data_->variables);
    }

    std::vector<int> check_length(std::vector<int> exps) const
    {
        if (exps.size() != num_variables()) throw StructuralError("exponent vector length does not match the ring");
        return exps;
    }

private:
    struct Data {
        std::vector<std::string> variables;
        int order;
    };
    std::shared_ptr<const Data> data_;
};

template <CoefficientField F>
class Jet {
public:
    using Terms = std::map<Monomial, F>;

    explicit Jet(JetRing<F> ring) : ring_(std::move(ring)) {}

    const JetRing<F>& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    F coefficient(const std::vector<int>& exponents) const
    {
        Monomial m(ring_.check_length(exponents));
        auto it = terms_.find(m);
        return it == terms_.end() ? F(0) : it->second;
    }

    /// Largest coefficient modulus; the scale used by float zero tests.
    double max_magnitude() const
    {
        double m = 0.0;
        for (const auto& [mono, c] : terms_) m = std::max(m, FieldTraits<F>::magnitude(c));
        return m;
    }

    /// Lowest total degree carrying a non-negligible coefficient, if any.
    std::optional<int> lowest_degree(double tol = kDefaultTolerance) const
    {
        const double scale = max_magnitude();
        for (const auto& [mono, c] : terms_)
            if (!FieldTraits<F>::negligible(c, scale, tol)) return mono.degree;
        return std::nullopt;
    }

    /// True iff every coefficient of total degree <= d is zero (exact) or
    /// below tol relative to the largest coefficient modulus (float).
    bool vanishes_through_degree(int d, double tol = kDefaultTolerance) const
    {
        if (d > ring_.truncation_order())
            throw RangeError("vanishing degree " + std::to_string(d) + " exceeds truncation order " +
                             std::to_string(ring_.truncation_order()));
        auto low = lowest_degree(tol);
        return !low || *low > d;
    }

    Jet truncated(int d) const
    {
        Jet out(ring_);
        for (const auto& [mono, c] : terms_) {
            if (mono.degree > d) break;
            out.terms_.emplace(mono, c);
        }
        return out;
    }

    /// Homogeneous part of total degree d.
    Jet degree_part(int d) const
    {
        Jet out(ring_);
        for (const auto& [mono, c] : terms_)
            if (mono.degree == d) out.terms_.emplace(mono, c);
        return out;
    }

    F evaluate(std::span<const F> point) const
    {
        if (point.size() != ring_.num_variables()) throw StructuralError("evaluation point has wrong dimension");
        F sum(0);
        for (const auto& [mono, c] : terms_) {
            F term = c;
            for (std::size_t k = 0; k < point.size(); ++k)
                for (int p = 0; p < mono.exponents[k]; ++p) term *= point[k];
            sum += term;
        }
        return sum;
    }

    Jet operator-() const
    {
        Jet out(*this);
        for (auto& [mono, c] : out.terms_) c = -c;
        return out;
    }

    Jet& operator+=(const Jet& o)
    {
        if (this == &o) return *this += Jet(o);
        require_same_ring(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    Jet& operator-=(const Jet& o)
    {
        if (this == &o) return *this -= Jet(o);
        require_same_ring(o);
        for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
        return *this;
    }
    Jet& operator*=(const F& s)
    {
        if (s == F(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [mono, c] : terms_) c *= s;
        return *this;
    }
    Jet& operator*=(const Jet& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const F& s) { return a *= s; }
    friend Jet operator*(const F& s, Jet a) { return a *= s; }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        a.require_same_ring(b);
        const int order = a.ring_.truncation_order();
        Jet out(a.ring_);
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.degree > order) break;
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.degree + mb.degree > order) break;
                auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca);
                if (inserted)
                    it->second *= cb;
                else
                    it->second += ca * cb;
            }
        }
        std::erase_if(out.terms_, [](const auto& kv) { return kv.second == F(0); });
        return out;
    }

    friend bool operator==(const Jet& a, const Jet& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

    /// Coefficientwise comparison with tolerance relative to the larger operand.
    bool approx_equal(const Jet& o, double tol = kDefaultTolerance) const
    {
        Jet diff = *this - o;
        const double scale = std::max({max_magnitude(), o.max_magnitude(), 1e-300});
        for (const auto& [mono, c] : diff.terms_)
            if (!FieldTraits<F>::negligible(c, scale, tol)) return false;
        return true;
    }

    /// Adds c * mono, dropping it when above the truncation order.
    void add_term(const Monomial& mono, const F& c)
    {
        if (mono.degree > ring_.truncation_order()) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) it->second += c;
        if (it->second == F(0)) terms_.erase(it);
    }

private:
    void require_same_ring(const Jet& o) const
    {
        if (!(ring_ == o.ring_)) throw StructuralError("jet ring mismatch");
    }

    JetRing<F> ring_;
    Terms terms_;
};

using ExactJet = Jet<GaussianRational>;
using FloatJet = Jet<Complex>;

} // namespace plumbline
