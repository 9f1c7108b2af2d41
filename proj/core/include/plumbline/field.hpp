#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "plumbline/errors.hpp"

namespace plumbline {

enum class FieldKind { ExactGaussianRational, ComplexFloat };

inline constexpr double kDefaultTolerance = 1e-10;

using Complex = std::complex<double>;

/// Parses "p/q", "p", or a decimal literal such as "-1.25e-3" into an exact rational.
mpq_class parse_rational(std::string_view text);

/// Canonical text of a rational: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const mpq_class& q);

/// Exact complex number with arbitrary-precision rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}
    GaussianRational(long re) : re_(re) {}
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
    std::string to_string() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
    using Real = mpq_class;
    static constexpr FieldKind kind = FieldKind::ExactGaussianRational;
    static constexpr bool exact = true;

    static GaussianRational make(const mpq_class& re, const mpq_class& im) { return {re, im}; }
    static const mpq_class& real(const GaussianRational& z) { return z.real(); }
    static const mpq_class& imag(const GaussianRational& z) { return z.imag(); }
    static double magnitude(const GaussianRational& z) { return std::abs(z.to_complex()); }
    /// Exact fields ignore the scale and tolerance.
    static bool negligible(const GaussianRational& z, double /*scale*/, double /*tol*/) { return z.is_zero(); }
    /// floor(x + 1/2).
    static std::int64_t round_half_up(const mpq_class& x);
};

template <>
struct FieldTraits<Complex> {
    using Real = double;
    static constexpr FieldKind kind = FieldKind::ComplexFloat;
    static constexpr bool exact = false;

    static Complex make(const mpq_class& re, const mpq_class& im) { return {re.get_d(), im.get_d()}; }
    static double real(const Complex& z) { return z.real(); }
    static double imag(const Complex& z) { return z.imag(); }
    static double magnitude(const Complex& z) { return std::abs(z); }
    static bool negligible(const Complex& z, double scale, double tol) { return std::abs(z) <= tol * scale; }
    static std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }
};

template <class T>
concept CoefficientField = requires { FieldTraits<T>::kind; };

inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

const char* field_name(FieldKind kind);

} // namespace plumbline
