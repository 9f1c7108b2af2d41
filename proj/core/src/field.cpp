#include "plumbline/field.hpp"

#include <cctype>
#include <ostream>

namespace plumbline {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpq_class parse_integer(std::string_view s)
{
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw DomainError("malformed rational: '" + std::string(s) + "'");
    mpz_class z(std::string(body), 10);
    if (negative) z = -z;
    return mpq_class(z);
}

mpq_class pow10(long e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return mpq_class(p);
    mpq_class q(mpz_class(1), p);
    q.canonicalize();
    return q;
}

mpq_class parse_decimal(std::string_view s)
{
    std::string_view mantissa = s;
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = s.substr(0, epos);
        std::string_view exp_text = s.substr(epos + 1);
        mpq_class e = parse_integer(exp_text);
        exponent = e.get_num().get_si();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = mantissa.substr(0, dot);
        std::string_view frac_part = mantissa.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty()))
            throw DomainError("malformed decimal: '" + std::string(s) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        frac_digits = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(mantissa)) throw DomainError("malformed decimal: '" + std::string(s) + "'");
        digits = std::string(mantissa);
    }
    mpq_class value(mpz_class(digits, 10));
    value *= pow10(exponent - frac_digits);
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

} // namespace

mpq_class parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpq_class num = parse_integer(text.substr(0, slash));
        mpq_class den = parse_integer(text.substr(slash + 1));
        if (sgn(den) == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        mpq_class q = num / den;
        q.canonicalize();
        return q;
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return parse_integer(text);
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    mpq_class n = o.norm();
    if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0) return rational_to_string(re_);
    std::string out;
    if (sgn(re_) != 0) out = rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "");
    return out + rational_to_string(im_) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::int64_t FieldTraits<GaussianRational>::round_half_up(const mpq_class& x)
{
    mpq_class shifted = x + mpq_class(1, 2);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    if (!q.fits_slong_p()) throw RangeError("rounding overflow");
    return q.get_si();
}

const char* field_name(FieldKind kind)
{
    return kind == FieldKind::ExactGaussianRational ? "exact" : "numeric";
}

} // namespace plumbline
