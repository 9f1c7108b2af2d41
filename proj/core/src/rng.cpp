#include "plumbline/rng.hpp"

#include <limits>

namespace plumbline {

namespace {

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

// splitmix64 finalizer
std::uint64_t Rng::mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::string_view label) const { return Rng(mix(seed_ ^ fnv1a(label))); }

Rng Rng::substream(std::string_view label, std::uint64_t index) const
{
    return Rng(mix(mix(seed_ ^ fnv1a(label)) + index));
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo) throw RangeError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

mpq_class Rng::rational(std::int64_t num_bound, std::int64_t den_bound)
{
    const long num = static_cast<long>(uniform_int(-num_bound, num_bound));
    const long den = static_cast<long>(uniform_int(1, den_bound));
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

mpq_class Rng::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound)
{
    for (;;) {
        mpq_class q = rational(num_bound, den_bound);
        if (sgn(q) != 0) return q;
    }
}

GaussianRational Rng::gaussian(std::int64_t num_bound, std::int64_t den_bound)
{
    mpq_class re = rational(num_bound, den_bound);
    mpq_class im = rational(num_bound, den_bound);
    return {re, im};
}

GaussianRational Rng::nonzero_gaussian(std::int64_t num_bound, std::int64_t den_bound)
{
    for (;;) {
        GaussianRational z = gaussian(num_bound, den_bound);
        if (!z.is_zero()) return z;
    }
}

} // namespace plumbline
