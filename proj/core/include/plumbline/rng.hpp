#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <gmpxx.h>

#include "plumbline/field.hpp"

namespace plumbline {

/// Seeded generator. Child streams are derived from (seed, label) only, so
/// adding a new consumer never shifts the draws of an existing one.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

    std::uint64_t seed() const { return seed_; }
    Rng substream(std::string_view label) const;
    Rng substream(std::string_view label, std::uint64_t index) const;

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi] by rejection; identical on every platform.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() & 1U) != 0; }

    /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
    mpq_class rational(std::int64_t num_bound = 9, std::int64_t den_bound = 7);
    mpq_class nonzero_rational(std::int64_t num_bound = 9, std::int64_t den_bound = 7);
    GaussianRational gaussian(std::int64_t num_bound = 9, std::int64_t den_bound = 7);
    GaussianRational nonzero_gaussian(std::int64_t num_bound = 9, std::int64_t den_bound = 7);

    /// Random element of field F built from exact rational draws.
    template <CoefficientField F>
    F scalar(bool nonzero = false)
    {
        GaussianRational z = nonzero ? nonzero_gaussian() : gaussian();
        return FieldTraits<F>::make(z.real(), z.imag());
    }

    static std::uint64_t mix(std::uint64_t x);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace plumbline
