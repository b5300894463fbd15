#pragma once

#include "mitl/formula.hpp"
#include "mitl/signal.hpp"

#include <cstdint>
#include <vector>

namespace mitl {

/// splitmix64 stream. Deliberately not std::mt19937 + distributions: results
/// must be bit-identical across standard libraries so that failing seeds can
/// be replayed anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <typename T>
    const T& pick(const std::vector<T>& options) {
        return options[below(options.size())];
    }

private:
    std::uint64_t state_;
};

/// Random formula of syntax-tree height at most max_depth over the given
/// atoms, with a mix of boolean and decorated temporal connectives.
Formula random_formula(Rng& rng, int max_depth, const std::vector<std::string>& atoms);

/// Random non-empty decoration interval with 0 < inf <= sup < inf (suitable
/// as the decoration of a witness-extraction instance).
Interval random_bounded_positive_interval(Rng& rng);

/// Random decoration interval: may touch 0, reach inf, be a singleton or be
/// empty.
Interval random_decoration(Rng& rng);

}  // namespace mitl
