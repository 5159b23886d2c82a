#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace glcq {

/// Seeded deterministic RNG for test sampling. Draws are reduced by modulo
/// (not std::uniform_int_distribution) so a given seed produces the same
/// sequence on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(raw() % span);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<long long>(v.size()) - 1))];
    }

private:
    std::mt19937_64 gen_;
};

} // namespace glcq
