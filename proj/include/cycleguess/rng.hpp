#pragma once

#include <cstdint>
#include <random>

namespace cycleguess {

// mt19937_64 raw output is portable; std::uniform_int_distribution is not.
// All seeded randomness in the project goes through these two helpers so
// identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, m), unbiased via rejection.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % m;
    }

    // Uniform double in (0, 1]; never returns 0 so -log is safe.
    double unit() {
        return (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace cycleguess
