#include "cycleguess/core.hpp"

#include <stdexcept>
#include <string>

namespace cycleguess {

ColourSpace factorize(int s) {
    if (s < 2)
        throw std::invalid_argument("colour count must be at least 2, got " + std::to_string(s));
    int a = 1;
    for (int d = 1; static_cast<long long>(d) * d <= s; ++d)
        if (s % d == 0)
            a = d;
    return ColourSpace{s, a, s / a};
}

int phi(const ColourSpace& sp, int z) {
    if (z < 0 || z >= sp.s)
        throw std::invalid_argument("colour " + std::to_string(z) + " outside [0, " +
                                    std::to_string(sp.s) + ")");
    return z / sp.b;
}

int psi(const ColourSpace& sp, int z) {
    if (z < 0 || z >= sp.s)
        throw std::invalid_argument("colour " + std::to_string(z) + " outside [0, " +
                                    std::to_string(sp.s) + ")");
    return z % sp.b;
}

int pi(const ColourSpace& sp, int x, int y) {
    if (x < 0 || x >= sp.a)
        throw std::invalid_argument("first coordinate " + std::to_string(x) + " outside [0, " +
                                    std::to_string(sp.a) + ")");
    if (y < 0 || y >= sp.b)
        throw std::invalid_argument("second coordinate " + std::to_string(y) + " outside [0, " +
                                    std::to_string(sp.b) + ")");
    return x * sp.b + y;
}

Cycle::Cycle(int n_) : n(n_) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
}

std::uint64_t pow_u64_checked(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            return UINT64_MAX;
        r *= base;
    }
    return r;
}

std::uint64_t encode_colouring(const Colouring& c, int s) {
    std::uint64_t id = 0;
    for (int v : c) {
        if (v < 0 || v >= s)
            throw std::invalid_argument("colouring entry outside [0, s)");
        id = id * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(v);
    }
    return id;
}

Colouring decode_colouring(std::uint64_t id, int n, int s) {
    Colouring c(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(id % static_cast<std::uint64_t>(s));
        id /= static_cast<std::uint64_t>(s);
    }
    return c;
}

} // namespace cycleguess
