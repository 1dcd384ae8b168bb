#pragma once

#include <cstdint>
#include <vector>

namespace cycleguess {

// s colours with the canonical factorization s = a*b, where a is the
// greatest divisor of s not exceeding sqrt(s). Perfect squares give
// a = b = sqrt(s); primes give a = 1, b = s.
struct ColourSpace {
    int s = 0;
    int a = 0;
    int b = 0;
};

ColourSpace factorize(int s);

// Canonical mixed-radix bijection Z_s <-> Z_a x Z_b:
//   phi(z) = z / b,  psi(z) = z mod b,  pi(x, y) = x*b + y.
int phi(const ColourSpace& sp, int z);
int psi(const ColourSpace& sp, int z);
int pi(const ColourSpace& sp, int x, int y);

// Cycle graph C_n. Vertices are 1..n externally; everything internal is
// 0-based with arithmetic modulo n.
struct Cycle {
    int n = 0;

    explicit Cycle(int n_);

    int prev(int i) const { return (i + n - 1) % n; }
    int next(int i) const { return (i + 1) % n; }
};

// A colouring is an n-tuple over Z_s, stored 0-based.
using Colouring = std::vector<int>;

// base^exp, or the sentinel UINT64_MAX on overflow.
std::uint64_t pow_u64_checked(std::uint64_t base, int exp);

// Mixed-radix bijection between colourings and integers in [0, s^n),
// with c_1 as the most significant digit. This is also lexicographic
// enumeration order.
std::uint64_t encode_colouring(const Colouring& c, int s);
Colouring decode_colouring(std::uint64_t id, int n, int s);

} // namespace cycleguess
