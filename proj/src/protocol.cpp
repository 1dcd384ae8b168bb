#include "cycleguess/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cycleguess/errors.hpp"

namespace cycleguess {

namespace {

// Advance the odometer by one in lexicographic order (c_1 most significant).
void increment_colouring(Colouring& c, int s) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < s)
            return;
        c[i] = 0;
    }
}

std::vector<Colouring> enumerate_range(const Protocol& p, std::uint64_t lo, std::uint64_t hi) {
    const int n = p.cycle.n;
    const int s = p.space.s;
    std::vector<Colouring> found;
    Colouring c = decode_colouring(lo, n, s);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (is_fixed_point(p, c))
            found.push_back(c);
        increment_colouring(c, s);
    }
    return found;
}

} // namespace

Protocol::Protocol(ColourSpace sp, Cycle cy, std::vector<std::vector<int>> tb)
    : space(sp), cycle(cy), tables(std::move(tb)) {
    if (static_cast<int>(tables.size()) != cycle.n)
        throw std::invalid_argument("protocol needs one table per vertex");
    const std::size_t cells = static_cast<std::size_t>(space.s) * space.s;
    for (const auto& t : tables) {
        if (t.size() != cells)
            throw std::invalid_argument("guess table must be s*s");
        for (int g : t)
            if (g < 0 || g >= space.s)
                throw std::invalid_argument("guess value outside colour range");
    }
}

RoundDownSpec::RoundDownSpec(int m_, int t_) : m(m_), t(t_), s(m_ * m_ - t_) {
    if (t < 0)
        throw std::invalid_argument("round-down shift t must be non-negative");
    if (s < 2)
        throw std::invalid_argument("m^2 - t must be at least 2");
}

Colouring evaluate(const Protocol& p, const Colouring& c) {
    const int n = p.cycle.n;
    const int s = p.space.s;
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("colouring length does not match the cycle");
    for (int v : c)
        if (v < 0 || v >= s)
            throw std::invalid_argument("colouring entry outside [0, s)");
    Colouring out(n);
    for (int i = 0; i < n; ++i)
        out[i] = p.guess(i, c[p.cycle.prev(i)], c[p.cycle.next(i)]);
    return out;
}

bool is_fixed_point(const Protocol& p, const Colouring& c) {
    const int n = p.cycle.n;
    for (int i = 0; i < n; ++i)
        if (c[i] != p.guess(i, c[p.cycle.prev(i)], c[p.cycle.next(i)]))
            return false;
    return true;
}

FixedSet enumerate_fixed_set(const Protocol& p, std::uint64_t budget, int threads) {
    const int n = p.cycle.n;
    const int s = p.space.s;
    const std::uint64_t total = pow_u64_checked(static_cast<std::uint64_t>(s), n);
    if (total == UINT64_MAX || total > budget)
        throw budget_error("enumeration of s^n = " + std::to_string(s) + "^" +
                           std::to_string(n) + " colourings exceeds the enumeration budget of " +
                           std::to_string(budget));

    FixedSet fs;
    fs.n = n;
    fs.s = s;

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(
                                                               std::min<std::uint64_t>(total, 64))));
    if (workers == 1) {
        fs.members = enumerate_range(p, 0, total);
        return fs;
    }

    std::vector<std::vector<Colouring>> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = chunk * w;
        const std::uint64_t hi = (w + 1 == workers) ? total : chunk * (w + 1);
        pool.emplace_back([&, w, lo, hi] { parts[w] = enumerate_range(p, lo, hi); });
    }
    for (auto& th : pool)
        th.join();
    for (auto& part : parts)
        fs.members.insert(fs.members.end(), part.begin(), part.end());
    return fs;
}

Protocol build_fcp(int n, int s) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("the fractional-clique-partition protocol needs odd n >= 3, got n = " +
                                    std::to_string(n));
    const ColourSpace sp = factorize(s);
    std::vector<std::vector<int>> tables(n, std::vector<int>(static_cast<std::size_t>(s) * s));
    for (int i = 1; i <= n; ++i) {
        auto& t = tables[i - 1];
        for (int left = 0; left < s; ++left) {
            for (int right = 0; right < s; ++right) {
                int g;
                if (i == 1) {
                    // f_1(c_n, c_2) = pi(phi(c_2), phi(c_n)); phi(c_n) in Z_a
                    // embeds into Z_b by value (a <= b).
                    g = pi(sp, phi(sp, right), phi(sp, left));
                } else if (i == n) {
                    // f_n(c_{n-1}, c_1) = pi(psi(c_1) mod a, psi(c_{n-1}))
                    g = pi(sp, psi(sp, right) % sp.a, psi(sp, left));
                } else if (i % 2 == 0) {
                    g = pi(sp, phi(sp, left), psi(sp, right));
                } else {
                    g = pi(sp, phi(sp, right), psi(sp, left));
                }
                t[left * s + right] = g;
            }
        }
    }
    return Protocol(sp, Cycle(n), std::move(tables));
}

std::uint64_t fcp_fix_formula(int n, int s) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("formula requires odd n >= 3");
    const ColourSpace sp = factorize(s);
    std::uint64_t r = sp.a;
    for (int i = 0; i < (n - 1) / 2; ++i)
        r *= static_cast<std::uint64_t>(s);
    return r;
}

Protocol restrict_protocol(const Protocol& p, int s_prime) {
    const int s = p.space.s;
    if (s_prime < 2 || s_prime > s)
        throw std::invalid_argument("restriction needs 2 <= s' <= s");
    const ColourSpace sp = factorize(s_prime);
    std::vector<std::vector<int>> tables(p.cycle.n,
                                         std::vector<int>(static_cast<std::size_t>(s_prime) * s_prime));
    for (int i = 0; i < p.cycle.n; ++i)
        for (int left = 0; left < s_prime; ++left)
            for (int right = 0; right < s_prime; ++right) {
                const int g = p.guess(i, left, right);
                tables[i][left * s_prime + right] = (g < s_prime) ? g : 0;
            }
    return Protocol(sp, p.cycle, std::move(tables));
}

double round_down_bound(const RoundDownSpec& spec, int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("round-down bound requires odd n >= 3");
    const double s = spec.s;
    return std::pow(s, n / 2.0) * (1.0 - spec.t * static_cast<double>(n) / s);
}

void write_protocol(std::ostream& os, const Protocol& p) {
    const int s = p.space.s;
    os << "cycleguess-protocol v1\n";
    os << "n=" << p.cycle.n << " s=" << s << "\n";
    for (const auto& t : p.tables)
        for (int left = 0; left < s; ++left) {
            for (int right = 0; right < s; ++right)
                os << (right ? " " : "") << t[left * s + right];
            os << "\n";
        }
}

Protocol read_protocol(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header != "cycleguess-protocol v1")
        throw std::invalid_argument("bad protocol file: expected header 'cycleguess-protocol v1'");
    std::string dims;
    if (!std::getline(is, dims))
        throw std::invalid_argument("bad protocol file: missing dimension line");
    int n = 0, s = 0;
    if (std::sscanf(dims.c_str(), "n=%d s=%d", &n, &s) != 2)
        throw std::invalid_argument("bad protocol file: dimension line must be 'n=<n> s=<s>'");
    if (n < 3 || s < 2)
        throw std::invalid_argument("bad protocol file: need n >= 3 and s >= 2");
    std::vector<std::vector<int>> tables(n, std::vector<int>(static_cast<std::size_t>(s) * s));
    for (int i = 0; i < n; ++i)
        for (int cell = 0; cell < s * s; ++cell) {
            int g;
            if (!(is >> g))
                throw std::invalid_argument("bad protocol file: truncated guess tables");
            if (g < 0 || g >= s)
                throw std::invalid_argument("bad protocol file: guess outside [0, s)");
            tables[i][cell] = g;
        }
    return Protocol(factorize(s), Cycle(n), std::move(tables));
}

Protocol read_protocol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open protocol file " + path);
    return read_protocol(in);
}

void write_protocol_file(const std::string& path, const Protocol& p) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write protocol file " + path);
    write_protocol(out, p);
}

void write_fixed_set(std::ostream& os, const FixedSet& fs) {
    for (const auto& c : fs.members) {
        for (std::size_t i = 0; i < c.size(); ++i)
            os << (i ? " " : "") << c[i];
        os << "\n";
    }
}

} // namespace cycleguess
