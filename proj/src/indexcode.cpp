#include "cycleguess/indexcode.hpp"

#include <stdexcept>

#include "cycleguess/errors.hpp"

namespace cycleguess {

namespace {

void require_odd(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("the cycle broadcast needs odd n >= 3, got n = " +
                                    std::to_string(n));
}

} // namespace

void Broadcast::validate() const {
    require_odd(n);
    const int half = (n - 1) / 2;
    if (static_cast<int>(phi_residues.size()) != half ||
        static_cast<int>(psi_residues.size()) != half)
        throw std::invalid_argument("broadcast needs (n-1)/2 residues of each kind");
    for (int r : phi_residues)
        if (r < 0 || r >= space.a)
            throw std::invalid_argument("first-coordinate residue outside [0, a)");
    for (int r : psi_residues)
        if (r < 0 || r >= space.b)
            throw std::invalid_argument("second-coordinate residue outside [0, b)");
    if (seam_residue < 0 || seam_residue >= space.b)
        throw std::invalid_argument("seam residue outside [0, b)");
}

Broadcast encode(const Colouring& c, const ColourSpace& space, int n) {
    require_odd(n);
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("colouring length does not match n");

    Broadcast msg;
    msg.n = n;
    msg.space = space;
    for (int i = 1; i <= (n - 1) / 2; ++i) {
        msg.phi_residues.push_back((phi(space, c[2 * i - 2]) + phi(space, c[2 * i - 1])) % space.a);
        msg.psi_residues.push_back((psi(space, c[2 * i - 1]) + psi(space, c[2 * i])) % space.b);
    }
    msg.seam_residue = (psi(space, c[0]) + phi(space, c[n - 1])) % space.b;
    return msg;
}

int decode(int v, int left, int right, const Broadcast& msg) {
    msg.validate();
    const int n = msg.n;
    const ColourSpace& sp = msg.space;
    if (v < 1 || v > n)
        throw std::invalid_argument("vertex index " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
    if (left < 0 || left >= sp.s || right < 0 || right >= sp.s)
        throw std::invalid_argument("neighbour colour outside [0, s)");

    int phi_v;
    if (v == n) {
        // Seam: phi(c_n) = seam - psi(c_1), computed mod b; consistent
        // inputs always land below a.
        phi_v = ((msg.seam_residue - psi(sp, right)) % sp.b + sp.b) % sp.b % sp.a;
    } else if (v % 2 == 1) {
        const int i = (v + 1) / 2; // pair (v, v+1)
        phi_v = ((msg.phi_residues[i - 1] - phi(sp, right)) % sp.a + sp.a) % sp.a;
    } else {
        const int i = v / 2; // pair (v-1, v)
        phi_v = ((msg.phi_residues[i - 1] - phi(sp, left)) % sp.a + sp.a) % sp.a;
    }

    int psi_v;
    if (v == 1) {
        // Seam: psi(c_1) = seam - phi(c_n), and vertex 1 sees c_n.
        psi_v = ((msg.seam_residue - phi(sp, left)) % sp.b + sp.b) % sp.b;
    } else if (v % 2 == 0) {
        const int i = v / 2; // pair (v, v+1)
        psi_v = ((msg.psi_residues[i - 1] - psi(sp, right)) % sp.b + sp.b) % sp.b;
    } else {
        const int i = (v - 1) / 2; // pair (v-1, v)
        psi_v = ((msg.psi_residues[i - 1] - psi(sp, left)) % sp.b + sp.b) % sp.b;
    }

    return pi(sp, phi_v, psi_v);
}

std::uint64_t message_space_size(int n, const ColourSpace& space) {
    require_odd(n);
    std::uint64_t m = static_cast<std::uint64_t>(space.b);
    for (int i = 0; i < (n - 1) / 2; ++i) {
        const std::uint64_t next = m * static_cast<std::uint64_t>(space.s);
        if (next / static_cast<std::uint64_t>(space.s) != m)
            throw budget_error("message-space size b * s^((n-1)/2) overflows 64 bits");
        m = next;
    }
    return m;
}

std::uint64_t pack(const Broadcast& msg) {
    msg.validate();
    std::uint64_t value = 0;
    std::uint64_t place = 1;
    for (int r : msg.phi_residues) {
        value += place * static_cast<std::uint64_t>(r);
        place *= static_cast<std::uint64_t>(msg.space.a);
    }
    for (int r : msg.psi_residues) {
        value += place * static_cast<std::uint64_t>(r);
        place *= static_cast<std::uint64_t>(msg.space.b);
    }
    value += place * static_cast<std::uint64_t>(msg.seam_residue);
    return value;
}

Broadcast unpack(std::uint64_t value, int n, const ColourSpace& space) {
    require_odd(n);
    if (value >= message_space_size(n, space))
        throw std::invalid_argument("packed broadcast outside the message space");
    Broadcast msg;
    msg.n = n;
    msg.space = space;
    for (int i = 0; i < (n - 1) / 2; ++i) {
        msg.phi_residues.push_back(static_cast<int>(value % static_cast<std::uint64_t>(space.a)));
        value /= static_cast<std::uint64_t>(space.a);
    }
    for (int i = 0; i < (n - 1) / 2; ++i) {
        msg.psi_residues.push_back(static_cast<int>(value % static_cast<std::uint64_t>(space.b)));
        value /= static_cast<std::uint64_t>(space.b);
    }
    msg.seam_residue = static_cast<int>(value);
    msg.validate();
    return msg;
}

std::string format_residues(const Broadcast& msg) {
    auto join = [](const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out;
    };
    return "phi=" + join(msg.phi_residues) + " psi=" + join(msg.psi_residues) +
           " seam=" + std::to_string(msg.seam_residue);
}

} // namespace cycleguess
