#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycleguess/core.hpp"

namespace cycleguess {

// The broadcast for an odd cycle C_n over s = a*b colours: (n-1)/2 residues
// mod a pairing first coordinates, (n-1)/2 residues mod b pairing second
// coordinates, and one seam residue mod b tying vertex 1 to vertex n.
// Message-space size is a^((n-1)/2) * b^((n+1)/2) = b * s^((n-1)/2).
struct Broadcast {
    int n = 0;
    ColourSpace space;
    std::vector<int> phi_residues; // mod a, index i-1 pairs (2i-1, 2i)
    std::vector<int> psi_residues; // mod b, index i-1 pairs (2i, 2i+1)
    int seam_residue = 0;          // mod b, pairs psi(c_1) with phi(c_n)

    void validate() const;
};

Broadcast encode(const Colouring& c, const ColourSpace& space, int n);

// Recovers c_i from the broadcast and the two neighbour colours
// (left = c_{i-1} with c_0 = c_n, right = c_{i+1} with c_{n+1} = c_1).
// Inputs inconsistent with any real colouring yield some colour; only a
// roundtrip check detects them.
int decode(int i, int left, int right, const Broadcast& msg);

// b * s^((n-1)/2); rejects even n, throws on 64-bit overflow.
std::uint64_t message_space_size(int n, const ColourSpace& space);

// Wire format: mixed-radix packing into [0, message_space_size), with the
// phi residues least significant (ascending i), then the psi residues,
// then the seam.
std::uint64_t pack(const Broadcast& msg);
Broadcast unpack(std::uint64_t value, int n, const ColourSpace& space);

// Human-readable residue list, e.g. "phi=1,0 psi=0,0 seam=2".
std::string format_residues(const Broadcast& msg);

} // namespace cycleguess
