#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycleguess/config.hpp"
#include "cycleguess/protocol.hpp"

namespace cycleguess {

// View over an enumerated fixed set treated as a uniform distribution on
// its members. All entropies are exact (computed from integer counts) and
// measured in base-s units. Coordinates are addressed with 1-based vertex
// indices, matching the cycle labelling used everywhere else.
class EmpiricalDistribution {
  public:
    explicit EmpiricalDistribution(const FixedSet& fs);

    int n() const { return n_; }
    int s() const { return s_; }
    std::uint64_t size() const { return members_->size(); }

    // Joint entropy of the coordinates named by `indices` (1-based,
    // duplicates collapse, order irrelevant).
    double joint_entropy(const std::vector<int>& indices) const;

    // I(A;B) and I(A;B|C) for disjoint index groups, base s.
    double mutual_information(const std::vector<int>& a,
                              const std::vector<int>& b) const;
    double conditional_mutual_information(const std::vector<int>& a,
                                          const std::vector<int>& b,
                                          const std::vector<int>& cond) const;

    // Segment functional: h(j..k-1) + h(j+1..k) for 1 <= j < k <= n.
    double h_range(int j, int k) const;

  private:
    const std::vector<Colouring>* members_;
    int n_;
    int s_;
};

// One audited relation. `slack` is rhs - lhs for inequalities (lhs <= rhs)
// and -|lhs - rhs| for equalities, so pass means slack >= -tolerance in
// both cases.
struct InequalityRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool equality = false;
    bool pass = false;
};

struct EntropyReport {
    int n = 0;
    int s = 0;
    std::uint64_t fix_count = 0;
    double total_entropy = 0.0;        // H(X) = log_s fix
    std::vector<double> single_entropy; // h(i), i = 1..n
    double tolerance = 0.0;
    bool exhaustive = true;            // false when families were sampled
    std::vector<InequalityRecord> records;

    bool all_pass() const;
    std::string to_text() const;
};

// Audits the entropy identities and inequalities satisfied by the uniform
// distribution on Fix(p): per-vertex determinism, unit coordinate bounds,
// segment subadditivity and chains, partition bounds, the five-window
// bound with its constituent steps, and non-negativity of the conditional
// mutual information terms. Exhaustive for n <= 9; larger cycles audit a
// fixed-seed sample of 1000 instances per family.
EntropyReport audit_fixed_set(const FixedSet& fs, const RunConfig& cfg);
EntropyReport audit_identities(const Protocol& p, const RunConfig& cfg);

} // namespace cycleguess
