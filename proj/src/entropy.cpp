#include "cycleguess/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "cycleguess/errors.hpp"
#include "cycleguess/report.hpp"
#include "cycleguess/rng.hpp"

namespace cycleguess {

namespace {

// Validates 1-based indices, sorts, and removes duplicates.
std::vector<int> normalize_indices(int n, const std::vector<int>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (int i : indices) {
        if (i < 1 || i > n)
            throw std::invalid_argument("coordinate index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(n));
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> merge_indices(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void require_disjoint(const std::vector<int>& a, const std::vector<int>& b,
                      const char* what) {
    std::set<int> seen(a.begin(), a.end());
    for (int i : b)
        if (seen.count(i))
            throw std::invalid_argument(std::string(what) +
                                        ": index groups share coordinate " +
                                        std::to_string(i));
}

} // namespace

EmpiricalDistribution::EmpiricalDistribution(const FixedSet& fs)
    : members_(&fs.members), n_(fs.n), s_(fs.s) {
    if (fs.members.empty())
        throw trivial_protocol_error("fixed set is empty; no distribution to audit");
    if (fs.n < 1 || fs.s < 2)
        throw std::invalid_argument("fixed set has invalid dimensions");
}

double EmpiricalDistribution::joint_entropy(const std::vector<int>& indices) const {
    const std::vector<int> idx = normalize_indices(n_, indices);
    if (idx.empty()) return 0.0;

    // Projection keys fit in 64 bits: s^|idx| <= s^n, and the fixed set was
    // enumerable, so s^n is far below 2^64.
    std::vector<std::uint64_t> keys;
    keys.reserve(members_->size());
    for (const Colouring& c : *members_) {
        std::uint64_t key = 0;
        for (int i : idx) key = key * static_cast<std::uint64_t>(s_) +
                                static_cast<std::uint64_t>(c[static_cast<size_t>(i) - 1]);
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());

    const double total = static_cast<double>(keys.size());
    double weighted = 0.0; // sum of m * ln m over projection classes
    size_t run_start = 0;
    for (size_t i = 1; i <= keys.size(); ++i) {
        if (i == keys.size() || keys[i] != keys[run_start]) {
            const double m = static_cast<double>(i - run_start);
            weighted += m * std::log(m);
            run_start = i;
        }
    }
    return (std::log(total) - weighted / total) / std::log(static_cast<double>(s_));
}

double EmpiricalDistribution::mutual_information(const std::vector<int>& a,
                                                 const std::vector<int>& b) const {
    const auto na = normalize_indices(n_, a);
    const auto nb = normalize_indices(n_, b);
    require_disjoint(na, nb, "mutual_information");
    return joint_entropy(na) + joint_entropy(nb) - joint_entropy(merge_indices(na, nb));
}

double EmpiricalDistribution::conditional_mutual_information(
    const std::vector<int>& a, const std::vector<int>& b,
    const std::vector<int>& cond) const {
    const auto na = normalize_indices(n_, a);
    const auto nb = normalize_indices(n_, b);
    const auto nc = normalize_indices(n_, cond);
    require_disjoint(na, nb, "conditional_mutual_information");
    require_disjoint(na, nc, "conditional_mutual_information");
    require_disjoint(nb, nc, "conditional_mutual_information");
    return joint_entropy(merge_indices(na, nc)) + joint_entropy(merge_indices(nb, nc)) -
           joint_entropy(merge_indices(merge_indices(na, nb), nc)) - joint_entropy(nc);
}

double EmpiricalDistribution::h_range(int j, int k) const {
    if (j < 1 || k <= j || k > n_)
        throw std::invalid_argument("h_range requires 1 <= j < k <= n");
    std::vector<int> lo, hi;
    for (int i = j; i <= k - 1; ++i) lo.push_back(i);
    for (int i = j + 1; i <= k; ++i) hi.push_back(i);
    return joint_entropy(lo) + joint_entropy(hi);
}

bool EntropyReport::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string EntropyReport::to_text() const {
    Doc doc("entropy-audit");
    doc.kv("n", n);
    doc.kv("s", s);
    doc.kv("fix", fix_count);
    doc.kv("total_entropy", total_entropy);
    doc.kv("tolerance", tolerance);
    doc.kv("exhaustive", exhaustive);
    for (size_t i = 0; i < single_entropy.size(); ++i)
        doc.kv("h." + std::to_string(i + 1), single_entropy[i]);
    doc.kv("records", static_cast<std::uint64_t>(records.size()));
    std::uint64_t fails = 0;
    for (const auto& r : records)
        if (!r.pass) ++fails;
    doc.kv("failures", fails);
    doc.kv("all_pass", all_pass());
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const std::string p = "record." + std::to_string(i + 1) + ".";
        doc.kv(p + "name", r.name);
        doc.kv(p + "relation", r.equality ? "eq" : "le");
        doc.kv(p + "lhs", r.lhs);
        doc.kv(p + "rhs", r.rhs);
        doc.kv(p + "slack", r.slack);
        doc.kv(p + "pass", r.pass);
    }
    return doc.str();
}

namespace {

// Shared state for building the audit record list. Entropies are memoized
// on the normalized index set since the families overlap heavily.
class Auditor {
  public:
    Auditor(const EmpiricalDistribution& d, double tol, std::vector<InequalityRecord>& out)
        : d_(d), n_(d.n()), tol_(tol), out_(out) {}

    int wrap(int i) const { return (i - 1) % n_ + 1; } // i >= 1

    double h(std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        auto it = memo_.find(idx);
        if (it != memo_.end()) return it->second;
        const double v = d_.joint_entropy(idx);
        memo_.emplace(std::move(idx), v);
        return v;
    }

    // h over raw (possibly > n) indices, wrapped onto the cycle.
    double hw(std::initializer_list<int> raw) {
        std::vector<int> idx;
        for (int i : raw) idx.push_back(wrap(i));
        return h(std::move(idx));
    }

    double hw_run(int a, int b) { // h(a, a+1, ..., b) wrapped
        std::vector<int> idx;
        for (int i = a; i <= b; ++i) idx.push_back(wrap(i));
        return h(std::move(idx));
    }

    double segment(int j, int k) { // H_j^k, plain indices 1 <= j < k <= n
        return hw_run(j, k - 1) + hw_run(j + 1, k);
    }

    double window5(int j) { // H_j^{j+4} with cyclic wrap
        return hw_run(j, j + 3) + hw_run(j + 1, j + 4);
    }

    double cmi(int a, int b, int c) { // I(X_a; X_b | X_c), raw indices
        return hw({a, c}) + hw({b, c}) - hw({a, b, c}) - hw({c});
    }

    void le(std::string name, double lhs, double rhs) {
        add(std::move(name), lhs, rhs, /*equality=*/false);
    }

    void eq(std::string name, double lhs, double rhs) {
        add(std::move(name), lhs, rhs, /*equality=*/true);
    }

  private:
    void add(std::string name, double lhs, double rhs, bool equality) {
        InequalityRecord r;
        r.name = std::move(name);
        r.lhs = lhs;
        r.rhs = rhs;
        r.equality = equality;
        r.slack = equality ? -std::fabs(lhs - rhs) : rhs - lhs;
        r.pass = r.slack >= -tol_;
        out_.push_back(std::move(r));
    }

    const EmpiricalDistribution& d_;
    int n_;
    double tol_;
    std::vector<InequalityRecord>& out_;
    std::map<std::vector<int>, double> memo_;
};

std::string run_name(int a, int b, int n) {
    int len = b - a + 1;
    if (len >= n) return "1.." + std::to_string(n);
    int lo = (a - 1) % n + 1;
    return std::to_string(lo) + "+" + std::to_string(len - 1);
}

// Enumerates all index sequences 1 = d(1) < ... < d(k) = n with gaps >= 2.
void enumerate_partitions(int n, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    const int last = cur.back();
    for (int v = last + 2; v <= n; ++v) {
        if (v == n) {
            cur.push_back(v);
            out.push_back(cur);
            cur.pop_back();
        } else if (v <= n - 2) {
            cur.push_back(v);
            enumerate_partitions(n, cur, out);
            cur.pop_back();
        }
    }
}

std::string partition_name(const std::vector<int>& d) {
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(d[i]);
    }
    return s;
}

} // namespace

EntropyReport audit_fixed_set(const FixedSet& fs, const RunConfig& cfg) {
    cfg.validate();
    EmpiricalDistribution d(fs);
    const int n = fs.n;
    const double tol = cfg.tolerance;

    EntropyReport rep;
    rep.n = n;
    rep.s = fs.s;
    rep.fix_count = fs.count();
    rep.total_entropy =
        std::log(static_cast<double>(rep.fix_count)) / std::log(static_cast<double>(fs.s));
    rep.tolerance = tol;
    rep.exhaustive = n <= 9;
    const std::uint64_t sample_budget = 1000;

    Auditor A(d, tol, rep.records);

    for (int i = 1; i <= n; ++i) rep.single_entropy.push_back(A.hw({i}));

    // Uniformity over the fixed set: H(X) = log_s fix, and the members are
    // distinct so the joint entropy of all coordinates matches it exactly.
    {
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        A.eq("log-fix", rep.total_entropy, A.h(std::move(all)));
    }

    // Per-coordinate bound h(i) <= 1.
    for (int i = 1; i <= n; ++i)
        A.le("unit/h(" + std::to_string(i) + ")", rep.single_entropy[static_cast<size_t>(i) - 1], 1.0);

    // Determinism: dropping an index whose two cycle neighbours remain in a
    // contiguous run leaves the joint entropy unchanged.
    {
        auto emit = [&](int start, int len, int drop_off) {
            const int a = start, b = start + len - 1;
            std::vector<int> with, without;
            for (int i = a; i <= b; ++i) {
                with.push_back(A.wrap(i));
                if (i != start + drop_off) without.push_back(A.wrap(i));
            }
            A.eq("determinism/run=" + run_name(a, b, n) + "/drop=" +
                     std::to_string(A.wrap(start + drop_off)),
                 A.h(std::move(with)), A.h(std::move(without)));
        };
        if (n <= 9) {
            for (int len = 3; len < n; ++len)
                for (int start = 1; start <= n; ++start)
                    for (int off = 1; off <= len - 2; ++off) emit(start, len, off);
            for (int i = 0; i < n; ++i) emit(1, n, i);
        } else {
            Rng rng(cfg.seed + 1);
            for (std::uint64_t t = 0; t < sample_budget; ++t) {
                const int len = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
                const int start = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                const int off = (len >= n)
                                    ? static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))
                                    : 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len - 2)));
                emit(start, len, off);
            }
        }
    }

    // Segment subadditivity: H_i^k <= H_i^j + H_{j+1}^k.
    {
        auto emit = [&](int i, int j, int k) {
            A.le("subadd/i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                     ",k=" + std::to_string(k),
                 A.segment(i, k), A.segment(i, j) + A.segment(j + 1, k));
        };
        if (n <= 9) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 2; k <= n; ++k) emit(i, j, k);
        } else {
            Rng rng(cfg.seed + 2);
            for (std::uint64_t t = 0; t < sample_budget; ++t) {
                const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3)));
                const int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2 - i)));
                const int k = j + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j - 1)));
                emit(i, j, k);
            }
        }
    }

    // Segment-versus-singletons chain: H_j^k <= sum of h(i) for i = j..k.
    {
        auto emit = [&](int j, int k) {
            double sum = 0.0;
            for (int i = j; i <= k; ++i) sum += rep.single_entropy[static_cast<size_t>(i) - 1];
            A.le("chain/j=" + std::to_string(j) + ",k=" + std::to_string(k),
                 A.segment(j, k), sum);
        };
        if (n <= 9) {
            for (int j = 1; j <= n - 3; ++j)
                for (int k = j + 3; k <= n; ++k) emit(j, k);
        } else {
            Rng rng(cfg.seed + 3);
            for (std::uint64_t t = 0; t < sample_budget; ++t) {
                const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3)));
                const int k = j + 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j - 2)));
                emit(j, k);
            }
        }
    }

    // Cycle partitions 1 = d(1) < ... < d(k) = n with gaps >= 2: the two-part
    // base case is an exact identity H_1^n = 2 H(X); longer partitions bound
    // 2 H(X) from above by the segment sum.
    {
        auto emit = [&](const std::vector<int>& dd) {
            double sum = A.segment(dd[0], dd[1]);
            for (size_t t = 1; t + 1 < dd.size(); ++t) sum += A.segment(dd[t] + 1, dd[t + 1]);
            const std::string name = "partition/d=" + partition_name(dd);
            if (dd.size() == 2)
                A.eq(name, 2.0 * rep.total_entropy, sum);
            else
                A.le(name, 2.0 * rep.total_entropy, sum);
        };
        if (n <= 9) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur{1};
            enumerate_partitions(n, cur, parts);
            for (const auto& dd : parts) emit(dd);
        } else {
            std::set<std::vector<int>> seen;
            Rng rng(cfg.seed + 4);
            for (std::uint64_t t = 0; t < sample_budget; ++t) {
                std::vector<int> dd{1};
                while (dd.back() != n) {
                    const int cur = dd.back();
                    std::vector<int> choices;
                    for (int v = cur + 2; v <= n; ++v)
                        if (v == n || v <= n - 2) choices.push_back(v);
                    dd.push_back(choices[rng.below(choices.size())]);
                }
                if (seen.insert(dd).second) emit(dd);
            }
        }
    }

    // Five-vertex window bound and its constituent identities, audited at
    // every cyclic offset. Window base j uses vertices j..j+4 (wrapped).
    if (n >= 5) {
        for (int j = 1; j <= n; ++j) {
            const std::string p = "window5/j=" + std::to_string(j);
            const int v1 = j, v2 = j + 1, v3 = j + 2, v4 = j + 3, v5 = j + 4;
            const double mi = A.cmi(v2, v4, v3);

            A.le(p, A.window5(j), 3.0 + A.hw({v2, v4}) - mi);
            A.le(p + "/cmi-nonneg", 0.0, mi);
            A.eq(p + "/mi-identity", A.hw({v2, v3, v4}) + A.hw({v3}),
                 A.hw({v2, v3}) + A.hw({v3, v4}) - mi);
            A.le(p + "/submod-left", A.hw({v1, v2, v3, v4}) + A.hw({v2, v3}),
                 A.hw({v1, v2, v3}) + A.hw({v2, v3, v4}));
            A.le(p + "/submod-right", A.hw({v2, v3, v4, v5}) + A.hw({v3, v4}),
                 A.hw({v2, v3, v4}) + A.hw({v3, v4, v5}));
            A.eq(p + "/drop-left", A.hw({v1, v2, v3}), A.hw({v1, v3}));
            A.le(p + "/pair-left", A.hw({v1, v3}), A.hw({v1}) + A.hw({v3}));
            A.eq(p + "/drop-mid", A.hw({v2, v3, v4}), A.hw({v2, v4}));
            A.eq(p + "/drop-right", A.hw({v3, v4, v5}), A.hw({v3, v5}));
            A.le(p + "/pair-right", A.hw({v3, v5}), A.hw({v3}) + A.hw({v5}));
        }
    }

    return rep;
}

EntropyReport audit_identities(const Protocol& p, const RunConfig& cfg) {
    cfg.validate();
    const FixedSet fs = enumerate_fixed_set(p, cfg.enumeration_budget, cfg.threads);
    return audit_fixed_set(fs, cfg);
}

} // namespace cycleguess
