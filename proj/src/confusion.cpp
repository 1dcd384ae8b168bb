#include "cycleguess/confusion.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cycleguess/errors.hpp"
#include "cycleguess/protocol.hpp"
#include "cycleguess/report.hpp"

namespace cycleguess {

namespace {

using Clock = std::chrono::steady_clock;

// --- packed bitset rows -------------------------------------------------

inline bool bits_test(const std::uint64_t* p, int v) {
    return (p[v >> 6] >> (v & 63)) & 1u;
}

inline void bits_set(std::uint64_t* p, int v) { p[v >> 6] |= std::uint64_t{1} << (v & 63); }

inline void bits_reset(std::uint64_t* p, int v) { p[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

inline void bits_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t w) {
    for (std::size_t i = 0; i < w; ++i) dst[i] = a[i] & b[i];
}

inline bool bits_any(const std::uint64_t* p, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i)
        if (p[i]) return true;
    return false;
}

inline int bits_first(const std::uint64_t* p, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i)
        if (p[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(p[i])));
    return -1;
}

inline std::size_t bits_count(const std::uint64_t* p, std::size_t w) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w; ++i) c += static_cast<std::size_t>(std::popcount(p[i]));
    return c;
}

// --- exact maximum clique (branch and bound with greedy colour bound) ----

class CliqueSolver {
  public:
    CliqueSolver(int nv, std::size_t words, const std::uint64_t* rows, Clock::time_point deadline)
        : nv_(nv), words_(words), rows_(rows), deadline_(deadline),
          stack_(static_cast<std::size_t>(nv)), pbuf_(static_cast<std::size_t>(nv) + 1) {}

    void run() {
        // An already-expired deadline degrades before any search happens,
        // so the truncated result is deterministic.
        if (Clock::now() > deadline_) {
            timed_out_ = true;
            return;
        }
        std::vector<std::uint64_t> all(words_, 0);
        for (int v = 0; v < nv_; ++v) bits_set(all.data(), v);
        expand(all.data(), 0);
    }

    bool timed_out() const { return timed_out_; }
    const std::vector<int>& best() const { return best_; }

  private:
    const std::uint64_t* row(int v) const { return rows_ + static_cast<std::size_t>(v) * words_; }

    void tick() {
        if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) timed_out_ = true;
    }

    // Greedy colour classes of P, emitted in ascending colour order.
    void colour_sort(const std::uint64_t* P, std::vector<int>& order, std::vector<int>& colour) {
        std::vector<std::uint64_t> uncol(P, P + words_), cand(words_);
        int c = 0;
        while (bits_any(uncol.data(), words_)) {
            ++c;
            std::copy(uncol.begin(), uncol.end(), cand.begin());
            int v;
            while ((v = bits_first(cand.data(), words_)) >= 0) {
                order.push_back(v);
                colour.push_back(c);
                bits_reset(uncol.data(), v);
                bits_reset(cand.data(), v);
                for (std::size_t i = 0; i < words_; ++i) cand[i] &= ~row(v)[i];
            }
        }
    }

    void expand(std::uint64_t* P, int rsize) {
        tick();
        if (timed_out_) return;
        std::vector<int> order, colour;
        colour_sort(P, order, colour);
        auto& child = pbuf_[static_cast<std::size_t>(rsize) + 1];
        if (child.size() != words_) child.assign(words_, 0);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (timed_out_) return;
            const int v = order[static_cast<std::size_t>(i)];
            if (rsize + colour[static_cast<std::size_t>(i)] <= static_cast<int>(best_.size()))
                return;
            stack_[static_cast<std::size_t>(rsize)] = v;
            bits_and(child.data(), P, row(v), words_);
            if (bits_any(child.data(), words_)) {
                expand(child.data(), rsize + 1);
                // the recursion reuses pbuf_ slots above rsize+1 only
            } else if (rsize + 1 > static_cast<int>(best_.size())) {
                best_.assign(stack_.begin(), stack_.begin() + rsize + 1);
            }
            bits_reset(P, v);
        }
    }

    int nv_;
    std::size_t words_;
    const std::uint64_t* rows_;
    Clock::time_point deadline_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<int> stack_;
    std::vector<int> best_;
    std::vector<std::vector<std::uint64_t>> pbuf_;
};

// Reverse degeneracy order (vertices of the densest core first) computed
// by repeated minimum-degree removal; ties break on the lowest index.
std::vector<int> reverse_degeneracy_order(int nv, std::size_t words, const std::uint64_t* rows) {
    std::vector<std::size_t> deg(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        deg[static_cast<std::size_t>(v)] = bits_count(rows + static_cast<std::size_t>(v) * words, words);
    std::vector<bool> removed(static_cast<std::size_t>(nv), false);
    std::vector<int> removal;
    removal.reserve(static_cast<std::size_t>(nv));
    for (int step = 0; step < nv; ++step) {
        int pick = -1;
        for (int v = 0; v < nv; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
                pick = v;
        removed[static_cast<std::size_t>(pick)] = true;
        removal.push_back(pick);
        const std::uint64_t* r = rows + static_cast<std::size_t>(pick) * words;
        for (int u = 0; u < nv; ++u)
            if (!removed[static_cast<std::size_t>(u)] && bits_test(r, u))
                --deg[static_cast<std::size_t>(u)];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

// Rebuilds rows under the label permutation new index -> perm[new index].
std::vector<std::uint64_t> permute_rows(int nv, std::size_t words, const std::uint64_t* rows,
                                        const std::vector<int>& perm) {
    std::vector<int> inv(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(nv) * words, 0);
    for (int i = 0; i < nv; ++i) {
        const std::uint64_t* src = rows + static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * words;
        std::uint64_t* dst = out.data() + static_cast<std::size_t>(i) * words;
        for (int w = 0; w < static_cast<int>(words); ++w) {
            std::uint64_t bitsw = src[static_cast<std::size_t>(w)];
            while (bitsw) {
                const int j = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                bits_set(dst, inv[static_cast<std::size_t>(j)]);
            }
        }
    }
    return out;
}

// First-fit greedy colouring; returns the colour count.
int greedy_colouring(int nv, std::size_t words, const std::uint64_t* rows,
                     const std::vector<int>& order) {
    std::vector<int> colour(static_cast<std::size_t>(nv), 0);
    std::vector<char> used;
    int k = 0;
    for (int v : order) {
        used.assign(static_cast<std::size_t>(k) + 2, 0);
        const std::uint64_t* r = rows + static_cast<std::size_t>(v) * words;
        for (int w = 0; w < static_cast<int>(words); ++w) {
            std::uint64_t bitsw = r[static_cast<std::size_t>(w)];
            while (bitsw) {
                const int u = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                const int cu = colour[static_cast<std::size_t>(u)];
                if (cu && cu < static_cast<int>(used.size())) used[static_cast<std::size_t>(cu)] = 1;
            }
        }
        int c = 1;
        while (used[static_cast<std::size_t>(c)]) ++c;
        colour[static_cast<std::size_t>(v)] = c;
        k = std::max(k, c);
    }
    return k;
}

// Deterministic greedy clique, used as a chi lower bound when the exact
// clique solver is out of budget.
int greedy_clique(int nv, std::size_t words, const std::uint64_t* rows) {
    std::vector<std::size_t> deg(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        deg[static_cast<std::size_t>(v)] = bits_count(rows + static_cast<std::size_t>(v) * words, words);
    std::vector<std::uint64_t> cand(words, 0);
    for (int v = 0; v < nv; ++v) bits_set(cand.data(), v);
    int size = 0;
    while (bits_any(cand.data(), words)) {
        int pick = -1;
        for (int v = 0; v < nv; ++v)
            if (bits_test(cand.data(), v) &&
                (pick < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(pick)]))
                pick = v;
        ++size;
        std::vector<std::uint64_t> next(words);
        bits_and(next.data(), cand.data(), rows + static_cast<std::size_t>(pick) * words, words);
        cand.swap(next);
    }
    return size;
}

// Exact k-colourability by DSATUR branch and bound. Returns 1 (colourable),
// 0 (not colourable) or -1 (deadline hit).
class KColourSolver {
  public:
    KColourSolver(int nv, std::size_t words, const std::uint64_t* rows, int k,
                  Clock::time_point deadline)
        : nv_(nv), words_(words), rows_(rows), k_(k), deadline_(deadline),
          kwords_(static_cast<std::size_t>(k) / 64 + 1),
          colour_(static_cast<std::size_t>(nv), 0),
          satmask_(static_cast<std::size_t>(nv) * kwords_, 0),
          satcnt_(static_cast<std::size_t>(nv), 0),
          degree_(static_cast<std::size_t>(nv)) {
        for (int v = 0; v < nv; ++v)
            degree_[static_cast<std::size_t>(v)] =
                bits_count(rows + static_cast<std::size_t>(v) * words, words);
    }

    int solve() { return Clock::now() > deadline_ ? -1 : rec(0, 0); }

  private:
    bool sat_has(int v, int c) const {
        return (satmask_[static_cast<std::size_t>(v) * kwords_ + static_cast<std::size_t>(c >> 6)] >>
                (c & 63)) & 1u;
    }
    void sat_set(int v, int c) {
        satmask_[static_cast<std::size_t>(v) * kwords_ + static_cast<std::size_t>(c >> 6)] |=
            std::uint64_t{1} << (c & 63);
    }
    void sat_clear(int v, int c) {
        satmask_[static_cast<std::size_t>(v) * kwords_ + static_cast<std::size_t>(c >> 6)] &=
            ~(std::uint64_t{1} << (c & 63));
    }

    int rec(int assigned, int max_used) {
        if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) return -1;
        if (assigned == nv_) return 1;

        int v = -1;
        for (int u = 0; u < nv_; ++u) {
            if (colour_[static_cast<std::size_t>(u)]) continue;
            if (v < 0 || satcnt_[static_cast<std::size_t>(u)] > satcnt_[static_cast<std::size_t>(v)] ||
                (satcnt_[static_cast<std::size_t>(u)] == satcnt_[static_cast<std::size_t>(v)] &&
                 degree_[static_cast<std::size_t>(u)] > degree_[static_cast<std::size_t>(v)]))
                v = u;
        }

        const int limit = std::min(k_, max_used + 1);
        const std::uint64_t* r = rows_ + static_cast<std::size_t>(v) * words_;
        for (int c = 1; c <= limit; ++c) {
            if (sat_has(v, c)) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            std::vector<int> touched;
            for (int w = 0; w < static_cast<int>(words_); ++w) {
                std::uint64_t bitsw = r[static_cast<std::size_t>(w)];
                while (bitsw) {
                    const int u = w * 64 + std::countr_zero(bitsw);
                    bitsw &= bitsw - 1;
                    if (!colour_[static_cast<std::size_t>(u)] && !sat_has(u, c)) {
                        sat_set(u, c);
                        ++satcnt_[static_cast<std::size_t>(u)];
                        touched.push_back(u);
                    }
                }
            }
            const int res = rec(assigned + 1, std::max(max_used, c));
            for (int u : touched) {
                sat_clear(u, c);
                --satcnt_[static_cast<std::size_t>(u)];
            }
            colour_[static_cast<std::size_t>(v)] = 0;
            if (res != 0) return res;
        }
        return 0;
    }

    int nv_;
    std::size_t words_;
    const std::uint64_t* rows_;
    int k_;
    Clock::time_point deadline_;
    std::size_t kwords_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<std::uint64_t> satmask_;
    std::vector<int> satcnt_;
    std::vector<std::size_t> degree_;
};

} // namespace

// --- side-information graphs ---------------------------------------------

SideInfoGraph SideInfoGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges);
}

SideInfoGraph SideInfoGraph::complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges);
}

SideInfoGraph SideInfoGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> canon;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint outside 0..n-1");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        canon.emplace(std::min(u, v), std::max(u, v));
    }
    SideInfoGraph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : canon) {
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

std::size_t SideInfoGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

bool SideInfoGraph::is_cycle() const {
    if (n < 3) return false;
    for (const auto& nb : adj)
        if (nb.size() != 2) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int visited = 0;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        ++visited;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                q.push(u);
            }
    }
    return visited == n;
}

SideInfoGraph read_graph(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1)
        throw std::invalid_argument("graph file must start with the vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint outside 1..n in graph file");
        edges.emplace_back(u - 1, v - 1);
    }
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string rest;
        in >> rest;
        if (!rest.empty())
            throw std::invalid_argument("malformed edge line in graph file near '" + rest + "'");
    }
    return SideInfoGraph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const SideInfoGraph& g) {
    out << g.n << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v) out << (u + 1) << " " << (v + 1) << "\n";
}

SideInfoGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return read_graph(in);
}

// --- confusion graph -------------------------------------------------------

ConfusionGraph::ConfusionGraph(SideInfoGraph g, int s, const RunConfig& cfg)
    : g_(std::move(g)), s_(s) {
    cfg.validate();
    if (s_ < 2) throw std::invalid_argument("colour count must be at least 2");
    if (g_.n < 1) throw std::invalid_argument("side-information graph is empty");
    vc_ = pow_u64_checked(static_cast<std::uint64_t>(s_), g_.n);
    if (vc_ == UINT64_MAX)
        throw budget_error("confusion graph has s^n = " + std::to_string(s_) + "^" +
                           std::to_string(g_.n) + " vertices, beyond the 2^64 addressable range");

    if (vc_ > cfg.explicit_vertex_budget) return; // implicit mode only

    const std::uint64_t words = (vc_ + 63) / 64;
    const std::uint64_t bytes = vc_ * words * 8;
    if (bytes > cfg.adjacency_bytes_budget) return;

    words_ = static_cast<std::size_t>(words);
    const int n = g_.n;
    digits_.assign(static_cast<std::size_t>(vc_) * static_cast<std::size_t>(n), 0);
    for (std::uint64_t v = 0; v < vc_; ++v) {
        std::uint64_t id = v;
        for (int i = n - 1; i >= 0; --i) {
            digits_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(id % static_cast<std::uint64_t>(s_));
            id /= static_cast<std::uint64_t>(s_);
        }
    }

    matrix_.assign(static_cast<std::size_t>(vc_) * words_, 0);
    const int nv = static_cast<int>(vc_);
    auto fill_rows = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u) {
            const std::uint8_t* du = digits_.data() + static_cast<std::size_t>(u) * n;
            std::uint64_t* row = matrix_.data() + static_cast<std::size_t>(u) * words_;
            for (int v = 0; v < nv; ++v) {
                if (v == u) continue;
                const std::uint8_t* dv = digits_.data() + static_cast<std::size_t>(v) * n;
                for (int i = 0; i < n; ++i) {
                    if (du[i] == dv[i]) continue;
                    bool blind = true;
                    for (int j : g_.adj[static_cast<std::size_t>(i)])
                        if (du[j] != dv[j]) {
                            blind = false;
                            break;
                        }
                    if (blind) {
                        bits_set(row, v);
                        break;
                    }
                }
            }
        }
    };
    const int workers = std::max(1, std::min(cfg.threads, nv));
    if (workers == 1) {
        fill_rows(0, nv);
    } else {
        std::vector<std::thread> pool;
        const int chunk = nv / workers;
        for (int w = 0; w < workers; ++w) {
            const int lo = chunk * w;
            const int hi = (w + 1 == workers) ? nv : chunk * (w + 1);
            pool.emplace_back(fill_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    explicit_ = true;
}

bool ConfusionGraph::adjacent(std::uint64_t u, std::uint64_t v) const {
    if (u >= vc_ || v >= vc_)
        throw std::invalid_argument("confusion vertex id outside [0, s^n)");
    if (u == v) return false;
    // Always evaluated from the definition, independently of the packed
    // matrix, so it doubles as a verification oracle.
    const int n = g_.n;
    Colouring cu, cv;
    const std::uint8_t *du = nullptr, *dv = nullptr;
    if (!digits_.empty()) {
        du = digits_.data() + static_cast<std::size_t>(u) * n;
        dv = digits_.data() + static_cast<std::size_t>(v) * n;
    } else {
        cu = decode_colouring(u, n, s_);
        cv = decode_colouring(v, n, s_);
    }
    auto dig = [&](const std::uint8_t* d, const Colouring& c, int i) {
        return d ? static_cast<int>(d[i]) : c[static_cast<std::size_t>(i)];
    };
    for (int i = 0; i < n; ++i) {
        if (dig(du, cu, i) == dig(dv, cv, i)) continue;
        bool blind = true;
        for (int j : g_.adj[static_cast<std::size_t>(i)])
            if (dig(du, cu, j) != dig(dv, cv, j)) {
                blind = false;
                break;
            }
        if (blind) return true;
    }
    return false;
}

Colouring ConfusionGraph::decode(std::uint64_t v) const {
    if (v >= vc_) throw std::invalid_argument("confusion vertex id outside [0, s^n)");
    return decode_colouring(v, g_.n, s_);
}

std::uint64_t ConfusionGraph::encode(const Colouring& c) const {
    if (static_cast<int>(c.size()) != g_.n)
        throw std::invalid_argument("colouring length does not match the graph");
    return encode_colouring(c, s_);
}

void ConfusionGraph::require_explicit(const char* op) const {
    if (explicit_) return;
    throw budget_error(std::string(op) + " needs the explicit adjacency matrix, but s^n = " +
                       std::to_string(vc_) + " vertices exceeds the explicit-mode budgets "
                       "(vertex budget, or adjacency-bytes budget for the packed matrix)");
}

MisResult ConfusionGraph::max_independent_set(const RunConfig& cfg) const {
    cfg.validate();
    require_explicit("exact maximum independent set");
    const int nv = static_cast<int>(vc_);

    // Complement rows: a maximum clique there is a maximum independent set.
    std::vector<std::uint64_t> comp(static_cast<std::size_t>(nv) * words_);
    const std::uint64_t tail =
        (vc_ % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (vc_ % 64)) - 1);
    for (int v = 0; v < nv; ++v) {
        const std::uint64_t* src = matrix_.data() + static_cast<std::size_t>(v) * words_;
        std::uint64_t* dst = comp.data() + static_cast<std::size_t>(v) * words_;
        for (std::size_t w = 0; w < words_; ++w) dst[w] = ~src[w];
        dst[words_ - 1] &= tail;
        bits_reset(dst, v);
    }

    const auto perm = reverse_degeneracy_order(nv, words_, comp.data());
    std::vector<std::uint64_t> solve_rows = permute_rows(nv, words_, comp.data(), perm);
    comp.clear();
    comp.shrink_to_fit();

    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.solver_time_budget_s));
    CliqueSolver solver(nv, words_, solve_rows.data(), deadline);
    solver.run();

    MisResult res;
    res.exact = !solver.timed_out();
    res.size = solver.best().size();
    for (int v : solver.best())
        res.witness.push_back(static_cast<std::uint64_t>(perm[static_cast<std::size_t>(v)]));
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

ChiResult ConfusionGraph::chromatic_number(const RunConfig& cfg) const {
    cfg.validate();
    require_explicit("exact chromatic number");
    const int nv = static_cast<int>(vc_);
    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.solver_time_budget_s));

    std::vector<int> order(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) order[static_cast<std::size_t>(v)] = v;
    int ub = greedy_colouring(nv, words_, matrix_.data(), order);

    ChiResult res;
    if (vc_ > cfg.chi_exact_vertex_budget) {
        res.exact = false;
        res.lower = std::max(1, greedy_clique(nv, words_, matrix_.data()));
        res.upper = ub;
        if (res.lower == res.upper) {
            res.exact = true;
            res.value = ub;
        }
        return res;
    }

    // Exact clique size as the initial lower bound (a timeout still leaves
    // a valid bound).
    CliqueSolver cliques(nv, words_, matrix_.data(), deadline);
    cliques.run();
    int lb = std::max<int>(1, static_cast<int>(cliques.best().size()));

    for (int k = lb; k < ub; ++k) {
        KColourSolver kc(nv, words_, matrix_.data(), k, deadline);
        const int verdict = kc.solve();
        if (verdict == 1) {
            res.exact = true;
            res.value = k;
            res.lower = res.upper = k;
            return res;
        }
        if (verdict == -1) {
            res.exact = false;
            res.lower = k;
            res.upper = ub;
            return res;
        }
    }
    res.exact = true;
    res.value = ub;
    res.lower = res.upper = ub;
    return res;
}

// --- assembled report ------------------------------------------------------

ConfusionStats gn_beta_report(const SideInfoGraph& g, int s, const RunConfig& cfg,
                              bool want_alpha, bool want_chi) {
    cfg.validate();
    ConfusionGraph cg(g, s, cfg);

    ConfusionStats st;
    st.n = g.n;
    st.s = s;
    st.vertex_count = cg.vertex_count();
    st.side_is_cycle = g.is_cycle();
    st.side_is_odd_cycle = st.side_is_cycle && g.n % 2 == 1;

    if (want_alpha) {
        const MisResult mis = cg.max_independent_set(cfg);
        st.alpha_computed = true;
        st.alpha_exact = mis.exact;
        st.alpha = mis.size;
        if (mis.exact)
            st.gn = std::log(static_cast<double>(mis.size)) / std::log(static_cast<double>(s));
        st.witness_verified = true;
        for (std::uint64_t v : mis.witness) st.witness.push_back(cg.decode(v));
        for (std::size_t i = 0; i < mis.witness.size() && st.witness_verified; ++i)
            for (std::size_t j = i + 1; j < mis.witness.size(); ++j)
                if (cg.adjacent(mis.witness[i], mis.witness[j])) {
                    st.witness_verified = false;
                    break;
                }
    }

    if (want_chi) {
        const ChiResult chi = cg.chromatic_number(cfg);
        st.chi_computed = true;
        st.chi_exact = chi.exact;
        if (chi.exact) {
            st.chi = chi.value;
            st.chi_lower = st.chi_upper = chi.value;
            st.beta = std::log(static_cast<double>(chi.value)) / std::log(static_cast<double>(s));
        } else {
            st.chi_lower = chi.lower;
            st.chi_upper = chi.upper;
        }
    }

    if (st.alpha_exact && st.chi_exact) {
        st.product_ok = st.alpha * static_cast<std::uint64_t>(st.chi) >= st.vertex_count;
        st.rate_ok = st.gn + st.beta >= static_cast<double>(g.n) - 1e-9;
    }
    if (st.side_is_odd_cycle) {
        // alpha <= s^(n/2) is the two-segment covering bound; it needs two
        // disjoint dominating runs and so starts at n = 5. The triangle is
        // the complete graph, where alpha reaches s^(n-1) instead.
        if (st.alpha_exact && g.n >= 5)
            st.square_bound_ok = st.alpha * st.alpha <= st.vertex_count;
        st.fcp_fix = fcp_fix_formula(g.n, s);
        if (st.alpha_computed) st.fcp_bound_ok = st.alpha >= st.fcp_fix;
    }
    return st;
}

std::string ConfusionStats::to_text() const {
    Doc doc("confusion-stats");
    doc.kv("n", n);
    doc.kv("s", s);
    doc.kv("vertices", vertex_count);
    doc.kv("side_is_cycle", side_is_cycle);
    if (alpha_computed) {
        doc.kv("alpha", alpha);
        doc.kv("alpha_exact", alpha_exact);
        if (alpha_exact) doc.kv("gn", gn);
        else doc.kv("alpha_note", "lower bound only (search truncated)");
        doc.kv("witness_size", static_cast<std::uint64_t>(witness.size()));
        doc.kv("witness_verified", witness_verified);
        if (!witness_path.empty()) doc.kv("witness_file", witness_path);
    }
    if (chi_computed) {
        if (chi_exact) {
            doc.kv("chi", chi);
            doc.kv("chi_exact", true);
            doc.kv("beta", beta);
        } else {
            doc.kv("chi_exact", false);
            doc.kv("chi_lower", chi_lower);
            doc.kv("chi_upper", chi_upper);
        }
    }
    if (alpha_exact && chi_exact) {
        doc.kv("check.alpha_chi_product", product_ok);
        doc.kv("check.gn_beta_rate", rate_ok);
    }
    if (side_is_odd_cycle) {
        if (alpha_exact && n >= 5) doc.kv("check.alpha_square_bound", square_bound_ok);
        doc.kv("fcp_fix", fcp_fix);
        if (alpha_computed) doc.kv("check.alpha_ge_fcp", fcp_bound_ok);
    }
    return doc.str();
}

} // namespace cycleguess
