#include "cycleguess/funclass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cycleguess/errors.hpp"
#include "cycleguess/report.hpp"

namespace cycleguess {

namespace {

// Entropy, base s, of an empirical distribution given by integer counts
// over `total` equally likely atoms.
double entropy_from_counts(const std::vector<int>& counts, int total, int s) {
    double weighted = 0.0;
    for (int m : counts)
        if (m > 1) weighted += static_cast<double>(m) * std::log(static_cast<double>(m));
    return (std::log(static_cast<double>(total)) - weighted / total) /
           std::log(static_cast<double>(s));
}

double h_nat(double t) { // natural-log binary entropy
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return -t * std::log(t) - (1.0 - t) * std::log(1.0 - t);
}

} // namespace

LocalFunction::LocalFunction(ColourSpace space_, std::vector<int> table_)
    : space(space_), table(std::move(table_)) {
    const size_t need = static_cast<size_t>(space.s) * static_cast<size_t>(space.s);
    if (table.size() != need)
        throw std::invalid_argument("function table must have s^2 entries");
    for (int v : table)
        if (v < 0 || v >= space.s)
            throw std::invalid_argument("function value " + std::to_string(v) +
                                        " outside colour range");
}

FunctionClass classify(const LocalFunction& f, double tolerance) {
    const int s = f.s();
    FunctionClass out;
    out.preimage_sizes.assign(static_cast<size_t>(s), 0);

    // Counts for the joint distributions of (U1, f) and (U2, f) over the
    // s^2 equally likely argument pairs.
    std::vector<int> cnt_left(static_cast<size_t>(s) * s, 0);
    std::vector<int> cnt_right(static_cast<size_t>(s) * s, 0);
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) {
            const int z = f(x, y);
            ++out.preimage_sizes[static_cast<size_t>(z)];
            ++cnt_left[static_cast<size_t>(x) * s + z];
            ++cnt_right[static_cast<size_t>(y) * s + z];
        }

    out.is_flat = std::all_of(out.preimage_sizes.begin(), out.preimage_sizes.end(),
                              [s](int m) { return m == s; });

    // I(U1;U2|f) = H(U1,f) + H(U2,f) - H(U1,U2,f) - H(f); the full joint is
    // uniform on s^2 atoms, so H(U1,U2,f) = 2 exactly.
    const int total = s * s;
    const double h_left = entropy_from_counts(cnt_left, total, s);
    const double h_right = entropy_from_counts(cnt_right, total, s);
    const double h_out = entropy_from_counts(out.preimage_sizes, total, s);
    out.cond_mi = h_left + h_right - 2.0 - h_out;

    out.is_semi_perfect = out.is_flat && std::fabs(out.cond_mi) <= tolerance;

    for (int z = 0; z < s; ++z) {
        const auto [l, r] = lr_sets(f, z);
        out.left_sizes.push_back(static_cast<int>(l.size()));
        out.right_sizes.push_back(static_cast<int>(r.size()));
    }
    const bool l_const = std::all_of(out.left_sizes.begin(), out.left_sizes.end(),
                                     [&](int v) { return v == out.left_sizes[0]; });
    const bool r_const = std::all_of(out.right_sizes.begin(), out.right_sizes.end(),
                                     [&](int v) { return v == out.right_sizes[0]; });
    out.is_perfect = out.is_semi_perfect && l_const && r_const;
    return out;
}

std::string FunctionClass::to_text(int s) const {
    Doc doc("function-class");
    doc.kv("s", s);
    doc.kv("flat", is_flat);
    doc.kv("semi_perfect", is_semi_perfect);
    doc.kv("perfect", is_perfect);
    doc.kv("cond_mi", cond_mi);
    auto join = [](const std::vector<int>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(v[i]);
        }
        return out;
    };
    doc.kv("preimage_sizes", join(preimage_sizes));
    doc.kv("left_sizes", join(left_sizes));
    doc.kv("right_sizes", join(right_sizes));
    return doc.str();
}

std::pair<std::vector<int>, std::vector<int>> lr_sets(const LocalFunction& f, int z) {
    const int s = f.s();
    if (z < 0 || z >= s)
        throw std::invalid_argument("output colour " + std::to_string(z) +
                                    " outside 0.." + std::to_string(s - 1));
    std::vector<bool> in_l(static_cast<size_t>(s), false), in_r(static_cast<size_t>(s), false);
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
            if (f(x, y) == z) {
                in_l[static_cast<size_t>(x)] = true;
                in_r[static_cast<size_t>(y)] = true;
            }
    std::vector<int> l, r;
    for (int v = 0; v < s; ++v) {
        if (in_l[static_cast<size_t>(v)]) l.push_back(v);
        if (in_r[static_cast<size_t>(v)]) r.push_back(v);
    }
    return {std::move(l), std::move(r)};
}

bool is_k_eps_uniform(const std::vector<double>& probs, int k, double eps) {
    if (k < 1) throw std::invalid_argument("outcome count must be positive");
    if (eps < 0.0) throw std::invalid_argument("uniformity radius must be non-negative");
    if (static_cast<int>(probs.size()) != k)
        throw std::invalid_argument("distribution declares " + std::to_string(probs.size()) +
                                    " outcomes, expected " + std::to_string(k));
    const double target = 1.0 / static_cast<double>(k);
    for (double p : probs)
        if (std::fabs(p - target) > eps) return false;
    return true;
}

double distribution_entropy(const std::vector<double>& probs, int base) {
    if (base < 2) throw std::invalid_argument("entropy base must be at least 2");
    double h = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        if (p > 0.0) h -= p * std::log(p);
    }
    return h / std::log(static_cast<double>(base));
}

std::vector<std::vector<int>> enumerate_flat_tables(int s) {
    if (s < 2) throw std::invalid_argument("colour count must be at least 2");
    std::vector<int> table;
    for (int z = 0; z < s; ++z)
        for (int i = 0; i < s; ++i) table.push_back(z);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(table);
    } while (std::next_permutation(table.begin(), table.end()));
    return out;
}

ConstantsReport compute_constants(int s) {
    if (s < 2) throw std::invalid_argument("colour count must be at least 2");
    if (s > 3) {
        const double candidates = std::pow(static_cast<double>(s),
                                           static_cast<double>(s) * s);
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "constants enumeration infeasible for s=%d: %d^%d ~ %.6g "
                      "candidate functions",
                      s, s, s * s, candidates);
        throw infeasible_error(buf);
    }

    ConstantsReport rep;
    rep.s = s;

    const double semi_tol = 1e-9;
    double min_mi = 0.0;
    bool have_min = false;
    for (const auto& table : enumerate_flat_tables(s)) {
        ++rep.flat_count;
        LocalFunction f(factorize(s), table);
        const FunctionClass c = classify(f, semi_tol);
        if (c.is_semi_perfect) continue;
        ++rep.flat_non_semi_perfect_count;
        if (!have_min || c.cond_mi < min_mi) {
            have_min = true;
            min_mi = c.cond_mi;
            rep.argmin_table = table;
            rep.argmin_cond_mi = c.cond_mi;
        }
    }
    if (!have_min)
        throw infeasible_error("no flat non-semi-perfect function found");
    rep.delta1 = 0.5 * min_mi;

    rep.eps_cap = 1.0 / (static_cast<double>(s) * s * (2.0 * s + 1.0));

    // Continuity radius: if the joint argument distribution is within eps
    // per atom of uniform, each entropy term in the conditional MI moves by
    // at most tau log_s D + h_nat(tau)/ln s with tau = s^2 eps. The four
    // terms have outcome spaces of sizes s^2, s^2, s^2 and s, so the log_s D
    // factors sum to 7.
    const double ln_s = std::log(static_cast<double>(s));
    for (int j = 1; j <= 64; ++j) {
        const double eps = std::ldexp(1.0, -j);
        const double tau = static_cast<double>(s) * s * eps;
        if (tau > 0.5) continue;
        const double bound = 7.0 * tau + 4.0 * h_nat(tau) / ln_s;
        const bool ok = bound <= rep.delta1;
        rep.trace.push_back({eps, tau, bound, ok});
        if (ok) {
            rep.eps_cont = eps;
            break;
        }
    }
    if (rep.eps_cont == 0.0)
        throw infeasible_error("continuity radius scan did not converge");

    rep.epsilon = std::min(rep.eps_cap, rep.eps_cont);
    rep.delta2 = (s * rep.epsilon * rep.epsilon / 3.0) / ln_s;
    rep.delta2_alt = (s * rep.epsilon * rep.epsilon / 3.0) * ln_s;
    rep.delta = std::min(rep.delta1, rep.delta2);
    rep.N = static_cast<std::int64_t>(std::ceil(7.0 * (1.0 / rep.delta + 2.0)));
    return rep;
}

std::string ConstantsReport::to_text() const {
    Doc doc("constants");
    doc.kv("s", s);
    doc.kv("flat_count", flat_count);
    doc.kv("flat_non_semi_perfect_count", flat_non_semi_perfect_count);
    doc.kv("delta1", delta1);
    doc.kv("argmin_cond_mi", argmin_cond_mi);
    std::string tbl;
    for (size_t i = 0; i < argmin_table.size(); ++i) {
        if (i) tbl += " ";
        tbl += std::to_string(argmin_table[i]);
    }
    doc.kv("argmin_table", tbl);
    doc.kv("eps_cap", eps_cap);
    doc.kv("eps_cont", eps_cont);
    doc.kv("epsilon", epsilon);
    doc.kv("delta2", delta2);
    doc.kv("delta2_alt_reading", delta2_alt);
    doc.kv("delta", delta);
    doc.kv("N", static_cast<std::uint64_t>(N));
    for (size_t i = 0; i < trace.size(); ++i) {
        const std::string p = "cont_scan." + std::to_string(i + 1) + ".";
        doc.kv(p + "eps", trace[i].eps);
        doc.kv(p + "tau", trace[i].tau);
        doc.kv(p + "bound", trace[i].bound);
        doc.kv(p + "accepted", trace[i].accepted);
    }
    return doc.str();
}

LocalFunction builtin_function(const std::string& name, int s) {
    const ColourSpace space = factorize(s);
    std::vector<int> table(static_cast<size_t>(s) * s, 0);
    for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y) {
            int v;
            if (name == "xor")
                v = (x + y) % s;
            else if (name == "proj")
                v = x;
            else if (name == "pi")
                v = pi(space, phi(space, x), psi(space, y));
            else
                throw std::invalid_argument("unknown builtin function '" + name +
                                            "' (expected xor, proj or pi)");
            table[static_cast<size_t>(x) * s + y] = v;
        }
    return LocalFunction(space, std::move(table));
}

LocalFunction read_function(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "cycleguess-function v1")
        throw std::invalid_argument("missing function header line");
    if (!std::getline(in, line))
        throw std::invalid_argument("missing dimension line");
    int s = 0;
    if (std::sscanf(line.c_str(), "s=%d", &s) != 1 || s < 2)
        throw std::invalid_argument("malformed dimension line: " + line);
    std::vector<int> table;
    table.reserve(static_cast<size_t>(s) * s);
    for (int x = 0; x < s; ++x) {
        if (!std::getline(in, line))
            throw std::invalid_argument("truncated function table");
        std::istringstream row(line);
        for (int y = 0; y < s; ++y) {
            int v;
            if (!(row >> v))
                throw std::invalid_argument("short row in function table");
            table.push_back(v);
        }
        int extra;
        if (row >> extra) throw std::invalid_argument("long row in function table");
    }
    return LocalFunction(factorize(s), std::move(table));
}

void write_function(std::ostream& out, const LocalFunction& f) {
    out << "cycleguess-function v1\n";
    out << "s=" << f.s() << "\n";
    for (int x = 0; x < f.s(); ++x) {
        for (int y = 0; y < f.s(); ++y) {
            if (y) out << ' ';
            out << f(x, y);
        }
        out << '\n';
    }
}

LocalFunction read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open function file: " + path);
    return read_function(in);
}

void write_function_file(const std::string& path, const LocalFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open function file for writing: " + path);
    write_function(out, f);
}

} // namespace cycleguess
