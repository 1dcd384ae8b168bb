// Command-line front end: every library module behind one subcommand.
// Exit codes: 0 success, 2 usage, 3 budget refusal, 4 infeasible or
// inexact-within-timeout (partial results are still printed).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycleguess/config.hpp"
#include "cycleguess/confusion.hpp"
#include "cycleguess/core.hpp"
#include "cycleguess/entropy.hpp"
#include "cycleguess/errors.hpp"
#include "cycleguess/funclass.hpp"
#include "cycleguess/indexcode.hpp"
#include "cycleguess/protocol.hpp"
#include "cycleguess/report.hpp"

namespace cg = cycleguess;

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("cannot parse ") + what + " entry '" +
                                        item + "' as an integer");
        }
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + " list is empty");
    return out;
}

void emit(const std::string& doc) { std::cout << doc; }

int run_fcp(int n, int s, const std::string& out_path, const std::string& fix_path,
            const cg::RunConfig& cfg) {
    const cg::Protocol p = cg::build_fcp(n, s);
    const cg::FixedSet fs = cg::enumerate_fixed_set(p, cfg.enumeration_budget, cfg.threads);
    const std::uint64_t formula = cg::fcp_fix_formula(n, s);
    const bool ok = fs.count() == formula;
    const bool square = p.space.a == p.space.b;

    if (!out_path.empty()) cg::write_protocol_file(out_path, p);
    if (!fix_path.empty()) {
        std::ofstream out(fix_path);
        if (!out) throw std::invalid_argument("cannot write fixed-set file " + fix_path);
        cg::write_fixed_set(out, fs);
    }

    if (cfg.output_format == cg::OutputFormat::structured) {
        cg::Doc doc("fcp");
        doc.kv("n", n);
        doc.kv("s", s);
        doc.kv("a", p.space.a);
        doc.kv("b", p.space.b);
        doc.kv("fix", fs.count());
        doc.kv("formula_fix", formula);
        doc.kv("formula_check", ok ? "PASS" : "FAIL");
        doc.kv("perfect_square", square);
        if (square) doc.kv("note", "s = b^2, so fix = s^(n/2): the n/2 ceiling is met");
        if (!out_path.empty()) doc.kv("protocol_file", out_path);
        if (!fix_path.empty()) doc.kv("fixed_set_file", fix_path);
        emit(doc.str());
    } else {
        std::cout << "protocol on C_" << n << " with s=" << s << " (a=" << p.space.a
                  << ", b=" << p.space.b << ")\n";
        std::cout << "fix: " << fs.count() << "\n";
        std::cout << "formula a*s^((n-1)/2): " << formula << " -> "
                  << (ok ? "PASS" : "FAIL") << "\n";
        if (square)
            std::cout << "note: s = b^2, so fix = s^(n/2): the n/2 ceiling is met\n";
        if (!out_path.empty()) std::cout << "protocol written to " << out_path << "\n";
        if (!fix_path.empty()) std::cout << "fixed set written to " << fix_path << "\n";
    }
    return ok ? 0 : 1;
}

int run_entropy(const std::string& file, const cg::RunConfig& cfg) {
    const cg::Protocol p = cg::read_protocol_file(file);
    const cg::EntropyReport rep = cg::audit_identities(p, cfg);
    if (cfg.output_format == cg::OutputFormat::structured) {
        emit(rep.to_text());
    } else {
        std::uint64_t fails = 0;
        for (const auto& r : rep.records)
            if (!r.pass) ++fails;
        std::cout << "n=" << rep.n << " s=" << rep.s << " fix=" << rep.fix_count << "\n";
        std::cout << "total entropy (base s): " << cg::fmt_double(rep.total_entropy) << "\n";
        std::cout << "audited records: " << rep.records.size() << " ("
                  << (rep.exhaustive ? "exhaustive" : "sampled") << ")\n";
        std::cout << "failures: " << fails << "\n";
        std::cout << "verdict: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int run_classify(const std::string& file, const std::string& builtin, int s,
                 const cg::RunConfig& cfg) {
    cg::LocalFunction f = [&]() {
        if (!file.empty()) return cg::read_function_file(file);
        if (s < 2)
            throw std::invalid_argument("--builtin needs --s to fix the colour count");
        return cg::builtin_function(builtin, s);
    }();
    if (s >= 2 && f.s() != s)
        throw std::invalid_argument("function file is over s=" + std::to_string(f.s()) +
                                    " but --s " + std::to_string(s) + " was given");
    const cg::FunctionClass c = cg::classify(f, cfg.tolerance);
    if (cfg.output_format == cg::OutputFormat::structured) {
        emit(c.to_text(f.s()));
    } else {
        std::cout << "s=" << f.s() << "\n";
        std::cout << "flat: " << (c.is_flat ? "yes" : "no") << "\n";
        std::cout << "semi-perfect: " << (c.is_semi_perfect ? "yes" : "no") << "\n";
        std::cout << "perfect: " << (c.is_perfect ? "yes" : "no") << "\n";
        std::cout << "conditional MI (base s): " << cg::fmt_double(c.cond_mi) << "\n";
        auto join = [](const std::vector<int>& v) {
            std::string out;
            for (size_t i = 0; i < v.size(); ++i) {
                if (i) out += " ";
                out += std::to_string(v[i]);
            }
            return out;
        };
        std::cout << "|f^-1(z)| per z: " << join(c.preimage_sizes) << "\n";
        std::cout << "|L(z)| per z: " << join(c.left_sizes) << "\n";
        std::cout << "|R(z)| per z: " << join(c.right_sizes) << "\n";
    }
    return 0;
}

int run_constants(int s, const cg::RunConfig& cfg) {
    const cg::ConstantsReport rep = cg::compute_constants(s);
    if (cfg.output_format == cg::OutputFormat::structured) {
        emit(rep.to_text());
    } else {
        std::cout << "s=" << s << "\n";
        std::cout << "flat functions: " << rep.flat_count << " (non-semi-perfect: "
                  << rep.flat_non_semi_perfect_count << ")\n";
        std::cout << "delta1: " << cg::fmt_double(rep.delta1) << "\n";
        std::cout << "epsilon: " << cg::fmt_double(rep.epsilon) << " (cap "
                  << cg::fmt_double(rep.eps_cap) << ", continuity "
                  << cg::fmt_double(rep.eps_cont) << ")\n";
        std::cout << "delta2: " << cg::fmt_double(rep.delta2) << "\n";
        std::cout << "delta: " << cg::fmt_double(rep.delta) << "\n";
        std::cout << "N: " << rep.N << "\n";
    }
    return 0;
}

int run_confusion(const std::string& file, int cycle_n, int complete_n, int s, bool want_alpha,
                  bool want_chi, const std::string& witness_path, const cg::RunConfig& cfg) {
    int sources = 0;
    if (!file.empty()) ++sources;
    if (cycle_n > 0) ++sources;
    if (complete_n > 0) ++sources;
    if (sources != 1)
        throw std::invalid_argument("give exactly one of a graph file, --cycle or --complete");
    const cg::SideInfoGraph g = !file.empty() ? cg::read_graph_file(file)
                                : cycle_n > 0 ? cg::SideInfoGraph::cycle(cycle_n)
                                              : cg::SideInfoGraph::complete(complete_n);
    if (!want_alpha && !want_chi) want_alpha = want_chi = true;

    cg::ConfusionStats st = cg::gn_beta_report(g, s, cfg, want_alpha, want_chi);

    if (!witness_path.empty() && want_alpha) {
        std::ofstream out(witness_path);
        if (!out) throw std::invalid_argument("cannot write witness file " + witness_path);
        for (const auto& c : st.witness) {
            for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
            out << "\n";
        }
        st.witness_path = witness_path;
    }

    if (cfg.output_format == cg::OutputFormat::structured) {
        emit(st.to_text());
    } else {
        std::cout << "confusion graph of " << (st.side_is_cycle ? "a cycle" : "a graph")
                  << " with n=" << st.n << ", s=" << s << ": " << st.vertex_count
                  << " vertices\n";
        if (st.alpha_computed) {
            std::cout << "alpha: " << st.alpha
                      << (st.alpha_exact ? "" : " (lower bound only; search truncated)") << "\n";
            if (st.alpha_exact) std::cout << "gn = log_s alpha: " << cg::fmt_double(st.gn) << "\n";
            std::cout << "witness verified: " << (st.witness_verified ? "yes" : "no") << "\n";
        }
        if (st.chi_computed) {
            if (st.chi_exact) {
                std::cout << "chi: " << st.chi << "\n";
                std::cout << "beta = log_s chi: " << cg::fmt_double(st.beta) << "\n";
            } else {
                std::cout << "chi: in [" << st.chi_lower << ", " << st.chi_upper
                          << "] (inexact)\n";
            }
        }
        if (st.alpha_exact && st.chi_exact)
            std::cout << "alpha*chi >= s^n: " << (st.product_ok ? "PASS" : "FAIL")
                      << "; gn+beta >= n: " << (st.rate_ok ? "PASS" : "FAIL") << "\n";
        if (st.side_is_odd_cycle && st.alpha_computed)
            std::cout << "alpha >= fix of the fractional-clique-partition protocol (" << st.fcp_fix
                      << "): " << (st.fcp_bound_ok ? "PASS" : "FAIL") << "\n";
        if (!st.witness_path.empty())
            std::cout << "witness written to " << st.witness_path << "\n";
    }

    const bool inexact = (want_alpha && !st.alpha_exact) || (want_chi && !st.chi_exact);
    return inexact ? 4 : 0;
}

int run_index_encode(int n, int s, const std::string& colouring, bool packed_only,
                     const cg::RunConfig& cfg) {
    const cg::ColourSpace sp = cg::factorize(s);
    const std::vector<int> c = parse_int_list(colouring, "colouring");
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("colouring has " + std::to_string(c.size()) +
                                    " entries, expected n = " + std::to_string(n));
    const cg::Broadcast msg = cg::encode(c, sp, n);
    const std::uint64_t packed = cg::pack(msg);
    if (cfg.output_format == cg::OutputFormat::structured) {
        cg::Doc doc("broadcast");
        doc.kv("n", n);
        doc.kv("s", s);
        doc.kv("a", sp.a);
        doc.kv("b", sp.b);
        doc.kv("residues", cg::format_residues(msg));
        doc.kv("packed", packed);
        doc.kv("message_space", cg::message_space_size(n, sp));
        emit(doc.str());
    } else {
        if (packed_only) {
            std::cout << packed << "\n";
        } else {
            std::cout << cg::format_residues(msg) << "\n";
            std::cout << "packed: " << packed << " of "
                      << cg::message_space_size(n, sp) << " messages\n";
        }
    }
    return 0;
}

int run_index_decode(int n, int s, int vertex, int left, int right, bool packed_given,
                     std::uint64_t packed, const std::string& phi_list,
                     const std::string& psi_list, int seam, const cg::RunConfig& cfg) {
    const cg::ColourSpace sp = cg::factorize(s);
    cg::Broadcast msg;
    if (packed_given) {
        msg = cg::unpack(packed, n, sp);
    } else {
        if (phi_list.empty() || psi_list.empty() || seam < 0)
            throw std::invalid_argument(
                "decode needs --packed, or all of --phi, --psi and --seam");
        msg.n = n;
        msg.space = sp;
        msg.phi_residues = parse_int_list(phi_list, "phi residue");
        msg.psi_residues = parse_int_list(psi_list, "psi residue");
        msg.seam_residue = seam;
        msg.validate();
    }
    const int colour = cg::decode(vertex, left, right, msg);
    if (cfg.output_format == cg::OutputFormat::structured) {
        cg::Doc doc("decoded-colour");
        doc.kv("n", n);
        doc.kv("s", s);
        doc.kv("vertex", vertex);
        doc.kv("colour", colour);
        emit(doc.str());
    } else {
        std::cout << "colour: " << colour << "\n";
    }
    return 0;
}

int run_index_roundtrip(int n, int s, const cg::RunConfig& cfg) {
    const cg::ColourSpace sp = cg::factorize(s);
    const std::uint64_t total = cg::pow_u64_checked(static_cast<std::uint64_t>(s), n);
    if (total == UINT64_MAX || total > cfg.enumeration_budget)
        throw cg::budget_error("roundtrip over s^n = " + std::to_string(s) + "^" +
                               std::to_string(n) + " colourings exceeds the enumeration budget of " +
                               std::to_string(cfg.enumeration_budget));
    const std::uint64_t m = cg::message_space_size(n, sp);
    std::vector<bool> seen(m, false);
    std::uint64_t failures = 0;
    for (std::uint64_t id = 0; id < total; ++id) {
        const cg::Colouring c = cg::decode_colouring(id, n, s);
        const cg::Broadcast msg = cg::encode(c, sp, n);
        seen[cg::pack(msg)] = true;
        for (int v = 1; v <= n; ++v) {
            const int left = c[static_cast<size_t>((v - 2 + n) % n)];
            const int right = c[static_cast<size_t>(v % n)];
            if (cg::decode(v, left, right, msg) != c[static_cast<size_t>(v - 1)]) ++failures;
        }
    }
    std::uint64_t distinct = 0;
    for (bool b : seen)
        if (b) ++distinct;
    const bool pass = failures == 0 && distinct == m;
    if (cfg.output_format == cg::OutputFormat::structured) {
        cg::Doc doc("index-roundtrip");
        doc.kv("n", n);
        doc.kv("s", s);
        doc.kv("colourings", total);
        doc.kv("failures", failures);
        doc.kv("distinct_messages", distinct);
        doc.kv("expected_messages", m);
        doc.kv("pass", pass);
        emit(doc.str());
    } else {
        std::cout << s << "^" << n << " = " << total << " colourings, " << failures
                  << " failures, " << distinct << " distinct messages\n";
        std::cout << "expected messages: " << m << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for guessing games and index coding on cycles"};
    app.require_subcommand(1);

    cg::RunConfig cfg;
    std::string format_str = "text";
    app.add_option("--budget", cfg.enumeration_budget, "max colourings to enumerate")
        ->envname("CYCLEGUESS_BUDGET");
    app.add_option("--timeout", cfg.solver_time_budget_s, "seconds per exact solver call")
        ->envname("CYCLEGUESS_TIMEOUT");
    app.add_option("--tolerance", cfg.tolerance, "absolute tolerance for entropy checks")
        ->envname("CYCLEGUESS_TOLERANCE");
    app.add_option("--seed", cfg.seed, "seed for sampled audits")->envname("CYCLEGUESS_SEED");
    app.add_option("--threads", cfg.threads, "worker thread cap")->envname("CYCLEGUESS_THREADS");
    app.add_option("--format", format_str, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->envname("CYCLEGUESS_FORMAT");

    auto* sub_fcp = app.add_subcommand(
        "fcp", "build the fractional-clique-partition protocol and count its fixed set");
    int fcp_n = 0, fcp_s = 0;
    std::string fcp_out, fcp_fixout;
    sub_fcp->add_option("--n", fcp_n, "cycle length (odd)")->required();
    sub_fcp->add_option("--s", fcp_s, "colour count")->required();
    sub_fcp->add_option("--out", fcp_out, "write the protocol file here");
    sub_fcp->add_option("--fixed-set", fcp_fixout, "write the fixed set here");
    sub_fcp->fallthrough();

    auto* sub_entropy = app.add_subcommand("entropy", "audit entropy identities over a protocol's fixed set");
    std::string ent_file;
    sub_entropy->add_option("protocol-file", ent_file, "protocol file to audit")->required();
    sub_entropy->fallthrough();

    auto* sub_classify = app.add_subcommand("classify", "classify a local function (flat / semi-perfect / perfect)");
    std::string cls_file, cls_builtin;
    int cls_s = 0;
    sub_classify->add_option("function-file", cls_file, "function file");
    sub_classify->add_option("--builtin", cls_builtin, "xor, proj or pi")
        ->check(CLI::IsMember({"xor", "proj", "pi"}));
    sub_classify->add_option("--s", cls_s, "colour count (for --builtin)");
    sub_classify->fallthrough();

    auto* sub_constants = app.add_subcommand("constants", "certified epsilon/delta constants for small s");
    int con_s = 0;
    sub_constants->add_option("--s", con_s, "colour count (2 or 3)")->required();
    sub_constants->fallthrough();

    auto* sub_confusion = app.add_subcommand("confusion", "exact alpha/chi of a confusion graph");
    std::string cfu_file, cfu_witness;
    int cfu_cycle = 0, cfu_complete = 0, cfu_s = 0;
    bool cfu_alpha = false, cfu_chi = false;
    sub_confusion->add_option("graph-file", cfu_file, "edge-list file");
    sub_confusion->add_option("--cycle", cfu_cycle, "use the cycle C_n");
    sub_confusion->add_option("--complete", cfu_complete, "use the complete graph K_n");
    sub_confusion->add_option("--s", cfu_s, "colour count")->required();
    sub_confusion->add_flag("--alpha", cfu_alpha, "compute the independence number");
    sub_confusion->add_flag("--chi", cfu_chi, "compute the chromatic number");
    sub_confusion->add_option("--witness", cfu_witness, "write the independent-set witness here");
    sub_confusion->fallthrough();

    auto* sub_index = app.add_subcommand("index", "broadcast encoder/decoder for odd cycles");
    sub_index->require_subcommand(1);
    sub_index->fallthrough();

    auto* sub_encode = sub_index->add_subcommand("encode", "colouring -> broadcast");
    int enc_n = 0, enc_s = 0;
    std::string enc_col;
    bool enc_packed = false;
    sub_encode->add_option("--n", enc_n, "cycle length (odd)")->required();
    sub_encode->add_option("--s", enc_s, "colour count")->required();
    sub_encode->add_option("--colouring", enc_col, "comma-separated colours")->required();
    sub_encode->add_flag("--packed", enc_packed, "print only the packed integer");
    sub_encode->fallthrough();

    auto* sub_decode = sub_index->add_subcommand("decode", "broadcast + neighbours -> colour");
    int dec_n = 0, dec_s = 0, dec_vertex = 0, dec_left = 0, dec_right = 0, dec_seam = -1;
    std::string dec_phi, dec_psi;
    std::uint64_t dec_packed = 0;
    bool dec_has_packed = false;
    sub_decode->add_option("--n", dec_n, "cycle length (odd)")->required();
    sub_decode->add_option("--s", dec_s, "colour count")->required();
    sub_decode->add_option("--vertex", dec_vertex, "receiver index, 1-based")->required();
    sub_decode->add_option("--left", dec_left, "colour of the left neighbour")->required();
    sub_decode->add_option("--right", dec_right, "colour of the right neighbour")->required();
    auto* packed_opt = sub_decode->add_option("--packed", dec_packed, "packed broadcast");
    sub_decode->add_option("--phi", dec_phi, "comma list of first-coordinate residues");
    sub_decode->add_option("--psi", dec_psi, "comma list of second-coordinate residues");
    sub_decode->add_option("--seam", dec_seam, "seam residue");
    sub_decode->fallthrough();

    auto* sub_roundtrip = sub_index->add_subcommand("roundtrip", "exhaustive encode/decode audit");
    int rt_n = 0, rt_s = 0;
    sub_roundtrip->add_option("--n", rt_n, "cycle length (odd)")->required();
    sub_roundtrip->add_option("--s", rt_s, "colour count")->required();
    sub_roundtrip->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cfg.output_format =
        format_str == "structured" ? cg::OutputFormat::structured : cg::OutputFormat::text;
    dec_has_packed = packed_opt->count() > 0;

    try {
        cfg.validate();
        if (*sub_fcp) return run_fcp(fcp_n, fcp_s, fcp_out, fcp_fixout, cfg);
        if (*sub_entropy) return run_entropy(ent_file, cfg);
        if (*sub_classify) {
            if (cls_file.empty() == cls_builtin.empty())
                throw std::invalid_argument("give exactly one of a function file or --builtin");
            return run_classify(cls_file, cls_builtin, cls_s, cfg);
        }
        if (*sub_constants) return run_constants(con_s, cfg);
        if (*sub_confusion)
            return run_confusion(cfu_file, cfu_cycle, cfu_complete, cfu_s, cfu_alpha, cfu_chi,
                                 cfu_witness, cfg);
        if (*sub_encode) return run_index_encode(enc_n, enc_s, enc_col, enc_packed, cfg);
        if (*sub_decode)
            return run_index_decode(dec_n, dec_s, dec_vertex, dec_left, dec_right,
                                    dec_has_packed, dec_packed, dec_phi, dec_psi, dec_seam, cfg);
        if (*sub_roundtrip) return run_index_roundtrip(rt_n, rt_s, cfg);
        throw std::invalid_argument("no subcommand selected");
    } catch (const cg::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const cg::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 4;
    } catch (const cg::trivial_protocol_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
