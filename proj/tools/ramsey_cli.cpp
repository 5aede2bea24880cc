// Command-line front end: construct / analyze / extract / oracle / mc /
// selftest over CLR v1 colouring files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/clr_io.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/montecarlo.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/treegen.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUnsatisfied = 2;   // InsufficientStability / SizeBudget
constexpr int kExitInconclusive = 3;  // oracle budget exceeded

using nlohmann::json;
using namespace ramsey;

void write_manifest(const std::string& path, const std::string& subcommand,
                    const std::vector<std::string>& argv_copy, std::uint64_t seed,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, double wall_seconds) {
    if (path.empty()) return;
    json m;
    m["subcommand"] = subcommand;
    m["argv"] = argv_copy;
    m["seed"] = seed;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["version"] = kVersion;
    m["wall_seconds"] = wall_seconds;
    std::ofstream out(path);
    out << m.dump(2) << '\n';
}

int run_construct(std::uint32_t s, std::uint32_t t, std::uint32_t h, std::uint64_t seed,
                  std::uint64_t max_tries, std::uint64_t cap, const std::string& out_path,
                  const std::string& cert_path) {
    BaseColouring base = find_base_colouring(s, h, max_tries, seed);
    std::cerr << "base: s=" << s << " h=" << h << " found after " << base.tries
              << " tries (" << base.oracle_nodes << " oracle nodes)\n";
    Colouring f = build_product_colouring(base, t, cap);
    CertifiedBound cb = certified_bound(base, t);
    if (!out_path.empty()) write_clr_file(out_path, f);
    if (!cert_path.empty()) {
        std::ofstream c(cert_path);
        c << cb.transcript;
    }
    auto prof = unstability(f, IndexSet::full(f.size()));
    std::cout << "m=" << f.size() << " k_bound=" << s * t
              << " max_blocks=" << prof.max_blocks << " ell=" << cb.ell << '\n';
    return kExitOk;
}

int run_analyze(const std::string& in_path, bool exact) {
    Colouring f = read_clr_file(in_path);
    auto prof = unstability(f, IndexSet::full(f.size()));
    std::cout << "m=" << f.size() << '\n';
    std::cout << "edges_colour0=" << f.edge_count(0) << '\n';
    std::cout << "edges_colour1=" << f.edge_count(1) << '\n';
    std::cout << "max_blocks=" << prof.max_blocks << '\n';
    if (exact) {
        auto r0 = max_homogeneous(f, 0);
        auto r1 = max_homogeneous(f, 1);
        std::cout << "max_homogeneous_colour0=" << r0.size << '\n';
        std::cout << "max_homogeneous_colour1=" << r1.size << '\n';
    }
    return kExitOk;
}

int run_extract(const std::string& in_path, std::uint32_t k, std::int64_t d_override,
                std::uint64_t cap, const std::string& trace_path) {
    Colouring f = read_clr_file(in_path);
    std::vector<GroupingTraceRow> trace;

    auto dump_trace = [&]() {
        if (trace_path.empty()) return;
        std::ofstream out(trace_path);
        out << "sigma,window_start,stable_count,b\n";
        for (const auto& row : trace) {
            out << row.sigma << ',' << row.window_start << ',' << row.stable_count << ','
                << int(row.b) << '\n';
        }
    };

    std::uint32_t d = d_override >= 0 ? static_cast<std::uint32_t>(d_override)
                                      : 2 * ilog2(k);
    std::uint64_t need = ipow(k, 2 * d);
    if (need > cap) {
        std::cerr << "SizeBudget: k^(2d) = " << need << " exceeds cap " << cap << '\n';
        return kExitUnsatisfied;
    }

    auto built = build_very_simple(f, k, d, &trace);
    dump_trace();
    if (auto* fail = std::get_if<InsufficientStability>(&built)) {
        std::cerr << "InsufficientStability at sigma='" << fail->sigma
                  << "' best_stable_count=" << fail->best_stable_count << '\n';
        return kExitUnsatisfied;
    }
    auto& vs = std::get<VerySimpleResult>(built);
    EhResult eh = eh_extract(vs.tree, f);
    auto check = is_homogeneous(f, eh.witness);
    std::cout << "selected=" << vs.vertices.size() << " h0=" << eh.h0 << " h1=" << eh.h1
              << " witness_size=" << eh.witness.size() << " homogeneous="
              << (check.ok() ? "yes" : "no") << '\n';
    std::cout << "witness=";
    for (std::size_t i = 0; i < eh.witness.size(); ++i) {
        std::cout << (i ? " " : "") << eh.witness[i];
    }
    std::cout << '\n';
    return kExitOk;
}

int run_oracle(const std::string& in_path, const std::string& colour_sel,
               std::int64_t at_least, std::uint64_t budget, const std::string& cert_path) {
    Colouring f = read_clr_file(in_path);
    CliqueSearchConfig cfg;
    if (budget > 0) cfg.node_budget = budget;

    if (at_least > 0) {
        auto q = has_homogeneous_of_size(f, static_cast<std::uint32_t>(at_least), cfg);
        if (q.kind == SizeQueryResult::Kind::Found) {
            std::cout << "found witness of size " << at_least << ":";
            for (Vertex v : *q.witness) std::cout << ' ' << v;
            std::cout << '\n';
            return kExitOk;
        }
        if (q.kind == SizeQueryResult::Kind::Refuted) {
            std::cout << "refuted: " << q.certificate->claim << " (nodes="
                      << q.certificate->nodes << ")\n";
            if (!cert_path.empty()) {
                json c;
                c["colouring_hash"] = q.certificate->colouring_hash;
                c["claim"] = q.certificate->claim;
                c["nodes"] = q.certificate->nodes;
                c["elapsed_seconds"] = q.certificate->elapsed_seconds;
                std::ofstream out(cert_path);
                out << c.dump(2) << '\n';
            }
            return kExitOk;
        }
        std::cerr << "inconclusive: node budget exceeded\n";
        return kExitInconclusive;
    }

    bool inconclusive = false;
    auto report = [&](Bit b) {
        auto r = max_homogeneous(f, b, cfg);
        std::cout << "colour" << int(b) << ": size=" << r.size
                  << (r.exact ? "" : " (lower bound, budget exceeded)")
                  << " nodes=" << r.nodes << " witness=";
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
            std::cout << (i ? " " : "") << r.witness[i];
        }
        std::cout << '\n';
        if (!r.exact) inconclusive = true;
    };
    if (colour_sel == "0" || colour_sel == "both") report(0);
    if (colour_sel == "1" || colour_sel == "both") report(1);
    return inconclusive ? kExitInconclusive : kExitOk;
}

void print_estimate_csv(std::ostream& out, std::uint32_t j, std::uint32_t k,
                        const Estimate& e) {
    out << j << ',' << k << ',' << e.trials << ',' << e.p_hat << ',' << e.stderr_ << ',';
    if (e.exact) out << *e.exact;
    out << ',' << e.analytic_bound << '\n';
}

int run_mc(std::uint32_t j, std::uint32_t k, std::uint64_t trials, std::uint64_t seed,
           const std::string& grid, const std::string& out_path, bool joint,
           std::int64_t ej_k, std::uint32_t a_size) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open for writing: " + out_path);
        out = &file;
    }

    if (ej_k > 0) {
        auto rep = ej_union_report(static_cast<std::uint32_t>(ej_k),
                                   static_cast<std::uint32_t>(ej_k) + 16, trials, seed,
                                   a_size);
        *out << "j,log2_binom_exact,log2_binom_bound,log2_per_c_bound,log2_product,"
                "log2_quarter_bound\n";
        for (const auto& row : rep.rows) {
            *out << row.j << ',' << row.log2_binom_exact << ',' << row.log2_binom_bound
                 << ',' << row.log2_per_c_bound << ',' << row.log2_product << ','
                 << row.log2_quarter_bound << '\n';
        }
        *out << "# log2_final_bound=" << rep.log2_final_bound << '\n';
        for (const auto& emp : rep.empirical) {
            *out << "# empirical a_size=" << emp.a_size << " j=" << emp.j
                 << " trials=" << emp.trials << " frequency=" << emp.frequency
                 << " stderr=" << emp.stderr_ << '\n';
        }
        return kExitOk;
    }

    *out << "j,k,trials,p_hat,stderr,exact,bound\n";
    auto run_point = [&](std::uint32_t jj, std::uint32_t kk) {
        RunQuery q{jj, kk, trials, seed};
        Estimate e = joint ? estimate_joint_prob(q) : estimate_event_prob(q);
        print_estimate_csv(*out, jj, kk, e);
    };

    if (!grid.empty()) {
        // "j1..j2,k1..k2"
        auto parse_range = [](const std::string& s) {
            auto dots = s.find("..");
            if (dots == std::string::npos) {
                throw std::invalid_argument("bad grid range: " + s);
            }
            return std::pair<std::uint32_t, std::uint32_t>{
                static_cast<std::uint32_t>(std::stoul(s.substr(0, dots))),
                static_cast<std::uint32_t>(std::stoul(s.substr(dots + 2)))};
        };
        auto comma = grid.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad grid: " + grid);
        auto [j1, j2] = parse_range(grid.substr(0, comma));
        auto [k1, k2] = parse_range(grid.substr(comma + 1));
        for (std::uint32_t jj = j1; jj <= j2; ++jj) {
            for (std::uint32_t kk = k1; kk <= k2; ++kk) run_point(jj, kk);
        }
    } else {
        run_point(j, k);
    }
    return kExitOk;
}

int run_selftest() {
    int failures = 0;
    auto suite = [&](const std::string& name, std::uint64_t total, std::uint64_t bad) {
        std::cout << name << ": " << (total - bad) << "/" << total
                  << (bad ? " FAIL" : " pass") << '\n';
        if (bad) ++failures;
    };

    // oracle equivalence, random colourings m <= 10
    {
        std::uint64_t total = 200, bad = 0;
        for (std::uint64_t s = 0; s < total; ++s) {
            Vertex m = 3 + static_cast<Vertex>(s % 8);
            Colouring f = random_colouring(m, 0xabc0 + s);
            auto [e0, e1] = exhaustive_max_homogeneous(f);
            if (max_homogeneous(f, 0).size != e0 || max_homogeneous(f, 1).size != e1) ++bad;
        }
        suite("oracle-equivalence", total, bad);
    }

    // EH product bound on random realized trees
    {
        std::uint64_t total = 200, bad = 0;
        for (std::uint64_t s = 0; s < total; ++s) {
            Vertex n = 2 + static_cast<Vertex>(s % 15);
            auto rt = random_realized_tree(n, 0xe40 + s);
            auto eh = eh_extract(rt.tree, rt.f);
            bool ok = std::uint64_t{eh.h0} * eh.h1 >= n &&
                      is_homogeneous(rt.f, eh.witness).ok();
            if (!ok) ++bad;
        }
        suite("eh-product-bound", total, bad);
    }

    // exact run probability vs direct enumeration, j <= 12
    {
        std::uint64_t total = 0, bad = 0;
        for (std::uint32_t j = 1; j <= 12; ++j) {
            for (std::uint32_t k = 0; k <= j; ++k) {
                ++total;
                std::uint64_t count = 0;
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << j); ++bits) {
                    std::vector<Bit> s(j);
                    for (std::uint32_t i = 0; i < j; ++i) {
                        s[i] = static_cast<Bit>((bits >> i) & 1);
                    }
                    if (longest_run(s) >= k + 1) ++count;
                }
                if (exact_run_prob(j, k).favourable != count) ++bad;
            }
        }
        suite("run-probability-exact", total, bad);
    }

    return failures ? kExitDomainError : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability-parametrized Ramsey colouring toolkit"};
    app.require_subcommand(1);

    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a reproducibility manifest (JSON)");

    // construct
    auto* c_cmd = app.add_subcommand("construct", "build an adversarial product colouring");
    std::uint32_t c_s = 8, c_t = 2, c_h = 6;
    std::uint64_t c_seed = 0, c_tries = 10000, c_cap = std::uint64_t{1} << 20;
    std::string c_out, c_cert;
    c_cmd->set_help_flag("--help", "print help");  // frees -h for the --h option
    c_cmd->add_option("--s", c_s, "base size")->required();
    c_cmd->add_option("--t", c_t, "tower depth")->required();
    c_cmd->add_option("--h", c_h, "certified homogeneity bound of the base")->required();
    c_cmd->add_option("--seed", c_seed, "rng seed");
    c_cmd->add_option("--max-tries", c_tries, "base search attempts");
    c_cmd->add_option("--cap", c_cap, "vertex count cap");
    c_cmd->add_option("--out", c_out, "output CLR file");
    c_cmd->add_option("--cert", c_cert, "certificate transcript file");

    // analyze
    auto* a_cmd = app.add_subcommand("analyze", "report colouring statistics");
    std::string a_in;
    bool a_exact = false;
    a_cmd->add_option("--in", a_in, "input CLR file")->required();
    a_cmd->add_flag("--exact", a_exact, "also run the exact oracle per colour");

    // extract
    auto* e_cmd = app.add_subcommand("extract", "run the grouping/very-simple pipeline");
    std::string e_in, e_trace;
    std::uint32_t e_k = 3;
    std::int64_t e_d = -1;
    std::uint64_t e_cap = std::uint64_t{1} << 20;
    e_cmd->add_option("--in", e_in, "input CLR file")->required();
    e_cmd->add_option("--k", e_k, "stability parameter / target size")->required();
    e_cmd->add_option("--d", e_d, "override recursion depth (default 2*floor(log2 k))");
    e_cmd->add_option("--cap", e_cap, "vertex count cap");
    e_cmd->add_option("--trace", e_trace, "per-sigma grouping trace CSV");

    // oracle
    auto* o_cmd = app.add_subcommand("oracle", "exact maximum homogeneous set search");
    std::string o_in, o_colour = "both", o_cert;
    std::int64_t o_at_least = 0;
    std::uint64_t o_budget = 0;
    bool o_det = false;
    o_cmd->add_option("--in", o_in, "input CLR file")->required();
    o_cmd->add_option("--colour", o_colour, "0, 1 or both")
        ->check(CLI::IsMember({"0", "1", "both"}));
    o_cmd->add_option("--at-least", o_at_least, "decide existence of this size instead");
    o_cmd->add_option("--budget", o_budget, "search node budget (0 = unlimited)");
    o_cmd->add_flag("--deterministic", o_det, "sequential search (always on)");
    o_cmd->add_option("--cert", o_cert, "certificate output file");

    // mc
    auto* m_cmd = app.add_subcommand("mc", "Monte Carlo run-statistics experiments");
    std::uint32_t m_j = 8, m_k = 2, m_asize = 0;
    std::uint64_t m_trials = 100000, m_seed = 0;
    std::string m_grid, m_out;
    bool m_joint = false;
    std::int64_t m_ej = 0;
    m_cmd->add_option("--j", m_j, "string length");
    m_cmd->add_option("--k", m_k, "run parameter (threshold k+1)");
    m_cmd->add_option("--trials", m_trials, "sample count");
    m_cmd->add_option("--seed", m_seed, "rng seed");
    m_cmd->add_option("--grid", m_grid, "grid \"j1..j2,k1..k2\"");
    m_cmd->add_option("--out", m_out, "CSV output file");
    m_cmd->add_flag("--joint", m_joint, "estimate the joint (all-strings) event");
    m_cmd->add_option("--ej", m_ej, "emit the union-bound chain for this k");
    m_cmd->add_option("--a-size", m_asize, "tiny empirical ground-set size (<= 20)");

    // selftest
    app.add_subcommand("selftest", "run the embedded invariant suite");

    CLI11_PARSE(app, argc, argv);

    std::vector<std::string> argv_copy(argv, argv + argc);
    auto t0 = std::chrono::steady_clock::now();
    int rc = kExitOk;
    std::string sub;
    std::uint64_t seed = 0;
    std::vector<std::string> inputs, outputs;

    try {
        if (c_cmd->parsed()) {
            sub = "construct";
            seed = c_seed;
            if (!c_out.empty()) outputs.push_back(c_out);
            if (!c_cert.empty()) outputs.push_back(c_cert);
            rc = run_construct(c_s, c_t, c_h, c_seed, c_tries, c_cap, c_out, c_cert);
        } else if (a_cmd->parsed()) {
            sub = "analyze";
            inputs.push_back(a_in);
            rc = run_analyze(a_in, a_exact);
        } else if (e_cmd->parsed()) {
            sub = "extract";
            inputs.push_back(e_in);
            if (!e_trace.empty()) outputs.push_back(e_trace);
            rc = run_extract(e_in, e_k, e_d, e_cap, e_trace);
        } else if (o_cmd->parsed()) {
            sub = "oracle";
            inputs.push_back(o_in);
            if (!o_cert.empty()) outputs.push_back(o_cert);
            rc = run_oracle(o_in, o_colour, o_at_least, o_budget, o_cert);
        } else if (m_cmd->parsed()) {
            sub = "mc";
            seed = m_seed;
            if (!m_out.empty()) outputs.push_back(m_out);
            rc = run_mc(m_j, m_k, m_trials, m_seed, m_grid, m_out, m_joint, m_ej, m_asize);
        } else {
            sub = "selftest";
            rc = run_selftest();
        }
    } catch (const ClrParseError& ex) {
        std::cerr << ex.what() << '\n';
        rc = kExitDomainError;
    } catch (const BaseNotFound& ex) {
        std::cerr << ex.what() << '\n';
        rc = kExitDomainError;
    } catch (const SizeCapExceeded& ex) {
        std::cerr << ex.what() << '\n';
        rc = kExitUnsatisfied;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        rc = kExitDomainError;
    }

    double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_manifest(manifest_path, sub, argv_copy, seed, inputs, outputs, wall);
    return rc;
}
