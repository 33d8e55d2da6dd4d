#pragma once

// Command-line front end. Kept as a library function so the argument
// handling and output paths are testable without spawning processes.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure.

#include "cubecensus/census.hpp"
#include "cubecensus/cycle_index.hpp"
#include "cubecensus/hyperplane_cycle_index.hpp"
#include "cubecensus/hyperplanes.hpp"
#include "cubecensus/io.hpp"
#include "cubecensus/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cubecensus {

namespace cli_detail {

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) v.push_back(std::stoi(tok));
    return v;
}

inline std::pair<int, int> parse_range(const std::string& s, int lo, int hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(s);
        return {k, k};
    }
    int a = std::stoi(s.substr(0, dots));
    int b = std::stoi(s.substr(dots + 2));
    if (a > b || a < lo || b > hi) throw CLI::ValidationError("--k", "range out of bounds");
    return {a, b};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact census of 0/1-polytope classes of the n-cube"};
    app.require_subcommand(1);

    int n = 0;
    std::string coeffs_arg, krange, format = "text", external_path, atlas_path, what = "all";
    int rhs = 0, min_vertices = 0, samples = 10000, n_max = 5, threads = 0;
    bool expensive = false;
    std::uint64_t seed = 12345;

    auto* ci = app.add_subcommand("cycle-index",
                                  "print the cycle index of B_n on the cube vertices, or of a "
                                  "hyperplane stabilizer when --coeffs is given");
    ci->add_option("n", n, "cube dimension (1..6)")->required()->check(CLI::Range(1, 6));
    ci->add_option("--coeffs", coeffs_arg, "hyperplane coefficients, e.g. 1,1,2");
    ci->add_option("--rhs", rhs, "hyperplane right-hand side");

    auto* hy = app.add_subcommand("hyperplanes", "spanned-hyperplane atlas");
    hy->add_option("n", n, "cube dimension (1..6)")->required()->check(CLI::Range(1, 6));
    hy->add_option("--min-vertices", min_vertices, "only classes with at least this many cube vertices");
    hy->add_flag("--expensive", expensive, "enumerate n = 6 from scratch instead of the builtin list");
    hy->add_option("--threads", threads, "worker threads for the expensive scan (0 = auto)");
    hy->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* tb = app.add_subcommand("table", "census table of A_n(k), H_n(k), F_n(k)");
    tb->add_option("n", n, "cube dimension (1..6)")->required()->check(CLI::Range(1, 6));
    tb->add_option("--k", krange, "restrict to a row range, e.g. 13..16");
    tb->add_option("--external", external_path, "file with externally known F values");
    tb->add_option("--atlas", atlas_path, "hyperplane atlas file overriding the builtin n = 6 list");
    tb->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* st = app.add_subcommand("stabilizer", "stabilizer structure of one hyperplane");
    st->add_option("n", n, "cube dimension (1..6)")->required()->check(CLI::Range(1, 6));
    st->add_option("--coeffs", coeffs_arg, "hyperplane coefficients, e.g. 1,1,2")->required();
    st->add_option("--rhs", rhs, "hyperplane right-hand side")->required();

    auto* vf = app.add_subcommand("verify", "run the verification suite");
    vf->add_option("what", what, "all (reserved for named subsets)");
    vf->add_option("--n-max", n_max, "largest cube dimension to verify")->check(CLI::Range(1, 6));
    vf->add_option("--seed", seed, "seed for sampled checks");
    vf->add_option("--samples", samples, "samples per (n,s) in the bound check");
    vf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*ci) {
            if (coeffs_arg.empty()) {
                out << to_text(hypercube_cycle_index(n));
            } else {
                GeneralHyperplane g;
                g.n = n;
                g.coeffs.assign(n, 0);
                auto cs = cli_detail::parse_int_list(coeffs_arg);
                if (static_cast<int>(cs.size()) > n) throw std::invalid_argument("more coefficients than n");
                for (std::size_t i = 0; i < cs.size(); ++i) g.coeffs[i] = cs[i];
                g.rhs = rhs;
                out << to_text(cycle_index_symbolic(canonicalize(g)));
            }
            return 0;
        }

        if (*hy) {
            std::vector<SpannedHyperplane> reps;
            if (n == 6 && !expensive) {
                reps = builtin_representatives(6, min_vertices >= 17 ? 17 : 13);
            } else {
                reps = enumerate_spanned(n, expensive, threads);
            }
            if (min_vertices > 0) {
                std::erase_if(reps, [&](const SpannedHyperplane& h) {
                    return vertices_on(h).count() < min_vertices;
                });
            }
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& h : reps) {
                    arr.push_back({{"n", h.ambient},
                                   {"coeffs", h.coeffs},
                                   {"rhs", h.rhs},
                                   {"alpha", hyperplane_type(h).alpha},
                                   {"delta", delta(h)},
                                   {"vertices", vertices_on(h).count()},
                                   {"stabilizer_order", stabilizer_description(h).order()}});
                }
                out << arr.dump(2) << "\n";
            } else {
                out << atlas_to_text(reps);
            }
            return 0;
        }

        if (*tb) {
            std::optional<std::vector<SpannedHyperplane>> atlas;
            if (!atlas_path.empty()) atlas = atlas_from_text(cli_detail::read_file(atlas_path));
            CensusBuilder census(n, std::move(atlas));
            std::map<int, Integer> external;
            if (!external_path.empty()) external = read_external_values(cli_detail::read_file(external_path));
            CensusTable table = census.assemble(external);
            if (!krange.empty()) {
                auto [lo, hi] = cli_detail::parse_range(krange, 0, 1 << n);
                CensusTable cut;
                cut.n = table.n;
                for (auto& r : table.rows)
                    if (r.k >= lo && r.k <= hi) cut.rows.push_back(std::move(r));
                table = std::move(cut);
            }
            if (format == "csv") out << to_csv(table);
            else if (format == "json") out << to_json(table).dump(2) << "\n";
            else out << to_text(table);
            return 0;
        }

        if (*st) {
            GeneralHyperplane g;
            g.n = n;
            g.coeffs.assign(n, 0);
            auto cs = cli_detail::parse_int_list(coeffs_arg);
            if (static_cast<int>(cs.size()) > n) throw std::invalid_argument("more coefficients than n");
            for (std::size_t i = 0; i < cs.size(); ++i) g.coeffs[i] = cs[i];
            g.rhs = rhs;
            SpannedHyperplane h = canonicalize(g);
            auto desc = stabilizer_description(h);
            out << "canonical form:";
            for (int i = 0; i < h.support(); ++i) out << (i ? " + " : " ") << h.coeffs[i] << " x" << i + 1;
            out << " = " << h.rhs << "\n";
            out << "type alpha: (";
            for (std::size_t i = 0; i < desc.alpha.alpha.size(); ++i)
                out << (i ? "," : "") << desc.alpha.alpha[i];
            out << ")\ndelta: " << desc.delta << "\n";
            out << "vertices: " << vertices_on(h).count() << "\n";
            out << "stabilizer order: " << desc.order() << "\n";
            out << "cycle index of the stabilizer action:\n" << to_text(cycle_index_symbolic(h));
            return 0;
        }

        if (*vf) {
            if (what != "all") throw std::invalid_argument("unknown verification subset: " + what);
            VerifyOptions vo;
            vo.n_max = n_max;
            vo.seed = seed;
            vo.samples = samples;
            auto results = run_verification(vo);
            bool ok = true;
            for (const auto& r : results) ok = ok && r.pass;
            if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : results)
                    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                out << arr.dump(2) << "\n";
            } else {
                out << report_text(results);
            }
            return ok ? 0 : 3;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cubecensus
