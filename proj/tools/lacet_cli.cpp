// Command-line front end: interlacement analysis, realizability on the
// sphere / projective plane / Klein bottle via the affine restriction
// system, exhaustive minimal-connectivity search, and quadratic-system
// export, with deterministic text or JSON output.

#include "lacet/errors.hpp"
#include "lacet/klein_system.hpp"
#include "lacet/quad_system.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool compact = false;
    std::uint64_t max_enum = lacet::gf2::kDefaultEnumCap;
    int limit = 20;
};

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

lacet::GaussCode parse_input(const std::vector<std::string>& tokens, const GlobalOpts& opts) {
    return lacet::parse_gauss_code(join_tokens(tokens), opts.compact);
}

lacet::Coloring parse_gamma(const std::string& text, const lacet::GaussCode& code) {
    const lacet::Coloring gamma = lacet::Coloring::from_string(text);
    if (gamma.n() != code.n())
        lacet::fail(lacet::Errc::bad_coloring,
                    "coloring has " + std::to_string(gamma.n()) + " bits, the code has n = " +
                        std::to_string(code.n()));
    return gamma;
}

json code_json(const lacet::GaussCode& code, const std::vector<std::string>& tokens) {
    return json{{"tokens", tokens},
                {"n", code.n()},
                {"sequence", code.sequence()},
                {"names", code.names()}};
}

void print_code_header(const lacet::GaussCode& code, const std::vector<std::string>& tokens) {
    std::cout << "code: " << join_tokens(tokens) << "\n";
    std::cout << "n: " << code.n() << "\n";
    std::cout << "normalized:";
    for (int v : code.sequence()) std::cout << ' ' << v;
    std::cout << "\n";
}

json partition_json(const lacet::PartitionWitness& w) {
    return json{{"O0", lacet::labels_of(w.o0)},
                {"O1", lacet::labels_of(w.o1)},
                {"E0", lacet::labels_of(w.e0)},
                {"E1", lacet::labels_of(w.e1)}};
}

json system_json(const lacet::KleinLinearSystem& sys) {
    json rows = json::array(), origin = json::array();
    for (std::size_t i = 0; i < sys.m(); ++i) rows.push_back(sys.lhs.row(i).to_string());
    for (const auto& o : sys.origin)
        origin.push_back(json{{"k", o.k}, {"l", o.l}, {"class", std::string(to_string(o.cls))}});
    return json{{"m", sys.m()}, {"n", sys.n}, {"rows", rows},
                {"rhs", sys.rhs.to_string()}, {"origin", origin}};
}

int cmd_analyze(const std::vector<std::string>& tokens, const std::string& gamma_text,
                const GlobalOpts& opts) {
    const lacet::GaussCode code = parse_input(tokens, opts);
    const int n = code.n();
    const lacet::ParityPartition pp = parity_partition(code);

    json out{{"command", "analyze"}, {"code", code_json(code, tokens)}, {"status", "ok"}};
    json inter = json::array(), inter2 = json::array();
    for (int x = 1; x <= n; ++x) {
        inter.push_back(lacet::labels_of(interlace(code, x)));
        inter2.push_back(lacet::labels_of(interlace_squared(code, x)));
    }
    out["interlace"] = inter;
    out["interlace_squared"] = inter2;
    out["odd"] = lacet::labels_of(pp.odd);
    out["even"] = lacet::labels_of(pp.even);
    out["orientable"] = is_orientable(code);

    if (!opts.json) {
        print_code_header(code, tokens);
        for (int x = 1; x <= n; ++x)
            std::cout << "i(" << x << ") = " << lacet::to_label_set_string(interlace(code, x)) << "\n";
        for (int x = 1; x <= n; ++x)
            std::cout << "i2(" << x << ") = " << lacet::to_label_set_string(interlace_squared(code, x))
                      << "\n";
        std::cout << "odd = " << lacet::to_label_set_string(pp.odd) << "\n";
        std::cout << "even = " << lacet::to_label_set_string(pp.even) << "\n";
        std::cout << "orientable: " << (is_orientable(code) ? "true" : "false") << "\n";
    }

    if (!gamma_text.empty()) {
        const lacet::Coloring gamma = parse_gamma(gamma_text, code);
        const lacet::SurfaceClass sc = classify_surface(code, gamma);
        json c = json::array(), c_anti = json::array(), b = json::array();
        for (int x = 1; x <= n; ++x) {
            c.push_back(lacet::labels_of(c_map(code, gamma, x)));
            c_anti.push_back(lacet::labels_of(c_antimap(code, gamma, x)));
            b.push_back(lacet::labels_of(b_map(code, gamma, x)));
        }
        out["gamma"] = gamma.to_string();
        out["c"] = c;
        out["c_anti"] = c_anti;
        out["b"] = b;
        out["connectivity"] = sc.connectivity;
        out["surface"] = std::string(sc.name());
        if (!opts.json) {
            std::cout << "gamma: " << gamma.to_string() << "\n";
            for (int x = 1; x <= n; ++x)
                std::cout << "c(" << x << ") = " << lacet::to_label_set_string(c_map(code, gamma, x))
                          << "\n";
            for (int x = 1; x <= n; ++x)
                std::cout << "c~(" << x << ") = "
                          << lacet::to_label_set_string(c_antimap(code, gamma, x)) << "\n";
            for (int x = 1; x <= n; ++x)
                std::cout << "b(" << x << ") = " << lacet::to_label_set_string(b_map(code, gamma, x))
                          << "\n";
            std::cout << "connectivity: " << sc.connectivity << "\n";
            std::cout << "surface: " << sc.name() << "\n";
        }
    }

    if (opts.json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_klein(const std::vector<std::string>& tokens, bool dump, const GlobalOpts& opts) {
    const lacet::GaussCode code = parse_input(tokens, opts);
    const lacet::RealizabilityReport report = solve_realizability(code, opts.max_enum);

    json out{{"command", "klein"}, {"code", code_json(code, tokens)}, {"m", report.system.m()}};
    if (dump) out["system"] = system_json(report.system);

    if (!opts.json) {
        print_code_header(code, tokens);
        std::cout << "m: " << report.system.m() << "\n";
        if (dump) std::cout << "system:\n" << dump_system(report.system);
    }

    if (!report.realizable()) {
        const auto& nr = std::get<lacet::NotRealizable>(report.outcome);
        const bool ok = lacet::gf2::verify_certificate(report.system.lhs, report.system.rhs,
                                                       nr.certificate);
        out["status"] = "not_realizable";
        out["certificate"] = nr.certificate.to_string();
        out["certificate_verified"] = ok;
        json rows = json::array();
        for (std::size_t i = 0; i < report.system.m(); ++i) {
            if (!nr.certificate.test(i)) continue;
            const auto& o = report.system.origin[i];
            rows.push_back(json{{"k", o.k}, {"l", o.l}, {"class", std::string(to_string(o.cls))}});
        }
        out["certificate_rows"] = rows;
        if (opts.json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "status: not_realizable\n";
            std::cout << "certificate: " << nr.certificate.to_string() << "\n";
            std::cout << "certificate_verified: " << (ok ? "true" : "false") << "\n";
            for (std::size_t i = 0; i < report.system.m(); ++i) {
                if (!nr.certificate.test(i)) continue;
                const auto& o = report.system.origin[i];
                std::cout << "  row " << i << ": k=" << o.k << " l=" << o.l << " class="
                          << to_string(o.cls) << "\n";
            }
        }
        return 1;
    }

    const auto& r = std::get<lacet::Realizable>(report.outcome);
    std::size_t verified = 0;
    for (const auto& s : r.solutions) verified += s.verified ? 1 : 0;
    out["status"] = "realizable";
    out["affine_dim"] = r.affine_dim;
    out["solution_count"] = r.solutions.size();
    out["verified_count"] = verified;
    json sols = json::array();
    for (const auto& s : r.solutions)
        sols.push_back(json{{"gamma", s.solution.gamma.to_string()},
                            {"delta", s.solution.delta.to_string()},
                            {"surface", std::string(s.surface.name())},
                            {"connectivity", s.surface.connectivity},
                            {"verified", s.verified},
                            {"partition", partition_json(s.partition)}});
    out["solutions"] = sols;

    if (opts.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "status: realizable\n";
        std::cout << "affine_dim: " << r.affine_dim << "\n";
        std::cout << "solutions: " << r.solutions.size() << " (verified: " << verified << ")\n";
        for (const auto& s : r.solutions) {
            std::cout << "gamma=" << s.solution.gamma.to_string()
                      << " delta=" << s.solution.delta.to_string() << " surface=" << s.surface.name()
                      << " conn=" << s.surface.connectivity
                      << " verified=" << (s.verified ? "yes" : "no")
                      << " O0=" << lacet::to_label_set_string(s.partition.o0)
                      << " O1=" << lacet::to_label_set_string(s.partition.o1)
                      << " E0=" << lacet::to_label_set_string(s.partition.e0)
                      << " E1=" << lacet::to_label_set_string(s.partition.e1) << "\n";
        }
    }
    return 0;
}

int cmd_conn2(const std::vector<std::string>& tokens, const GlobalOpts& opts) {
    const lacet::GaussCode code = parse_input(tokens, opts);
    const lacet::MinConn2 mc = min_conn2(code, opts.limit);
    const lacet::SurfaceClass sc = classify_surface(code, mc.witness);

    if (opts.json) {
        const json out{{"command", "conn2"},
                       {"code", code_json(code, tokens)},
                       {"status", "ok"},
                       {"min_connectivity", mc.connectivity},
                       {"witness", mc.witness.to_string()},
                       {"surface", std::string(sc.name())}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_code_header(code, tokens);
        std::cout << "min_connectivity: " << mc.connectivity << "\n";
        std::cout << "witness: " << mc.witness.to_string() << "\n";
        std::cout << "surface: " << sc.name() << "\n";
    }
    return 0;
}

int cmd_quad(const std::vector<std::string>& tokens, int p, const std::string& gamma_text,
             const std::string& output_path, const GlobalOpts& opts) {
    const lacet::GaussCode code = parse_input(tokens, opts);
    const lacet::QuadraticSystem sys = build_quadratic(code, p);
    const std::string anf = export_anf(sys);

    json out{{"command", "quad"},       {"code", code_json(code, tokens)},
             {"status", "ok"},          {"p", p},
             {"equations", sys.equations()}, {"variables", sys.variables()}};

    if (!output_path.empty()) {
        std::ofstream file(output_path);
        if (!file) {
            std::cerr << "error: cannot open " << output_path << "\n";
            return 2;
        }
        file << anf;
        out["anf_path"] = output_path;
    } else {
        out["anf"] = anf;
    }

    int exit_code = 0;
    if (!gamma_text.empty()) {
        const lacet::Coloring gamma = parse_gamma(gamma_text, code);
        out["gamma"] = gamma.to_string();
        const auto solved = solve_fixed_gamma(code, gamma, p);
        if (const auto* over = std::get_if<lacet::gf2::RankExceedsP>(&solved)) {
            out["status"] = "rank_exceeds_p";
            out["rank"] = over->rank;
            exit_code = 1;
        } else {
            const auto& a = std::get<lacet::QuadAssignment>(solved);
            json delta = json::array(), epsilon = json::array();
            for (int x = 0; x < code.n(); ++x) {
                delta.push_back(a.delta.row(x).to_string());
                epsilon.push_back(a.epsilon.row(x).to_string());
            }
            out["assignment"] = json{{"delta", delta}, {"epsilon", epsilon}};
            out["violations"] = evaluate(sys, a).size();
        }
    }

    if (opts.json) {
        std::cout << out.dump(2) << "\n";
        return exit_code;
    }

    print_code_header(code, tokens);
    std::cout << "p: " << p << "\n";
    std::cout << "equations: " << sys.equations() << "\n";
    std::cout << "variables: " << sys.variables() << "\n";
    if (!gamma_text.empty()) {
        std::cout << "gamma: " << gamma_text << "\n";
        if (out["status"] == "rank_exceeds_p") {
            std::cout << "status: rank_exceeds_p (rank " << out["rank"].get<std::size_t>()
                      << " > p = " << p << ")\n";
        } else {
            std::cout << "status: solved\n";
            std::cout << "violations: " << out["violations"].get<std::size_t>() << "\n";
            for (int x = 0; x < code.n(); ++x)
                std::cout << "delta[" << (x + 1) << "] = "
                          << out["assignment"]["delta"][x].get<std::string>() << "\n";
            for (int x = 0; x < code.n(); ++x)
                std::cout << "epsilon[" << (x + 1) << "] = "
                          << out["assignment"]["epsilon"][x].get<std::string>() << "\n";
        }
    }
    if (!output_path.empty())
        std::cout << "anf: " << output_path << "\n";
    else
        std::cout << anf;
    return exit_code;
}

int exit_code_for(const lacet::Error& e) {
    switch (e.code()) {
    case lacet::Errc::too_many_solutions:
    case lacet::Errc::too_large: return 3;
    case lacet::Errc::internal_inconsistency: return 4;
    default: return 2;
    }
}

const char* status_for(const lacet::Error& e) {
    switch (exit_code_for(e)) {
    case 3: return "limit_exceeded";
    case 4: return "internal_error";
    default: return "input_error";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-face colorable lacet realizability for Gauss codes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit a JSON report on stdout");
    app.add_flag("--compact", opts.compact, "one label per character, e.g. 1456543873212876");
    app.add_option("--max-enum", opts.max_enum, "solution enumeration cap (default 2^20)");
    app.add_option("--limit", opts.limit, "largest n accepted by exhaustive coloring sweeps");

    std::vector<std::string> analyze_code, klein_code, conn2_code, quad_code;
    std::string analyze_gamma, quad_gamma, quad_output;
    bool klein_dump = false;
    int quad_p = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "interlacement, parity and surface data");
    analyze->add_option("code", analyze_code, "Gauss code tokens")->required()->take_all();
    analyze->add_option("--gamma", analyze_gamma, "coloring bit string, one bit per label");

    CLI::App* klein = app.add_subcommand(
        "klein", "solve the sphere / projective-plane / Klein-bottle restriction system");
    klein->add_option("code", klein_code, "Gauss code tokens")->required()->take_all();
    klein->add_flag("--dump-system", klein_dump, "print the restriction system");

    CLI::App* conn2 = app.add_subcommand("conn2", "minimal 2-face-colorable connectivity");
    conn2->add_option("code", conn2_code, "Gauss code tokens")->required()->take_all();

    CLI::App* quad = app.add_subcommand("quad", "quadratic system for connectivity <= p");
    quad->add_option("code", quad_code, "Gauss code tokens")->required()->take_all();
    quad->add_option("-p,--p", quad_p, "target connectivity bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    quad->add_option("--gamma", quad_gamma, "solve for this fixed coloring");
    quad->add_option("-o,--output", quad_output, "write the ANF export to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_code, analyze_gamma, opts);
        if (klein->parsed()) return cmd_klein(klein_code, klein_dump, opts);
        if (conn2->parsed()) return cmd_conn2(conn2_code, opts);
        return cmd_quad(quad_code, quad_p, quad_gamma, quad_output, opts);
    } catch (const lacet::Error& e) {
        if (opts.json) {
            const json out{{"status", status_for(e)}, {"error", e.what()}};
            std::cout << out.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
