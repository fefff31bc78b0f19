// walkup — generate the triangulated-manifold families, certify their
// properties, and emit JSON verification reports.

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "walkup/certificate.hpp"
#include "walkup/complex.hpp"
#include "walkup/errors.hpp"
#include "walkup/generators.hpp"
#include "walkup/homology.hpp"
#include "walkup/io.hpp"
#include "walkup/orientation.hpp"
#include "walkup/stacked.hpp"
#include "walkup/symmetry.hpp"

namespace {

using namespace walkup;

constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 65;

// Row-0 comparison data: the link cycle of vertex 0 in the 19-vertex
// surfaces, and the Ringel-Youngs one for non-isomorphism comparison.
const std::vector<int> kRow0_M2 = {1, 7, 3, 2, 11, 6, 18, 16, 4, 14, 8, 10, 15, 12, 13, 5, 9, 17};
const std::vector<int> kRow0_N2 = {1, 12, 3, 2, 6, 11, 18, 16, 9, 5, 13, 15, 10, 7, 8, 14, 4, 17};
const std::vector<int> kRow0_R = {1, 11, 14, 13, 15, 3, 8, 9, 7, 4, 17, 10, 18, 5, 16, 12, 2, 6};

Permutation parse_sigma(const std::string& word, int size) {
    if (word == "id") return identity_permutation(size);
    Permutation p;
    std::string cleaned(word);
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    int x;
    while (in >> x) p.push_back(x);
    if (static_cast<int>(p.size()) != size)
        throw Error("sigma must list " + std::to_string(size) + " images or be 'id'");
    return p;
}

std::string fvector_str(const FVector& fv) {
    std::string s = "f = (";
    for (std::size_t i = 0; i < fv.counts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(fv.counts[i]);
    }
    return s + "), chi = " + std::to_string(fv.euler);
}

// Extracts the cyclic vertex order of a 1-dimensional cycle complex.
std::vector<int> cycle_order(const Complex& lk) {
    if (lk.dim() != 1) throw Error("link is not one-dimensional");
    std::map<Label, std::vector<Label>> adj;
    for (const Face& e : lk.facets()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) throw Error("link is not a cycle");
    std::vector<int> order;
    Label start = adj.begin()->first;
    Label prev = -1, cur = start;
    do {
        order.push_back(cur);
        const auto& nb = adj[cur];
        Label next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    } while (cur != start && order.size() <= adj.size());
    if (order.size() != adj.size()) throw Error("link is not a single cycle");
    return order;
}

// Equality of cyclic sequences up to rotation and reflection.
bool cyclically_equal(const std::vector<int>& a, std::vector<int> b) {
    if (a.size() != b.size()) return false;
    for (int flip = 0; flip < 2; ++flip) {
        for (std::size_t shift = 0; shift < b.size(); ++shift) {
            bool same = true;
            for (std::size_t i = 0; i < a.size() && same; ++i)
                same = a[i] == b[(i + shift) % b.size()];
            if (same) return true;
        }
        std::reverse(b.begin(), b.end());
    }
    return false;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    std::string family;
    int d = 0;
    int m = 0;
    std::string part = "";
    std::string sigma = "id";
    std::string output;
};

int run_generate(const GenerateArgs& args) {
    Complex X;
    std::string name;
    if (args.family == "M" || args.family == "N") {
        if (args.d < 2) {
            std::cerr << "error: --d must be >= 2 for family " << args.family << "\n";
            return kExitUsage;
        }
        Family fam = args.family == "M" ? family_M(args.d) : family_N(args.d);
        const std::string part = args.part.empty() ? "boundary" : args.part;
        if (part == "boundary") X = fam.manifold;
        else if (part == "filling") X = fam.filling;
        else {
            std::cerr << "error: --part must be boundary or filling\n";
            return kExitUsage;
        }
        name = args.family + " d=" + std::to_string(args.d) + " " + part;
    } else if (args.family == "bundle") {
        X = sphere_bundle(args.d, args.m, parse_sigma(args.sigma, args.d + 1));
        name = "bundle d=" + std::to_string(args.d) + " m=" + std::to_string(args.m) +
               " sigma=" + args.sigma;
    } else if (args.family == "pathball") {
        X = path_ball(args.d, args.m);
        name = "pathball D=" + std::to_string(args.d) + " m=" + std::to_string(args.m);
    } else if (args.family == "simplex") {
        const std::string part = args.part.empty() ? "sphere" : args.part;
        if (part == "sphere") X = simplex_sphere(args.d);
        else if (part == "ball") X = simplex_ball(args.d);
        else {
            std::cerr << "error: --part must be sphere or ball\n";
            return kExitUsage;
        }
        name = "simplex " + part + " d=" + std::to_string(args.d);
    } else {
        std::cerr << "error: unknown family '" << args.family << "'\n";
        return kExitUsage;
    }

    const std::string summary = name + ": " + fvector_str(f_vector(X));
    if (args.output.empty()) {
        write_facet_list(std::cout, X, name);
        std::cerr << summary << "\n";
    } else {
        write_facet_file(args.output, X, name);
        std::cout << summary << " -> " << args.output << "\n";
    }
    return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string input;
    std::vector<std::string> checks;
    bool all = false;
    int n_cyclic = -1;
    int vertex = -1;
    int samples = 200;
    std::uint64_t seed = 1;
    std::string json_path;
    bool canonical = false;
    int jobs = 1;
};

CheckResult timed(const std::string& name, const std::function<CheckResult()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.verdict = Verdict::Fail;
        r.detail = e.what();
    }
    r.name = name;
    r.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

int run_verify(const VerifyArgs& args) {
    Complex X;
    try {
        X = read_facet_file(args.input);
    } catch (const ParseError& e) {
        std::cerr << "parse error in " << args.input << ": " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    std::vector<std::string> selected = args.checks;
    if (args.all) {
        selected = {"neighborly", "class-k", "betti"};
        if (X.dim() >= 3) selected.push_back("tight-neighborly");
        selected.push_back("tight");
        selected.push_back("orient");
        if (args.n_cyclic > 0) selected.push_back("cyclic");
        selected.push_back("aut");
    }
    if (selected.empty()) {
        std::cerr << "error: nothing to do; pass --all or --check\n";
        return kExitUsage;
    }

    const std::vector<std::string> known = {
        "classify", "neighborly", "class-k", "class-kbar", "betti",
        "tight-neighborly", "tight", "orient", "cyclic", "aut",
        "link-order", "spotcheck"};
    for (const auto& c : selected) {
        if (std::find(known.begin(), known.end(), c) == known.end()) {
            std::cerr << "error: unknown check '" << c << "'\n";
            return kExitUsage;
        }
        if (c == "cyclic" && args.n_cyclic <= 0) {
            std::cerr << "error: --check cyclic requires --n-cyclic\n";
            return kExitUsage;
        }
        if (c == "link-order" && args.vertex < 0) {
            std::cerr << "error: --check link-order requires --vertex\n";
            return kExitUsage;
        }
    }

    auto make_body = [&](const std::string& c) -> std::function<CheckResult()> {
        if (c == "classify") return [&X] {
            CheckResult r;
            PseudoClass pc = classify_pseudo(X);
            r.verdict = Verdict::Pass;
            r.detail = pc == PseudoClass::NotWeak            ? "not a weak pseudomanifold"
                       : pc == PseudoClass::WeakPseudomanifold ? "weak pseudomanifold"
                                                               : "pseudomanifold";
            return r;
        };
        if (c == "neighborly") return [&X] {
            CheckResult r;
            const bool ok = is_l_neighborly(X, 2);
            r.verdict = ok ? Verdict::Pass : Verdict::Fail;
            r.detail = ok ? "2-neighborly" : "not 2-neighborly";
            return r;
        };
        if (c == "class-k") return [&X] {
            CheckResult r;
            ClassVerdict v = in_walkup_K(X);
            r.verdict = v.verdict ? Verdict::Pass : Verdict::Fail;
            r.detail = v.verdict ? "member of K(d): all vertex links are stacked spheres"
                                 : "not in K(d)";
            if (!v.verdict)
                for (const auto& [vert, ev] : v.per_vertex)
                    if (!ev.ok) {
                        r.witness["first_bad_vertex"] = vert;
                        r.witness["note"] = ev.note;
                        break;
                    }
            return r;
        };
        if (c == "class-kbar") return [&X] {
            CheckResult r;
            ClassVerdict v = in_walkup_Kbar(X);
            r.verdict = v.verdict ? Verdict::Pass : Verdict::Fail;
            r.detail = v.verdict ? "member of Kbar(d): all vertex links are stacked balls"
                                 : "not in Kbar(d)";
            return r;
        };
        if (c == "betti") return [&X] {
            CheckResult r;
            BettiVector b = betti(X);
            FVector fv = f_vector(X);
            const bool ok = b.euler() == fv.euler;
            r.verdict = ok ? Verdict::Pass : Verdict::Fail;
            std::string bs = "beta = (";
            for (std::size_t i = 0; i < b.beta.size(); ++i)
                bs += (i ? "," : "") + std::to_string(b.beta[i]);
            r.detail = bs + "), euler check " + (ok ? "consistent" : "violated");
            r.witness = {{"betti", b.beta}, {"euler", fv.euler}};
            return r;
        };
        if (c == "tight-neighborly") return [&X] {
            Certificate sub = tight_neighborly(X);
            CheckResult r = *sub.find("tight_neighborly_equality");
            return r;
        };
        if (c == "tight") return [&X] {
            Certificate sub = tightness_certificate(X);
            return *sub.find("tight");
        };
        if (c == "orient") return [&X] {
            CheckResult r;
            OrientabilityResult o = orientability(X);
            r.verdict = Verdict::Pass;
            r.detail = o.orientable ? "orientable" : "non-orientable";
            r.witness["orientable"] = o.orientable;
            if (!o.orientable) r.witness["flipping_cycle_length"] = o.witness_cycle.size();
            return r;
        };
        if (c == "cyclic") return [&X, &args] {
            CheckResult r;
            const bool ok = verify_cyclic_action(X, args.n_cyclic);
            r.verdict = ok ? Verdict::Pass : Verdict::Fail;
            r.detail = "shift i -> i+1 mod " + std::to_string(args.n_cyclic) +
                       (ok ? " preserves facets" : " does not preserve facets");
            return r;
        };
        if (c == "aut") return [&X] {
            CheckResult r;
            GroupDescription g = automorphism_group(X);
            r.verdict = Verdict::Pass;
            r.detail = "automorphism group order " + std::to_string(g.order);
            nlohmann::json gens = nlohmann::json::array();
            for (const auto& p : g.generators) gens.push_back(permutation_json(p.mapping));
            r.witness = {{"order", g.order}, {"generators", gens}};
            return r;
        };
        if (c == "link-order") return [&X, &args] {
            CheckResult r;
            std::vector<int> order = cycle_order(link(X, Face{{args.vertex}}));
            std::string matched;
            if (cyclically_equal(order, kRow0_M2)) matched = "M2_19";
            else if (cyclically_equal(order, kRow0_N2)) matched = "N2_19";
            else if (cyclically_equal(order, kRow0_R)) matched = "R";
            r.verdict = matched.empty() ? Verdict::Fail : Verdict::Pass;
            r.detail = matched.empty()
                           ? "link cycle matches no stored row-0 permutation"
                           : "link cycle matches row 0 of " + matched +
                                 " up to rotation/reflection";
            r.witness = {{"cycle", order}};
            return r;
        };
        // spotcheck
        return [&X, &args] {
            Certificate sub = tightness_spotcheck(X, args.samples, args.seed);
            CheckResult r = *sub.find("injectivity");
            r.name = "spotcheck";
            return r;
        };
    };

    Certificate cert;
    cert.subject = file_digest(args.input);
    cert.parameters = {{"input", args.input}};
    if (args.n_cyclic > 0) cert.parameters["n_cyclic"] = args.n_cyclic;
    for (const auto& c : selected)
        if (c == "spotcheck") {
            cert.parameters["samples"] = args.samples;
            cert.parameters["seed"] = args.seed;
        }

    if (args.jobs <= 1) {
        for (const auto& c : selected) cert.add(timed(c, make_body(c)));
    } else {
        std::vector<std::future<CheckResult>> futures;
        for (const auto& c : selected)
            futures.push_back(std::async(std::launch::async,
                                         [c, body = make_body(c)] { return timed(c, body); }));
        for (auto& f : futures) cert.add(f.get());
    }

    for (const auto& c : cert.checks)
        std::cerr << c.name << ": " << verdict_str(c.verdict)
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";

    nlohmann::json j = certificate_to_json(cert, args.canonical);
    if (args.json_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(args.json_path);
        out << j.dump(2) << "\n";
        std::cout << "certificate -> " << args.json_path << "\n";
    }

    switch (cert.overall()) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return kExitFail;
        case Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

// ---- table ----------------------------------------------------------------

int run_table(const std::string& json_path, int max_d) {
    nlohmann::json rows = nlohmann::json::array();
    auto static_row = [&](const std::string& b1, const std::string& d, const std::string& n,
                          const std::string& name, const std::string& carrier,
                          const std::string& status) {
        rows.push_back({{"beta1", b1},
                        {"d", d},
                        {"n", n},
                        {"complex", name},
                        {"carrier", carrier},
                        {"status", status}});
    };

    {
        Complex s = simplex_sphere(3);
        BettiVector b = betti(s);
        const bool ok = b.beta == std::vector<std::int64_t>{1, 0, 0, 1};
        static_row("0", "d", "d+2", "S^d_{d+2}", "S^d",
                   ok ? "computed (checked at d=3)" : "CHECK FAILED");
    }
    static_row("1", "even", "2d+3", "K^d_{2d+3}", "S^{d-1} x S^1", "out of scope: external data");
    static_row("1", "odd", "2d+3", "K^d_{2d+3}", "S^{d-1} x~ S^1", "out of scope: external data");
    static_row("2", ">=4", "-", "none", "-", "not possible");
    static_row("3", "4", "15", "M^4_15", "(S^3 x~ S^1)#3", "out of scope: external data");
    static_row("3", "4", "15", "N^4_15", "(S^3 x S^1)#3", "out of scope: external data");
    static_row("5", "5", "21", "?", "-", "out of scope: open");
    static_row("7", "4", "20", "?", "-", "out of scope: open");
    static_row("8", "4", "21", "M^4_21", "(S^3 x S^1)#8", "out of scope: external data");
    static_row("8", "4", "21", "N^4_21", "(S^3 x~ S^1)#8", "out of scope: external data");
    static_row("14", "4", "26", "N^4_26", "(S^3 x~ S^1)#14", "out of scope: external data");

    bool all_ok = true;
    for (int d = 3; d <= max_d; ++d) {
        for (const char* which : {"M", "N"}) {
            Family fam = which[0] == 'M' ? family_M(d) : family_N(d);
            const std::int64_t b1 = skeleton2(fam.manifold).betti1;
            const bool orientable = orientability(fam.manifold).orientable;
            const std::int64_t expected = static_cast<std::int64_t>(d) * d + 5 * d + 6;
            const bool ok = b1 == expected && orientable == (d % 2 == 0);
            all_ok = all_ok && ok;
            std::string carrier = orientable ? "(S^{d-1} x S^1)#b1" : "(S^{d-1} x~ S^1)#b1";
            rows.push_back({{"beta1", std::to_string(b1)},
                            {"d", std::to_string(d)},
                            {"n", std::to_string(fam.n)},
                            {"complex", std::string(which) + "^d_n"},
                            {"carrier", carrier},
                            {"status", ok ? "computed" : "CHECK FAILED"},
                            {"orientable", orientable}});
        }
    }

    nlohmann::json out = {{"schema", kCertificateSchema},
                          {"toolkit_version", kToolkitVersion},
                          {"table", rows}};
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            std::cout << r["beta1"].get<std::string>() << "\t"
                      << r["d"].get<std::string>() << "\t" << r["n"].get<std::string>()
                      << "\t" << r["complex"].get<std::string>() << "\t"
                      << r["carrier"].get<std::string>() << "\t"
                      << r["status"].get<std::string>() << "\n";
        }
    }
    return all_ok ? 0 : kExitFail;
}

// ---- replay ---------------------------------------------------------------

int run_replay(const std::string& family, int stop_after, const std::string& json_path,
               bool canonical) {
    if (family == "N")
        std::cerr << "note: the N-family replay wiring is EXPERIMENTAL\n";
    ReplayOutcome out = replay_lemma_handles(
        family == "N" ? FamilyVariant::N : FamilyVariant::M, stop_after);
    for (const auto& c : out.certificate.checks)
        std::cerr << c.name << ": " << verdict_str(c.verdict)
                  << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    std::cerr << "final complex: " << out.final_complex.vertex_count() << " vertices, "
              << out.final_complex.facet_count() << " facets\n";
    nlohmann::json j = certificate_to_json(out.certificate, canonical);
    if (json_path.empty()) std::cout << j.dump(2) << "\n";
    else {
        std::ofstream f(json_path);
        f << j.dump(2) << "\n";
    }
    return out.certificate.all_pass() ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"walkup: constructors and certifiers for stacked-sphere "
                 "triangulations and their tightness properties"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "construct a named complex");
    generate->add_option("--family", gen.family, "M | N | bundle | pathball | simplex")
        ->required();
    generate->add_option("--d", gen.d, "dimension parameter");
    generate->add_option("--m", gen.m, "facet count (pathball) / bundle parameter");
    generate->add_option("--part", gen.part, "boundary|filling (M,N) or sphere|ball (simplex)");
    generate->add_option("--sigma", gen.sigma, "permutation word, e.g. 'id' or '2 1 3'");
    generate->add_option("-o,--output", gen.output, "output facet-list file");

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand("verify", "run certification checks on a facet file");
    verify->add_option("input", ver.input, "facet-list file")->required();
    verify->add_flag("--all", ver.all, "run the full theorem pipeline");
    verify->add_option("--check", ver.checks, "individual checks (repeatable)");
    verify->add_option("--n-cyclic", ver.n_cyclic, "check the Z_n shift action for this n");
    verify->add_option("--vertex", ver.vertex, "vertex for --check link-order");
    verify->add_option("--samples", ver.samples, "spot-check sample count");
    verify->add_option("--seed", ver.seed, "spot-check PRNG seed");
    verify->add_option("--json", ver.json_path, "write the JSON certificate here");
    verify->add_flag("--canonical", ver.canonical, "omit volatile fields (durations)");
    verify->add_option("--jobs", ver.jobs, "run independent checks concurrently");

    std::string table_json;
    int table_max_d = 4;
    CLI::App* table = app.add_subcommand("table", "regenerate the summary table rows");
    table->add_option("--json", table_json, "write JSON instead of text");
    table->add_option("--max-d", table_max_d, "largest d for the computed family rows")
        ->check(CLI::Range(3, 6));

    std::string replay_family = "M";
    int stop_after = 30;
    std::string replay_json;
    bool replay_canonical = false;
    CLI::App* replay = app.add_subcommand("replay", "replay the 30-handle construction");
    replay->add_option("--family", replay_family, "M (default) or N (experimental)");
    replay->add_option("--stop-after", stop_after, "apply only this many handles")
        ->check(CLI::Range(0, 30));
    replay->add_option("--json", replay_json, "write the JSON certificate here");
    replay->add_flag("--canonical", replay_canonical, "omit volatile fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (generate->parsed()) return run_generate(gen);
        if (verify->parsed()) return run_verify(ver);
        if (table->parsed()) return run_table(table_json, table_max_d);
        if (replay->parsed())
            return run_replay(replay_family, stop_after, replay_json, replay_canonical);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
