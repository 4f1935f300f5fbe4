// Command line front end: reads a declarative job spec, runs the library
// and prints exact symbolic results.  Exit codes: 0 success, 1 mismatch,
// 2 invalid input.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "bigcenter/criteria.hpp"
#include "bigcenter/jobspec.hpp"
#include "bigcenter/jsonio.hpp"
#include "bigcenter/twisted.hpp"

using namespace bigcenter;

namespace {

struct Options {
    std::string spec_path;
    std::optional<int> seed;
    std::optional<int> truncation;
    std::optional<std::string> output;
    std::optional<int> criterion;
    std::optional<int> mode;
};

JobSpec load_job(const Options& opt, const std::string& command) {
    JobSpec job;
    if (!opt.spec_path.empty()) {
        auto parsed = parse_jobspec_file(opt.spec_path);
        if (std::holds_alternative<SpecError>(parsed)) {
            const auto& err = std::get<SpecError>(parsed);
            std::cerr << "spec error";
            if (err.line > 0) std::cerr << " (line " << err.line << ")";
            std::cerr << ": " << err.message << "\n";
            std::exit(2);
        }
        job = std::get<JobSpec>(parsed);
    }
    if (!job.command.empty() && job.command != command) {
        std::cerr << "spec file requests command '" << job.command << "' but '" << command
                  << "' was invoked\n";
        std::exit(2);
    }
    job.command = command;
    if (opt.seed) job.seed = static_cast<std::uint64_t>(*opt.seed);
    if (opt.truncation) job.truncation = *opt.truncation;
    if (opt.mode) job.mode = *opt.mode;
    if (opt.criterion) job.criterion = *opt.criterion;
    if (opt.output) {
        if (*opt.output == "text") job.output = OutputMode::text;
        else if (*opt.output == "structured") job.output = OutputMode::structured;
        else {
            std::cerr << "output must be text or structured\n";
            std::exit(2);
        }
    }
    if (job.truncation < 2) {
        std::cerr << "truncation must be at least 2\n";
        std::exit(2);
    }
    return job;
}

int cmd_solve(const JobSpec& job) {
    Connection A = job.make_conn(job.truncation);
    auto F = solve_connection(A, mat2_identity<Rational>(), job.truncation);
    if (job.output == OutputMode::structured) {
        json out = {{"command", "solve"}, {"F", to_json(F)},
                    {"det", to_json(det_series(F))}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "solution of dF + AF = 0 with F(0) = id, truncation " << job.truncation << ":\n";
    std::cout << "  F.a = " << to_string(F.m.a) << "\n  F.b = " << to_string(F.m.b)
              << "\n  F.c = " << to_string(F.m.c) << "\n  F.d = " << to_string(F.m.d) << "\n";
    std::cout << "  det(F) = " << to_string(det_series(F)) << "\n";
    return 0;
}

int cmd_gauge(const JobSpec& job) {
    if (job.gauge_f.empty()) {
        std::cerr << "gauge needs a [gauge] section with the coefficients of F\n";
        return 2;
    }
    Connection A = job.make_conn(job.truncation);
    auto F = MatrixSeries<Rational>::from_coeffs(job.gauge_f, job.truncation);
    auto acted = gauge_act(F, A.reg);
    if (job.output == OutputMode::structured) {
        json out = {{"command", "gauge"}, {"A", to_json(acted)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "F(d+A)F^{-1} = d + A' with:\n";
    std::cout << "  A'.a = " << to_string(acted.m.a) << "\n  A'.b = " << to_string(acted.m.b)
              << "\n  A'.c = " << to_string(acted.m.c) << "\n  A'.d = " << to_string(acted.m.d)
              << "\n";
    return 0;
}

int cmd_embed(const JobSpec& job) {
    if (job.mode < 1) {
        std::cerr << "--mode must be >= 1 (the functional at index -mode)\n";
        return 2;
    }
    Mat2<Poly> e = embed_matrix(job.mode - 1);
    if (job.output == OutputMode::structured) {
        json out = {{"command", "embed"},
                    {"mode", -job.mode},
                    {"a", to_json(e.a)},
                    {"b", to_json(e.b)},
                    {"c", to_json(e.c)},
                    {"d", to_json(e.d)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const int m = -job.mode;
    std::cout << "algebra functionals at mode " << m << " as group functionals:\n";
    std::cout << "  a*_{" << m << "} = " << e.a.str() << "\n";
    std::cout << "  b*_{" << m << "} = " << e.b.str() << "\n";
    std::cout << "  c*_{" << m << "} = " << e.c.str() << "\n";
    std::cout << "  d*_{" << m << "} = " << e.d.str() << "\n";
    return 0;
}

int cmd_invariance(const JobSpec& job) {
    VASpec spec = job.algebra();
    bool all_ok = true;
    json results = json::array();
    for (int mode = 1; mode <= 5; ++mode)
        for (Sym s : {Sym::ga, Sym::gb, Sym::gc, Sym::gd}) {
            Poly img = embed_g_in_G(s, -mode);
            bool ok = true;
            for (const auto& g :
                 {upper_unipotent_sym(), lower_unipotent_sym(), diagonal_sym()}) {
                auto cert = equal_mod_det(right_translate(g, img), img, 20, job.seed);
                ok = ok && cert.equal;
            }
            all_ok = all_ok && ok;
            if (job.output == OutputMode::structured)
                results.push_back({{"sym", sym_name(s)}, {"mode", -mode}, {"invariant", ok}});
            else
                std::cout << (ok ? "ok   " : "FAIL ") << sym_name(s) << "_{" << -mode << "}\n";
        }
    for (int v = 1; v < spec.num_states(); ++v) {
        auto rep = check_invariance(spec, delta(spec, spec.basis_state(v), job.truncation), 20,
                                    job.seed);
        all_ok = all_ok && rep.invariant;
        if (job.output == OutputMode::structured)
            results.push_back({{"delta", spec.gens[v - 1].name}, {"invariant", rep.invariant}});
        else
            std::cout << (rep.invariant ? "ok   " : "FAIL ") << "delta(" << spec.gens[v - 1].name
                      << ")\n";
    }
    if (job.output == OutputMode::structured)
        std::cout << json({{"command", "invariance"}, {"results", results}}).dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_delta(const JobSpec& job) {
    VASpec spec = job.algebra();
    json results = json::array();
    for (int v = 1; v < spec.num_states(); ++v) {
        CoupledElement e = delta(spec, spec.basis_state(v), job.truncation);
        if (job.output == OutputMode::structured)
            results.push_back({{"generator", spec.gens[v - 1].name}, {"image", to_json(spec, e)}});
        else
            std::cout << "delta(" << spec.gens[v - 1].name << ") = " << e.str(spec) << "\n";
    }
    if (job.output == OutputMode::structured)
        std::cout << json({{"command", "delta"}, {"results", results}}).dump(2) << "\n";
    return 0;
}

int cmd_ope(const JobSpec& job) {
    VASpec spec = job.algebra();
    json results = json::array();
    for (int u = 1; u < spec.num_states(); ++u)
        for (int v = 1; v < spec.num_states(); ++v) {
            auto ope = coupled_ope(spec, u, v, job.truncation);
            const std::string title = "delta(" + spec.gens[u - 1].name + ")(z) delta(" +
                                      spec.gens[v - 1].name + ")(w)";
            if (job.output == OutputMode::structured) {
                json parts = json::array();
                for (const auto& [l, comps] : ope.part) {
                    json states = json::array();
                    for (size_t s = 0; s < comps.size(); ++s)
                        if (!comps[s].is_zero())
                            states.push_back(
                                {{"state", s == 0 ? "1" : spec.gens[s - 1].name},
                                 {"series", to_json(comps[s])}});
                    parts.push_back({{"pole", l}, {"states", states}});
                }
                results.push_back({{"product", title}, {"parts", parts}});
                continue;
            }
            std::cout << title << " =\n";
            bool any = false;
            for (const auto& [l, comps] : ope.part) {
                for (size_t s = 0; s < comps.size(); ++s) {
                    if (comps[s].is_zero()) continue;
                    any = true;
                    std::cout << "  (z-w)^{" << l << "} [" << (s == 0 ? "1" : spec.gens[s - 1].name)
                              << "] " << to_string(comps[s], "w") << "\n";
                }
            }
            if (!any) std::cout << "  0\n";
            // the second order pole of the mixed product carries det(w) = 1
            if (auto it = ope.part.find(-2); it != ope.part.end() && !it->second[0].is_zero()) {
                bool reduces = true;
                for (int k = 0; k < it->second[0].order; ++k) {
                    auto cert = equal_mod_det(it->second[0].coeff(k),
                                              k == 0 ? Poly::one() : Poly(), 20, job.seed);
                    reduces = reduces && cert.equal;
                }
                if (reduces)
                    std::cout << "  (the (z-w)^{-2} series is det(w), = 1 in the quotient ring)\n";
            }
        }
    if (job.output == OutputMode::structured)
        std::cout << json({{"command", "ope"}, {"results", results}}).dump(2) << "\n";
    return 0;
}

bool g_symbolic = false;

// With --symbolic: the general formula over a symbolic connection next to
// the closed form it takes for a single second order pole.
int cmd_commutator_symbolic(const JobSpec& job) {
    VASpec spec = job.algebra();
    const int kmax = job.truncation - 2;
    int mismatches = 0;
    json results = json::array();
    for (int a = 1; a < spec.num_states(); ++a)
        for (int b = 1; b < spec.num_states(); ++b)
            for (int m = job.m_lo; m <= job.m_hi; ++m)
                for (int n = job.n_lo; n <= job.n_hi; ++n) {
                    auto gen = twisted_commutator_formula_symbolic(spec, a, m, b, n, kmax);
                    auto disp = twisted_commutator_l2_display(spec, a, m, b, n, kmax);
                    bool same = gen == disp;
                    if (!same) ++mismatches;
                    if (job.output == OutputMode::structured) {
                        results.push_back({{"a", spec.gens[a - 1].name},
                                           {"m", m},
                                           {"b", spec.gens[b - 1].name},
                                           {"n", n},
                                           {"general", to_json(spec, gen)},
                                           {"second-order-pole-form", to_json(spec, disp)},
                                           {"match", same}});
                        continue;
                    }
                    std::cout << "[(" << spec.gens[a - 1].name << ")_{" << -m - 1 << "}, ("
                              << spec.gens[b - 1].name << ")_{" << -n - 1 << "}]^{d+A}\n";
                    std::cout << "  general:  " << gen.str(spec) << "\n";
                    std::cout << "  l=-2 form: " << disp.str(spec) << "\n";
                    std::cout << "  diff:     " << (same ? "none" : "MISMATCH") << "\n";
                }
    if (job.output == OutputMode::structured)
        std::cout << json({{"command", "commutator"},
                           {"symbolic", true},
                           {"mismatches", mismatches},
                           {"results", results}})
                         .dump(2)
                  << "\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_commutator(const JobSpec& job) {
    if (g_symbolic) return cmd_commutator_symbolic(job);
    VASpec spec = job.algebra();
    Connection A = job.make_conn(job.truncation);
    if (!A.regular()) {
        std::cerr << "commutator works over regular connections; use twist for singular parts\n";
        return 2;
    }
    const int N = job.truncation;
    int mismatches = 0;
    json results = json::array();
    for (int a = 1; a < spec.num_states(); ++a)
        for (int b = 1; b < spec.num_states(); ++b)
            for (int m = job.m_lo; m <= job.m_hi; ++m)
                for (int n = job.n_lo; n <= job.n_hi; ++n) {
                    auto formula = twisted_commutator_formula(spec, a, m, b, n, A, N);
                    auto oracle = twisted_commutator_oracle(spec, a, m, b, n, A, N);
                    int win = twisted_exact_window(spec, m, n, N);
                    bool same = formula.restricted(win) == oracle.restricted(win);
                    if (!same) ++mismatches;
                    if (job.output == OutputMode::structured) {
                        results.push_back({{"a", spec.gens[a - 1].name},
                                           {"m", m},
                                           {"b", spec.gens[b - 1].name},
                                           {"n", n},
                                           {"window", win},
                                           {"formula", to_json(spec, formula.restricted(win))},
                                           {"oracle", to_json(spec, oracle.restricted(win))},
                                           {"match", same}});
                        continue;
                    }
                    std::cout << "[(" << spec.gens[a - 1].name << ")_{" << -m - 1 << "}, ("
                              << spec.gens[b - 1].name << ")_{" << -n - 1 << "}]^{d+A}"
                              << " (exact for indices >= " << win << ")\n";
                    std::cout << "  formula: " << formula.restricted(win).str(spec) << "\n";
                    std::cout << "  oracle:  " << oracle.restricted(win).str(spec) << "\n";
                    std::cout << "  diff:    " << (same ? "none" : "MISMATCH") << "\n";
                }
    if (job.output == OutputMode::structured)
        std::cout << json({{"command", "commutator"}, {"mismatches", mismatches},
                           {"results", results}})
                         .dump(2)
                  << "\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_twist(const JobSpec& job) {
    VASpec spec = job.algebra();
    Mat2<Poly> A0;
    if (job.singular == "nilpotent") A0 = Mat2<Poly>{Poly(), Poly::one(), Poly(), Poly()};
    else {
        Poly lam = Poly::param(Sym::lam);
        A0 = Mat2<Poly>{lam, Poly(), Poly(), -lam};
    }
    auto kind = job.singular == "nilpotent" ? NormalForm::Kind::nilpotent
                                            : NormalForm::Kind::semisimple;
    auto nf = fnorm(A0, kind);
    json out;
    if (job.output == OutputMode::structured) {
        out["command"] = "twist";
        out["normal_form"] = {{"a", to_json(nf.F.a)}, {"b", to_json(nf.F.b)},
                              {"c", to_json(nf.F.c)}, {"d", to_json(nf.F.d)}};
    } else {
        std::cout << "normal form solution of (d + A0/z) F = 0:\n";
        std::cout << "  F.a = " << nf.F.a.str() << "\n  F.b = " << nf.F.b.str()
                  << "\n  F.c = " << nf.F.c.str() << "\n  F.d = " << nf.F.d.str() << "\n";
    }
    if (kind == NormalForm::Kind::semisimple) {
        const int n = job.mode - 1;
        if (job.output == OutputMode::structured) {
            json ops = json::array();
            for (Sym s : {Sym::GA, Sym::GB, Sym::GC, Sym::GD})
                ops.push_back({{"sym", sym_name(s)},
                               {"series", to_json(twisted_vertex_op(s, -n - 1, nf, job.truncation))}});
            out["twisted_vertex_ops"] = ops;
            json comms = json::array();
            for (int a = 1; a < spec.num_states(); ++a)
                for (int b = 1; b < spec.num_states(); ++b)
                    for (int m = job.m_lo; m <= job.m_hi; ++m)
                        for (int nn = job.n_lo; nn <= job.n_hi; ++nn) {
                            auto red = regular_singular_commutator(spec, a, m, b, nn, true);
                            auto unred = regular_singular_commutator(spec, a, m, b, nn, false);
                            comms.push_back({{"a", spec.gens[a - 1].name},
                                             {"m", m},
                                             {"b", spec.gens[b - 1].name},
                                             {"n", nn},
                                             {"reduced", to_json(spec, red)},
                                             {"match", red == unred}});
                        }
            out["commutators"] = comms;
        } else {
            std::cout << "twisted vertex operators at mode " << -n - 1 << ":\n";
            for (Sym s : {Sym::GA, Sym::GB, Sym::GC, Sym::GD})
                std::cout << "  Y(" << sym_name(s) << "_{" << -n - 1
                          << "}, z) = " << twisted_vertex_op(s, -n - 1, nf, job.truncation).str()
                          << "\n";
            std::cout << "regular singular commutators (reduced binomial form):\n";
            for (int a = 1; a < spec.num_states(); ++a)
                for (int b = 1; b < spec.num_states(); ++b)
                    for (int m = job.m_lo; m <= job.m_hi; ++m)
                        for (int nn = job.n_lo; nn <= job.n_hi; ++nn) {
                            auto red = regular_singular_commutator(spec, a, m, b, nn, true);
                            auto unred = regular_singular_commutator(spec, a, m, b, nn, false);
                            std::cout << "  [(" << spec.gens[a - 1].name << ")_{" << -m - 1
                                      << "}, (" << spec.gens[b - 1].name << ")_{" << -nn - 1
                                      << "}] = " << red.str(spec)
                                      << (red == unred ? "" : "  (!!)") << "\n";
                        }
        }
    }
    if (job.output == OutputMode::structured) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_selftest(const JobSpec& job) {
    int failures = run_acceptance(std::cout, job.criterion);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with connections, gauge transformations and coupled "
                 "vertex algebras over sl2"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--spec", opt.spec_path, "job spec file")->check(CLI::ExistingFile);
    app.add_option("--seed", opt.seed, "seed for randomized equality checks");
    app.add_option("--truncation", opt.truncation, "series truncation order");
    app.add_option("--output", opt.output, "text|structured");
    app.add_option("--criterion", opt.criterion, "run only this selftest criterion");
    app.add_option("--mode", opt.mode, "mode index (embed, twist)");
    app.add_flag("--symbolic", g_symbolic,
                 "commutator: compare the symbolic-connection formula with its second order "
                 "pole closed form");

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const JobSpec&);
    };
    const Cmd cmds[] = {
        {"solve", "solve dF + AF = 0 for the spec connection", cmd_solve},
        {"gauge", "apply a gauge transformation to the spec connection", cmd_gauge},
        {"embed", "print the algebra functionals as group functionals", cmd_embed},
        {"invariance", "check right-translation invariance of embedded images", cmd_invariance},
        {"delta", "print the coupled images of the algebra generators", cmd_delta},
        {"ope", "print the deformed operator product expansions", cmd_ope},
        {"commutator", "compare the twisted commutator formula against brute force",
         cmd_commutator},
        {"twist", "normal forms and twisted operators over a regular singular point", cmd_twist},
        {"selftest", "run the acceptance suite", cmd_selftest},
    };
    for (const auto& c : cmds) app.add_subcommand(c.name, c.help);

    CLI11_PARSE(app, argc, argv);

    for (const auto& c : cmds) {
        if (app.got_subcommand(c.name)) {
            try {
                JobSpec job = load_job(opt, c.name);
                return c.fn(job);
            } catch (const std::exception& ex) {
                std::cerr << "error: " << ex.what() << "\n";
                return 2;
            }
        }
    }
    return 2;
}
