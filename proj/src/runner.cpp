#include "codim1/runner.hpp"

#include "codim1/certify.hpp"
#include "codim1/groebner.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace codim1 {

namespace {

std::string verdict_upper(Verdict v) {
    switch (v) {
        case Verdict::affine: return "AFFINE";
        case Verdict::not_affine: return "NOT AFFINE";
        case Verdict::unknown: return "UNKNOWN";
    }
    return "?";
}

void push_unique(std::vector<std::string>& v, const std::string& s) {
    if (s.empty()) return;
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

void fill_from_ledger(TaskResult& r, const SuperheightLedger& led) {
    r.has_interval = true;
    r.lower = led.lower;
    r.upper = led.upper;
    r.lower_tag = led.lower_tag;
    r.upper_tag = led.upper_tag;
    r.verdict_tag = led.verdict_tag;
    r.verdict = verdict_upper(led.verdict);
    for (const auto& n : led.notes) r.notes.push_back(n);
    push_unique(r.citations, led.lower_tag);
    push_unique(r.citations, led.upper_tag);
    push_unique(r.citations, led.verdict_tag);
}

// --- advisory prime cross-check -------------------------------------------

// f with coefficients reduced mod p, in the parallel prime-field ring;
// nullopt when a denominator is divisible by p.
std::optional<Polynomial> transport_mod_p(const Polynomial& f, const RingPtr& rp,
                                          std::uint32_t p) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        const mpq_class& q = t.coeff.rat();
        unsigned long dp = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
        if (dp == 0) return std::nullopt;
        unsigned long np = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
        Scalar c = Scalar::prime_elem(p, np) / Scalar::prime_elem(p, dp);
        if (!c.is_zero()) terms.push_back({t.mono, c});
    }
    return Polynomial::from_terms(rp, std::move(terms));
}

void advisory_height_note(TaskResult& r, const IdealInAlgebra& a, std::uint32_t p,
                          const GroebnerOptions& gopts) {
    const AlgebraPtr& A = a.algebra();
    if (!A->ring()->field().is_rational()) {
        r.notes.push_back("mod-" + std::to_string(p) +
                          " cross-check skipped (coefficients not rational)");
        return;
    }
    try {
        RingPtr rp = PolyRing::make(A->ring()->vars(), CoeffField::prime(p));
        auto lift_all = [&](const std::vector<Polynomial>& fs)
            -> std::optional<std::vector<Polynomial>> {
            std::vector<Polynomial> out;
            for (const auto& f : fs) {
                auto g = transport_mod_p(f, rp, p);
                if (!g) return std::nullopt;
                out.push_back(std::move(*g));
            }
            return out;
        };
        auto def = lift_all(A->defining().gens);
        auto reps = lift_all(a.reps());
        if (!def || !reps) {
            r.notes.push_back("mod-" + std::to_string(p) +
                              " cross-check skipped (a denominator vanishes mod p)");
            return;
        }
        PresentedAlgebra::Flags flags;
        flags.is_domain = A->is_domain();
        flags.is_factorial_ambient = A->is_factorial_ambient();
        AlgebraPtr Ap = PresentedAlgebra::make(rp, std::move(*def), flags);
        IdealInAlgebra ap = IdealInAlgebra::make(Ap, std::move(*reps));
        std::int64_t h = ideal_height(ap, gopts);
        r.notes.push_back("mod-" + std::to_string(p) +
                          " cross-check: ht = " + std::to_string(h));
    } catch (const error& e) {
        r.notes.push_back("mod-" + std::to_string(p) +
                          " cross-check skipped (" + std::string(e.what()) + ")");
    }
}

void verbose_groebner_note(TaskResult& r, const IdealInAlgebra& a,
                           const GroebnerOptions& gopts) {
    GroebnerStats st{};
    IdealGens g = a.combined();
    GroebnerBasis gb = groebner_basis(g.ring, g.gens, gopts, &st);
    r.notes.push_back("groebner(defining + " + r.subject + "): " +
                      std::to_string(gb.size()) + " basis elements, " +
                      std::to_string(st.spair_reductions) + " S-pair reductions, " +
                      std::to_string(st.zero_reductions) + " reductions to zero");
}

// --- the four task kinds --------------------------------------------------

void echo_algebra_assertions(TaskResult& r, const std::string& algebra_name,
                             const AlgebraPtr& A) {
    if (A->is_domain())
        r.assertions.push_back("algebra " + algebra_name + ": asserted integral domain");
    if (A->is_factorial_ambient())
        r.assertions.push_back("algebra " + algebra_name +
                               ": asserted factorial presentation");
}

TaskResult run_ledger(const Session& s, const Session::Task& t, const RunOptions& ro,
                      const GroebnerOptions& gopts) {
    TaskResult r;
    r.kind = "ledger";
    r.subject = t.subject;
    const auto* id = s.find_ideal(t.subject);
    const IdealInAlgebra& a = id->ideal;
    echo_algebra_assertions(r, id->algebra_name, a.algebra());
    if (t.sections_finitely_generated)
        r.assertions.push_back("sections over D(" + t.subject +
                               ") asserted finitely generated");

    std::vector<VerifiedEvidence> evs;
    for (const auto& en : t.evidence) {
        if (const auto* w = s.find_witness(en)) {
            const auto* m = s.find_map(w->map_name);
            VerifiedEvidence v =
                verify_witness(a, HeightWitness{en, m->map, w->claimed_height}, gopts);
            r.evidence.push_back("witness " + en + ": verified extension height " +
                                 std::to_string(v.height) +
                                 (v.unit_extension ? " (unit extension)" : ""));
            evs.push_back(std::move(v));
        } else {
            const auto* c = s.find_certificate(en);
            VerifiedEvidence v = require_affine_certificate(a, c->certificate, gopts);
            r.evidence.push_back("certificate " + en +
                                 ": cover, compatibility, and unity verified");
            evs.push_back(std::move(v));
        }
    }

    if (a.algebra()->is_domain())
        r.notes.push_back("ht(" + t.subject + ") = " +
                          std::to_string(ideal_height(a, gopts)));
    fill_from_ledger(r, ledger_combine(a, evs, t.sections_finitely_generated, gopts));
    if (ro.advisory_prime) advisory_height_note(r, a, *ro.advisory_prime, gopts);
    if (ro.verbose) verbose_groebner_note(r, a, gopts);
    return r;
}

TaskResult run_monoid_affine(const Session& s, const Session::Task& t,
                             const RunOptions& ro, const GroebnerOptions& gopts) {
    TaskResult r;
    r.kind = "monoid-affine";
    r.subject = t.subject;
    const auto* id = s.find_ideal(t.subject);
    const auto* ed = s.find_embedding(t.via);
    const auto* md = s.find_monoid(ed->monoid_name);
    if (md->monoid.positive)
        r.assertions.push_back("monoid " + md->name + ": asserted positive (0 is the only unit)");
    if (md->monoid.normal)
        r.assertions.push_back("monoid " + md->name + ": asserted normal");
    r.assertions.push_back("embedding " + ed->name +
                           ": asserted to present the monoid as the full intersection "
                           "with the free-times-nonnegative sublattice");

    VerifiedEvidence ev =
        monoid_affine(md->monoid, ed->embedding, md->presentation, id->ideal, t.via, gopts);
    switch (ev.verdict) {
        case Verdict::affine:
            r.evidence.push_back("monoid criterion " + t.via +
                                 ": extended ideal has big height <= 1 in the factorial cover");
            break;
        case Verdict::not_affine:
            r.evidence.push_back("monoid criterion " + t.via +
                                 ": extended ideal has big height >= 2 in the factorial cover");
            break;
        case Verdict::unknown:
            r.evidence.push_back("monoid criterion " + t.via + ": inconclusive");
            break;
    }
    fill_from_ledger(r, ledger_combine(id->ideal, {ev}, false, gopts));
    if (ro.verbose) verbose_groebner_note(r, id->ideal, gopts);
    return r;
}

TaskResult run_purity(const Session& s, const Session::Task& t, const RunOptions& ro,
                      const GroebnerOptions& gopts) {
    TaskResult r;
    r.kind = "purity";
    r.subject = t.subject;
    const auto* id = s.find_ideal(t.subject);
    const auto* md = s.find_map(t.via);
    echo_algebra_assertions(r, id->algebra_name, id->ideal.algebra());

    PurityResult pr = affine_via_purity(md->map, id->ideal, gopts);
    std::string what = pr.extension_zero          ? "extension vanishes"
                       : pr.bight_leq_one         ? "extension has big height <= 1"
                                                  : "extension has big height >= 2";
    r.evidence.push_back("purity via " + t.via + ": " + what);
    VerifiedEvidence ev{VerifiedEvidence::Kind::purity, t.via, 0, false, pr.verdict};
    fill_from_ledger(r, ledger_combine(id->ideal, {ev}, false, gopts));
    if (ro.verbose) verbose_groebner_note(r, id->ideal, gopts);
    return r;
}

TaskResult run_surface(const Session& s, const Session::Task& t) {
    TaskResult r;
    r.kind = "surface";
    r.subject = t.subject;
    const auto* cd = s.find_config(t.subject);
    const CurveConfig& cfg = cd->config;

    for (const auto& [cn, dc] : cfg.components) {
        (void)dc;
        r.assertions.push_back("class " + cn + ": asserted effective");
    }
    for (const auto& [cn, dc] : cfg.test_curves) {
        (void)dc;
        r.assertions.push_back("test curve " + cn +
                               ": asserted irreducible and not contained in the support");
    }

    SurfaceReport sr = check_criterion(cfg);
    r.verdict = sr.verdict;
    r.notes.push_back("Y^2 = " + std::to_string(sr.y_self));
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        r.notes.push_back("H." + cfg.components[i].first + " = " +
                          std::to_string(sr.h_dot_components[i]));
    for (std::size_t i = 0; i < cfg.test_curves.size(); ++i)
        r.notes.push_back("H." + cfg.test_curves[i].first + " = " +
                          std::to_string(sr.h_dot_tests[i]));
    r.notes.push_back(sr.y_connected ? "the support of Y is connected"
                                     : "the support of Y is disconnected");
    for (const auto& n : sr.notes) r.notes.push_back(n);
    return r;
}

bool verdict_undecided(const TaskResult& r) {
    return r.verdict == "UNKNOWN" || r.verdict == "no conclusion from this module";
}

} // namespace

RunOutcome run_session(const Session& s, const RunOptions& opts) {
    RunOutcome out;
    GroebnerOptions gopts;
    gopts.max_spair_reductions = opts.max_spair_reductions;

    for (const auto& t : s.tasks) {
        auto started = std::chrono::steady_clock::now();
        TaskResult r;
        int abort_code = 0;
        try {
            switch (t.kind) {
                case Session::TaskKind::ledger: r = run_ledger(s, t, opts, gopts); break;
                case Session::TaskKind::monoid_affine:
                    r = run_monoid_affine(s, t, opts, gopts);
                    break;
                case Session::TaskKind::purity: r = run_purity(s, t, opts, gopts); break;
                case Session::TaskKind::surface: r = run_surface(s, t); break;
            }
        } catch (const inconsistency_error& e) {
            r = TaskResult{};
            r.subject = t.subject;
            r.kind = "ledger";
            r.verdict = "INCONSISTENT";
            r.notes.push_back(e.what());
            out.diagnostic = e.what();
            abort_code = 3;
        } catch (const resource_cap_error& e) {
            r = TaskResult{};
            r.subject = t.subject;
            r.verdict = "UNKNOWN";
            r.notes.push_back(e.what());
            out.diagnostic = e.what();
            abort_code = 4;
        } catch (const error& e) {
            r = TaskResult{};
            r.subject = t.subject;
            r.verdict = "ERROR";
            r.notes.push_back(e.what());
            out.diagnostic = e.what();
            abort_code = 1;
        }
        if (opts.timings) {
            auto stopped = std::chrono::steady_clock::now();
            r.seconds = std::chrono::duration<double>(stopped - started).count();
        }
        out.report.tasks.push_back(std::move(r));
        if (abort_code != 0) {
            out.exit_code = abort_code;
            return out;
        }
    }
    for (const auto& r : out.report.tasks)
        if (verdict_undecided(r)) {
            out.exit_code = 2;
            return out;
        }
    out.exit_code = 0;
    return out;
}

// ------------------------------------------------------------------ CLI ---

namespace {

struct CliOptions {
    std::string format = "text";
    std::uint64_t max_spairs = 1'000'000;
    std::string field = "q";
    bool verbose = false;
    bool timings = false;
};

void add_run_options(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json-lines"}));
    cmd->add_option("--max-spairs", o.max_spairs,
                    "Cap on S-pair reductions before aborting");
    cmd->add_option("--field", o.field,
                    "q, or fp:<p> to re-derive heights modulo p as a cross-check");
    cmd->add_flag("--verbose", o.verbose, "Groebner statistics in the notes");
    cmd->add_flag("--timings", o.timings, "Wall-clock time per task");
}

RunOptions to_run_options(const CliOptions& o) {
    RunOptions ro;
    ro.max_spair_reductions = o.max_spairs;
    ro.verbose = o.verbose;
    ro.timings = o.timings;
    if (o.field != "q") {
        if (o.field.rfind("fp:", 0) != 0)
            throw input_error("--field expects q or fp:<p>, got '" + o.field + "'");
        std::uint32_t p = 0;
        try {
            unsigned long v = std::stoul(o.field.substr(3));
            CoeffField f = CoeffField::prime(static_cast<std::uint32_t>(v));
            p = f.p;
        } catch (const error&) {
            throw input_error("--field fp:<p> expects a prime below 2^31, got '" +
                              o.field + "'");
        } catch (const std::exception&) {
            throw input_error("--field fp:<p> expects a prime below 2^31, got '" +
                              o.field + "'");
        }
        ro.advisory_prime = p;
    }
    return ro;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_and_render(const std::string& text, const CliOptions& cli) {
    Session s = parse_session(text);
    RunOutcome out = run_session(s, to_run_options(cli));
    if (cli.format == "json-lines")
        std::cout << render_json_lines(out.report);
    else
        std::cout << render_text(out.report);
    if (!out.diagnostic.empty()) std::cerr << "error: " << out.diagnostic << "\n";
    return out.exit_code;
}

} // namespace

const std::string* find_builtin_session(const std::string& name) {
    for (const auto& [n, text] : builtin_sessions())
        if (n == name) return &text;
    return nullptr;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Superheight bounds and affineness certification for D(a)"};
    app.require_subcommand(1);

    CliOptions cli;
    std::string run_path, check_path, paper_name;

    CLI::App* run = app.add_subcommand("run", "Execute the tasks of a session file");
    run->add_option("file", run_path, "Session file")->required();
    add_run_options(run, cli);

    CLI::App* check = app.add_subcommand("check", "Parse and validate a session file");
    check->add_option("file", check_path, "Session file")->required();

    CLI::App* paper = app.add_subcommand("paper", "Run a bundled example session");
    paper->add_option("name", paper_name, "Example name (omit to list)");
    add_run_options(paper, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return run_and_render(read_file(run_path), cli);
        if (check->parsed()) {
            Session s = parse_session(read_file(check_path));
            std::cout << "ok: " << s.order.size() << " declarations, " << s.tasks.size()
                      << " tasks\n";
            return 0;
        }
        if (paper->parsed()) {
            if (paper_name.empty()) {
                for (const auto& [n, text] : builtin_sessions()) {
                    (void)text;
                    std::cout << n << "\n";
                }
                return 0;
            }
            const std::string* text = find_builtin_session(paper_name);
            if (!text) {
                std::cerr << "error: no bundled session named '" << paper_name
                          << "' (use 'paper' with no name to list)\n";
                return 1;
            }
            return run_and_render(*text, cli);
        }
    } catch (const resource_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const inconsistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace codim1
