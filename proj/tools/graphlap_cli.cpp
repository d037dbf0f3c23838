#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "graphlap/dirichlet.hpp"
#include "graphlap/esa.hpp"
#include "graphlap/examples.hpp"
#include "graphlap/harmonic.hpp"
#include "graphlap/io.hpp"
#include "graphlap/metric.hpp"
#include "graphlap/report.hpp"

namespace {

using namespace graphlap;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

struct FamilyFlags {
    std::string family = "power";
    std::optional<double> alpha, beta, epsilon, start, offset;
    std::string graph_file;
    std::string config;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff) {
    cmd->add_option("--family", ff.family,
                    "power | log | table | file (long names half-line-* accepted)");
    cmd->add_option("--alpha", ff.alpha, "power family: omega_n = n^-alpha");
    cmd->add_option("--beta", ff.beta, "power family: c_{n,n+1} = (n+offset)^-beta");
    cmd->add_option("--epsilon", ff.epsilon,
                    "power family shorthand: c_{n,n+1} = n^(2+epsilon) (ignored if --beta given)");
    cmd->add_option("--start", ff.start, "first vertex of the half-line");
    cmd->add_option("--conductance-offset", ff.offset, "offset in (n+offset)^-beta");
    cmd->add_option("--graph-file", ff.graph_file, "edge-list or table file (family file/table)");
    cmd->add_option("--config", ff.config, "family config file (key = value lines)");
}

FamilySpec make_spec(const FamilyFlags& ff) {
    if (!ff.config.empty()) return parse_family_config(read_file(ff.config));
    FamilySpec spec;
    if (ff.family == "power" || ff.family == "half-line-power")
        spec.kind = FamilySpec::Kind::HalfLinePower;
    else if (ff.family == "log" || ff.family == "half-line-log")
        spec.kind = FamilySpec::Kind::HalfLineLog;
    else if (ff.family == "table" || ff.family == "half-line-table")
        spec.kind = FamilySpec::Kind::HalfLineTable;
    else if (ff.family == "file" || ff.family == "finite-file")
        spec.kind = FamilySpec::Kind::FiniteFile;
    else
        throw DomainError("unknown family '" + ff.family + "'");
    if (ff.alpha) spec.params["alpha"] = *ff.alpha;
    if (ff.beta) spec.params["beta"] = *ff.beta;
    if (ff.epsilon) spec.params["epsilon"] = *ff.epsilon;
    if (ff.start) spec.params["start"] = *ff.start;
    if (ff.offset) spec.params["conductance-offset"] = *ff.offset;
    spec.path = ff.graph_file;
    if ((spec.kind == FamilySpec::Kind::HalfLineTable ||
         spec.kind == FamilySpec::Kind::FiniteFile) &&
        spec.path.empty())
        throw DomainError("family '" + ff.family + "' requires --graph-file");
    return spec;
}

int run(int argc, char** argv) {
    CLI::App app{"graphlap: weighted graph Laplacians, Schroedinger operators, Dirichlet "
                 "solvers, the delta_a metric, and self-adjointness probes"};
    app.require_subcommand(1);

    // laplacian apply
    auto* lap = app.add_subcommand("laplacian", "pointwise Laplacian application");
    auto* lap_apply = lap->add_subcommand("apply", "apply Delta_{omega,c} to a finite-support f");
    lap->require_subcommand(1);
    FamilyFlags lap_ff;
    std::string lap_fn, lap_out;
    add_family_flags(lap_apply, lap_ff);
    lap_apply->add_option("--fn", lap_fn, "function file (`vertex value` lines)")->required();
    lap_apply->add_option("--out", lap_out, "output CSV path (default stdout)");
    lap_apply->callback([&] {
        auto g = build_family(make_spec(lap_ff));
        FiniteSupportFn f = parse_fn(read_file(lap_fn));
        std::set<VertexId> probe;
        for (const auto& [v, val] : f.values()) {
            if (!g->contains(v)) throw DomainError("function vertex not in graph");
            probe.insert(v);
            for (VertexId u : g->neighbors(v)) probe.insert(u);
        }
        FiniteSupportFn result;
        for (VertexId x : probe) result.set(x, apply_laplacian(*g, f, x));
        emit(lap_out, fn_to_csv(result, "vertex,laplacian_f"));
    });

    // gauge to-schrodinger
    auto* gauge = app.add_subcommand("gauge", "ground-state transform");
    auto* g2s = gauge->add_subcommand("to-schrodinger",
                                      "emit a = c/(omega_x omega_y) and W = -(1/omega) Delta_{1,a} omega");
    gauge->require_subcommand(1);
    FamilyFlags gauge_ff;
    int gauge_n_max = 20;
    std::string gauge_out;
    add_family_flags(g2s, gauge_ff);
    g2s->add_option("--n-max", gauge_n_max, "rows to emit for half-line families");
    g2s->add_option("--out", gauge_out, "output CSV path (default stdout)");
    g2s->callback([&] {
        auto g = build_family(make_spec(gauge_ff));
        SchrodingerData s = gauge_to_schrodinger(g);
        std::ostringstream csv;
        if (auto start = g->ray_start()) {
            csv << "n,omega,a_next,w\n";
            for (VertexId n = *start; n < *start + static_cast<VertexId>(gauge_n_max); ++n)
                csv << n << ',' << format_double(g->omega(n)) << ','
                    << format_double(s.a(n, n + 1)) << ',' << format_double(s.w(n)) << '\n';
        } else {
            auto finite = std::dynamic_pointer_cast<const FiniteGraph>(g);
            csv << "vertex,omega,w\n";
            for (VertexId v : finite->all_vertices())
                csv << v << ',' << format_double(g->omega(v)) << ',' << format_double(s.w(v))
                    << '\n';
        }
        emit(gauge_out, csv.str());
    });

    // dirichlet solve
    auto* dir = app.add_subcommand("dirichlet", "Dirichlet boundary-value problems");
    auto* dsolve = dir->add_subcommand("solve", "solve Pf = 0 on the interior, f = u on the boundary");
    dir->require_subcommand(1);
    FamilyFlags dir_ff;
    std::vector<VertexId> dir_region;
    std::string dir_boundary, dir_out;
    add_family_flags(dsolve, dir_ff);
    dsolve->add_option("--region", dir_region, "region vertices (default: whole finite graph)")
        ->delimiter(',');
    dsolve->add_option("--boundary", dir_boundary, "boundary data file (`vertex value` lines)")
        ->required();
    dsolve->add_option("--out", dir_out, "output CSV path (default stdout)");
    dsolve->callback([&] {
        auto g = build_family(make_spec(dir_ff));
        std::vector<VertexId> verts = dir_region;
        if (verts.empty()) {
            auto finite = std::dynamic_pointer_cast<const FiniteGraph>(g);
            if (!finite) throw DomainError("--region is required for infinite families");
            verts = finite->all_vertices();
        }
        DirichletProblem p{SchrodingerData::from_conductance(g),
                           FiniteRegion::from_vertices(*g, std::move(verts)),
                           parse_fn(read_file(dir_boundary)).values()};
        DirichletSolution sol = solve_dirichlet(p);
        std::cerr << "residual " << format_double(sol.residual) << '\n';
        emit(dir_out, fn_to_csv(sol.values, "vertex,f"));
    });

    // harmonic build
    auto* harm = app.add_subcommand("harmonic", "positive harmonic functions by ball exhaustion");
    auto* hbuild = harm->add_subcommand("build", "build a normalized P-harmonic profile");
    harm->require_subcommand(1);
    FamilyFlags harm_ff;
    std::optional<VertexId> harm_anchor;
    int harm_n_max = 200, harm_window = 30;
    double harm_tol = 1e-8;
    std::string harm_out;
    add_family_flags(hbuild, harm_ff);
    hbuild->add_option("--anchor", harm_anchor, "normalization vertex x0 (default: ray start)");
    hbuild->add_option("--n-max", harm_n_max, "largest exhaustion radius");
    hbuild->add_option("--window", harm_window, "convergence window radius");
    hbuild->add_option("--tol", harm_tol, "sup-difference tolerance on the window");
    hbuild->add_option("--out", harm_out, "output CSV path (default stdout)");
    hbuild->callback([&] {
        auto g = build_family(make_spec(harm_ff));
        VertexId x0 = harm_anchor ? *harm_anchor : g->ray_start().value_or(1);
        SchrodingerData s = gauge_to_schrodinger(g);
        HarmonicProfile phi = build_harmonic(s, x0, harm_n_max, harm_window, harm_tol);
        std::cerr << (phi.converged ? "converged" : "NOT converged") << ", residual "
                  << format_double(phi.residual) << '\n';
        FiniteSupportFn vals{std::map<VertexId, double>(phi.values.begin(), phi.values.end())};
        emit(harm_out, fn_to_csv(vals, "vertex,phi"));
    });

    // metric distance | ball | completeness
    auto* metric = app.add_subcommand("metric", "the weighted path metric delta_a");
    metric->require_subcommand(1);

    auto* mdist = metric->add_subcommand("distance", "delta_a between two vertices");
    FamilyFlags md_ff;
    VertexId md_from = 0, md_to = 0;
    int md_horizon = 10000;
    add_family_flags(mdist, md_ff);
    mdist->add_option("--from", md_from, "source vertex")->required();
    mdist->add_option("--to", md_to, "target vertex")->required();
    mdist->add_option("--n-max", md_horizon, "combinatorial search horizon");
    mdist->callback([&] {
        auto g = build_family(make_spec(md_ff));
        MetricContext ctx = MetricContext::from_gauge(g);
        FiniteRegion horizon = combinatorial_ball(*g, md_from, md_horizon);
        std::cout << format_double(delta_a(ctx, md_from, md_to, horizon)) << '\n';
    });

    auto* mball = metric->add_subcommand("ball", "metric ball B_R(center)");
    FamilyFlags mb_ff;
    VertexId mb_center = 0;
    double mb_radius = 0.0;
    std::size_t mb_budget = 200000;
    std::string mb_out;
    add_family_flags(mball, mb_ff);
    mball->add_option("--center", mb_center, "ball center")->required();
    mball->add_option("--radius", mb_radius, "metric radius R")->required();
    mball->add_option("--budget", mb_budget, "vertex budget before giving up");
    mball->add_option("--out", mb_out, "output CSV path (default stdout)");
    mball->callback([&] {
        auto g = build_family(make_spec(mb_ff));
        MetricContext ctx = MetricContext::from_gauge(g);
        FiniteRegion ball = metric_ball(ctx, mb_center, mb_radius, mb_budget);
        std::ostringstream csv;
        csv << "vertex,interior\n";
        for (VertexId v : ball.vertices()) csv << v << ',' << (ball.is_interior(v) ? 1 : 0) << '\n';
        emit(mb_out, csv.str());
    });

    auto* mcomp = metric->add_subcommand("completeness", "completeness diagnostic for a family");
    FamilyFlags mc_ff;
    int mc_n_max = 20000;
    std::string mc_out;
    add_family_flags(mcomp, mc_ff);
    mcomp->add_option("--n-max", mc_n_max, "number of probed edges");
    mcomp->add_option("--out", mc_out, "partial-sum CSV path");
    mcomp->callback([&] {
        CompletenessReport report = completeness_diagnostic(make_spec(mc_ff), mc_n_max);
        std::cout << completeness_json(report).dump(2) << '\n';
        if (!mc_out.empty()) write_text_file(mc_out, completeness_csv(report));
    });

    // esa probe
    auto* esa = app.add_subcommand("esa", "essential self-adjointness probes");
    auto* probe = esa->add_subcommand("probe", "deficiency recurrence, classification, certificates");
    esa->require_subcommand(1);
    FamilyFlags esa_ff;
    std::string esa_mode = "laplacian", esa_out;
    int esa_n_max = 400;
    add_family_flags(probe, esa_ff);
    probe->add_option("--mode", esa_mode, "laplacian | schrodinger");
    probe->add_option("--n-max", esa_n_max, "recurrence horizon");
    probe->add_option("--out", esa_out, "JSON report path (default stdout)");
    probe->callback([&] {
        ProbeMode mode;
        if (esa_mode == "laplacian")
            mode = ProbeMode::Laplacian;
        else if (esa_mode == "schrodinger")
            mode = ProbeMode::SchrodingerWithShift;
        else
            throw DomainError("unknown mode '" + esa_mode + "'");
        ProbeOptions opts;
        opts.n_terms = esa_n_max;
        ProbeReport report = esa_probe(make_spec(esa_ff), mode, opts);
        emit(esa_out, probe_json(report).dump(2) + "\n");
    });

    // examples
    auto* ex = app.add_subcommand("examples", "run a built-in worked example");
    std::string ex_name;
    int ex_n_max = 10000;
    std::uint64_t ex_seed = 12345;
    std::string ex_out;
    bool ex_failed = false;
    ex->add_option("name", ex_name, "wojciechowski-weights | log-weights | power-weights | "
                                    "incomplete-metric | all")
        ->required();
    ex->add_option("--n-max", ex_n_max, "sweep horizon");
    ex->add_option("--seed", ex_seed, "seed for randomized property trials");
    ex->add_option("--out", ex_out, "JSON record path (default stdout)");
    ex->callback([&] {
        Json out;
        if (ex_name == "all") {
            out = Json::array();
            for (const auto& name : example_names()) {
                RunRecord r = run_example(name, ex_n_max, ex_seed);
                if (!r.all_passed) ex_failed = true;
                out.push_back(std::move(r.record));
            }
        } else {
            RunRecord r = run_example(ex_name, ex_n_max, ex_seed);
            if (!r.all_passed) ex_failed = true;
            out = std::move(r.record);
        }
        emit(ex_out, out.dump(2) + "\n");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; any actual usage error exits 1.
        return app.exit(e) == 0 ? 0 : 1;
    }
    if (ex_failed) {
        std::cerr << "example checks failed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalInconsistencyError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << '\n';
        return 1;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 1;
    } catch (const UnreachableError& e) {
        std::cerr << "unreachable: " << e.what() << '\n';
        return 1;
    } catch (const UndeterminedError& e) {
        std::cerr << "undetermined: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
