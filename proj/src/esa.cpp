#include "graphlap/esa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace graphlap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOverflowGuard = 1e300;

double log_add_exp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// Compares s * v(i) against s * v(j) through (sign, log|v|), valid past
// overflow of the raw values.
bool scaled_less(const DeficiencySolution& v, int s, std::size_t i, std::size_t j) {
    int si = s * v.sign[i], sj = s * v.sign[j];
    if (si != sj) return si < sj;
    if (si == 0) return false;
    return si > 0 ? v.log_abs[i] < v.log_abs[j] : v.log_abs[i] > v.log_abs[j];
}

}  // namespace

double DeficiencySolution::value(VertexId n) const {
    if (n < start || n - start >= values.size())
        throw DomainError("deficiency solution not computed at vertex " + std::to_string(n));
    return values[static_cast<std::size_t>(n - start)];
}

DeficiencySolution deficiency_recurrence(const SchrodingerData& s, double v0, int n_terms,
                                         double lambda) {
    auto start_opt = s.graph().ray_start();
    if (!start_opt) throw DomainError("deficiency_recurrence: graph is not a half-line family");
    const VertexId start = *start_opt;
    if (n_terms < 2) throw DomainError("deficiency_recurrence: need at least 2 terms");

    DeficiencySolution sol;
    sol.start = start;
    sol.lambda = lambda;
    sol.values.reserve(static_cast<std::size_t>(n_terms));

    double log_scale = 0.0;  // true v = stored value * exp(log_scale)
    auto record = [&](double scaled) {
        int sgn = scaled > 0.0 ? 1 : (scaled < 0.0 ? -1 : 0);
        double la = sgn == 0 ? -kInf : std::log(std::abs(scaled)) + log_scale;
        sol.sign.push_back(sgn);
        sol.log_abs.push_back(la);
        sol.values.push_back(log_scale == 0.0 ? scaled
                                              : (la < 709.0 ? sgn * std::exp(la) : sgn * kInf));
        double prev = sol.partial_l2_log.empty() ? -kInf : sol.partial_l2_log.back();
        sol.partial_l2_log.push_back(log_add_exp(prev, 2.0 * la));
    };

    double prev = v0;
    // Endpoint equation: a(v0 - v1) + (W - lambda) v0 = 0.
    const double a01 = s.a(start, start + 1);
    double cur = v0 * (1.0 + (s.w(start) - lambda) / a01);
    record(prev);

    for (int i = 1; i < n_terms - 1; ++i) {
        record(cur);
        const VertexId n = start + static_cast<VertexId>(i);
        const double al = s.a(n - 1, n);
        const double ar = s.a(n, n + 1);
        const double wn = s.w(n) - lambda;
        double next = ((al + ar + wn) * cur - al * prev) / ar;
        // Residual of the vertex equation, relative to the term magnitudes.
        const double res = al * (cur - prev) + ar * (cur - next) + wn * cur;
        const double scale = std::abs(al * cur) + std::abs(al * prev) + std::abs(ar * cur) +
                             std::abs(ar * next) + std::abs(wn * cur);
        if (scale > 0.0 && std::abs(res) > 1e-10 * scale)
            throw InternalInconsistencyError("deficiency_recurrence: vertex residual too large");
        prev = cur;
        cur = next;
        if (std::abs(cur) > kOverflowGuard || std::abs(prev) > kOverflowGuard) {
            prev /= kOverflowGuard;
            cur /= kOverflowGuard;
            log_scale += std::log(kOverflowGuard);
            sol.overflowed = true;
        }
    }
    record(cur);
    return sol;
}

std::string to_string(L2Class c) {
    switch (c) {
        case L2Class::Divergent: return "l2-divergent";
        case L2Class::Bounded: return "l2-bounded-within-horizon";
        default: return "undetermined";
    }
}

L2Class classify_l2(const DeficiencySolution& sol, double threshold_factor) {
    if (sol.size() < 50) throw DomainError("classify_l2: need at least 50 terms");
    const double v0 = sol.values.front();
    if (v0 == 0.0) return L2Class::Undetermined;  // trivial solution carries no information

    const std::size_t n = sol.size();
    const double total_log = sol.partial_l2_log.back();
    const double threshold_log = std::log(threshold_factor) + 2.0 * std::log(std::abs(v0));

    // Tail increments are v(k)^2; compare through log |v|.
    bool tail_nondecreasing = true;
    for (std::size_t i = n - 10; i < n; ++i)
        if (sol.log_abs[i] < sol.log_abs[i - 1]) tail_nondecreasing = false;
    if (total_log > threshold_log && tail_nondecreasing) return L2Class::Divergent;

    // |v| nondecreasing over the whole second half and bounded away from
    // zero: the partial sums grow at least linearly, which is divergence
    // evidence on its own (a solution tending to a positive limit).
    bool half_nondecreasing = true;
    for (std::size_t i = n / 2 + 1; i < n; ++i)
        if (sol.log_abs[i] < sol.log_abs[i - 1] - 1e-12) half_nondecreasing = false;
    if (half_nondecreasing &&
        sol.log_abs[n / 2] > std::log(std::abs(v0)) + std::log(1e-8))
        return L2Class::Divergent;

    // Ratio test with margin over the last quarter of the horizon.
    bool summable = true;
    for (std::size_t i = n - n / 4; i < n; ++i) {
        double log_ratio = 2.0 * (sol.log_abs[i] - sol.log_abs[i - 1]);  // of increments
        if (!(log_ratio < std::log(0.9))) summable = false;
    }
    if (summable) return L2Class::Bounded;
    return L2Class::Undetermined;
}

std::vector<VertexId> growth_witness(const SchrodingerData& s, const DeficiencySolution& g) {
    const std::size_t n = g.size();
    std::size_t i0 = 0;
    while (i0 < n && g.sign[i0] == 0) ++i0;
    if (i0 == n) throw DomainError("growth_witness: zero solution");
    const int walk_sign = g.sign[i0];

    std::vector<VertexId> chain{g.start + i0};
    std::size_t cur = i0;
    while (true) {
        // Neighbor of start+cur maximizing walk_sign * g, within the horizon.
        std::optional<std::size_t> best;
        if (cur > 0) best = cur - 1;
        if (cur + 1 < n && (!best || scaled_less(g, walk_sign, *best, cur + 1))) best = cur + 1;
        if (!best) break;
        if (cur + 1 >= n && *best == cur - 1) break;  // horizon edge: stop rather than walk back
        const VertexId x = g.start + cur;
        if (!(s.w(x) - g.lambda > 0.0))
            throw PreconditionError("growth_witness: needs W - lambda > 0 along the chain");
        if (!scaled_less(g, walk_sign, cur, *best))
            throw InternalInconsistencyError(
                "growth_witness: no strictly increasing neighbor at vertex " + std::to_string(x));
        cur = *best;
        chain.push_back(g.start + cur);
        if (cur + 1 >= n) break;  // solution horizon reached
    }
    return chain;
}

AgmonCheck agmon_identity_check(const SchrodingerData& s, double lambda, const DeficiencySolution& v,
                                const FiniteSupportFn& f, double residual_tol) {
    const WeightedGraph& g = s.graph();

    // v must solve the equation at the support and its neighbors.
    std::set<VertexId> needed;
    for (const auto& [x, _] : f.values()) {
        needed.insert(x);
        for (VertexId y : g.neighbors(x)) needed.insert(y);
    }
    FiniteSupportFn v_fn;
    for (VertexId x : needed) {
        double vx = v.value(x);
        if (!std::isfinite(vx))
            throw DomainError("agmon_identity_check: v overflowed inside the needed window");
        v_fn.set(x, vx);
        for (VertexId y : g.neighbors(x))
            if (!needed.count(y)) v_fn.set(y, v.value(y));
    }
    for (VertexId x : needed) {
        double res = apply_schrodinger(s, v_fn, x) - lambda * v_fn(x);
        double scale = 1.0 + std::abs(v_fn(x));
        for (VertexId y : g.neighbors(x)) scale += s.a(x, y) * (std::abs(v_fn(x)) + std::abs(v_fn(y)));
        if (std::abs(res) > residual_tol * scale)
            throw PreconditionError("agmon_identity_check: v residual too large at vertex " +
                                    std::to_string(x));
    }

    FiniteSupportFn fv;
    for (const auto& [x, fx] : f.values()) fv.set(x, fx * v_fn(x));
    double inner = 0.0;
    for (const auto& [x, fvx] : fv.values())
        inner += fvx * (apply_schrodinger(s, fv, x) - lambda * fvx);

    double edge_sum = 0.0;
    for (const auto& [x, fx] : f.values()) {
        for (VertexId y : g.neighbors(x)) {
            if (f.in_support(y) && y < x) continue;
            const double d = fx - f(y);
            edge_sum += s.a(x, y) * v_fn(x) * v_fn(y) * d * d;
        }
    }

    double half_vertex_sum = 0.0;
    for (VertexId x : needed) {
        double row = 0.0;
        const double fx = f(x);
        for (VertexId y : g.neighbors(x)) {
            const double d = fx - f(y);
            if (d == 0.0) continue;
            row += s.a(x, y) * v_fn(y) * d * d;
        }
        half_vertex_sum += v_fn(x) * row;
    }
    half_vertex_sum *= 0.5;

    const double scale =
        std::max({std::abs(inner), std::abs(edge_sum), std::abs(half_vertex_sum), 1e-300});
    const double gap = std::max({std::abs(inner - edge_sum), std::abs(inner - half_vertex_sum),
                                 std::abs(edge_sum - half_vertex_sum)});
    return {inner, edge_sum, half_vertex_sum, gap / scale};
}

SandwichCertificate sandwich_check(const SchrodingerData& s, double lambda,
                                   const DeficiencySolution& v, const MetricContext& ctx,
                                   VertexId x0, double R, const FormBound& k, int valence,
                                   std::size_t budget) {
    if (!(lambda < k.k - 1.0))
        throw PreconditionError("sandwich_check: requires lambda < k - 1");
    FiniteRegion inner_ball = metric_ball(ctx, x0, R, budget);
    FiniteSupportFn f = cutoff(ctx, x0, R, budget);

    const WeightedGraph& g = s.graph();
    FiniteSupportFn v_fn;
    for (const auto& [x, _] : f.values()) {
        v_fn.set(x, v.value(x));
        for (VertexId y : g.neighbors(x))
            if (!v_fn.in_support(y)) v_fn.set(y, v.value(y));
    }

    SandwichCertificate cert;
    cert.radius = R;
    cert.ball_size = inner_ball.size();
    cert.outer_size = f.support_size();

    for (VertexId x : inner_ball.vertices()) {
        const double vx = v_fn(x);
        cert.ball_mass += vx * vx;
    }
    FiniteSupportFn fv;
    for (const auto& [x, fx] : f.values())
        if (fx != 0.0) fv.set(x, fx * v_fn(x));
    for (const auto& [x, fvx] : fv.values())
        cert.form_value += fvx * (apply_schrodinger(s, fv, x) - lambda * fvx);

    // Shell = both endpoints of every edge across which f jumps. This is
    // the exact vertex set the symmetrized edge sum charges; it contains
    // B_{R+1} \ B_R but also the inner and outer rings those jump edges
    // touch. Still a tail set (within distance ~1 of the R-sphere), so the
    // tail-mass limit argument is unaffected.
    double shell_mass = 0.0;
    std::set<VertexId> shell;
    for (const auto& [x, fx] : f.values())
        for (VertexId y : g.neighbors(x))
            if (fx != (f.in_support(y) ? f(y) : 0.0)) {
                shell.insert(x);
                shell.insert(y);
            }
    for (VertexId x : shell) {
        const double vx = v_fn(x);
        shell_mass += vx * vx;
    }
    cert.shell_bound = 0.5 * valence * shell_mass;

    const double slack = 1e-9 * (std::abs(cert.ball_mass) + std::abs(cert.form_value) +
                                 std::abs(cert.shell_bound));
    cert.holds = cert.ball_mass <= cert.form_value + slack && cert.form_value <= cert.shell_bound + slack;
    return cert;
}

ProbeReport esa_probe(const FamilySpec& spec, ProbeMode mode, const ProbeOptions& opts) {
    auto graph = build_family(spec);
    if (!graph->ray_start()) throw DomainError("esa_probe: only half-line families are supported");
    const VertexId start = *graph->ray_start();

    ProbeReport report;
    report.family = spec;
    report.mode = mode;
    SchrodingerData op = gauge_to_schrodinger(graph);

    // Sample omega and W along the probed window.
    bool omega_constant = true;
    const double w0 = graph->omega(start);
    double w_min = kInf;
    bool w_tail_decreasing = false;
    double prev_w = kInf;
    for (int i = 0; i <= opts.n_terms; ++i) {
        const VertexId n = start + static_cast<VertexId>(i);
        if (graph->omega(n) != w0) omega_constant = false;
        const double wn = op.w(n);
        w_min = std::min(w_min, wn);
        if (i > opts.n_terms / 2 && wn < prev_w - 1e-9 * (1.0 + std::abs(prev_w)))
            w_tail_decreasing = true;
        prev_w = wn;
    }
    report.omega_constant = omega_constant;

    if (spec.kind != FamilySpec::Kind::HalfLineTable) {
        report.completeness = completeness_diagnostic(spec, opts.completeness_probe);
    }

    double lambda;
    if (omega_constant && mode == ProbeMode::Laplacian) {
        lambda = -1.0;  // the kernel criterion Ker(Delta* + 1)
        report.note = "constant omega: probing Ker(Delta*+1) at lambda = -1";
    } else if (!w_tail_decreasing) {
        report.potential_min_sampled = w_min;
        const double kappa1 = std::max(1.0 - w_min, 1.0);
        lambda = -kappa1;
        report.note = "W bounded below on the sampled window (kappa = " + std::to_string(w_min) +
                      "); shift kappa1 = " + std::to_string(kappa1);
    } else {
        // W unbounded below: fall back to the form-bound route.
        FiniteRegion ball = combinatorial_ball(*graph, start, opts.form_ball_radius);
        FormBound kb = form_lower_bound(op, ball);
        report.form_bound = kb.k;
        lambda = kb.k - 2.0;
        report.note = "W decreasing in the tail: using the form bound k = " + std::to_string(kb.k) +
                      " and lambda = k - 2";
    }
    report.lambda = lambda;

    int n_terms = opts.n_terms;
    std::optional<FiniteRegion> sandwich_outer;
    MetricContext ctx(op);
    if (report.completeness && report.completeness->verdict == CompletenessVerdict::Complete) {
        try {
            sandwich_outer = metric_ball(ctx, start, opts.sandwich_r_max + 1.0, opts.ball_budget);
            const VertexId far = sandwich_outer->vertices().back();
            n_terms = std::max<int>(n_terms, static_cast<int>(far - start) + 3);
        } catch (const CapacityError&) {
            report.note += "; metric balls exceed the vertex budget, sandwich certificates limited";
        }
    }

    DeficiencySolution v = deficiency_recurrence(op, 1.0, n_terms, lambda);
    report.classification = classify_l2(v);

    if (omega_constant) report.witness = growth_witness(op, v);

    if (report.completeness && report.completeness->verdict == CompletenessVerdict::Complete) {
        FormBound kb;
        if (report.form_bound) {
            kb.k = *report.form_bound;
        } else {
            FiniteRegion ball = combinatorial_ball(*graph, start, opts.form_ball_radius);
            kb = form_lower_bound(op, ball);
            report.form_bound = kb.k;
        }
        const double lam = std::min(lambda, kb.k - 2.0);
        DeficiencySolution vs =
            lam == lambda ? v : deficiency_recurrence(op, 1.0, n_terms, lam);
        const int valence = valence_bound(*graph, FiniteRegion());
        for (double R = opts.sandwich_r_min; R <= opts.sandwich_r_max; R += 1.0) {
            try {
                report.sandwiches.push_back(
                    sandwich_check(op, lam, vs, ctx, start, R, kb, valence, opts.ball_budget));
            } catch (const CapacityError&) {
                report.note += "; sandwich stopped at R = " + std::to_string(R) + " (budget)";
                break;
            } catch (const DomainError&) {
                report.note += "; sandwich stopped at R = " + std::to_string(R) + " (horizon)";
                break;
            }
        }
    }
    return report;
}

}  // namespace graphlap
