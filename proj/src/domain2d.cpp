#include "bergman/domain2d.hpp"

#include "bergman/detail/gauss_nodes.hpp"
#include "bergman/parallel.hpp"
#include "bergman/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman {

double DomainDescriptor2D::fiber_radius(double r2) const {
    if (!(r2 > 0.0 && r2 < 1.0))
        throw std::domain_error("fiber_radius: r2 outside (0, 1)");
    return kind == Kind::hartogs ? r2 : std::exp(-1.0 / r2);
}

double DomainDescriptor2D::fiber_area(double r2) const {
    const double R = fiber_radius(r2);
    return kPi * R * R;
}

const char* DomainDescriptor2D::name() const {
    return kind == Kind::hartogs ? "hartogs" : "exp_hartogs";
}

// ---------------------------------------------------------------------------
// Polar integral of a radially sampled slice integrand S(z2) over the
// annulus rlo <= |z2| <= rhi:  I = int int S(r e^{it}) r dt dr.
// Radial: adaptive panels, GK15 with embedded G7 error. Angular: trapezoid
// with doubling per radial node. Pending panels evaluate in parallel;
// accepted panels accumulate sorted by position, so the sum is independent
// of the thread count.
// ---------------------------------------------------------------------------

namespace {

using SliceIntegrand = std::function<double(std::complex<double>)>;

struct PanelTask {
    double a, b;
    int depth;
};

struct PanelOutcome {
    double a, b;
    int depth;
    double value = 0.0;
    double err = 0.0;
    std::int64_t nodes = 0;
    bool accepted = false;
};

double angular_integral(const SliceIntegrand& S, double r, double tol_abs,
                        std::int64_t* nodes, double* resid) {
    int n = 64;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += S(std::polar(r, kTwoPi * j / n));
    double prev = sum * kTwoPi / n;
    *nodes += n;
    for (int iter = 0; iter < 14; ++iter) {
        // add the midpoints of the current grid
        double add = 0.0;
        for (int j = 0; j < n; ++j) add += S(std::polar(r, kTwoPi * (j + 0.5) / n));
        *nodes += n;
        sum += add;
        n *= 2;
        const double cur = sum * kTwoPi / n;
        const double diff = std::abs(cur - prev);
        prev = cur;
        if (diff <= std::max(tol_abs, 1e-14 * std::abs(cur))) {
            *resid = diff;
            return cur;
        }
    }
    *resid = std::abs(prev) * 1e-6 + tol_abs; // did not settle; be loud about it
    return prev;
}

PanelOutcome evaluate_panel(const SliceIntegrand& S, const PanelTask& task, double tol_panel) {
    PanelOutcome out;
    out.a = task.a;
    out.b = task.b;
    out.depth = task.depth;
    const double c = 0.5 * (task.a + task.b);
    const double h = 0.5 * (task.b - task.a);
    double resk = 0.0, resg = 0.0, ang_err = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double r = c + h * detail::kGK15Nodes[i];
        double resid = 0.0;
        const double node_tol = 0.25 * tol_panel / (15.0 * std::max(h * r, 1e-300));
        const double theta_int = angular_integral(S, r, node_tol, &out.nodes, &resid);
        const double fr = theta_int * r;
        resk += detail::kGK15Weights[i] * fr;
        resg += detail::kGK15GaussWeights[i] * fr;
        ang_err += detail::kGK15Weights[i] * resid * r;
    }
    out.value = resk * h;
    out.err = std::abs((resk - resg) * h) + ang_err * h;
    out.accepted = out.err <= tol_panel;
    return out;
}

QuadratureResult integrate_polar_region(const SliceIntegrand& S, double rlo, double rhi,
                                        double tol, std::int64_t node_budget) {
    if (!(rlo > 0.0 && rlo < rhi && rhi < 1.0))
        throw std::domain_error("integrate_polar_region: need 0 < rlo < rhi < 1");

    std::vector<PanelTask> pending;
    const int initial = 8;
    for (int i = 0; i < initial; ++i)
        pending.push_back({rlo + (rhi - rlo) * i / initial,
                           rlo + (rhi - rlo) * (i + 1) / initial, 0});

    std::vector<PanelOutcome> done;
    QuadratureResult res;
    bool budget_hit = false;

    while (!pending.empty()) {
        std::vector<PanelTask> batch;
        batch.swap(pending);
        std::vector<PanelOutcome> outcomes(batch.size());
        const bool parallel = par::parallel_enabled();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long long i = 0; i < static_cast<long long>(batch.size()); ++i) {
            const double tol_panel = tol * (batch[i].b - batch[i].a) / (rhi - rlo);
            outcomes[i] = evaluate_panel(S, batch[i], tol_panel);
        }
        (void)parallel;
        for (const PanelOutcome& o : outcomes) {
            res.nodes_used += o.nodes;
            if (o.accepted || o.depth >= 26 || budget_hit) {
                done.push_back(o);
            } else {
                const double m = 0.5 * (o.a + o.b);
                pending.push_back({o.a, m, o.depth + 1});
                pending.push_back({m, o.b, o.depth + 1});
            }
        }
        if (res.nodes_used > node_budget) budget_hit = true;
    }

    std::sort(done.begin(), done.end(),
              [](const PanelOutcome& x, const PanelOutcome& y) { return x.a < y.a; });
    bool all_ok = !budget_hit;
    for (const PanelOutcome& o : done) {
        res.value += o.value;
        res.abs_error_estimate += o.err;
        if (!o.accepted) all_ok = false;
    }
    res.converged = all_ok && res.abs_error_estimate <= tol;
    return res;
}

} // namespace

// ---------------------------------------------------------------------------

namespace {

// Fiber-disk integral of |f|^p over |z1| < R at fixed z2, polar with
// r1 = R u: R^2 int_0^1 int |f(R u e^{i t}, z2)|^p u du dt. Fixed rule
// (GK15 in u, 24 angles): exact for the low-degree z1 dependence the basis
// and tests use; smooth otherwise.
double fiber_abs_power(const Function2D& f, double p, std::complex<double> z2, double R,
                       std::int64_t* nodes) {
    if (!(R > 1e-160)) return 0.0; // fiber area underflows; nothing to add
    const int n1 = 24;
    double acc = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double u = 0.5 + 0.5 * detail::kGK15Nodes[i];
        const double wu = 0.5 * detail::kGK15Weights[i];
        double ang = 0.0;
        for (int j = 0; j < n1; ++j) {
            const std::complex<double> z1 = std::polar(R * u, kTwoPi * j / n1);
            ang += std::pow(std::abs(f(z1, z2)), p);
        }
        acc += wu * u * ang * (kTwoPi / n1);
    }
    *nodes += 15 * n1;
    return R * R * acc;
}

} // namespace

QuadratureResult lp_norm_2d(const DomainDescriptor2D& domain, const Function2D& f, double p,
                            double cutoff, double tol) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm_2d: requires p >= 1");
    if (!(cutoff > 0.0 && cutoff < 0.5))
        throw std::domain_error("lp_norm_2d: cutoff must lie in (0, 1/2)");

    std::int64_t fiber_nodes = 0;
    auto S = [&](std::complex<double> z2) {
        return fiber_abs_power(f, p, z2, domain.fiber_radius(std::abs(z2)), &fiber_nodes);
    };
    QuadratureResult r = integrate_polar_region(S, cutoff, 1.0 - cutoff, tol,
                                                std::int64_t{1} << 26);
    r.nodes_used += fiber_nodes;
    return r;
}

// ---------------------------------------------------------------------------

double counterexample_local_slope() { return kPi * kPi * 0.693147180559945309417232121458; }

std::vector<CounterexampleRow> counterexample_probe(double p,
                                                    const std::vector<double>& cutoffs,
                                                    double tol) {
    if (!(p > 2.0))
        throw std::domain_error("counterexample_probe: requires p > 2 (at p = 2 the "
                                "function is not even square-integrable)");
    if (cutoffs.empty()) throw std::domain_error("counterexample_probe: no cutoffs");

    const DomainDescriptor2D dom = DomainDescriptor2D::hartogs();
    auto f = [p](std::complex<double> z2) {
        return std::pow(1.0 - z2, std::complex<double>(-2.0 / p, 0.0));
    };

    std::vector<CounterexampleRow> rows;
    for (double c : cutoffs) {
        if (!(c > 0.0 && c < 0.5))
            throw std::domain_error("counterexample_probe: cutoffs must lie in (0, 1/2)");
        auto S2 = [&](std::complex<double> z2) {
            const double a = std::abs(f(z2));
            return dom.fiber_area(std::abs(z2)) * a * a;
        };
        auto Sp = [&](std::complex<double> z2) {
            return dom.fiber_area(std::abs(z2)) * std::pow(std::abs(f(z2)), p);
        };
        QuadratureResult l2 = integrate_polar_region(S2, c, 1.0 - c, tol,
                                                     std::int64_t{1} << 26);
        QuadratureResult lp = integrate_polar_region(Sp, c, 1.0 - c, 50.0 * tol,
                                                     std::int64_t{1} << 26);
        rows.push_back({c, l2.value, lp.value, l2.nodes_used + lp.nodes_used,
                        l2.converged && lp.converged});
    }
    return rows;
}

std::vector<double> richardson_extrapolate(const std::vector<double>& vals,
                                           const std::vector<double>& exponents) {
    std::vector<double> seq = vals;
    for (double e : exponents) {
        if (seq.size() < 2)
            throw std::domain_error("richardson_extrapolate: not enough values");
        const double th = std::pow(2.0, -e);
        std::vector<double> next(seq.size() - 1);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            next[i] = (seq[i + 1] - th * seq[i]) / (1.0 - th);
        seq = std::move(next);
    }
    return seq;
}

// ---------------------------------------------------------------------------
// Brute-force Bergman projection of conj(f) against every basis monomial
// z1^{a1} z2^{a2}, a1 <= 2, on the same tensor grid for numerator and
// squared norm (the grid bias cancels in the ratio).
// ---------------------------------------------------------------------------

namespace {

struct BasisIndex {
    int a1, a2;
};

struct GridParams {
    int depth;        // dyadic radial levels toward 0
    int splits;       // GK15 panels per level
    int n2;           // theta_2 angles
    int u_points;     // 7 (GL) or 15 (GK)
    int n1;           // theta_1 angles
};

struct PanelAccum {
    std::vector<std::complex<double>> num;
    std::vector<double> den;
    std::int64_t nodes = 0;
};

bool admissible_2d(const DomainDescriptor2D& dom, int a1, int a2) {
    if (dom.kind == DomainDescriptor2D::Kind::exp_hartogs) return true;
    return 2 * a1 + 2 * a2 + 4 > 0;
}

PanelAccum accumulate_panel(const DomainDescriptor2D& dom, const Function2D& f,
                            const std::vector<BasisIndex>& basis, const GridParams& g,
                            double lo, double hi) {
    PanelAccum acc;
    acc.num.assign(basis.size(), 0.0);
    acc.den.assign(basis.size(), 0.0);

    const double* unodes = g.u_points == 15 ? detail::kGK15Nodes : detail::kGL7Nodes;
    const double* uweights = g.u_points == 15 ? detail::kGK15Weights : detail::kGL7Weights;

    int min_a2 = 0, max_a2 = 0;
    for (const BasisIndex& b : basis) {
        min_a2 = std::min(min_a2, b.a2);
        max_a2 = std::max(max_a2, b.a2);
    }
    const int span = max_a2 - min_a2 + 1;
    std::vector<std::complex<double>> conj_z2_pow(span);
    std::vector<double> abs_z2_pow(span);

    const double step = (hi - lo) / g.splits;
    for (int spl = 0; spl < g.splits; ++spl) {
        const double a = lo + spl * step;
        const double c = a + 0.5 * step;
        const double h = 0.5 * step;
        for (int i = 0; i < 15; ++i) {
            const double r2 = c + h * detail::kGK15Nodes[i];
            const double w_r2 = h * detail::kGK15Weights[i] * r2;
            const double R = dom.fiber_radius(r2);
            if (!(R > 1e-160)) continue;
            const double R2 = R * R;
            for (int j2 = 0; j2 < g.n2; ++j2) {
                const std::complex<double> z2 = std::polar(r2, kTwoPi * j2 / g.n2);
                const std::complex<double> cz2 = std::conj(z2);
                // powers of conj(z2) and |z2|^2 from min_a2 upward
                conj_z2_pow[0] = std::pow(cz2, min_a2);
                abs_z2_pow[0] = std::pow(r2, 2.0 * min_a2);
                for (int k = 1; k < span; ++k) {
                    conj_z2_pow[k] = conj_z2_pow[k - 1] * cz2;
                    abs_z2_pow[k] = abs_z2_pow[k - 1] * (r2 * r2);
                }
                const double w_th2 = kTwoPi / g.n2;
                for (int iu = 0; iu < g.u_points; ++iu) {
                    const double u = 0.5 + 0.5 * unodes[iu];
                    const double wu = 0.5 * uweights[iu];
                    const double r1 = R * u;
                    for (int j1 = 0; j1 < g.n1; ++j1) {
                        const std::complex<double> z1 = std::polar(r1, kTwoPi * j1 / g.n1);
                        const std::complex<double> fv = std::conj(f(z1, z2));
                        const double w4 = w_r2 * w_th2 * R2 * u * wu * (kTwoPi / g.n1);
                        std::complex<double> cz1_pow = 1.0;
                        double abs_z1_pow = 1.0;
                        int prev_a1 = 0;
                        for (const BasisIndex& b : basis) {
                            while (prev_a1 < b.a1) {
                                cz1_pow *= std::conj(z1);
                                abs_z1_pow *= r1 * r1;
                                ++prev_a1;
                            }
                            const int k = b.a2 - min_a2;
                            const std::size_t idx = &b - basis.data();
                            acc.num[idx] += fv * cz1_pow * conj_z2_pow[k] * w4;
                            acc.den[idx] += abs_z1_pow * abs_z2_pow[k] * w4;
                        }
                        ++acc.nodes;
                    }
                }
            }
        }
    }
    return acc;
}

struct BruteForcePass {
    LaurentSeries series;
    double leakage = 0.0;
    std::int64_t nodes = 0;
};

BruteForcePass brute_force_pass(const DomainDescriptor2D& dom, const Function2D& f,
                                int min_degree, int max_degree, const GridParams& g) {
    // basis sorted by a1 then a2 so the z1-power walk in the kernel is monotone
    std::vector<BasisIndex> basis;
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = min_degree; a2 <= max_degree; ++a2)
            if (admissible_2d(dom, a1, a2)) basis.push_back({a1, a2});

    std::vector<std::pair<double, double>> panels;
    for (int k = 0; k < g.depth; ++k)
        panels.emplace_back(std::ldexp(1.0, -k - 1), std::ldexp(1.0, -k));

    std::vector<PanelAccum> per_panel(panels.size());
    const bool parallel = par::parallel_enabled();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(panels.size()); ++i)
        per_panel[i] = accumulate_panel(dom, f, basis, g, panels[i].first, panels[i].second);
    (void)parallel;

    std::vector<std::complex<double>> num(basis.size(), 0.0);
    std::vector<double> den(basis.size(), 0.0);
    BruteForcePass out;
    for (const PanelAccum& acc : per_panel) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            num[k] += acc.num[k];
            den[k] += acc.den[k];
        }
        out.nodes += acc.nodes;
    }

    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!(den[k] > 0.0)) continue;
        const std::complex<double> b = num[k] / den[k];
        if (basis[k].a1 == 0) {
            if (std::abs(b) > 0.0) out.series.set(basis[k].a2, b);
        } else {
            out.leakage = std::max(out.leakage, std::abs(b));
        }
    }
    return out;
}

} // namespace

BruteForceResult brute_force_friedrichs(const DomainDescriptor2D& domain, const Function2D& f,
                                        int min_degree, int max_degree, int grid_level) {
    if (min_degree > max_degree)
        throw std::domain_error("brute_force_friedrichs: empty degree range");
    const int maxabs = std::max(std::abs(min_degree), std::abs(max_degree));
    const int base_angles = default_angle_count(maxabs + 3);

    GridParams coarse{28 + 4 * grid_level, 1, base_angles << grid_level, 7, 16};
    GridParams fine{32 + 4 * grid_level, 1, base_angles << (grid_level + 1), 15, 24};

    BruteForcePass c = brute_force_pass(domain, f, min_degree, max_degree, coarse);
    BruteForcePass fpass = brute_force_pass(domain, f, min_degree, max_degree, fine);

    BruteForceResult out;
    out.series = fpass.series;
    out.alpha1_leakage = std::max(c.leakage, fpass.leakage);
    out.max_coeff_change = max_coeff_distance(c.series, fpass.series);
    out.nodes_used = c.nodes + fpass.nodes;
    out.converged = out.max_coeff_change <= 1e-7;
    return out;
}

} // namespace bergman
