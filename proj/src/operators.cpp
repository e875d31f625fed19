#include "bergman/operators.hpp"

#include "bergman/parallel.hpp"
#include "bergman/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergman {

FriedrichsMap::FriedrichsMap(std::shared_ptr<const ModelSpace> space)
    : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("FriedrichsMap: null space");
}

double FriedrichsMap::factor(int m) const {
    {
        std::lock_guard lock(memo_mutex_);
        auto it = factor_memo_.find(m);
        if (it != factor_memo_.end()) return it->second;
    }
    double phi = 0.0;
    if (space_->admissible(m) && space_->admissible(-m))
        phi = space_->moment(0.0).value() / space_->moment(2.0 * m).value();
    std::lock_guard lock(memo_mutex_);
    return factor_memo_.emplace(m, phi).first->second;
}

double FriedrichsMap::eigenvalue(int m) const { return factor(m) * factor(-m); }

double FriedrichsMap::singular_value(int m) const {
    if (!(space_->admissible(m) && space_->admissible(-m))) return 0.0;
    const double mu0 = space_->moment(0.0).value();
    return mu0 / std::sqrt(space_->moment(2.0 * m).value() * space_->moment(-2.0 * m).value());
}

LaurentSeries friedrichs_apply(const FriedrichsMap& map, const LaurentSeries& s) {
    LaurentSeries out;
    for (const auto& [n, a] : s.coefficients()) {
        const int m = -n;
        const double phi = map.factor(m);
        if (phi != 0.0) out.set(m, phi * std::conj(a));
    }
    return out;
}

LaurentSeries friedrichs_squared_apply(const FriedrichsMap& map, const LaurentSeries& s) {
    LaurentSeries out;
    for (const auto& [n, a] : s.coefficients()) {
        const double lam = map.eigenvalue(n);
        if (lam != 0.0) out.set(n, lam * a);
    }
    return out;
}

std::complex<double> weighted_inner_product(const ModelSpace& space, const LaurentSeries& u,
                                            const LaurentSeries& v) {
    std::complex<double> acc = 0.0;
    for (const auto& [n, a] : u.coefficients()) {
        const std::complex<double> b = v.coeff(n);
        if (b == std::complex<double>(0.0)) continue;
        MomentValue m = space.moment(2.0 * n);
        if (m.infinite)
            throw std::domain_error("weighted_inner_product: inadmissible degree");
        acc += a * std::conj(b) * m.value();
    }
    return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct RadialNode {
    double r;
    double weight; // quadrature weight including the Jacobian factor r
};

// Dyadic panels toward 0, 15-point Gauss-Kronrod nodes on each.
std::vector<RadialNode> radial_grid(int depth, int splits_per_panel) {
    static const double xgk[15] = {
        -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
        -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
        -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
        -0.207784955007898467600689403773245, 0.0,
        0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
        0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
        0.991455371120812639206854697526329};
    static const double wgk[15] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
        0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
        0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
        0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
        0.022935322010529224963732008058970};

    std::vector<RadialNode> nodes;
    for (int k = 0; k < depth; ++k) {
        const double hi = std::ldexp(1.0, -k);
        const double lo = 0.5 * hi;
        const double step = (hi - lo) / splits_per_panel;
        for (int s = 0; s < splits_per_panel; ++s) {
            const double a = lo + s * step;
            const double b = a + step;
            const double c = 0.5 * (a + b);
            const double h = 0.5 * (b - a);
            for (int i = 0; i < 15; ++i)
                nodes.push_back({c + h * xgk[i], h * wgk[i]});
        }
    }
    return nodes;
}

LaurentSeries project_on_grid(const ModelSpace& space,
                              const std::function<std::complex<double>(std::complex<double>)>& g,
                              int truncation, int depth, int splits, int num_angles,
                              std::int64_t* nodes_used) {
    const std::vector<RadialNode> rs = radial_grid(depth, splits);
    std::vector<int> degrees;
    for (int n = -truncation; n <= truncation; ++n)
        if (space.admissible(n)) degrees.push_back(n);
    std::vector<std::complex<double>> pairing(degrees.size(), 0.0);

    std::vector<std::complex<double>> phase(num_angles);
    for (int j = 0; j < num_angles; ++j)
        phase[j] = std::polar(1.0, kTwoPi * j / num_angles);

    std::vector<std::complex<double>> samples(num_angles);
    for (const RadialNode& node : rs) {
        const double r = node.r;
        const double wgt = node.weight * r * space.weight()(r);
        if (wgt == 0.0) continue; // weight underflowed; nothing to pair
        for (int j = 0; j < num_angles; ++j) samples[j] = g(r * phase[j]);
        *nodes_used += num_angles;
        // A_n = (2 pi / N) sum_j g(r e^{i th_j}) e^{-i n th_j}
        for (std::size_t d = 0; d < degrees.size(); ++d) {
            const int n = degrees[d];
            std::complex<double> acc = 0.0;
            for (int j = 0; j < num_angles; ++j) {
                const int idx = static_cast<int>((static_cast<long long>(n) * j) %
                                                 num_angles);
                const std::complex<double> e = idx >= 0 ? std::conj(phase[idx])
                                                        : phase[-idx];
                acc += samples[j] * e;
            }
            acc *= kTwoPi / num_angles;
            pairing[d] += wgt * std::pow(r, n) * acc;
        }
    }

    LaurentSeries out;
    for (std::size_t d = 0; d < degrees.size(); ++d) {
        const std::complex<double> b = space.norming_constant_sq(degrees[d]) * pairing[d];
        if (std::abs(b) > 0.0) out.set(degrees[d], b);
    }
    return out;
}

} // namespace

ProjectionResult bergman_project(
    const ModelSpace& space,
    const std::function<std::complex<double>(std::complex<double>)>& g, int truncation,
    double tol) {
    if (truncation < 0) throw std::domain_error("bergman_project: negative truncation");
    ProjectionResult out;
    const int n_angles = std::max(32, default_angle_count(truncation));
    LaurentSeries coarse =
        project_on_grid(space, g, truncation, 40, 1, n_angles, &out.nodes_used);
    LaurentSeries fine =
        project_on_grid(space, g, truncation, 46, 2, 2 * n_angles, &out.nodes_used);
    out.series = fine;
    out.max_coeff_change = max_coeff_distance(coarse, fine);
    out.converged = out.max_coeff_change <= tol;
    return out;
}

SpectrumReport spectrum(const FriedrichsMap& map, int truncation) {
    if (truncation < 1) throw std::domain_error("spectrum: requires truncation >= 1");
    SpectrumReport rep;
    rep.truncation = truncation;
    rep.tolerance = kRankTolerance;
    for (int m = -truncation; m <= truncation; ++m) {
        const double s = map.singular_value(m);
        rep.entries.push_back({m, s, s * s});
        if (s > kRankTolerance) ++rep.rank_estimate;
    }
    rep.saturated = rep.rank_estimate == 2 * truncation + 1;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

std::complex<double> complex_gaussian(std::uint64_t& state) {
    const double u1 = std::max(uniform01(state), 1e-300);
    const double u2 = uniform01(state);
    const double m = std::sqrt(-2.0 * std::log(u1));
    return {m * std::cos(kTwoPi * u2), m * std::sin(kTwoPi * u2)};
}

struct RatioValue {
    double value = 0.0;
    bool infinite = false;
};

RatioValue probe_ratio(const FriedrichsMap& map, const LaurentSeries& s, double q, double p) {
    const ModelSpace& space = map.space();
    const double source = q == 2.0 ? l2_norm(space, s) : lp_weighted_norm(space, s, q).value();
    if (!(source > 0.0)) return {0.0, false};
    const LaurentSeries fs = friedrichs_apply(map, s);
    if (fs.empty()) return {0.0, false};
    if (p == 2.0) return {l2_norm(space, fs) / source, false};
    LpNormResult target = lp_weighted_norm(space, fs, p);
    if (target.infinite) return {0.0, true};
    return {target.quad.value / source, false};
}

struct TrialOutcome {
    double value = 0.0;
    bool unbounded = false;
    LaurentSeries witness;
};

TrialOutcome run_probe_trial(const FriedrichsMap& map, double q, double p, int truncation,
                             std::uint64_t trial_seed, int ascent_sweeps) {
    std::vector<int> support;
    for (int m = -truncation; m <= truncation; ++m)
        if (map.space().admissible(m)) support.push_back(m);

    std::uint64_t rng = trial_seed;
    LaurentSeries s;
    for (int m : support) s.set(m, complex_gaussian(rng));

    TrialOutcome out;
    RatioValue r = probe_ratio(map, s, q, p);
    if (r.infinite) {
        out.unbounded = true;
        out.witness = s;
        out.value = std::numeric_limits<double>::infinity();
        return out;
    }
    double best = r.value;
    LaurentSeries best_s = s;

    double step = 0.5;
    for (int sweep = 0; sweep < ascent_sweeps; ++sweep) {
        bool improved = false;
        for (int m : support) {
            for (int comp = 0; comp < 2; ++comp) {
                for (double sign : {1.0, -1.0}) {
                    LaurentSeries cand = best_s;
                    std::complex<double> delta =
                        comp == 0 ? std::complex<double>(sign * step, 0.0)
                                  : std::complex<double>(0.0, sign * step);
                    cand.set(m, cand.coeff(m) + delta);
                    RatioValue rv = probe_ratio(map, cand, q, p);
                    if (rv.infinite) {
                        out.unbounded = true;
                        out.witness = cand;
                        out.value = std::numeric_limits<double>::infinity();
                        return out;
                    }
                    if (rv.value > best) {
                        best = rv.value;
                        best_s = cand;
                        improved = true;
                    }
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    out.value = best;
    out.witness = best_s;
    return out;
}

} // namespace

ProbeReport norm_probe(const FriedrichsMap& map, double q, double p, int truncation,
                       int trials, std::uint64_t seed) {
    if (!(p >= 1.0) || !(q >= 1.0)) throw std::domain_error("norm_probe: requires p, q >= 1");
    if (truncation < 0 || trials < 1)
        throw std::domain_error("norm_probe: requires truncation >= 0, trials >= 1");

    ProbeReport rep;
    rep.q = q;
    rep.p = p;
    rep.truncation = truncation;
    rep.trials = trials;
    rep.seed = seed;

    const int sweeps = (p == 2.0 && q == 2.0) ? 24 : 2;
    std::vector<TrialOutcome> outcomes(trials);
    const bool parallel = par::parallel_enabled();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int t = 0; t < trials; ++t) {
        std::uint64_t ts = seed;
        for (int i = 0; i <= t; ++i) splitmix64(ts); // distinct stream per trial
        outcomes[t] = run_probe_trial(map, q, p, truncation, ts, sweeps);
    }
    (void)parallel;

    // reduction in trial order: deterministic winner under ties
    int best_idx = 0;
    for (int t = 0; t < trials; ++t) {
        rep.trial_values.push_back(outcomes[t].value);
        if (outcomes[t].value > outcomes[best_idx].value) best_idx = t;
    }
    rep.lower_bound = outcomes[best_idx].value;
    rep.witness = outcomes[best_idx].witness;
    rep.unbounded_hit = outcomes[best_idx].unbounded;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

double sp_term(double alpha, double p) {
    const double lt = -log_itilde(2.0 * alpha + 1.0) + log_itilde(alpha * p + 1.0) / p -
                      log_itilde(-alpha + 1.0);
    return std::exp(lt);
}

} // namespace

SymmetricSumReport hinfty_bound_series(double p, int K) {
    if (!(p >= 2.0)) throw std::domain_error("hinfty_bound_series: requires p >= 2");
    if (K < 1) throw std::domain_error("hinfty_bound_series: requires K >= 1");
    SymmetricSumReport rep;
    rep.p = p;
    rep.K = K;
    rep.positive_terms.push_back(sp_term(0.0, p));
    rep.partial_sums.push_back(rep.positive_terms[0]);
    for (int k = 1; k <= K; ++k) {
        const double tp = sp_term(k, p);
        const double tn = sp_term(-k, p);
        rep.positive_terms.push_back(tp);
        rep.negative_terms.push_back(tn);
        rep.partial_sums.push_back(rep.partial_sums.back() + tp + tn);
    }
    rep.last_term_magnitude = std::max(rep.positive_terms.back(), rep.negative_terms.back());
    rep.ratio_test_factor =
        K >= 2 ? rep.negative_terms[K - 1] / rep.negative_terms[K - 2] : 0.0;
    return rep;
}

TailSumReport f_squared_hinfty_series(int K) {
    if (K < 1) throw std::domain_error("f_squared_hinfty_series: requires K >= 1");
    TailSumReport rep;
    rep.K = K;
    for (int k = 0; k <= K; ++k) {
        const double lt = -log_itilde(2.0 * k + 1.0) - log_itilde(-2.0 * k + 1.0) -
                          log_itilde(k + 1.0);
        const double t = std::exp(lt);
        rep.terms.push_back(t);
        rep.partial_sums.push_back(k == 0 ? t : rep.partial_sums.back() + t);
    }
    rep.last_term_magnitude = rep.terms.back();
    rep.ratio_test_factor = K >= 1 ? rep.terms[K] / rep.terms[K - 1] : 0.0;
    return rep;
}

} // namespace bergman
