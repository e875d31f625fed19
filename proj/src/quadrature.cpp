#include "bergman/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bergman {

namespace {

struct SimpsonState {
    const Integrand* f;
    std::int64_t nodes = 0;
    std::int64_t budget = 0;
    bool exhausted = false;
};

double eval(SimpsonState& st, double x) {
    ++st.nodes;
    if (st.nodes > st.budget) st.exhausted = true;
    return (*st.f)(x);
}

// Returns value; accumulates |error| into err_acc.
double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, double& err_acc) {
    const double m = 0.5 * (a + b);
    if (st.exhausted) {
        err_acc += tol;
        return whole;
    }
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(st, lm);
    const double frm = eval(st, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = (refined - whole) / 15.0;
    if (depth <= 0 || std::abs(err) <= tol) {
        err_acc += std::abs(err);
        return refined + err;
    }
    return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc) +
           simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc);
}

} // namespace

QuadratureResult adaptive_simpson(const Integrand& f, double a, double b, double tol,
                                  std::int64_t node_budget) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_simpson: tol must be positive");
    SimpsonState st{&f, 0, node_budget, false};
    const double fa = eval(st, a);
    const double fb = eval(st, b);
    const double fm = eval(st, 0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err_acc = 0.0;
    const double value = simpson_rec(st, a, b, fa, fm, fb, whole, tol, 48, err_acc);
    QuadratureResult r;
    r.value = value;
    r.abs_error_estimate = err_acc;
    r.nodes_used = st.nodes;
    r.converged = !st.exhausted && err_acc <= tol;
    return r;
}

QuadratureResult adaptive_quad_01(const Integrand& f, double tol, std::int64_t node_budget) {
    if (!(tol > 0.0)) throw std::domain_error("adaptive_quad_01: tol must be positive");
    QuadratureResult out;
    double sum = 0.0;
    double err = 0.0;
    std::vector<double> panel_values;
    const int max_panels = 1080; // past this, 2^-k underflows

    int zero_streak = 0;
    for (int k = 0; k < max_panels; ++k) {
        const double hi = std::ldexp(1.0, -k);
        const double lo = 0.5 * hi;
        const double panel_tol = tol * std::ldexp(1.0, -(k + 2));
        QuadratureResult panel =
            adaptive_simpson(f, lo, hi, std::max(panel_tol, 1e-17), node_budget - out.nodes_used);
        out.nodes_used += panel.nodes_used;
        sum += panel.value;
        err += panel.abs_error_estimate;
        panel_values.push_back(panel.value);

        if (!std::isfinite(sum)) { // integrand outgrew double range
            out.value = sum;
            out.abs_error_estimate = std::numeric_limits<double>::infinity();
            out.converged = false;
            return out;
        }
        if (out.nodes_used >= node_budget) break;

        if (panel.value == 0.0) {
            if (++zero_streak >= 2 && k >= 2) {
                // integrand vanished beyond double range; no tail left
                out.value = sum;
                out.abs_error_estimate = err;
                out.converged = err <= tol;
                return out;
            }
            continue;
        }
        zero_streak = 0;

        if (k >= 3) {
            const double i0 = std::abs(panel_values[k - 2]);
            const double i1 = std::abs(panel_values[k - 1]);
            const double i2 = std::abs(panel_values[k]);
            if (i0 > 0.0 && i1 > 0.0) {
                const double r1 = i1 / i0;
                const double r2 = i2 / i1;
                const bool same_sign = (panel_values[k] > 0) == (panel_values[k - 1] > 0) &&
                                       (panel_values[k - 1] > 0) == (panel_values[k - 2] > 0);
                if (same_sign && r2 < 1.0 && r1 < 1.0) {
                    // geometric tail: extrapolate with the latest ratio and
                    // charge the ratio drift to the error estimate
                    const double tail = i2 * r2 / (1.0 - r2);
                    const double drift = std::abs(r2 - r1);
                    const double tail_err =
                        3.0 * i2 * drift / ((1.0 - r2) * (1.0 - r2)) + 1e-16 * tail;
                    if (err + tail_err <= tol || tail + tail_err <= tol * 0.25) {
                        const double sgn = panel_values[k] > 0 ? 1.0 : -1.0;
                        out.value = sum + sgn * tail;
                        out.abs_error_estimate = err + tail_err;
                        out.converged = out.abs_error_estimate <= tol;
                        return out;
                    }
                }
            }
        }
        if (std::abs(sum) > 1e300) break; // looks divergent; give up
    }

    out.value = sum;
    out.abs_error_estimate =
        err + (panel_values.empty() ? 0.0 : std::abs(panel_values.back()));
    out.converged = false;
    return out;
}

QuadratureResult adaptive_quad_tail(const Integrand& f, double a, double tol,
                                    std::int64_t node_budget) {
    // t = a + (1-v)/v maps v in (0,1] onto [a, inf); dt = dv/v^2
    auto g = [&f, a](double v) {
        const double t = a + (1.0 - v) / v;
        return f(t) / (v * v);
    };
    return adaptive_quad_01(g, tol, node_budget);
}

PanelEstimate gauss_kronrod_15(const Integrand& f, double a, double b) {
    // QUADPACK dqk15 nodes and weights
    static const double xgk[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static const double wgk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static const double wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = wgk[7] * fc;
    double resg = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * xgk[j];
        const double f1 = f(c - x);
        const double f2 = f(c + x);
        resk += wgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
    }
    const double value = resk * h;
    const double err = std::abs((resk - resg) * h);
    return {value, err};
}

} // namespace bergman
