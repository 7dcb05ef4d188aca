#include "rbwalk/theory.hpp"

#include <cmath>
#include <limits>

#include "rbwalk/errors.hpp"

namespace rbwalk {

static constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
static constexpr double kInf = std::numeric_limits<double>::infinity();

double sigma_rb(int r, int b) {
    if (r + b < 3) throw parameter_error("sigma_rb needs r + b >= 3");
    return double(r + b - 1) / double(r + b - 2);
}

double sigma_b(int b) {
    if (b < 3) throw parameter_error("sigma_b needs b >= 3 (b = 2 is the cycle regime)");
    return double(b - 1) / double(b - 2);
}

double gamma_budget(double alpha, int r, int b) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw parameter_error("alpha must be in (0,1)");
    if (r < 1 || b < 1) throw parameter_error("gamma_budget needs r >= 1 and b >= 1");
    return alpha * sigma_rb(r, b) * double(r) / double(r + b);
}

double smooth_cover_const(double alpha, int r, int b) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw parameter_error("alpha must be in [0,1]");
    return alpha * sigma_rb(r, b) + (1.0 - alpha) * sigma_b(b);
}

double congestion_cover_const(double C, double F, int r) {
    if (!(F >= 1)) throw parameter_error("congestion F must be >= 1");
    if (C < 0) throw parameter_error("congestion C must be >= 0");
    if (r < 1) throw parameter_error("congestion needs r >= 1");
    return (1.0 + C / F) * double(r + 1) / double(r);
}

FlipSolution flip_fixed_point(int r, int b, double rho_R, double rho_B) {
    if (r < 1 || b < 2) throw parameter_error("flip fixed point needs r >= 1, b >= 2");
    if (!(rho_R > 0) || !(rho_B > 0)) throw parameter_error("rho must be positive");
    if (std::abs(r * rho_R + b * rho_B - 1.0) > 1e-12)
        throw parameter_error("need r*rho_R + b*rho_B = 1");

    const double rr2 = rho_R * rho_R, rb2 = rho_B * rho_B;
    auto T_R = [&](double pR, double pB) {
        return (r - 1) * rr2 / (1.0 - pR) + b * rb2 / (1.0 - pB);
    };
    auto T_B = [&](double pR, double pB) {
        return r * rr2 / (1.0 - pR) + (b - 1) * rb2 / (1.0 - pB);
    };

    // damping 0.5, start (0,0): the map is monotone, so iterates climb to
    // the smallest fixed point (the transient solution when one exists)
    double pR = 0, pB = 0;
    FlipSolution sol;
    const int cap = 1000000;
    int it = 0;
    for (; it < cap; ++it) {
        if (pR >= 1.0 - 1e-14 || pB >= 1.0 - 1e-14)
            throw numeric_error("flip fixed-point iteration diverged toward psi = 1");
        double tR = T_R(pR, pB), tB = T_B(pR, pB);
        double res = std::max(std::abs(tR - pR), std::abs(tB - pB));
        if (res <= 1e-13) {
            pR = tR;
            pB = tB;
            break;
        }
        double nR = 0.5 * pR + 0.5 * tR, nB = 0.5 * pB + 0.5 * tB;
        if (nR < pR - 1e-15 || nB < pB - 1e-15)
            throw numeric_error("flip fixed-point iteration lost monotonicity");
        pR = nR;
        pB = nB;
    }
    if (it == cap) throw numeric_error("flip fixed-point iteration did not converge");

    sol.psi_R = pR;
    sol.psi_B = pB;
    sol.f = r * rr2 / (1.0 - pR) + b * rb2 / (1.0 - pB);
    sol.xi_R = 1.0 - rho_R - pR;
    sol.xi_B = 1.0 - rho_B - pB;
    sol.R_v = 1.0 / (1.0 - sol.f);
    sol.feasible = sol.xi_R > 0 && sol.xi_B > 0;
    sol.iterations = it;
    sol.residual = std::max(std::abs(T_R(pR, pB) - pR), std::abs(T_B(pR, pB) - pB));
    if (!sol.feasible)
        throw numeric_error("flip fixed point is recurrent (escape probability <= 0)");
    return sol;
}

double flip_F(double z, double q, int b) {
    if (b < 2) throw parameter_error("b >= 2 required");
    // at q = 1 the middle term vanishes identically; its denominator can also
    // reach 0 there (z = 1 - q^2/b), so short-circuit rather than produce 0/0
    const double red = q == 1.0 ? 0.0
                               : (1.0 - q) * (1.0 - q) * (1.0 - z) / (1.0 - q * q / b - z);
    return z - red - (b - 1) * q * q / (double(b) * b * (1.0 - z));
}

double flip_smallest_root(double q, int b) {
    if (b < 2) throw parameter_error("b >= 2 required");
    if (!(q >= double(b) / (b + 1) && q <= 1.0))
        throw parameter_error("q must be in [b/(b+1), 1]");
    double lo = 0.0, hi = 0.5;
    double flo = flip_F(lo, q, b), fhi = flip_F(hi, q, b);
    if (fhi == 0.0) return hi; // q = 1, b = 2: double root exactly at 1/2
    if (!(flo < 0.0 && fhi > 0.0)) throw numeric_error("root bracket [0, 1/2] is invalid");
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = flip_F(mid, q, b);
        if (fm == 0.0) return mid;
        (fm < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

FlipRootsB2 flip_roots_b2(double q) {
    if (!(q >= 2.0 / 3.0 && q <= 1.0)) throw parameter_error("q must be in [2/3, 1]");
    double disc = 9.0 - 10.0 * q + q * q; // (1-q)(9-q) >= 0 on the domain
    if (disc < 0) throw numeric_error("negative discriminant");
    double s = std::sqrt(disc);
    return {q / 2.0, (q / 4.0) * ((3.0 - q) - s), (q / 4.0) * ((3.0 - q) + s)};
}

double theta_flip(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw parameter_error("q must be in [0, 1]");
    if (q == 0.0 || q == 1.0) return kInf;
    double s = std::sqrt(9.0 - 10.0 * q + q * q);
    return 2.0 / (q * (5.0 - q + s)) + 2.0 / (q * (1.0 - q + s));
}

bool flip_q_in_theorem_domain(double q) { return q >= 2.0 / 3.0 && q < 1.0; }

double returns_tree(int s) {
    if (s <= 2) throw parameter_error("returns_tree needs degree >= 3");
    return double(s - 1) / double(s - 2);
}

double visit_rate(double pi_v, double R_v) {
    if (!(pi_v > 0) || !(R_v >= 1)) throw parameter_error("need pi_v > 0 and R_v >= 1");
    return pi_v / R_v;
}

double nonvisit_prob(double p_v, double t) {
    if (!(p_v > 0 && p_v < 1)) throw parameter_error("need 0 < p_v < 1");
    if (t < 0) throw parameter_error("t must be >= 0");
    return std::exp(-t * std::log1p(p_v));
}

double CoverConstant::predicted_cover(int64_t n) const {
    switch (law) {
        case CoverLaw::NLogN: return theta * double(n) * std::log(double(n));
        case CoverLaw::HalfSquared: return 0.5 * double(n) * double(n);
        case CoverLaw::ExpectedFailure: return kNaN;
    }
    return kNaN;
}

CoverConstant predict(GraphModel model, int r, int b, int64_t n, const WalkPolicy& policy) {
    if (n < 3) throw parameter_error("n >= 3 required");
    const int s = r + b;
    CoverConstant out;
    out.model = policy_name(policy);

    auto simple_law = [&]() {
        if (s == 2) { // plain cycle: n^2/2 regime, no n ln n constant
            out.law = CoverLaw::HalfSquared;
            out.theta = kNaN;
        } else {
            out.law = CoverLaw::NLogN;
            out.theta = sigma_rb(r, b);
        }
    };

    if (std::holds_alternative<Simple>(policy)) {
        simple_law();
        return out;
    }
    if (auto* f = std::get_if<Flip>(&policy)) {
        validate_policy(policy, r, b);
        out.law = CoverLaw::NLogN;
        out.theta = flip_fixed_point(r, b, f->rho_R, f->rho_B).R_v;
        return out;
    }
    if (auto* sm = std::get_if<Smooth>(&policy)) {
        out.law = CoverLaw::NLogN;
        out.theta = smooth_cover_const(sm->alpha, r, b);
        return out;
    }
    if (auto* c = std::get_if<Congestion>(&policy)) {
        if (b != 2) throw parameter_error("congestion prediction covers the b = 2 regime");
        out.law = CoverLaw::NLogN;
        out.theta = congestion_cover_const(double(c->C), double(c->F), r);
        return out;
    }
    auto* o = std::get_if<Oblivious>(&policy);
    if (!o) throw parameter_error("unknown policy");
    if (r == 0) { // no red edges: the budget is irrelevant
        simple_law();
        return out;
    }
    // budget as a fraction of the unconstrained walk's total expected red
    // use sigma_rb * r/(r+b) * n ln n
    double full = sigma_rb(r, b) * double(r) / double(s) * double(n) * std::log(double(n));
    double x = double(o->budget) / full;
    if (x >= 1.0) {
        out.law = CoverLaw::NLogN;
        out.theta = sigma_rb(r, b);
        return out;
    }
    switch (model) {
        case GraphModel::Hamilton:
            out.law = CoverLaw::HalfSquared;
            out.theta = kNaN;
            return out;
        case GraphModel::TwoFactor:
            out.law = CoverLaw::ExpectedFailure;
            out.theta = kNaN;
            return out;
        default:
            if (b >= 3) {
                // an under-budget oblivious walk spends its budget over the
                // first x * sigma_rb n ln n steps and is blue-only after --
                // the smooth law at alpha = x
                out.law = CoverLaw::NLogN;
                out.theta = smooth_cover_const(x, r, b);
                return out;
            }
            // b = 2 union blue side is a random 2-factor
            out.law = CoverLaw::ExpectedFailure;
            out.theta = kNaN;
            return out;
    }
}

} // namespace rbwalk
