#pragma once
#include <cstdint>
#include <string>

#include "rbwalk/graphgen.hpp"
#include "rbwalk/walks.hpp"

namespace rbwalk {

// cover-time constants for the unconstrained and blue-only walks:
// sigma_rb = (r+b-1)/(r+b-2), sigma_b = (b-1)/(b-2)
double sigma_rb(int r, int b);
double sigma_b(int b);

// red-use budget constant: gamma(alpha) = alpha * sigma_rb * r / (r+b);
// the budget itself is gamma * n ln n red traversals
double gamma_budget(double alpha, int r, int b);

// smooth-walk cover constant alpha*sigma_rb + (1-alpha)*sigma_b (needs b >= 3)
double smooth_cover_const(double alpha, int r, int b);

// congestion-priced cover constant (1 + C/F) * (r+1)/r (blue cycle regime, b = 2)
double congestion_cover_const(double C, double F, int r);

struct FlipSolution {
    double psi_R = 0, psi_B = 0; // away-and-return probabilities
    double f = 0;                // first-return probability to the root
    double xi_R = 0, xi_B = 0;   // escape probabilities (1 - rho - psi)
    double R_v = 0;              // expected visits 1/(1-f)
    bool feasible = false;       // both xi > 0 (transient solution)
    int iterations = 0;
    double residual = 0;         // max fixed-point equation residual at the solution
};

// damped monotone iteration from (0,0); returns the smallest fixed point of
//   psi_R = (r-1) rho_R^2/(1-psi_R) + b rho_B^2/(1-psi_B)
//   psi_B = r rho_R^2/(1-psi_R) + (b-1) rho_B^2/(1-psi_B)
// with f = r rho_R^2/(1-psi_R) + b rho_B^2/(1-psi_B).
// Throws numeric_error if the iteration fails or the solution is recurrent.
FlipSolution flip_fixed_point(int r, int b, double rho_R, double rho_B);

// F(z) = z - (1-q)^2 (1-z)/(1-q^2/b-z) - (b-1) q^2/(b^2 (1-z)), q = b rho_B
double flip_F(double z, double q, int b);
// smallest root of F on [0, 1/2], bracketed bisection; valid for
// b/(b+1) <= q <= 1
double flip_smallest_root(double q, int b);

// the cubic roots for b = 2 in w = 1 - z: {q/2, (q/4)[(3-q) +- s]},
// s = sqrt(9 - 10q + q^2); w_plus is the feasible one
struct FlipRootsB2 {
    double w_zero, w_minus, w_plus;
};
FlipRootsB2 flip_roots_b2(double q);

// theta(q) = 2/(q(5-q+s)) + 2/(q(1-q+s)) for r=1, b=2; infinite at q in {0,1};
// computed on all of [0,1] although the flip theorem assumes q >= 2/3
double theta_flip(double q);
bool flip_q_in_theorem_domain(double q);

// expected visits to a locally tree-like vertex of an s-regular graph
double returns_tree(int s);
// first-visit rate p_v = pi_v / R_v
double visit_rate(double pi_v, double R_v);
// P(v unvisited during t steps) ~ (1 + p_v)^{-t}
double nonvisit_prob(double p_v, double t);

enum class CoverLaw { NLogN, HalfSquared, ExpectedFailure };

struct CoverConstant {
    std::string model;   // policy tag
    CoverLaw law = CoverLaw::NLogN;
    double theta = 0;    // n ln n constant; NaN unless law == NLogN
    double predicted_cover(int64_t n) const;
};

// dispatch: the prediction for `policy` run on ensemble `model` with degree
// pair (r, b) at size n. Oblivious predictions depend on the ensemble:
// under-budget Hamilton -> n^2/2, under-budget 2-factor blue -> expected
// failure, b >= 3 union -> the smooth constant at the equivalent alpha.
CoverConstant predict(GraphModel model, int r, int b, int64_t n, const WalkPolicy& policy);

} // namespace rbwalk
