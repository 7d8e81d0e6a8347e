// Quantization of the standard group-valued examples, assembled from isolated
// fixed-point data over the evaluation points: conjugacy classes, the double
// and fused double, moduli-space dimensions, and the sphere S^{2n}.

#pragma once

#include "verlinde/fusion.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace verlinde {

// Localization data of one isolated fixed point: the torus weights of the
// normal space, a (possibly non-integral) prefactor exponent, and a sign. The
// square-root prefactor is always resolved by the caller; this type never
// infers one.
struct IsolatedFixedPoint {
    std::vector<Weight> normal_weights;
    RationalWeight shift;
    int sign = 1;
    std::string orientation_note;
};

// sign * t^{shift} / prod_j (1 - t^{-beta_j}). Throws ConsistencyError naming
// the weight when some t^{beta_j} = 1.
std::complex<double> fixed_point_contribution(const IsolatedFixedPoint& fp, const TorusPoint& t);

// Quantization of the level-k pre-quantized conjugacy class labeled by mu:
// the value at t_lambda is assembled from the face data of mu as
//   (1/|W_sigma|) sum_{w in W} t'^{mu+rho-rho_sigma} J_sigma(t') / J(t'),
// with t' = w^{-1}.t_lambda. The result is verified to equal tau_mu.
FusionElement quantize_conjugacy_class(const FusionContext& ctx, const Weight& mu,
                                       double tol = 1e-6);

struct DoubleQuantization {
    std::vector<double> diagonal;  // |T_{k+h}| / |J(t_lambda)|^2 per lambda
    double max_discrepancy = 0.0;  // vs. sum_mu |tau_mu(t_lambda)|^2
    FusionElement fused;           // sum_mu tau_mu tau_mu*
};

// Diagonal value table of the double, computed by the closed form and by the
// basis sum with the discrepancy reported, plus the fused-double element.
DoubleQuantization quantize_double(const FusionContext& ctx, double tol = 1e-6);

struct VerlindeProblem {
    std::int64_t genus = 0;
    std::vector<Weight> boundary;
};

// Dimension of the quantization of the moduli space of flat connections on a
// genus-h surface with fixed boundary holonomies: computed by fusion algebra
// and by the closed-form point sum, which must agree.
std::int64_t verlinde_dimension(const FusionContext& ctx, const VerlindeProblem& problem,
                                double tol = 1e-6);

struct SphereQuantization {
    FusionElement element;           // sum_{i<=k} tau_{i varpi_1}
    double residual = 0.0;           // max |value vector - evaluation of element|
    double cross_check_max_error = 0.0;
    std::int64_t cross_checked_points = 0;
};

// Level-k quantization of the sphere S^{2n} as an SU(n)-space (context must be
// type A_{n-1}). The main path evaluates the cancelled character sum
// sum_{m=0}^{k+n-1} chi_{m varpi_1}; the raw two-fixed-point sum is evaluated
// as a cross-check wherever none of the coordinate phases degenerate.
SphereQuantization quantize_sphere(const FusionContext& ctx, double tol = 1e-6);

} // namespace verlinde
