// The level-k fusion ring: basis enumeration, evaluation at the special
// regular points, the projection from the representation ring, fusion
// coefficients by two independent routes, and the orthogonality machinery.

#pragma once

#include "verlinde/characters.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace verlinde {

// Sparse integer combination of basis elements tau_mu, mu in Lambda*_k.
struct FusionElement {
    std::int64_t level = 0;
    std::map<Weight, std::int64_t> terms;

    void add(const Weight& w, std::int64_t c) {
        if (c == 0) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else if ((it->second += c) == 0) {
            terms.erase(it);
        }
    }

    bool operator==(const FusionElement&) const = default;
};

// Shared per-(group, level) tables: the level-k weights, their evaluation
// points t_lambda, Weyl denominator values, and the full character value
// table chi_mu(t_lambda). Immutable after construction; concurrent reads are
// safe. The warm-up pass may use several threads; results are identical for
// any thread count.
class FusionContext {
public:
    FusionContext(RootDatum datum, std::int64_t level, int threads = 1);

    const RootDatum& datum() const { return datum_; }
    std::int64_t level() const { return level_; }
    const std::vector<WeylElement>& weyl() const { return weyl_; }
    const std::vector<Weight>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    std::size_t index_of(const Weight& mu) const; // throws std::invalid_argument
    const TorusPoint& point(std::size_t lambda) const { return points_[lambda]; }
    std::complex<double> jval(std::size_t lambda) const { return jvals_[lambda]; }
    double jnorm2(std::size_t lambda) const { return jnorm2_[lambda]; }
    std::complex<double> chi(std::size_t mu, std::size_t lambda) const {
        return chi_[mu][lambda];
    }
    std::int64_t torus_order() const { return torus_order_; }

    // the dual basis label: tau_mu* = tau_{star(mu)} with star(mu) = -w0(mu)
    Weight star(const Weight& mu) const;

    // test hook: perturb one cached character value so every downstream
    // consistency check must notice
    void corrupt_cache_for_testing();

private:
    RootDatum datum_;
    std::int64_t level_;
    std::vector<WeylElement> weyl_;
    std::vector<Weight> weights_;
    std::map<Weight, std::size_t> index_;
    std::vector<TorusPoint> points_;
    std::vector<std::complex<double>> jvals_;
    std::vector<double> jnorm2_;
    std::vector<std::vector<std::complex<double>>> chi_;
    std::int64_t torus_order_ = 0;
};

// Projection of the representation ring onto the fusion ring: every term is
// affine-reduced at level k, signs accumulate, wall terms vanish.
FusionElement project_to_fusion(const RootDatum& d, const VirtualCharacter& x, std::int64_t k);

// evaluation of a fusion element at t_lambda
std::complex<double> evaluate(const FusionContext& ctx, const FusionElement& x,
                              const Weight& lambda);

// the conjugation involution tau_mu -> tau_{-w0 mu}, extended linearly
FusionElement star(const FusionContext& ctx, const FusionElement& x);

// Recover the tau_mu-coefficient of an element given by its value vector
// v[lambda] on all t_lambda:
//   N(mu) = (1/|T_{k+h}|) sum_lambda |J(t_lambda)|^2 v(lambda) conj(chi_mu(t_lambda)).
// The result must be an integer within tol (imaginary part and rounding
// residual); otherwise the vector is not in the fusion ring and a
// ConsistencyError is thrown.
std::int64_t multiplicity(const FusionContext& ctx, const std::vector<std::complex<double>>& values,
                          const Weight& mu, double tol = 1e-6);

// full basis expansion of a value vector
FusionElement element_from_values(const FusionContext& ctx,
                                  const std::vector<std::complex<double>>& values,
                                  double tol = 1e-6);

// tau_mu tau_nu expanded in the basis (pointwise products of value vectors)
FusionElement fusion_product(const FusionContext& ctx, const Weight& mu, const Weight& nu,
                             double tol = 1e-6);

// Structure constants keyed the symmetric way: the returned map sends lambda
// to N_{mu,nu,lambda}, where tau_mu tau_nu = sum_lambda N_{mu,nu,lambda} tau_{lambda*}.
std::map<Weight, std::int64_t> fusion_coefficients(const FusionContext& ctx, const Weight& mu,
                                                   const Weight& nu, double tol = 1e-6);

// Same keying, computed through the representation ring instead: decompose
// chi_mu chi_nu into irreducibles, then project to level k.
std::map<Weight, std::int64_t> fusion_coefficients_kac_walton(const FusionContext& ctx,
                                                              const Weight& mu, const Weight& nu,
                                                              const Caps& caps = {});

// every N_{mu,nu,lambda}, including zeros
struct FusionTable {
    std::int64_t level = 0;
    std::map<std::tuple<Weight, Weight, Weight>, std::int64_t> coefficients;
};

FusionTable fusion_table(const FusionContext& ctx, double tol = 1e-6);

// max residual over both orthogonality identity families
double verify_orthogonality(const FusionContext& ctx);

// max |chi_{(k+j) varpi_1}(t_lambda)| over j = 1..n-1 and lambda, for type
// A_{n-1}; these generate the characters that vanish at every t_lambda
double fusion_ideal_check_A(const FusionContext& ctx);

} // namespace verlinde
