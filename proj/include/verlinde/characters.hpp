// Character evaluation at rational torus points, weight multiplicities, and
// tensor-product decomposition in the representation ring.

#pragma once

#include "verlinde/weyl.hpp"

#include <complex>
#include <cstdint>
#include <map>

namespace verlinde {

// Sparse integer combination of irreducible characters chi_mu, keyed by the
// dominant highest weight. Zero coefficients are never stored.
struct VirtualCharacter {
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

    bool operator==(const VirtualCharacter&) const = default;
};

struct Caps {
    std::int64_t max_dominant_weights = 200000; // Freudenthal candidate box
    std::int64_t max_tensor_weights = 2000000;  // total weights expanded by Klimyk
};

// e^{2 pi i q} with q reduced mod 1 exactly before exponentiation
std::complex<double> unit_phase(const Rational& q);

// J(t) = sum over W of (-1)^{l(w)} t^{w rho}; zero exactly at non-regular t
std::complex<double> weyl_denominator(const RootDatum& d, const std::vector<WeylElement>& weyl,
                                      const TorusPoint& t);

// chi_mu(t) by the Weyl character formula. Throws ConsistencyError when
// |J(t)| <= 1e-9 (non-regular point).
std::complex<double> character_value(const RootDatum& d, const std::vector<WeylElement>& weyl,
                                     const Weight& mu, const TorusPoint& t);

// dominant weight multiplicities of the irreducible module V_mu (Freudenthal)
std::map<Weight, std::int64_t> weight_multiplicities(const RootDatum& d, const Weight& mu,
                                                     const Caps& caps = {});

// exact dimension of V_mu by the Weyl dimension formula
std::int64_t weyl_dimension(const RootDatum& d, const Weight& mu);

// full Weyl orbit of a weight
std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& w);

// chi_mu * chi_nu decomposed into irreducibles (Klimyk): shift every weight of
// V_nu by mu + rho, reduce to the dominant chamber with signs, drop singular
// terms. All resulting coefficients are positive.
VirtualCharacter tensor_decompose(const RootDatum& d, const Weight& mu, const Weight& nu,
                                  const Caps& caps = {});

} // namespace verlinde
