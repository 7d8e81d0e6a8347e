// Static root-system data for the simple compact simply connected Lie groups,
// weight lattices, the basic inner product, and level-k weight enumeration.
//
// Conventions used throughout the library:
//   * Weights are stored by their Dynkin labels: labels[i] = <lambda, alpha_i^vee>.
//   * The Cartan matrix is A[i][j] = <alpha_j, alpha_i^vee>.
//   * The basic inner product is normalized so long roots have squared length 2;
//     short coroots then satisfy B(alpha^vee, alpha^vee) = 2.
//   * Coweights are stored by their coordinates in the simple-coroot basis, so
//     the pairing <lambda, xi> is just the dot product of labels with coordinates.

#pragma once

#include "verlinde/errors.hpp"
#include "verlinde/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace verlinde {

struct Weight {
    std::vector<std::int64_t> labels;

    Weight() = default;
    explicit Weight(std::vector<std::int64_t> l) : labels(std::move(l)) {}

    std::size_t rank() const { return labels.size(); }
    bool is_zero() const;
    bool is_dominant() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(std::int64_t c) const;

    auto operator<=>(const Weight&) const = default;
};

// Weight with rational labels (half-sums of roots, fixed-point shifts).
struct RationalWeight {
    std::vector<Rational> labels;

    RationalWeight() = default;
    explicit RationalWeight(std::vector<Rational> l) : labels(std::move(l)) {}
    explicit RationalWeight(const Weight& w);

    std::size_t rank() const { return labels.size(); }
    RationalWeight operator+(const RationalWeight& o) const;
    RationalWeight operator-(const RationalWeight& o) const;

    bool operator==(const RationalWeight&) const = default;
};

// A point t = exp(xi) of the maximal torus with rational coweight xi, stored
// in simple-coroot coordinates. The phase of t^nu is <nu, xi> mod 1, an exact
// rational; denom() is a common denominator for all phases of integral weights.
class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(std::vector<Rational> coords);

    std::size_t rank() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    std::int64_t denom() const { return denom_; }

    Rational phase(const Weight& nu) const;
    Rational phase(const RationalWeight& nu) const;

    bool operator==(const TorusPoint&) const = default;

private:
    std::vector<Rational> coords_;
    std::int64_t denom_ = 1;
};

// All static data of one simple type. Immutable after construction.
class RootDatum {
public:
    friend RootDatum build_root_datum(char series, int rank);

    char series() const { return series_; }
    int rank() const { return rank_; }
    std::string type_label() const { return std::string(1, series_) + std::to_string(rank_); }

    const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
    // squared length (alpha_i | alpha_i); 2 for long roots
    const std::vector<Rational>& root_lengths() const { return root_lengths_; }
    // positive roots in Dynkin labels, ordered by (height, labels)
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const Weight& theta() const { return theta_; }            // highest root
    const std::vector<std::int64_t>& comarks() const { return comarks_; }
    const Weight& rho() const { return rho_; }                // all labels 1
    std::int64_t dual_coxeter() const { return dual_coxeter_; }
    // Gram matrix F[i][j] = (varpi_i | varpi_j) of the fundamental weights
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }

    Weight simple_root(int i) const;
    // number of Weyl group elements for this type
    std::int64_t weyl_order() const { return weyl_order_; }

private:
    RootDatum() = default;

    char series_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<std::int64_t>> cartan_;
    std::vector<Rational> root_lengths_;
    std::vector<Weight> positive_roots_;
    Weight theta_;
    std::vector<std::int64_t> comarks_;
    Weight rho_;
    std::int64_t dual_coxeter_ = 0;
    std::vector<std::vector<Rational>> gram_;
    std::int64_t weyl_order_ = 0;
};

// Supported types: A1..A7, B2..B7, C2..C7, D4..D7, E6, F4, G2. E7 and E8 are
// rejected (full Weyl enumeration would be too large); invalid labels throw
// std::invalid_argument.
RootDatum build_root_datum(char series, int rank);
RootDatum build_root_datum(std::string_view label); // e.g. "A2", "G2"

Rational inner_product(const RootDatum& d, const Weight& a, const Weight& b);
Rational inner_product(const RootDatum& d, const Weight& a, const RationalWeight& b);

// <lambda, theta^vee> = sum of comarks[i] * labels[i]
std::int64_t weight_level(const RootDatum& d, const Weight& w);

// membership in Lambda*_k: dominant and level <= k
bool in_level_alcove(const RootDatum& d, const Weight& w, std::int64_t k);

// all weights of Lambda*_k in lexicographic label order
std::vector<Weight> level_k_weights(const RootDatum& d, std::int64_t k);

// |T_l| for l >= 1: the order of B_l^sharp(Lambda*)/Lambda, equal to the
// absolute determinant of the level-l coroot pairing matrix
std::int64_t torus_order(const RootDatum& d, std::int64_t l);

// M[i][j] = B_l(alpha_i^vee, alpha_j^vee). The torus-restriction class equals
// this matrix up to an overall minus sign, which carries no content here; we
// store the positive-sign matrix.
std::vector<std::vector<std::int64_t>> pairing_matrix(const RootDatum& d, std::int64_t l);
std::vector<std::vector<std::int64_t>> restriction_class(const RootDatum& d, std::int64_t l);

// true iff all strictly off-diagonal entries of the level-l pairing matrix are
// even, in which case the induced splitting is canonical
bool canonical_split_exists(const RootDatum& d, std::int64_t l);

// t_lambda = exp(B_{k+h}^sharp(lambda+rho)) for lambda in Lambda*_k
TorusPoint t_lambda(const RootDatum& d, const Weight& lambda, std::int64_t k);

// alcove point xi = B_k^sharp(mu) of the conjugacy class quantizing to mu,
// in simple-coroot coordinates; requires mu in Lambda*_k and k >= 1
std::vector<Rational> prequantized_conjugacy_class(const RootDatum& d, const Weight& mu,
                                                   std::int64_t k);

// JSON document with type, rank, cartan, comarks, dual Coxeter number, and the
// Gram matrix as exact "p/q" strings
std::string root_datum_to_json(const RootDatum& d);

} // namespace verlinde
