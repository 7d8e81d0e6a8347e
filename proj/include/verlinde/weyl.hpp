// Weyl group enumeration, dominant and affine reduction, alcove-face data.

#pragma once

#include "verlinde/lie.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace verlinde {

// One Weyl group element: a reduced word in simple reflections and the matrix
// of its action on Dynkin labels (row-major, rank x rank).
struct WeylElement {
    std::vector<std::uint8_t> word;
    std::vector<std::int32_t> matrix;

    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

// The full Weyl group, identity first, ordered by (length, discovery order).
// Throws CapExceeded if the group order exceeds the enumeration cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& d);

Weight apply(const WeylElement& w, const Weight& v);
RationalWeight apply(const WeylElement& w, const RationalWeight& v);

// The point w^{-1}.t: pulling a torus point back along w transposes the label
// action onto coroot coordinates.
TorusPoint weyl_pullback(const WeylElement& w, const TorusPoint& t);

struct DominantReduction {
    Weight weight;   // the dominant representative
    int sign;        // (-1)^{l(w)} for the w used; meaningless when singular
    bool singular;   // true iff some reflection fixes the input
};

// Reflect at the smallest index with a negative label until dominant.
DominantReduction dominant_reduce(const RootDatum& d, const Weight& v);

// Result of the shifted affine Weyl action at level k applied to mu: either
// the unique representative in Lambda*_k with its sign, or a wall hit
// (the weight has nontrivial stabilizer and projects to zero).
struct AffineReduction {
    std::optional<Weight> weight;
    int sign = 0;

    bool on_wall() const { return !weight.has_value(); }
};

AffineReduction affine_reduce(const RootDatum& d, const Weight& mu, std::int64_t k);

// Data of the open alcove face containing xi = B_k^sharp(mu): the positive
// system of the centralizer root subsystem, the stabilizer subgroup
// {w : w.xi - xi integral}, and the half-sum of the face-positive roots.
struct FaceData {
    std::vector<Weight> face_roots_positive;
    std::vector<WeylElement> stabilizer;
    RationalWeight rho_sigma;
};

FaceData face_data(const RootDatum& d, const Weight& mu, std::int64_t k,
                   const std::vector<WeylElement>& weyl);

} // namespace verlinde
