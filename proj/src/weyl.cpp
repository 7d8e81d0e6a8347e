#include "verlinde/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace verlinde {

namespace {

constexpr std::int64_t kWeylCap = 2'000'000;

std::vector<std::int32_t> identity_matrix(int rank) {
    std::vector<std::int32_t> m(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i) * rank + i] = 1;
    return m;
}

// matrix of s_i on Dynkin labels: v |-> v - v_i * alpha_i
std::vector<std::int32_t> reflection_matrix(const RootDatum& d, int i) {
    const int rank = d.rank();
    auto m = identity_matrix(rank);
    for (int l = 0; l < rank; ++l)
        m[static_cast<std::size_t>(l) * rank + i] -= static_cast<std::int32_t>(d.cartan()[l][i]);
    return m;
}

std::vector<std::int32_t> multiply(const std::vector<std::int32_t>& a,
                                   const std::vector<std::int32_t>& b, int rank) {
    std::vector<std::int32_t> c(static_cast<std::size_t>(rank) * rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) {
            std::int32_t aik = a[static_cast<std::size_t>(i) * rank + k];
            if (aik == 0) continue;
            for (int j = 0; j < rank; ++j)
                c[static_cast<std::size_t>(i) * rank + j] +=
                    aik * b[static_cast<std::size_t>(k) * rank + j];
        }
    return c;
}

std::vector<std::int64_t> apply_labels(const std::vector<std::int32_t>& m,
                                       const std::vector<std::int64_t>& v, int rank) {
    std::vector<std::int64_t> out(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            out[i] += static_cast<std::int64_t>(m[static_cast<std::size_t>(i) * rank + j]) * v[j];
    return out;
}

} // namespace

std::vector<WeylElement> enumerate_weyl(const RootDatum& d) {
    if (d.weyl_order() > kWeylCap)
        throw CapExceeded("Weyl group of " + d.type_label() + " exceeds the enumeration cap");

    const int rank = d.rank();
    std::vector<std::vector<std::int32_t>> refl;
    for (int i = 0; i < rank; ++i) refl.push_back(reflection_matrix(d, i));

    std::vector<WeylElement> elements;
    elements.push_back({{}, identity_matrix(rank)});

    // elements are distinguished by their image of rho (regular vector)
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    seen[d.rho().labels] = 0;

    std::size_t layer_begin = 0;
    while (layer_begin < elements.size()) {
        std::size_t layer_end = elements.size();
        for (std::size_t e = layer_begin; e < layer_end; ++e)
            for (int i = 0; i < rank; ++i) {
                auto mat = multiply(refl[i], elements[e].matrix, rank);
                auto key = apply_labels(mat, d.rho().labels, rank);
                if (seen.contains(key)) continue;
                WeylElement w;
                w.word.reserve(elements[e].word.size() + 1);
                w.word.push_back(static_cast<std::uint8_t>(i));
                w.word.insert(w.word.end(), elements[e].word.begin(), elements[e].word.end());
                w.matrix = std::move(mat);
                seen[std::move(key)] = elements.size();
                elements.push_back(std::move(w));
            }
        layer_begin = layer_end;
    }

    if (static_cast<std::int64_t>(elements.size()) != d.weyl_order())
        throw std::logic_error("Weyl enumeration produced wrong group order");
    return elements;
}

Weight apply(const WeylElement& w, const Weight& v) {
    const int rank = static_cast<int>(v.rank());
    return Weight(apply_labels(w.matrix, v.labels, rank));
}

RationalWeight apply(const WeylElement& w, const RationalWeight& v) {
    const int rank = static_cast<int>(v.rank());
    RationalWeight out(std::vector<Rational>(rank, Rational(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            std::int32_t m = w.matrix[static_cast<std::size_t>(i) * rank + j];
            if (m != 0) out.labels[i] += Rational(m) * v.labels[j];
        }
    return out;
}

TorusPoint weyl_pullback(const WeylElement& w, const TorusPoint& t) {
    const int rank = static_cast<int>(t.rank());
    std::vector<Rational> coords(rank, Rational(0));
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) {
            std::int32_t m = w.matrix[static_cast<std::size_t>(i) * rank + j];
            if (m != 0) coords[j] += Rational(m) * t.coords()[i];
        }
    return TorusPoint(std::move(coords));
}

DominantReduction dominant_reduce(const RootDatum& d, const Weight& v) {
    const int rank = d.rank();
    DominantReduction r{v, 1, false};
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < rank; ++i) {
            std::int64_t li = r.weight.labels[i];
            if (li >= 0) continue;
            // s_i: subtract li * alpha_i
            for (int l = 0; l < rank; ++l) r.weight.labels[l] -= li * d.cartan()[l][i];
            r.sign = -r.sign;
            moved = true;
            break;
        }
    }
    r.singular =
        std::any_of(r.weight.labels.begin(), r.weight.labels.end(),
                    [](std::int64_t x) { return x == 0; });
    return r;
}

AffineReduction affine_reduce(const RootDatum& d, const Weight& mu, std::int64_t k) {
    const std::int64_t m = k + d.dual_coxeter();
    Weight nu = mu + d.rho();
    int sign = 1;

    const std::int64_t step_cap =
        d.weyl_order() * m * d.rank() + 16; // generous; overrun is a defect
    for (std::int64_t step = 0; step < step_cap; ++step) {
        DominantReduction dom = dominant_reduce(d, nu);
        if (dom.singular) return {};
        nu = dom.weight;
        sign *= dom.sign;

        std::int64_t lvl = weight_level(d, nu);
        if (lvl == m) return {};
        if (lvl < m) {
            AffineReduction out;
            out.weight = nu - d.rho();
            out.sign = sign;
            return out;
        }
        // reflect across the theta-hyperplane at height m
        nu = nu - d.theta().scaled(lvl - m);
        sign = -sign;
    }
    throw std::logic_error("affine reduction failed to terminate");
}

FaceData face_data(const RootDatum& d, const Weight& mu, std::int64_t k,
                   const std::vector<WeylElement>& weyl) {
    if (!in_level_alcove(d, mu, k))
        throw std::invalid_argument("face_data: weight is outside the level-" +
                                    std::to_string(k) + " alcove");
    if (k < 1 && !mu.is_zero())
        throw std::invalid_argument("face_data requires k >= 1 for nonzero weights");

    std::vector<Rational> xi(d.rank(), Rational(0));
    if (k >= 1)
        xi = prequantized_conjugacy_class(d, mu, k);
    TorusPoint point(xi);

    FaceData f;
    std::vector<Rational> rho_sigma(d.rank(), Rational(0));
    for (const auto& alpha : d.positive_roots()) {
        Rational a = point.phase(alpha);
        if (a.is_zero())
            f.face_roots_positive.push_back(alpha);
        else if (a == Rational(1))
            f.face_roots_positive.push_back(-alpha);
        else
            continue;
        const Weight& kept = f.face_roots_positive.back();
        for (int i = 0; i < d.rank(); ++i)
            rho_sigma[i] += Rational(kept.labels[i], 2);
    }
    f.rho_sigma = RationalWeight(std::move(rho_sigma));

    for (const auto& w : weyl) {
        TorusPoint moved = weyl_pullback(w, point); // coweight action of w^{-1}
        bool integral = true;
        for (int i = 0; i < d.rank() && integral; ++i)
            integral = (moved.coords()[i] - point.coords()[i]).is_integer();
        if (integral) f.stabilizer.push_back(w);
    }
    return f;
}

} // namespace verlinde
