#include "verlinde/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>

namespace verlinde {

std::complex<double> unit_phase(const Rational& q) {
    const double x = 2.0 * std::numbers::pi * q.mod1().to_double();
    return {std::cos(x), std::sin(x)};
}

std::complex<double> weyl_denominator(const RootDatum& d, const std::vector<WeylElement>& weyl,
                                      const TorusPoint& t) {
    std::complex<double> sum = 0.0;
    for (const auto& w : weyl)
        sum += static_cast<double>(w.sign()) * unit_phase(t.phase(apply(w, d.rho())));
    return sum;
}

std::complex<double> character_value(const RootDatum& d, const std::vector<WeylElement>& weyl,
                                     const Weight& mu, const TorusPoint& t) {
    if (!mu.is_dominant())
        throw std::invalid_argument("character_value: weight must be dominant");
    std::complex<double> j = weyl_denominator(d, weyl, t);
    if (std::abs(j) <= 1e-9)
        throw ConsistencyError("character evaluation at a non-regular torus point");
    const Weight shifted = mu + d.rho();
    std::complex<double> num = 0.0;
    for (const auto& w : weyl)
        num += static_cast<double>(w.sign()) * unit_phase(t.phase(apply(w, shifted)));
    return num / j;
}

std::map<Weight, std::int64_t> weight_multiplicities(const RootDatum& d, const Weight& mu,
                                                     const Caps& caps) {
    if (!mu.is_dominant())
        throw std::invalid_argument("weight_multiplicities: weight must be dominant");
    const int rank = d.rank();

    // box bound on simple-root coefficients of mu - nu for dominant nu
    std::vector<std::int64_t> bound(rank);
    for (int i = 0; i < rank; ++i) {
        Rational b(0);
        for (int j = 0; j < rank; ++j) b += d.gram()[i][j] * Rational(mu.labels[j]);
        bound[i] = (b / (d.root_lengths()[i] / Rational(2))).floor();
    }

    struct Candidate {
        std::int64_t height;
        Weight weight;
    };
    std::vector<Candidate> candidates;
    std::vector<std::int64_t> c(rank, 0);
    std::int64_t count = 0;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == rank) {
            Weight nu = mu;
            for (int i = 0; i < rank; ++i)
                for (int l = 0; l < rank; ++l) nu.labels[l] -= c[i] * d.cartan()[l][i];
            if (nu.is_dominant()) {
                candidates.push_back(
                    {std::accumulate(c.begin(), c.end(), std::int64_t(0)), nu});
            }
            return;
        }
        for (c[pos] = 0; c[pos] <= bound[pos]; ++c[pos]) {
            if (++count > caps.max_dominant_weights)
                throw CapExceeded("weight_multiplicities: dominant-weight cap exceeded");
            self(self, pos + 1);
        }
        c[pos] = 0;
    };
    rec(rec, 0);
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.height, a.weight.labels) < std::tie(b.height, b.weight.labels);
    });

    std::map<Weight, std::int64_t> mult;
    const Rational top_norm = inner_product(d, mu + d.rho(), mu + d.rho());

    auto lookup = [&](const Weight& w) -> std::int64_t {
        auto it = mult.find(dominant_reduce(d, w).weight);
        return it == mult.end() ? 0 : it->second;
    };

    for (const auto& cand : candidates) {
        const Weight& nu = cand.weight;
        if (nu == mu) {
            mult[nu] = 1;
            continue;
        }
        Rational numer(0);
        for (const auto& alpha : d.positive_roots()) {
            for (std::int64_t j = 1;; ++j) {
                Weight up = nu + alpha.scaled(j);
                std::int64_t m = lookup(up);
                if (m == 0) break; // weight strings are unbroken
                numer += Rational(2 * m) * inner_product(d, alpha, up);
            }
        }
        if (numer.is_zero()) continue;
        Rational denom = top_norm - inner_product(d, nu + d.rho(), nu + d.rho());
        Rational m = numer / denom;
        if (!m.is_integer() || m.num() < 0)
            throw std::logic_error("Freudenthal recursion produced a non-integer");
        if (m.num() > 0) mult[nu] = m.num();
    }
    return mult;
}

std::int64_t weyl_dimension(const RootDatum& d, const Weight& mu) {
    if (!mu.is_dominant())
        throw std::invalid_argument("weyl_dimension: weight must be dominant");
    Rational dim(1);
    const Weight shifted = mu + d.rho();
    for (const auto& alpha : d.positive_roots())
        dim *= inner_product(d, alpha, shifted) / inner_product(d, alpha, d.rho());
    if (!dim.is_integer()) throw std::logic_error("non-integral Weyl dimension");
    return dim.num();
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& w) {
    const int rank = d.rank();
    std::set<Weight> seen{w};
    std::queue<Weight> work;
    work.push(w);
    while (!work.empty()) {
        Weight cur = work.front();
        work.pop();
        for (int i = 0; i < rank; ++i) {
            std::int64_t li = cur.labels[i];
            if (li == 0) continue;
            Weight next = cur;
            for (int l = 0; l < rank; ++l) next.labels[l] -= li * d.cartan()[l][i];
            if (seen.insert(next).second) work.push(next);
        }
    }
    return {seen.begin(), seen.end()};
}

VirtualCharacter tensor_decompose(const RootDatum& d, const Weight& mu, const Weight& nu,
                                  const Caps& caps) {
    if (!mu.is_dominant() || !nu.is_dominant())
        throw std::invalid_argument("tensor_decompose: weights must be dominant");

    auto mults = weight_multiplicities(d, nu, caps);

    VirtualCharacter out;
    std::int64_t expanded = 0;
    for (const auto& [delta, m] : mults) {
        for (const auto& xi : weyl_orbit(d, delta)) {
            if (++expanded > caps.max_tensor_weights)
                throw CapExceeded("tensor_decompose: weight-expansion cap exceeded");
            DominantReduction red = dominant_reduce(d, mu + xi + d.rho());
            if (red.singular) continue;
            out.add(red.weight - d.rho(), red.sign * m);
        }
    }
    return out;
}

} // namespace verlinde
