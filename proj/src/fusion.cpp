#include "verlinde/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace verlinde {

FusionContext::FusionContext(RootDatum datum, std::int64_t level, int threads)
    : datum_(std::move(datum)), level_(level) {
    if (level < 0) throw std::invalid_argument("level must be non-negative");
    weyl_ = enumerate_weyl(datum_);
    weights_ = level_k_weights(datum_, level);
    for (std::size_t i = 0; i < weights_.size(); ++i) index_[weights_[i]] = i;
    torus_order_ = torus_order(datum_, level + datum_.dual_coxeter());

    const std::size_t n = weights_.size();
    points_.resize(n);
    jvals_.resize(n);
    jnorm2_.resize(n);
    chi_.assign(n, std::vector<std::complex<double>>(n));

    for (std::size_t l = 0; l < n; ++l) {
        points_[l] = t_lambda(datum_, weights_[l], level);
        jvals_[l] = weyl_denominator(datum_, weyl_, points_[l]);
        jnorm2_[l] = std::norm(jvals_[l]);
    }

    auto fill_columns = [&](std::size_t begin, std::size_t end) {
        for (std::size_t l = begin; l < end; ++l)
            for (std::size_t m = 0; m < n; ++m)
                chi_[m][l] = character_value(datum_, weyl_, weights_[m], points_[l]);
    };

    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(n)));
    if (nthreads == 1 || n == 0) {
        fill_columns(0, n);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(fill_columns, begin, end);
        }
        for (auto& th : pool) th.join();
    }
}

std::size_t FusionContext::index_of(const Weight& mu) const {
    auto it = index_.find(mu);
    if (it == index_.end())
        throw std::invalid_argument("weight is not a level-" + std::to_string(level_) +
                                    " weight of " + datum_.type_label());
    return it->second;
}

Weight FusionContext::star(const Weight& mu) const {
    index_of(mu);
    return dominant_reduce(datum_, -mu).weight;
}

void FusionContext::corrupt_cache_for_testing() {
    if (chi_.empty()) return;
    chi_[chi_.size() - 1][0] += 0.5;
}

FusionElement project_to_fusion(const RootDatum& d, const VirtualCharacter& x, std::int64_t k) {
    FusionElement out;
    out.level = k;
    for (const auto& [mu, coeff] : x.terms) {
        AffineReduction red = affine_reduce(d, mu, k);
        if (red.on_wall()) continue;
        out.add(*red.weight, red.sign * coeff);
    }
    return out;
}

std::complex<double> evaluate(const FusionContext& ctx, const FusionElement& x,
                              const Weight& lambda) {
    const std::size_t l = ctx.index_of(lambda);
    std::complex<double> sum = 0.0;
    for (const auto& [mu, coeff] : x.terms)
        sum += static_cast<double>(coeff) * ctx.chi(ctx.index_of(mu), l);
    return sum;
}

FusionElement star(const FusionContext& ctx, const FusionElement& x) {
    FusionElement out;
    out.level = x.level;
    for (const auto& [mu, coeff] : x.terms) out.add(ctx.star(mu), coeff);
    return out;
}

std::int64_t multiplicity(const FusionContext& ctx, const std::vector<std::complex<double>>& values,
                          const Weight& mu, double tol) {
    if (values.size() != ctx.size())
        throw std::invalid_argument("value vector has wrong length");
    const std::size_t m = ctx.index_of(mu);
    std::complex<double> sum = 0.0;
    for (std::size_t l = 0; l < ctx.size(); ++l)
        sum += ctx.jnorm2(l) * values[l] * std::conj(ctx.chi(m, l));
    sum /= static_cast<double>(ctx.torus_order());

    const double rounded = std::round(sum.real());
    const double residual = std::max(std::abs(sum.real() - rounded), std::abs(sum.imag()));
    if (residual >= tol)
        throw ConsistencyError("value vector is not integral over the fusion basis (residual " +
                               std::to_string(residual) + ")");
    return static_cast<std::int64_t>(rounded);
}

FusionElement element_from_values(const FusionContext& ctx,
                                  const std::vector<std::complex<double>>& values, double tol) {
    FusionElement out;
    out.level = ctx.level();
    for (const auto& mu : ctx.weights()) out.add(mu, multiplicity(ctx, values, mu, tol));
    return out;
}

FusionElement fusion_product(const FusionContext& ctx, const Weight& mu, const Weight& nu,
                             double tol) {
    const std::size_t mi = ctx.index_of(mu);
    const std::size_t ni = ctx.index_of(nu);
    std::vector<std::complex<double>> values(ctx.size());
    for (std::size_t l = 0; l < ctx.size(); ++l) values[l] = ctx.chi(mi, l) * ctx.chi(ni, l);
    return element_from_values(ctx, values, tol);
}

std::map<Weight, std::int64_t> fusion_coefficients(const FusionContext& ctx, const Weight& mu,
                                                   const Weight& nu, double tol) {
    FusionElement prod = fusion_product(ctx, mu, nu, tol);
    std::map<Weight, std::int64_t> out;
    for (const auto& lambda : ctx.weights()) {
        auto it = prod.terms.find(ctx.star(lambda));
        out[lambda] = it == prod.terms.end() ? 0 : it->second;
    }
    return out;
}

std::map<Weight, std::int64_t> fusion_coefficients_kac_walton(const FusionContext& ctx,
                                                              const Weight& mu, const Weight& nu,
                                                              const Caps& caps) {
    ctx.index_of(mu);
    ctx.index_of(nu);
    VirtualCharacter product = tensor_decompose(ctx.datum(), mu, nu, caps);
    FusionElement projected = project_to_fusion(ctx.datum(), product, ctx.level());
    std::map<Weight, std::int64_t> out;
    for (const auto& lambda : ctx.weights()) {
        auto it = projected.terms.find(ctx.star(lambda));
        out[lambda] = it == projected.terms.end() ? 0 : it->second;
    }
    return out;
}

FusionTable fusion_table(const FusionContext& ctx, double tol) {
    FusionTable table;
    table.level = ctx.level();
    for (const auto& mu : ctx.weights())
        for (const auto& nu : ctx.weights()) {
            auto coeffs = fusion_coefficients(ctx, mu, nu, tol);
            for (const auto& [lambda, n] : coeffs)
                table.coefficients[{mu, nu, lambda}] = n;
        }
    return table;
}

double verify_orthogonality(const FusionContext& ctx) {
    const std::size_t n = ctx.size();
    const double torder = static_cast<double>(ctx.torus_order());
    double worst = 0.0;

    // basis family: sum over lambda of |J|^2 tau_mu tau_mu'* = |T| delta
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::complex<double> sum = 0.0;
            for (std::size_t l = 0; l < n; ++l)
                sum += ctx.jnorm2(l) * ctx.chi(a, l) * std::conj(ctx.chi(b, l));
            if (a == b) sum -= torder;
            worst = std::max(worst, std::abs(sum));
        }

    // point family: sum over mu of |J(t_lambda)|^2 tau_mu(t_lambda) conj(tau_mu(t_lambda')) = |T| delta
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::complex<double> sum = 0.0;
            for (std::size_t m = 0; m < n; ++m)
                sum += ctx.jnorm2(a) * ctx.chi(m, a) * std::conj(ctx.chi(m, b));
            if (a == b) sum -= torder;
            worst = std::max(worst, std::abs(sum));
        }

    return worst;
}

double fusion_ideal_check_A(const FusionContext& ctx) {
    if (ctx.datum().series() != 'A')
        throw std::invalid_argument("fusion ideal generators are implemented for type A only");
    const int n = ctx.datum().rank() + 1;
    double worst = 0.0;
    for (int j = 1; j <= n - 1; ++j) {
        Weight gen(std::vector<std::int64_t>(ctx.datum().rank(), 0));
        gen.labels[0] = ctx.level() + j;
        for (std::size_t l = 0; l < ctx.size(); ++l)
            worst = std::max(
                worst, std::abs(character_value(ctx.datum(), ctx.weyl(), gen, ctx.point(l))));
    }
    return worst;
}

} // namespace verlinde
