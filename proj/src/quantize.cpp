#include "verlinde/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace verlinde {

namespace {

std::string labels_str(const Weight& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.labels.size(); ++i) {
        if (i) os << ",";
        os << w.labels[i];
    }
    return os.str();
}

FusionElement multiply(const FusionContext& ctx, const FusionElement& a, const FusionElement& b,
                       std::map<std::pair<Weight, Weight>, FusionElement>& memo, double tol) {
    FusionElement out;
    out.level = ctx.level();
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            std::pair<Weight, Weight> key = ka < kb ? std::make_pair(ka, kb)
                                                    : std::make_pair(kb, ka);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, fusion_product(ctx, key.first, key.second, tol)).first;
            for (const auto& [kp, cp] : it->second.terms) out.add(kp, ca * cb * cp);
        }
    return out;
}

FusionElement fused_double_element(const FusionContext& ctx, double tol) {
    FusionElement fused;
    fused.level = ctx.level();
    for (const auto& mu : ctx.weights()) {
        FusionElement prod = fusion_product(ctx, mu, ctx.star(mu), tol);
        for (const auto& [w, c] : prod.terms) fused.add(w, c);
    }
    return fused;
}

} // namespace

std::complex<double> fixed_point_contribution(const IsolatedFixedPoint& fp, const TorusPoint& t) {
    std::complex<double> denom = 1.0;
    for (const auto& beta : fp.normal_weights) {
        Rational phase = t.phase(beta);
        if (phase.is_integer())
            throw ConsistencyError("degenerate fixed-point weight (" + labels_str(beta) +
                                   ") acts trivially at this point");
        denom *= 1.0 - unit_phase(-phase);
    }
    return static_cast<double>(fp.sign) * unit_phase(t.phase(fp.shift)) / denom;
}

FusionElement quantize_conjugacy_class(const FusionContext& ctx, const Weight& mu, double tol) {
    ctx.index_of(mu);
    const RootDatum& d = ctx.datum();
    FaceData face = face_data(d, mu, ctx.level(), ctx.weyl());

    const RationalWeight shift =
        RationalWeight(mu + d.rho()) - face.rho_sigma; // mu + rho - rho_sigma
    const double stab_order = static_cast<double>(face.stabilizer.size());

    std::vector<std::complex<double>> values(ctx.size());
    for (std::size_t l = 0; l < ctx.size(); ++l) {
        std::complex<double> total = 0.0;
        for (const auto& w : ctx.weyl()) {
            TorusPoint tw = weyl_pullback(w, ctx.point(l));
            std::complex<double> jsigma = 0.0;
            for (const auto& v : face.stabilizer)
                jsigma += static_cast<double>(v.sign()) *
                          unit_phase(tw.phase(apply(v, face.rho_sigma)));
            std::complex<double> j = weyl_denominator(d, ctx.weyl(), tw);
            total += unit_phase(tw.phase(shift)) * jsigma / j;
        }
        values[l] = total / stab_order;
    }

    FusionElement result;
    try {
        result = element_from_values(ctx, values, tol);
    } catch (const ConsistencyError& e) {
        throw ConsistencyError(std::string("conjugacy-class quantization of (") +
                               labels_str(mu) + "): " + e.what());
    }

    FusionElement expected;
    expected.level = ctx.level();
    expected.add(mu, 1);
    if (result != expected) {
        for (std::size_t l = 0; l < ctx.size(); ++l) {
            std::complex<double> diff = values[l] - ctx.chi(ctx.index_of(mu), l);
            if (std::abs(diff) > tol)
                throw ConsistencyError("conjugacy-class quantization of (" + labels_str(mu) +
                                       ") deviates at lambda = (" +
                                       labels_str(ctx.weights()[l]) + ")");
        }
        throw ConsistencyError("conjugacy-class quantization of (" + labels_str(mu) +
                               ") is not the expected basis element");
    }
    return result;
}

DoubleQuantization quantize_double(const FusionContext& ctx, double tol) {
    DoubleQuantization out;
    const double torder = static_cast<double>(ctx.torus_order());
    out.diagonal.resize(ctx.size());
    for (std::size_t l = 0; l < ctx.size(); ++l) {
        out.diagonal[l] = torder / ctx.jnorm2(l);
        double basis_sum = 0.0;
        for (std::size_t m = 0; m < ctx.size(); ++m) basis_sum += std::norm(ctx.chi(m, l));
        out.max_discrepancy = std::max(out.max_discrepancy,
                                       std::abs(basis_sum - out.diagonal[l]));
    }
    if (out.max_discrepancy > tol)
        throw ConsistencyError("double quantization: diagonal routes disagree by " +
                               std::to_string(out.max_discrepancy));
    out.fused = fused_double_element(ctx, tol);
    return out;
}

std::int64_t verlinde_dimension(const FusionContext& ctx, const VerlindeProblem& problem,
                                double tol) {
    if (problem.genus < 0) throw std::invalid_argument("genus must be non-negative");
    for (const auto& mu : problem.boundary) ctx.index_of(mu);

    // fusion-algebra route: coefficient of tau_0 in D^h * prod tau_{mu_j}
    std::map<std::pair<Weight, Weight>, FusionElement> memo;
    const Weight zero(std::vector<std::int64_t>(ctx.datum().rank(), 0));
    FusionElement acc;
    acc.level = ctx.level();
    acc.add(zero, 1);
    if (problem.genus > 0) {
        FusionElement fused = fused_double_element(ctx, tol);
        for (std::int64_t h = 0; h < problem.genus; ++h)
            acc = multiply(ctx, acc, fused, memo, tol);
    }
    for (const auto& mu : problem.boundary) {
        FusionElement factor;
        factor.level = ctx.level();
        factor.add(mu, 1);
        acc = multiply(ctx, acc, factor, memo, tol);
    }
    auto it = acc.terms.find(zero);
    const std::int64_t route_a = it == acc.terms.end() ? 0 : it->second;

    // closed-form route: sum over lambda of (|T|/|J|^2)^{h-1} prod tau_{mu_j}(t_lambda)
    const double torder = static_cast<double>(ctx.torus_order());
    std::complex<double> sum = 0.0;
    for (std::size_t l = 0; l < ctx.size(); ++l) {
        double weight = std::pow(torder / ctx.jnorm2(l),
                                 static_cast<double>(problem.genus - 1));
        std::complex<double> term = weight;
        for (const auto& mu : problem.boundary) term *= ctx.chi(ctx.index_of(mu), l);
        sum += term;
    }
    const double rounded = std::round(sum.real());
    const double residual = std::max(std::abs(sum.real() - rounded), std::abs(sum.imag()));
    if (residual >= tol)
        throw ConsistencyError("moduli-space dimension sum is not integral (residual " +
                               std::to_string(residual) + ")");
    const std::int64_t route_b = static_cast<std::int64_t>(rounded);

    if (route_a != route_b)
        throw ConsistencyError("moduli-space dimension routes disagree: fusion algebra " +
                               std::to_string(route_a) + " vs point sum " +
                               std::to_string(route_b));
    return route_a;
}

SphereQuantization quantize_sphere(const FusionContext& ctx, double tol) {
    const RootDatum& d = ctx.datum();
    if (d.series() != 'A')
        throw std::invalid_argument("the sphere example requires a type-A context");
    const int n = d.rank() + 1;
    const std::int64_t k = ctx.level();

    auto varpi1_multiple = [&](std::int64_t m) {
        Weight w(std::vector<std::int64_t>(d.rank(), 0));
        w.labels[0] = m;
        return w;
    };

    // cancelled polynomial: sum_{m=0}^{k+n-1} chi_{m varpi_1}(t_lambda)
    std::vector<std::complex<double>> values(ctx.size());
    for (std::size_t l = 0; l < ctx.size(); ++l) {
        std::complex<double> sum = 0.0;
        for (std::int64_t m = 0; m <= k + n - 1; ++m)
            sum += character_value(d, ctx.weyl(), varpi1_multiple(m), ctx.point(l));
        values[l] = sum;
    }

    SphereQuantization out;
    out.element = element_from_values(ctx, values, tol);

    FusionElement expected;
    expected.level = k;
    for (std::int64_t i = 0; i <= k; ++i) expected.add(varpi1_multiple(i), 1);
    if (out.element != expected)
        throw ConsistencyError("sphere quantization differs from the expected basis sum");

    for (std::size_t l = 0; l < ctx.size(); ++l)
        out.residual = std::max(out.residual,
                                std::abs(evaluate(ctx, out.element, ctx.weights()[l]) - values[l]));

    // weights of the defining representation: eps_1, ..., eps_n
    std::vector<Weight> eps;
    for (int j = 1; j <= n; ++j) {
        Weight w(std::vector<std::int64_t>(d.rank(), 0));
        if (j <= n - 1) w.labels[j - 1] = 1;
        if (j >= 2) w.labels[j - 2] -= 1;
        eps.push_back(std::move(w));
    }

    IsolatedFixedPoint at_identity{eps, RationalWeight(varpi1_multiple(0)), 1,
                                   "orientation of the ambient sphere"};
    IsolatedFixedPoint at_central{eps, RationalWeight(varpi1_multiple(k + n)), -1,
                                  "orientation reversed on the opposite chart"};

    for (std::size_t l = 0; l < ctx.size(); ++l) {
        bool degenerate = false;
        for (const auto& w : eps)
            degenerate = degenerate || ctx.point(l).phase(w).is_integer();
        if (degenerate) continue; // disables only the cross-check at this point
        std::complex<double> raw = fixed_point_contribution(at_identity, ctx.point(l)) +
                                   fixed_point_contribution(at_central, ctx.point(l));
        out.cross_check_max_error = std::max(out.cross_check_max_error,
                                             std::abs(raw - values[l]));
        ++out.cross_checked_points;
    }
    if (out.cross_check_max_error > tol)
        throw ConsistencyError("sphere fixed-point cross-check failed (error " +
                               std::to_string(out.cross_check_max_error) + ")");
    return out;
}

} // namespace verlinde
