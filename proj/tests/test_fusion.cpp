#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "verlinde/fusion.hpp"

#include <cmath>
#include <complex>

using namespace verlinde;

namespace {
Weight W1(std::int64_t a) { return Weight({a}); }
Weight W2(std::int64_t a, std::int64_t b) { return Weight({a, b}); }
const double eps = 1e-9;

FusionElement tau(const FusionContext& ctx, const Weight& mu) {
    FusionElement e;
    e.level = ctx.level();
    e.add(mu, 1);
    return e;
}
} // namespace

TEST_CASE("context tables") {
    FusionContext ctx(build_root_datum("A1"), 1);
    CHECK(ctx.size() == 2);
    CHECK(ctx.torus_order() == 6);
    CHECK(ctx.weights() == std::vector<Weight>{W1(0), W1(1)});
    CHECK(ctx.index_of(W1(1)) == 1);
    CHECK_THROWS_AS(ctx.index_of(W1(2)), std::invalid_argument);

    // chi values against the closed form
    for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t l = 0; l < 2; ++l)
            CHECK(std::abs(ctx.chi(m, l) -
                           oracles::sl2_character(static_cast<std::int64_t>(m),
                                                  static_cast<std::int64_t>(l), 1)) < eps);
}

TEST_CASE("warm-up is thread-count independent") {
    FusionContext one(build_root_datum("A2"), 3, 1);
    FusionContext four(build_root_datum("A2"), 3, 4);
    for (std::size_t m = 0; m < one.size(); ++m)
        for (std::size_t l = 0; l < one.size(); ++l)
            CHECK(one.chi(m, l) == four.chi(m, l)); // bitwise identical
}

TEST_CASE("projection onto the fusion ring") {
    RootDatum a1 = build_root_datum("A1");

    SUBCASE("basis weights are fixed") {
        for (std::int64_t k = 0; k <= 5; ++k)
            for (const auto& mu : level_k_weights(a1, k)) {
                VirtualCharacter x;
                x.add(mu, 1);
                FusionElement p = project_to_fusion(a1, x, k);
                CHECK(p.terms == std::map<Weight, std::int64_t>{{mu, 1}});
            }
    }
    SUBCASE("first ideal generator dies") {
        VirtualCharacter x;
        x.add(W1(2), 1);
        CHECK(project_to_fusion(a1, x, 1).terms.empty());
    }
    SUBCASE("linearity") {
        VirtualCharacter x;
        x.add(W1(0), 1);
        x.add(W1(2), 1);
        FusionElement p = project_to_fusion(a1, x, 1);
        CHECK(p.terms == std::map<Weight, std::int64_t>{{W1(0), 1}});
    }
    SUBCASE("reflected weight carries a sign") {
        VirtualCharacter x;
        x.add(W1(3), 1); // reduces to -tau_1 at level 1
        FusionElement p = project_to_fusion(a1, x, 1);
        CHECK(p.terms == std::map<Weight, std::int64_t>{{W1(1), -1}});
    }
}

TEST_CASE("evaluation of fusion elements") {
    FusionContext ctx(build_root_datum("A1"), 1);

    CHECK(std::abs(evaluate(ctx, tau(ctx, W1(0)), W1(0)) - 1.0) < eps);
    CHECK(std::abs(evaluate(ctx, tau(ctx, W1(0)), W1(1)) - 1.0) < eps);

    // frozen from the sine quotient: tau_1(t_0) = 1
    CHECK(std::abs(evaluate(ctx, tau(ctx, W1(1)), W1(0)) - 1.0) < eps);

    FusionElement zero;
    zero.level = 1;
    CHECK(std::abs(evaluate(ctx, zero, W1(0))) == 0.0);
}

TEST_CASE("star involution") {
    FusionContext a1(build_root_datum("A1"), 3);
    for (const auto& mu : a1.weights()) CHECK(a1.star(mu) == mu);

    FusionContext a2(build_root_datum("A2"), 2);
    CHECK(a2.star(W2(0, 0)) == W2(0, 0));
    CHECK(a2.star(W2(2, 0)) == W2(0, 2));
    CHECK(a2.star(W2(1, 0)) == W2(0, 1));

    for (const auto& mu : a2.weights()) {
        CHECK(a2.star(a2.star(mu)) == mu);
        // values conjugate under the involution
        std::size_t mi = a2.index_of(mu), si = a2.index_of(a2.star(mu));
        for (std::size_t l = 0; l < a2.size(); ++l)
            CHECK(std::abs(a2.chi(si, l) - std::conj(a2.chi(mi, l))) < eps);
    }

    FusionElement x = tau(a2, W2(2, 0));
    x.add(W2(1, 1), 3);
    FusionElement xs = star(a2, x);
    CHECK(xs.terms == std::map<Weight, std::int64_t>{{W2(0, 2), 1}, {W2(1, 1), 3}});
}

TEST_CASE("multiplicity extraction and orthogonality") {
    FusionContext ctx(build_root_datum("A1"), 1);

    SUBCASE("basis vectors") {
        for (const auto& mu : ctx.weights()) {
            std::vector<std::complex<double>> values(ctx.size());
            for (std::size_t l = 0; l < ctx.size(); ++l)
                values[l] = ctx.chi(ctx.index_of(mu), l);
            for (const auto& nu : ctx.weights())
                CHECK(multiplicity(ctx, values, nu) == (mu == nu ? 1 : 0));
        }
    }
    SUBCASE("zero vector") {
        std::vector<std::complex<double>> zero(ctx.size(), 0.0);
        for (const auto& nu : ctx.weights()) CHECK(multiplicity(ctx, zero, nu) == 0);
    }
    SUBCASE("product vector tau_1 tau_1") {
        std::vector<std::complex<double>> values(ctx.size());
        for (std::size_t l = 0; l < ctx.size(); ++l) values[l] = ctx.chi(1, l) * ctx.chi(1, l);
        CHECK(multiplicity(ctx, values, W1(0)) == 1);
        CHECK(multiplicity(ctx, values, W1(1)) == 0);
    }
    SUBCASE("vectors outside the ring are rejected") {
        std::vector<std::complex<double>> bad(ctx.size(), 0.0);
        bad[0] = 0.37;
        CHECK_THROWS_AS(multiplicity(ctx, bad, W1(0)), ConsistencyError);
    }
}

TEST_CASE("orthogonality residuals across groups and levels") {
    CHECK(verify_orthogonality(FusionContext(build_root_datum("A1"), 0)) < 1e-9);
    for (std::int64_t k = 0; k <= 12; ++k)
        CHECK(verify_orthogonality(FusionContext(build_root_datum("A1"), k)) < 1e-6);
    for (std::int64_t k = 0; k <= 6; ++k)
        CHECK(verify_orthogonality(FusionContext(build_root_datum("A2"), k)) < 1e-6);
    for (std::int64_t k = 0; k <= 4; ++k)
        CHECK(verify_orthogonality(FusionContext(build_root_datum("C2"), k)) < 1e-6);
    for (std::int64_t k = 0; k <= 3; ++k)
        CHECK(verify_orthogonality(FusionContext(build_root_datum("G2"), k)) < 1e-6);
}

TEST_CASE("fusion products on SU(2)") {
    SUBCASE("unit law") {
        FusionContext ctx(build_root_datum("A1"), 3);
        for (const auto& nu : ctx.weights()) {
            auto n = fusion_coefficients(ctx, W1(0), nu);
            for (const auto& lambda : ctx.weights())
                CHECK(n.at(lambda) == (lambda == ctx.star(nu) ? 1 : 0));
        }
    }
    SUBCASE("frozen small cases") {
        FusionContext k1(build_root_datum("A1"), 1);
        auto n11 = fusion_coefficients(k1, W1(1), W1(1));
        CHECK(n11.at(W1(0)) == 1);
        CHECK(n11.at(W1(1)) == 0);

        FusionContext k2(build_root_datum("A1"), 2);
        FusionElement p = fusion_product(k2, W1(1), W1(1));
        CHECK(p.terms == std::map<Weight, std::int64_t>{{W1(0), 1}, {W1(2), 1}});
    }
    SUBCASE("closed-form rule up to level 8") {
        for (std::int64_t k = 0; k <= 8; ++k) {
            FusionContext ctx(build_root_datum("A1"), k);
            for (std::int64_t a = 0; a <= k; ++a)
                for (std::int64_t b = 0; b <= k; ++b) {
                    auto n = fusion_coefficients(ctx, W1(a), W1(b));
                    for (std::int64_t c = 0; c <= k; ++c) {
                        CAPTURE(k, a, b, c);
                        CHECK(n.at(W1(c)) == oracles::su2_fusion(a, b, c, k));
                    }
                }
        }
    }
}

TEST_CASE("Z3 structure of SU(3) level 1") {
    FusionContext ctx(build_root_datum("A2"), 1);
    auto n = fusion_coefficients(ctx, W2(1, 0), W2(1, 0));
    CHECK(n.at(W2(1, 0)) == 1); // (tau_10)^2 = tau_01 = tau_{(1,0)*}
    CHECK(n.at(W2(0, 0)) == 0);
    CHECK(n.at(W2(0, 1)) == 0);
    FusionElement p = fusion_product(ctx, W2(1, 0), W2(1, 0));
    CHECK(p.terms == std::map<Weight, std::int64_t>{{W2(0, 1), 1}});
}

TEST_CASE("both fusion routes agree pairwise") {
    struct Case {
        const char* label;
        std::int64_t kmax;
    };
    for (const auto& c : {Case{"A1", 6}, Case{"A2", 4}, Case{"C2", 3}}) {
        for (std::int64_t k = 0; k <= c.kmax; ++k) {
            FusionContext ctx(build_root_datum(c.label), k);
            for (const auto& mu : ctx.weights())
                for (const auto& nu : ctx.weights()) {
                    auto a = fusion_coefficients(ctx, mu, nu);
                    auto b = fusion_coefficients_kac_walton(ctx, mu, nu);
                    CAPTURE(c.label, k, mu.labels, nu.labels);
                    CHECK(a == b);
                }
        }
    }
}

TEST_CASE("table symmetry and unit law") {
    for (const char* label : {"A1", "A2"}) {
        FusionContext ctx(build_root_datum(label), 2);
        FusionTable table = fusion_table(ctx);
        const Weight zero(std::vector<std::int64_t>(ctx.datum().rank(), 0));
        for (const auto& [key, n] : table.coefficients) {
            const auto& [a, b, c] = key;
            CHECK(n >= 0);
            CHECK(table.coefficients.at({a, c, b}) == n);
            CHECK(table.coefficients.at({b, a, c}) == n);
            CHECK(table.coefficients.at({c, a, b}) == n);
            if (a == zero) CHECK(n == (b == ctx.star(c) ? 1 : 0));
        }
    }
}

TEST_CASE("evaluation is a ring map on products") {
    FusionContext ctx(build_root_datum("A2"), 2);
    for (const auto& mu : ctx.weights())
        for (const auto& nu : ctx.weights()) {
            FusionElement prod = fusion_product(ctx, mu, nu);
            for (std::size_t l = 0; l < ctx.size(); ++l) {
                std::complex<double> lhs = evaluate(ctx, prod, ctx.weights()[l]);
                std::complex<double> rhs =
                    ctx.chi(ctx.index_of(mu), l) * ctx.chi(ctx.index_of(nu), l);
                CHECK(std::abs(lhs - rhs) < eps);
            }
        }
}

TEST_CASE("type-A ideal generators vanish at every evaluation point") {
    CHECK(fusion_ideal_check_A(FusionContext(build_root_datum("A1"), 1)) < 1e-9);
    CHECK(fusion_ideal_check_A(FusionContext(build_root_datum("A2"), 2)) < 1e-8);

    // control: one step past the generator family the character revives
    FusionContext ctx(build_root_datum("A1"), 1);
    Weight beyond = W1(1 + 2); // (k + n) varpi_1
    double val = std::abs(character_value(ctx.datum(), ctx.weyl(), beyond, ctx.point(0)));
    CHECK(val > 0.1);

    CHECK_THROWS_AS(fusion_ideal_check_A(FusionContext(build_root_datum("B2"), 2)),
                    std::invalid_argument);
}

TEST_CASE("corrupted cache is caught by the residual check") {
    FusionContext ctx(build_root_datum("A1"), 2);
    ctx.corrupt_cache_for_testing();
    bool caught = false;
    try {
        fusion_table(ctx);
    } catch (const ConsistencyError&) {
        caught = true;
    }
    if (!caught) CHECK(verify_orthogonality(ctx) > 1e-6);
}
