#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "verlinde/characters.hpp"

#include <cmath>
#include <complex>

using namespace verlinde;

namespace {
Weight W1(std::int64_t a) { return Weight({a}); }
Weight W2(std::int64_t a, std::int64_t b) { return Weight({a, b}); }
const double eps = 1e-9;
} // namespace

TEST_CASE("unit phases are exact roots of unity") {
    CHECK(std::abs(unit_phase(Rational(0)) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(unit_phase(Rational(1, 4)) - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(unit_phase(Rational(7, 2)) - std::complex<double>(-1, 0)) < 1e-15);
    CHECK(std::abs(std::abs(unit_phase(Rational(5, 7))) - 1.0) < 1e-12);
}

TEST_CASE("Weyl denominator on SU(2)") {
    RootDatum a1 = build_root_datum("A1");
    auto weyl = enumerate_weyl(a1);

    // J(t_lambda) = 2i sin(pi (lambda+1)/(k+2))
    for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t lambda = 0; lambda <= k; ++lambda) {
            std::complex<double> j = weyl_denominator(a1, weyl, t_lambda(a1, W1(lambda), k));
            double expect = 2.0 * std::sin(std::numbers::pi * (lambda + 1.0) / (k + 2.0));
            CHECK(std::abs(j - std::complex<double>(0, expect)) < eps);
        }

    CHECK(std::abs(weyl_denominator(a1, weyl, t_lambda(a1, W1(0), 0)) -
                   std::complex<double>(0, 2)) < eps);

    // the identity point is non-regular: the alternating sum collapses
    TorusPoint origin(std::vector<Rational>{Rational(0)});
    CHECK(std::abs(weyl_denominator(a1, weyl, origin)) < eps);
}

TEST_CASE("character values on SU(2) match the sine quotient") {
    RootDatum a1 = build_root_datum("A1");
    auto weyl = enumerate_weyl(a1);
    for (std::int64_t k = 0; k <= 6; ++k)
        for (std::int64_t lambda = 0; lambda <= k; ++lambda) {
            TorusPoint t = t_lambda(a1, W1(lambda), k);
            for (std::int64_t m = 0; m <= 6; ++m) {
                CAPTURE(k, lambda, m);
                std::complex<double> chi = character_value(a1, weyl, W1(m), t);
                CHECK(std::abs(chi - oracles::sl2_character(m, lambda, k)) < eps);
            }
        }

    // chi_1(t_lambda) = 2 cos(pi (lambda+1)/(k+2))
    TorusPoint t = t_lambda(a1, W1(1), 3);
    CHECK(std::abs(character_value(a1, weyl, W1(1), t) -
                   2.0 * std::cos(std::numbers::pi * 2.0 / 5.0)) < eps);
}

TEST_CASE("trivial character is one; non-regular points are rejected") {
    for (const char* label : {"A2", "B2", "G2"}) {
        RootDatum d = build_root_datum(label);
        auto weyl = enumerate_weyl(d);
        Weight zero(std::vector<std::int64_t>(d.rank(), 0));
        for (const auto& lambda : level_k_weights(d, 2)) {
            std::complex<double> chi =
                character_value(d, weyl, zero, t_lambda(d, lambda, 2));
            CHECK(std::abs(chi - 1.0) < eps);
        }
        TorusPoint origin(std::vector<Rational>(d.rank(), Rational(0)));
        CHECK_THROWS_AS(character_value(d, weyl, zero, origin), ConsistencyError);
    }
}

TEST_CASE("denominator anti-invariance under pullback") {
    for (const char* label : {"A2", "C2"}) {
        RootDatum d = build_root_datum(label);
        auto weyl = enumerate_weyl(d);
        for (const auto& lambda : level_k_weights(d, 2)) {
            TorusPoint t = t_lambda(d, lambda, 2);
            std::complex<double> j = weyl_denominator(d, weyl, t);
            for (const auto& w : weyl) {
                std::complex<double> jw = weyl_denominator(d, weyl, weyl_pullback(w, t));
                CHECK(std::abs(jw - static_cast<double>(w.sign()) * j) < eps);
            }
        }
    }
}

TEST_CASE("weight multiplicities by the recursion") {
    RootDatum a1 = build_root_datum("A1");
    for (std::int64_t m = 0; m <= 6; ++m) {
        auto mult = weight_multiplicities(a1, W1(m));
        // dominant weights m, m-2, ..., each multiplicity one
        CHECK(mult.size() == static_cast<std::size_t>(m / 2 + 1));
        for (std::int64_t v = m; v >= 0; v -= 2) CHECK(mult.at(W1(v)) == 1);
    }

    RootDatum a2 = build_root_datum("A2");
    auto adjoint = weight_multiplicities(a2, W2(1, 1));
    CHECK(adjoint.at(W2(1, 1)) == 1);
    CHECK(adjoint.at(W2(0, 0)) == 2);
    CHECK(adjoint.size() == 2);

    auto fundamental = weight_multiplicities(a2, W2(1, 0));
    CHECK(fundamental.size() == 1);
    CHECK(fundamental.at(W2(1, 0)) == 1);

    // total count with orbits recovers the dimension
    for (const char* label : {"A2", "B2", "G2"}) {
        RootDatum d = build_root_datum(label);
        for (const auto& mu : level_k_weights(d, 2)) {
            std::int64_t total = 0;
            for (const auto& [w, m] : weight_multiplicities(d, mu))
                total += m * static_cast<std::int64_t>(weyl_orbit(d, w).size());
            CAPTURE(label, mu.labels);
            CHECK(total == weyl_dimension(d, mu));
        }
    }
}

TEST_CASE("Weyl dimension formula") {
    RootDatum a1 = build_root_datum("A1");
    for (std::int64_t m = 0; m <= 9; ++m) CHECK(weyl_dimension(a1, W1(m)) == m + 1);

    RootDatum a2 = build_root_datum("A2");
    CHECK(weyl_dimension(a2, W2(1, 0)) == 3);
    CHECK(weyl_dimension(a2, W2(0, 1)) == 3);
    CHECK(weyl_dimension(a2, W2(1, 1)) == 8);
    CHECK(weyl_dimension(a2, W2(2, 0)) == 6);

    RootDatum g2 = build_root_datum("G2");
    CHECK(weyl_dimension(g2, W2(0, 1)) == 7);
    CHECK(weyl_dimension(g2, W2(1, 0)) == 14);

    RootDatum b2 = build_root_datum("B2");
    CHECK(weyl_dimension(b2, W2(1, 0)) == 5);
    CHECK(weyl_dimension(b2, W2(0, 1)) == 4);
}

TEST_CASE("character values agree with the weight-expansion route") {
    for (const char* label : {"A1", "A2"}) {
        RootDatum d = build_root_datum(label);
        auto weyl = enumerate_weyl(d);
        for (const auto& mu : level_k_weights(d, 2))
            for (const auto& lambda : level_k_weights(d, 3)) {
                TorusPoint t = t_lambda(d, lambda, 3);
                std::complex<double> direct = character_value(d, weyl, mu, t);
                std::complex<double> summed = 0.0;
                for (const auto& [w, m] : weight_multiplicities(d, mu))
                    for (const auto& xi : weyl_orbit(d, w))
                        summed += static_cast<double>(m) * unit_phase(t.phase(xi));
                CAPTURE(label, mu.labels, lambda.labels);
                CHECK(std::abs(direct - summed) < eps);
            }
    }
}

TEST_CASE("character bound by the dimension at regular points") {
    RootDatum g2 = build_root_datum("G2");
    auto weyl = enumerate_weyl(g2);
    for (const auto& mu : level_k_weights(g2, 2))
        for (const auto& lambda : level_k_weights(g2, 3)) {
            std::complex<double> chi =
                character_value(g2, weyl, mu, t_lambda(g2, lambda, 3));
            CHECK(std::abs(chi) <= weyl_dimension(g2, mu) + eps);
        }
}

TEST_CASE("tensor product decomposition") {
    RootDatum a1 = build_root_datum("A1");
    SUBCASE("unit and the sl2 ladder") {
        VirtualCharacter prod = tensor_decompose(a1, W1(0), W1(4));
        CHECK(prod.terms == std::map<Weight, std::int64_t>{{W1(4), 1}});

        VirtualCharacter cg = tensor_decompose(a1, W1(1), W1(1));
        CHECK(cg.terms == std::map<Weight, std::int64_t>{{W1(0), 1}, {W1(2), 1}});

        // full Clebsch-Gordan range
        for (std::int64_t a = 0; a <= 4; ++a)
            for (std::int64_t b = 0; b <= 4; ++b) {
                VirtualCharacter p = tensor_decompose(a1, W1(a), W1(b));
                std::map<Weight, std::int64_t> expect;
                for (std::int64_t c = std::llabs(a - b); c <= a + b; c += 2)
                    expect[W1(c)] = 1;
                CAPTURE(a, b);
                CHECK(p.terms == expect);
            }
    }
    SUBCASE("3 x 3bar on SU(3)") {
        RootDatum a2 = build_root_datum("A2");
        VirtualCharacter p = tensor_decompose(a2, W2(1, 0), W2(0, 1));
        CHECK(p.terms == std::map<Weight, std::int64_t>{{W2(0, 0), 1}, {W2(1, 1), 1}});
    }
    SUBCASE("dimension identity across types") {
        for (const char* label : {"A1", "A2", "C2", "G2"}) {
            RootDatum d = build_root_datum(label);
            auto weights = level_k_weights(d, 2);
            for (const auto& mu : weights)
                for (const auto& nu : weights) {
                    VirtualCharacter p = tensor_decompose(d, mu, nu);
                    std::int64_t total = 0;
                    for (const auto& [w, c] : p.terms) {
                        CHECK(c > 0);
                        total += c * weyl_dimension(d, w);
                    }
                    CAPTURE(label, mu.labels, nu.labels);
                    CHECK(total == weyl_dimension(d, mu) * weyl_dimension(d, nu));
                }
        }
    }
}

TEST_CASE("caps are enforced") {
    RootDatum a2 = build_root_datum("A2");
    Caps tiny;
    tiny.max_dominant_weights = 2;
    CHECK_THROWS_AS(weight_multiplicities(a2, W2(3, 3), tiny), CapExceeded);
}
