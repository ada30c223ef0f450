#include <doctest.h>

#include <random>

#include "taut/point_psi.hpp"

using taut::BigRat;
using taut::VectorFieldPt;

namespace {

taut::CorrelatorEngine& engine() {
    static taut::CorrelatorEngine e;
    return e;
}

VectorFieldPt tau(int level) { return VectorFieldPt::coordinate(level); }

std::vector<int> cat(int first, std::vector<int> rest) {
    rest.insert(rest.begin(), first);
    return rest;
}

// Unpruned Ψ straight from the definition, every k and every genus split.
BigRat psi_reference(int g, int m, const std::vector<int>& w, const std::vector<int>& v) {
    const int r = static_cast<int>(w.size());
    const int s = static_cast<int>(v.size());
    auto c = [](int genus, const std::vector<int>& levels) { return taut::correlator_pt(engine(), genus, levels); };
    BigRat total;
    for (int k = 0; k <= m; ++k) {
        for (int g1 = 0; g1 <= g; ++g1) {
            const BigRat term = c(g1, cat(k, w)) * c(g - g1, cat(m - k, v));
            if (k % 2 == 0) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    if (r == 0) total += c(g, cat(m + 2, v));
    if (r == 1) total -= c(g, cat(w[0] + m + 1, v));
    if (s == 0) total += (m % 2 == 0 ? BigRat(1) : BigRat(-1)) * c(g, cat(m + 2, w));
    if (s == 1) total += (m % 2 == 1 ? BigRat(1) : BigRat(-1)) * c(g, cat(v[0] + m + 1, w));
    return total;
}

VectorFieldPt random_field(std::mt19937& rng, int max_level) {
    VectorFieldPt f;
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) {
        f.add(std::uniform_int_distribution<int>(0, max_level)(rng),
              BigRat(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 4)(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("correlator_pt is total") {
    CHECK(taut::correlator_pt(engine(), 0, {5, 0}) == BigRat(0));
    CHECK(taut::correlator_pt(engine(), 1, {1, 1}) == BigRat(1, 24));
    CHECK(taut::correlator_pt(engine(), 2, {4, 1}) == BigRat(1, 384));
    CHECK(taut::correlator_pt(engine(), 0, {}) == BigRat(0));
    CHECK(taut::correlator_pt(engine(), 0, {0}) == BigRat(0));
    CHECK(taut::correlator_pt(engine(), 1, {-1, 3}) == BigRat(0));
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) CHECK(taut::correlator_pt(engine(), 0, {a, b}) == BigRat(0));
    }
}

TEST_CASE("tau_shift") {
    CHECK(taut::tau_shift(tau(0), 3) == tau(3));
    CHECK(taut::tau_shift(tau(0), -1).is_zero());
    VectorFieldPt w = VectorFieldPt::coordinate(1, 2) + tau(5);
    VectorFieldPt expected = VectorFieldPt::coordinate(0, 2) + tau(4);
    CHECK(taut::tau_shift(w, -1) == expected);
    CHECK(w.str() == "2*tau1+tau5");
    CHECK(VectorFieldPt::coordinate(-2).is_zero());
    CHECK((tau(2) + VectorFieldPt::coordinate(2, -1)).is_zero());
}

TEST_CASE("hand-certified Psi values") {
    const auto b = taut::psi_breakdown(engine(), 2, 2, {1}, {});
    CHECK(b.split_sum == BigRat(-1, 576));
    CHECK(b.r1_term == BigRat(-1, 1152));
    CHECK(b.s0_term == BigRat(1, 384));
    CHECK(b.total() == BigRat(0));

    const auto z = taut::psi_breakdown(engine(), 2, 2, {}, {});
    CHECK(z.split_sum == BigRat(-1, 576));
    CHECK(z.r0_term == BigRat(1, 1152));
    CHECK(z.s0_term == BigRat(1, 1152));
    CHECK(z.total() == BigRat(0));

    const auto p = taut::psi_breakdown(engine(), 1, 1, {0}, {0});
    CHECK(p.split_sum == BigRat(0));
    CHECK(p.r1_term == BigRat(-1, 24));
    CHECK(p.s1_term == BigRat(1, 24));
    CHECK(p.total() == BigRat(0));
}

TEST_CASE("Psi_{0,0} vanishes for odd m") {
    for (int g = 0; g <= 4; ++g) {
        for (int m = 1; m <= 13; m += 2) CHECK(taut::psi_eval(engine(), g, m, {}, {}) == BigRat(0));
    }
}

TEST_CASE("pruned Psi matches the unpruned definition") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int g = std::uniform_int_distribution<int>(0, 3)(rng);
        const int r = std::uniform_int_distribution<int>(0, 3)(rng);
        const int s = std::uniform_int_distribution<int>(0, 3)(rng);
        const int m = std::uniform_int_distribution<int>(0, 3 * g + 3)(rng);
        std::vector<int> w(r), v(s);
        for (auto& x : w) x = std::uniform_int_distribution<int>(0, 5)(rng);
        for (auto& x : v) x = std::uniform_int_distribution<int>(0, 5)(rng);
        CHECK(taut::psi_eval_levels(engine(), g, m, w, v) == psi_reference(g, m, w, v));
    }
}

TEST_CASE("Psi can be nonzero below the threshold") {
    // g = 1, r = 0, s = 2, threshold 1: only the δ_{r,0} term ⟨τ_2τ_0τ_1⟩_1 = 2⟨τ_2τ_0⟩_1 survives at m = 0.
    CHECK(taut::conj_threshold(1, 0, 2) == 1);
    const auto b = taut::psi_breakdown(engine(), 1, 0, {}, {0, 1});
    CHECK(b.split_sum == BigRat(0));
    CHECK(b.r0_term == BigRat(1, 12));
    CHECK(b.total() == BigRat(1, 12));
    CHECK(taut::psi_eval_levels(engine(), 0, 0, {0, 0}, {0, 0}) == BigRat(1));
}

TEST_CASE("verify_conjC") {
    const auto rep = taut::verify_conjC(engine(), 2, 2, {tau(1)}, {});
    CHECK(rep.pass);
    REQUIRE(rep.tests.size() == 1);
    CHECK(rep.tests[0].monomial == "Psi");
    CHECK(taut::verify_conjC(engine(), 1, 1, {tau(0)}, {tau(0)}).pass);
    CHECK(taut::verify_conjC(engine(), 3, 5, {}, {}).pass);
    CHECK_THROWS_WITH_AS(taut::verify_conjC(engine(), 2, 0, {tau(1)}, {}), "below conjecture threshold",
                         std::invalid_argument);
}

TEST_CASE("vanishing on a slice of the sweep") {
    for (int g = 0; g <= 3; ++g) {
        for (int r = 0; r <= 2; ++r) {
            for (int s = 0; s <= 2; ++s) {
                for (int m = std::max(0, taut::conj_threshold(g, r, s)); m <= 3 * g + 3; ++m) {
                    std::vector<int> w(r, 1), v(s, 2);
                    if (r > 0) w[0] = m % 4;
                    CHECK(taut::psi_eval_levels(engine(), g, m, w, v) == BigRat(0));
                }
            }
        }
    }
}

TEST_CASE("symmetry") {
    const auto c = taut::symmetry_check(engine(), 2, 2, {tau(1)}, {});
    CHECK(c.pass);
    CHECK(c.lhs == BigRat(0));
    CHECK(taut::symmetry_check(engine(), 1, 3, {tau(2)}, {tau(2)}).pass);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = std::uniform_int_distribution<int>(0, 3)(rng);
        const int m = std::uniform_int_distribution<int>(0, 3 * g + 3)(rng);
        std::vector<VectorFieldPt> w(std::uniform_int_distribution<int>(0, 2)(rng));
        std::vector<VectorFieldPt> v(std::uniform_int_distribution<int>(0, 2)(rng));
        for (auto& f : w) f = tau(std::uniform_int_distribution<int>(0, 5)(rng));
        for (auto& f : v) f = tau(std::uniform_int_distribution<int>(0, 5)(rng));
        CHECK(taut::symmetry_check(engine(), g, m, w, v).pass);
    }
}

TEST_CASE("multilinearity") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int g = std::uniform_int_distribution<int>(0, 3)(rng);
        const int m = std::uniform_int_distribution<int>(0, 3 * g + 3)(rng);
        std::vector<VectorFieldPt> w{random_field(rng, 5), random_field(rng, 5)};
        std::vector<VectorFieldPt> v{random_field(rng, 5)};
        const auto other = random_field(rng, 5);
        const BigRat a(std::uniform_int_distribution<int>(-3, 3)(rng), 2);
        const BigRat b(std::uniform_int_distribution<int>(-3, 3)(rng), 5);
        auto mixed = w;
        mixed[1] = a * w[1] + b * other;
        auto swapped = w;
        swapped[1] = other;
        const auto lhs = taut::psi_eval(engine(), g, m, mixed, v);
        const auto rhs = a * taut::psi_eval(engine(), g, m, w, v) + b * taut::psi_eval(engine(), g, m, swapped, v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("string reduction") {
    // r = 1, s = 0: Ψ_{1,0,g,m}(S) = −Ψ_{0,0,g,m−1}.
    for (int g = 0; g <= 3; ++g) {
        for (int m = 1; m <= 3 * g + 3; ++m) {
            const auto c = taut::sreduce_check(engine(), g, m, {}, {});
            CHECK(c.pass);
            CHECK(c.rhs == -taut::psi_eval(engine(), g, m - 1, {}, {}));
        }
    }
    const auto c23 = taut::sreduce_check(engine(), 2, 3, {}, {});
    CHECK(c23.lhs == BigRat(0));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const int g = std::uniform_int_distribution<int>(0, 3)(rng);
        const int m = std::uniform_int_distribution<int>(1, 3 * g + 3)(rng);
        std::vector<VectorFieldPt> w(std::uniform_int_distribution<int>(0, 2)(rng));
        std::vector<VectorFieldPt> v(std::uniform_int_distribution<int>(0, 2)(rng));
        for (auto& f : w) f = random_field(rng, 5);
        for (auto& f : v) f = random_field(rng, 5);
        CHECK(taut::sreduce_check(engine(), g, m, w, v).pass);
    }
    CHECK_THROWS_AS(taut::sreduce_check(engine(), 1, 0, {}, {}), std::invalid_argument);
}

TEST_CASE("string reduction with primary fields has two terms") {
    const std::vector<VectorFieldPt> w{tau(0), tau(0)};
    const std::vector<VectorFieldPt> v{tau(3)};
    const auto c = taut::sreduce_check(engine(), 2, 4, w, v);
    CHECK(c.pass);
    CHECK(c.rhs == -taut::psi_eval(engine(), 2, 3, w, v));
}
