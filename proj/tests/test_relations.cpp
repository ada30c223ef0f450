#include <doctest.h>

#include "taut/relations.hpp"

using taut::BigRat;
using taut::TestMonomial;

namespace {

taut::CorrelatorEngine& engine() {
    static taut::CorrelatorEngine e;
    return e;
}

bool all_zero(const taut::VerificationReport& r) {
    for (const auto& t : r.tests) {
        if (!t.value.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("bbt(1,0) is trivial") {
    const auto e = taut::build_bbt(1, 0);
    CHECK(e.degree() == 2);
    CHECK(e.terms().size() == 1);
    const auto rep = taut::verify(engine(), e, "bbt");
    CHECK(rep.trivial);
    CHECK(rep.pass);
    CHECK(rep.tests.empty());
}

TEST_CASE("bbt(2,0) both sides pair to 1/1152") {
    const auto e = taut::build_bbt(2, 0);
    const auto parts = taut::pairing_summands(engine(), e, TestMonomial{{0}, {}});
    BigRat lhs;
    BigRat rhs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (std::holds_alternative<taut::InteriorTerm>(e.terms()[i].second)) {
            lhs += parts[i];
        } else {
            rhs -= parts[i];
        }
    }
    CHECK(lhs == BigRat(1, 1152));
    CHECK(rhs == BigRat(1, 1152));
    const auto rep = taut::verify(engine(), e, "bbt");
    CHECK(rep.pass);
    CHECK_FALSE(rep.trivial);
    CHECK(rep.tests.size() == 1);
}

TEST_CASE("bbt sweep g <= 5") {
    for (int g = 1; g <= 5; ++g) {
        for (int r = 0; r <= g + 1; ++r) {
            const auto rep = taut::verify(engine(), taut::build_bbt(g, r), "bbt");
            CHECK(rep.pass);
            CHECK(all_zero(rep));
            CHECK(rep.trivial == (r > g - 2));
        }
    }
}

TEST_CASE("bbt keeps the g2/g coefficient exact") {
    const auto e = taut::build_bbt(3, 0);
    bool saw_third = false;
    for (const auto& [c, t] : e.terms()) {
        if (c == BigRat(-1, 3) || c == BigRat(1, 3)) saw_third = true;
    }
    CHECK(saw_third);
}

TEST_CASE("variation") {
    CHECK_THROWS_AS(taut::build_variation(1, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(taut::build_variation(1, 2, 1, 0), std::invalid_argument);

    // Codimension 2 on the 1-dimensional M̄_{0,4}.
    const auto low = taut::build_variation(0, 2, 2, 0);
    CHECK(low.degree() == 2);
    CHECK(taut::verify(engine(), low).trivial);

    const auto e = taut::build_variation(1, 2, 2, 0);
    CHECK(e.degree() == 4);
    const auto rep = taut::verify(engine(), e);
    CHECK_FALSE(rep.trivial);
    CHECK(rep.pass);

    for (int g = 0; g <= 3; ++g) {
        for (int r = 0; r <= 1; ++r) {
            const auto sweep = taut::verify(engine(), taut::build_variation(g, 2, 2, r));
            CHECK(sweep.pass);
            CHECK(all_zero(sweep));
        }
    }
}

TEST_CASE("fqq") {
    const auto e10 = taut::build_fqq(1, 0);
    CHECK(e10.terms().size() == 2);
    CHECK(taut::verify(engine(), e10).pass);

    const auto e20 = taut::build_fqq(2, 0);
    const auto rep = taut::verify(engine(), e20);
    CHECK(rep.pass);
    CHECK(rep.tests.size() == 3);

    const auto e11 = taut::build_fqq(1, 1);
    CHECK(e11.render() == "-1 * psi(3,0) + -1 * psi(0,3)");
    CHECK(taut::verify(engine(), e11).trivial);

    for (int g = 1; g <= 4; ++g) {
        for (int r = 0; r <= 2; ++r) {
            const auto sweep = taut::verify(engine(), taut::build_fqq(g, r));
            CHECK(sweep.pass);
            CHECK(all_zero(sweep));
        }
    }
}

TEST_CASE("xi and its antisymmetry") {
    const auto xi = taut::build_xi(3, 2);
    CHECK(xi.degree() == 8);
    CHECK(xi.ambient().dimension() == 8);
    CHECK(xi.terms().size() == 9);
    CHECK(taut::verify(engine(), taut::build_xi(1, 1)).trivial);
    for (int r = 1; r <= 5; r += 2) CHECK(taut::xi_is_antisymmetric(3, r));
    CHECK_FALSE(taut::xi_is_antisymmetric(3, 2));
}

TEST_CASE("xi witness") {
    CHECK(taut::xi_witness(engine(), 3, 0) == BigRat(1, 27648));
    CHECK(taut::xi_witness(engine(), 2, 0) == BigRat(1, 576));
    CHECK(taut::xi_witness(engine(), 4, 2) == BigRat(1, 1990656));
    CHECK_THROWS_WITH_AS(taut::xi_witness(engine(), 3, 2), "witness out of range", std::invalid_argument);
    for (int g = 2; g <= 5; ++g) {
        for (int r = 0; r <= g - 2; ++r) {
            CHECK(taut::xi_witness(engine(), g, r) == taut::xi_witness_expected(g));
            const auto rep = taut::verify_xi_witness(engine(), g, r);
            CHECK(rep.pass);
            CHECK(rep.expected.has_value());
        }
    }
}

TEST_CASE("vyt flagship cancellation") {
    const auto xi = taut::build_xi(3, 2);
    const auto parts = taut::pairing_summands(engine(), xi, TestMonomial{{0, 0}, {}});
    int nonzero = 0;
    BigRat total;
    for (const auto& p : parts) {
        if (!p.is_zero()) ++nonzero;
        total += p;
    }
    CHECK(total == BigRat(0));
    CHECK(nonzero >= 2);
    // a = 0: ⟨τ_0τ_8⟩_3 = ⟨τ_7⟩_3 by string; a = 1: −⟨τ_1τ_7⟩_3 = −5⟨τ_7⟩_3 by dilaton.
    CHECK(parts[0] == BigRat(1, 82944));
    CHECK(parts[1] == BigRat(-5, 82944));

    const auto rep = taut::verify_vyt(engine(), 3, 2);
    CHECK(rep.pass);
    CHECK_FALSE(rep.trivial);
    REQUIRE(rep.tests.size() == 1);
    CHECK(rep.tests[0].monomial == "1");
}

TEST_CASE("vyt sweep") {
    const auto r11 = taut::verify_vyt(engine(), 1, 1);
    CHECK(r11.pass);
    CHECK_FALSE(r11.notes.empty());
    CHECK(taut::verify_vyt(engine(), 2, 2).trivial);
    for (int g = 1; g <= 4; ++g) {
        for (int r = 1; r <= 4; ++r) {
            const auto rep = taut::verify_vyt(engine(), g, r);
            CHECK(rep.pass);
            CHECK(all_zero(rep));
        }
    }
}

TEST_CASE("vpe") {
    CHECK_THROWS_WITH_AS(taut::build_vpe(1, 2), "vpe stated for odd r only", std::invalid_argument);
    const auto e11 = taut::build_vpe(1, 1);
    CHECK(e11.ambient().genus == 2);
    CHECK(e11.ambient().n == 0);
    const auto rep11 = taut::verify(engine(), e11);
    CHECK(rep11.pass);
    CHECK_FALSE(rep11.trivial);
    // κ_3 on M̄_2 is ⟨τ_4⟩_2.
    const auto parts = taut::pairing_summands(engine(), e11, TestMonomial{});
    CHECK(parts[0] == BigRat(1, 1152));

    const auto rep21 = taut::verify(engine(), taut::build_vpe(2, 1));
    CHECK(rep21.pass);
    CHECK(rep21.tests.size() == 1);
    CHECK(rep21.tests[0].monomial == "kappa(1)");

    for (int g = 1; g <= 3; ++g) {
        for (int r : {1, 3}) CHECK(taut::verify(engine(), taut::build_vpe(g, r)).pass);
    }
}

TEST_CASE("verify of the zero class") {
    taut::ClassExpr zero(taut::AmbientSpace::make(2, 1), 2);
    const auto rep = taut::verify(engine(), zero);
    CHECK(rep.pass);
    CHECK(all_zero(rep));
    CHECK_FALSE(rep.tests.empty());
}

TEST_CASE("a wrong relation fails") {
    auto e = taut::build_bbt(2, 0);
    e.add_interior(BigRat(1, 2), {4});
    const auto rep = taut::verify(engine(), e);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.tests.size() == 1);
    CHECK(rep.tests[0].value == BigRat(1, 2304));
}
