#include "taut/relations.hpp"

#include <stdexcept>

namespace taut {

namespace {

BigRat alternating(int a) { return (a % 2 == 0) ? BigRat(1) : BigRat(-1); }

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

// Σ_{g1+g2=g, g_i in range} Σ_{a+b=total} coeff(g1,g2) (−1)^a ι_*(ψ_{⋆1}^a ψ_{⋆2}^b ∩ [Δ_{N1,N2}(g1,g2)])
template <typename Coeff>
void add_boundary_sum(ClassExpr& expr, int min_genus, std::vector<int> first, int total, Coeff coeff) {
    const int g = expr.ambient().genus;
    const int n = expr.ambient().n;
    const int n1 = static_cast<int>(first.size());
    for (int g1 = min_genus; g1 <= g - min_genus; ++g1) {
        const int g2 = g - g1;
        if (!is_stable(g1, n1 + 1) || !is_stable(g2, n - n1 + 1)) continue;
        const BigRat c = coeff(g1, g2);
        for (int a = 0; a <= total; ++a) {
            expr.add(alternating(a) * c, SeparatingStratum{g1, g2, first, a, total - a, {}});
        }
    }
}

}  // namespace

ClassExpr build_bbt(int genus, int r) {
    require(genus >= 1 && r >= 0, "bbt needs g >= 1 and r >= 0");
    ClassExpr expr(AmbientSpace::make(genus, 1), 2 * genus + r);
    expr.add_interior(1, {2 * genus + r});
    add_boundary_sum(expr, 1, {1}, 2 * genus - 1 + r,
                     [genus](int, int g2) { return -BigRat(g2, genus); });
    return expr;
}

ClassExpr build_variation(int genus, int n1, int n2, int r) {
    require(genus >= 0 && r >= 0, "variation needs g >= 0 and r >= 0");
    require(n1 >= 2 && n2 >= 2, "variation needs n1, n2 >= 2 (use fqq for the degenerate case)");
    const int n = n1 + n2;
    ClassExpr expr(AmbientSpace::make(genus, n), 2 * genus + n - 2 + r);
    std::vector<int> first;
    for (int i = 1; i <= n1; ++i) first.push_back(i);
    add_boundary_sum(expr, 0, first, 2 * genus + n - 3 + r, [](int, int) { return BigRat(1); });
    return expr;
}

ClassExpr build_fqq(int genus, int r) {
    require(genus >= 1 && r >= 0, "fqq needs g >= 1 and r >= 0");
    const int d = 2 * genus + r;
    ClassExpr expr(AmbientSpace::make(genus, 2), d);
    expr.add_interior(-1, {d, 0});
    expr.add_interior(alternating(r), {0, d});
    add_boundary_sum(expr, 1, {1}, 2 * genus - 1 + r, [](int, int) { return BigRat(1); });
    return expr;
}

ClassExpr build_xi(int genus, int r) {
    require(genus >= 1 && r >= 1, "xi needs g >= 1 and r >= 1");
    const int d = 2 * genus + r;
    ClassExpr expr(AmbientSpace::make(genus, 2), d);
    for (int a = 0; a <= d; ++a) expr.add_interior(alternating(a), {a, d - a});
    return expr;
}

ClassExpr build_vpe(int genus, int r) {
    require(genus >= 1, "vpe needs g >= 1");
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("vpe stated for odd r only");
    ClassExpr expr(AmbientSpace::make(genus + 1, 0), 2 * genus + r);
    expr.add_interior(1, {}, {2 * genus + r});
    add_boundary_sum(expr, 1, {}, 2 * genus - 1 + r, [](int, int) { return BigRat(1, 2); });
    return expr;
}

ClassExpr xi_witness_class(int genus, int r) {
    if (genus < 2 || r < 0 || r > genus - 2) throw std::invalid_argument("witness out of range");
    const int d = 2 * genus + r;
    const int extra = genus - 2 - r;
    ClassExpr expr(AmbientSpace::make(genus, 2), moduli_dimension(genus, 2));
    for (int a = 0; a <= d; ++a) {
        expr.add(alternating(a), SeparatingStratum{1, genus - 1, {1}, 0, 0, {a, d - a + extra}});
    }
    return expr;
}

BigRat xi_witness(CorrelatorEngine& engine, int genus, int r) {
    return pair_with_test(engine, xi_witness_class(genus, r), TestMonomial{}).value;
}

BigRat xi_witness_expected(int genus) { return BigRat(1, 24) * one_point_value(genus - 1); }

VerificationReport verify(CorrelatorEngine& engine, const ClassExpr& expr, std::string relation,
                          std::vector<std::pair<std::string, ParamValue>> params) {
    Stopwatch clock;
    VerificationReport report;
    report.relation = std::move(relation);
    report.params = std::move(params);
    if (expr.trivially_zero()) {
        report.trivial = true;
        report.pass = true;
    } else {
        for (const auto& test : enumerate_tests(expr.ambient(), expr.ambient().dimension() - expr.degree())) {
            auto pairing = pair_with_test(engine, expr, test);
            if (!pairing.value.is_zero()) report.pass = false;
            report.tests.push_back(TestResult{test.str(), std::move(pairing.value)});
        }
    }
    report.millis = clock.millis();
    return report;
}

bool xi_is_antisymmetric(int genus, int r) {
    const auto xi = build_xi(genus, r);
    return same_class_terms(xi.relabeled({2, 1}), xi.scaled(-1));
}

VerificationReport verify_vyt(CorrelatorEngine& engine, int genus, int r) {
    Stopwatch clock;
    VerificationReport report;
    report.relation = "vyt";
    report.params = {{"g", genus}, {"r", r}};
    const auto xi = build_xi(genus, r);
    const int target_dim = moduli_dimension(genus + 1, 0);
    if (xi.degree() + 1 > target_dim) {
        report.trivial = true;
    } else {
        const int kappa_degree = target_dim - xi.degree() - 1;
        for (const auto& test : enumerate_tests(AmbientSpace::make(genus + 1, 0), kappa_degree)) {
            auto pairing = pair_pushforward_irreducible(engine, xi, test.kappa);
            if (!pairing.value.is_zero()) report.pass = false;
            report.tests.push_back(TestResult{test.str(), std::move(pairing.value)});
        }
    }
    if (r % 2 == 1) {
        const bool anti = xi_is_antisymmetric(genus, r);
        report.notes.push_back(anti ? "odd r: xi is antisymmetric under marking swap"
                                    : "odd r: xi failed the marking-swap antisymmetry check");
        report.pass = report.pass && anti;
    }
    report.millis = clock.millis();
    return report;
}

VerificationReport verify_xi_witness(CorrelatorEngine& engine, int genus, int r) {
    Stopwatch clock;
    VerificationReport report;
    report.relation = "xi-witness";
    report.params = {{"g", genus}, {"r", r}};
    BigRat value = xi_witness(engine, genus, r);
    report.expected = xi_witness_expected(genus);
    report.pass = value == *report.expected && !value.is_zero();
    report.tests.push_back(TestResult{"psi(0," + std::to_string(genus - 2 - r) + ") on Delta[1," +
                                          std::to_string(genus - 1) + "|1]",
                                      std::move(value)});
    report.millis = clock.millis();
    return report;
}

}  // namespace taut
