#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taut/bigrat.hpp"
#include "taut/correlator.hpp"

namespace taut {

/// M̄_{g,n}; construction rejects unstable pairs.
struct AmbientSpace {
    int genus = 0;
    int n = 0;

    static AmbientSpace make(int genus, int n);
    [[nodiscard]] int dimension() const { return moduli_dimension(genus, n); }

    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

/// ψ_1^{d_1}…ψ_n^{d_n} κ_{b_1}…κ_{b_k} on the ambient space itself.
struct InteriorTerm {
    std::vector<int> psi;
    std::vector<int> kappa;  // sorted non-increasing, parts >= 1

    [[nodiscard]] int codimension() const;
    friend auto operator<=>(const InteriorTerm&, const InteriorTerm&) = default;
};

/// ι_*(ψ_{⋆1}^a ψ_{⋆2}^b ∏ψ_i^{e_i} ∩ [Δ_{N1,N2}(g1,g2)]). Markings are
/// numbered from 1; `first_markings` lists N1 in increasing order and the
/// complement N2 sits on the second component.
struct SeparatingStratum {
    int g1 = 0;
    int g2 = 0;
    std::vector<int> first_markings;
    int node_first = 0;   // a, exponent of ψ_{⋆1}
    int node_second = 0;  // b, exponent of ψ_{⋆2}
    std::vector<int> marking_exps;

    [[nodiscard]] int codimension() const;
    [[nodiscard]] std::vector<int> second_markings(int n) const;
    /// Same class with the roles of the two components exchanged.
    [[nodiscard]] SeparatingStratum swapped(int n) const;

    friend auto operator<=>(const SeparatingStratum&, const SeparatingStratum&) = default;
};

/// ι_*(ψ_{⋆1}^a ψ_{⋆2}^b ∏ψ_i^{e_i}) along M̄_{g−1,n+2} → M̄_{g,n}.
struct NonSeparatingPushforward {
    int node_first = 0;
    int node_second = 0;
    std::vector<int> marking_exps;

    [[nodiscard]] int codimension() const;
    friend auto operator<=>(const NonSeparatingPushforward&, const NonSeparatingPushforward&) = default;
};

using Term = std::variant<InteriorTerm, SeparatingStratum, NonSeparatingPushforward>;

/// ψ exponents per marking together with a κ partition.
struct TestMonomial {
    std::vector<int> psi;
    std::vector<int> kappa;

    [[nodiscard]] int degree() const;
    /// "1", "psi(1,0)", "kappa(2,1)", "psi(0,1) kappa(1)".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const TestMonomial&, const TestMonomial&) = default;
};

/// A BigRat-linear combination of decorated terms of one codimension on a
/// fixed ambient space. The empty combination is the zero class.
class ClassExpr {
public:
    ClassExpr(AmbientSpace ambient, int degree);

    /// Throws std::invalid_argument if the term does not live on this
    /// ambient space or has the wrong codimension.
    ClassExpr& add(BigRat coeff, Term term);

    /// Interior monomial; κ_0 factors are folded into the coefficient as
    /// (2g − 2 + n).
    ClassExpr& add_interior(BigRat coeff, std::vector<int> psi, std::vector<int> kappa = {});

    [[nodiscard]] const AmbientSpace& ambient() const { return ambient_; }
    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] const std::vector<std::pair<BigRat, Term>>& terms() const { return terms_; }
    [[nodiscard]] bool trivially_zero() const { return degree_ > ambient_.dimension(); }

    /// Like terms merged, zero coefficients dropped, terms sorted.
    [[nodiscard]] ClassExpr normalized() const;
    /// Relabels markings: marking i becomes perm[i-1].
    [[nodiscard]] ClassExpr relabeled(const std::vector<int>& perm) const;
    [[nodiscard]] ClassExpr scaled(const BigRat& c) const;
    /// Sum of two expressions on the same ambient space and degree.
    [[nodiscard]] ClassExpr plus(const ClassExpr& other) const;

    [[nodiscard]] std::string render() const;

private:
    AmbientSpace ambient_;
    int degree_;
    std::vector<std::pair<BigRat, Term>> terms_;
};

/// Structural equality after normalization.
bool same_class_terms(const ClassExpr& a, const ClassExpr& b);

struct Pairing {
    BigRat value;
    bool trivial = false;  ///< degrees were not complementary
};

/// All ψκ monomials of the given degree, κ-degree ascending, then κ
/// partitions and ψ vectors in reverse lexicographic order.
std::vector<TestMonomial> enumerate_tests(const AmbientSpace& ambient, int degree);

/// One summand of the restriction of a test monomial to a separating
/// divisor. Factor ψ lists follow the marking order of each component and
/// exclude the node.
struct SplitPullback {
    TestMonomial first;
    TestMonomial second;
    BigRat coeff;
};

std::vector<SplitPullback> pullback_test_to_separating(const AmbientSpace& ambient, const TestMonomial& test,
                                                       const SeparatingStratum& stratum);

Pairing pair_with_test(CorrelatorEngine& engine, const ClassExpr& expr, const TestMonomial& test);

/// ∫_{M̄_{g,2}} e · κ, i.e. the pairing of ι_*(e) ⊂ M̄_{g+1} with the κ
/// monomial, using ι^*κ_a = κ_a.
Pairing pair_pushforward_irreducible(CorrelatorEngine& engine, const ClassExpr& expr, const std::vector<int>& kappa);

/// Individual contributions of each term to a pairing, in term order.
std::vector<BigRat> pairing_summands(CorrelatorEngine& engine, const ClassExpr& expr, const TestMonomial& test);

}  // namespace taut
