#pragma once

#include <map>
#include <string>
#include <vector>

#include "taut/bigrat.hpp"
#include "taut/correlator.hpp"
#include "taut/report.hpp"

namespace taut {

/// Finite linear combination Σ c_n τ_n of coordinate vector fields on the
/// big phase space of the point. Levels are non-negative; shifting a level
/// below zero drops the term.
class VectorFieldPt {
public:
    VectorFieldPt() = default;
    static VectorFieldPt coordinate(int level, BigRat coeff = 1);

    /// Adds c·τ_level; negative levels are ignored.
    VectorFieldPt& add(int level, const BigRat& coeff);

    [[nodiscard]] const std::map<int, BigRat>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::string str() const;

    friend VectorFieldPt operator+(VectorFieldPt a, const VectorFieldPt& b);
    friend VectorFieldPt operator*(const BigRat& c, const VectorFieldPt& w);
    friend bool operator==(const VectorFieldPt&, const VectorFieldPt&) = default;

private:
    std::map<int, BigRat> terms_;
};

/// τ_+^k for k ≥ 0, τ_-^{-k} for k < 0.
VectorFieldPt tau_shift(const VectorFieldPt& w, int k);

/// ⟨τ_{l_1}…τ_{l_n}⟩_g at t = 0: zero for unstable (g, n), negative levels or
/// a dimension mismatch.
BigRat correlator_pt(CorrelatorEngine& engine, int genus, const std::vector<int>& levels);

/// Ψ_{r,s,g,m}(W | V) at t = 0, where t̃_n = −δ_{n,1}:
///
///   Σ_{k=0}^{m} Σ_{g1+g2=g} (−1)^k ⟨τ_k W⟩_{g1} ⟨τ_{m−k} V⟩_{g2}
///   + δ_{r,0} ⟨τ_{m+2} V⟩_g − δ_{r,1} ⟨τ_{m+1}(W_1) V⟩_g
///   + δ_{s,0} (−1)^m ⟨τ_{m+2} W⟩_g + δ_{s,1} (−1)^{m+1} ⟨W τ_{m+1}(V_1)⟩_g
///
/// r and s are the sizes of W and V.
BigRat psi_eval(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                const std::vector<VectorFieldPt>& v);

/// Same as psi_eval for coordinate fields given by their levels.
BigRat psi_eval_levels(CorrelatorEngine& engine, int genus, int m, const std::vector<int>& w,
                       const std::vector<int>& v);

/// The individual pieces of Ψ for coordinate fields: the genus-split sum
/// followed by the four correction terms (zero when their δ is off).
struct PsiBreakdown {
    BigRat split_sum;
    BigRat r0_term;
    BigRat r1_term;
    BigRat s0_term;
    BigRat s1_term;
    [[nodiscard]] BigRat total() const { return split_sum + r0_term + r1_term + s0_term + s1_term; }
};
PsiBreakdown psi_breakdown(CorrelatorEngine& engine, int genus, int m, const std::vector<int>& w,
                           const std::vector<int>& v);

/// Lowest m for which Ψ_{r,s,g,m} is claimed to vanish: 2g + r + s − 3.
inline int conj_threshold(int genus, int r, int s) { return 2 * genus + r + s - 3; }

/// Throws std::invalid_argument("below conjecture threshold") when m < 2g+r+s−3.
VerificationReport verify_conjC(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                                const std::vector<VectorFieldPt>& v);

struct IdentityCheck {
    bool pass = false;
    BigRat lhs;
    BigRat rhs;
};

/// Ψ_{r,s,g,m}(W|V) against (−1)^m Ψ_{s,r,g,m}(V|W).
IdentityCheck symmetry_check(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                             const std::vector<VectorFieldPt>& v);

/// Ψ_{r,s,g,m}(W_1…W_{r−1} S | V) against
/// −Ψ_{r−1,s,g,m−1}(W|V) + Σ_i Ψ_{r−1,s,g,m}(…τ_−(W_i)…|V), with the string
/// field S = τ_0 at t = 0. `w` holds the r − 1 fields other than S. Needs m ≥ 1.
IdentityCheck sreduce_check(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                            const std::vector<VectorFieldPt>& v);

std::string render_fields(const std::vector<VectorFieldPt>& fields);

}  // namespace taut
