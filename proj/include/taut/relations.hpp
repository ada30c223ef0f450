#pragma once

#include <string>
#include <vector>

#include "taut/correlator.hpp"
#include "taut/report.hpp"
#include "taut/stratum.hpp"

namespace taut {

// Each builder returns a relation as a single expression LHS − RHS, which
// should pair to zero against every test monomial.

/// ψ_1^{2g+r} − Σ_{g1+g2=g, g_i>0} Σ_{a+b=2g−1+r} (−1)^a (g2/g) ι_*(ψ_{⋆1}^a ψ_{⋆2}^b ∩ [Δ_{1,∅}(g1,g2)])
/// on M̄_{g,1}.
ClassExpr build_bbt(int genus, int r);

/// Σ_{g1+g2=g} Σ_{a+b=2g+n1+n2−3+r} (−1)^a ι_*(ψ_{⋆1}^a ψ_{⋆2}^b ∩ [Δ_{N1,N2}(g1,g2)]) on
/// M̄_{g,n1+n2} with N1 = {1..n1}. Requires n1, n2 ≥ 2.
ClassExpr build_variation(int genus, int n1, int n2, int r);

/// −ψ_1^{2g+r} + (−1)^r ψ_2^{2g+r} + Σ_{g_i>0} Σ_{a+b=2g−1+r} (−1)^a ι_*(… ∩ [Δ_{1,2}(g1,g2)])
/// on M̄_{g,2}.
ClassExpr build_fqq(int genus, int r);

/// ξ_{g,r} = Σ_{a+b=2g+r} (−1)^a ψ_1^a ψ_2^b on M̄_{g,2}.
ClassExpr build_xi(int genus, int r);

/// κ_{2g+r} + ½ Σ_{g1+g2=g+1, g_i>0} Σ_{a+b=2g−1+r} (−1)^a ι_*(… ∩ [Δ_{∅,∅}(g1,g2)]) on M̄_{g+1}.
/// Only odd r.
ClassExpr build_vpe(int genus, int r);

/// ξ_{g,r} · ψ_2^{g−2−r} restricted to Δ_{1,2}(1, g−1), as a top-degree class on M̄_{g,2}.
ClassExpr xi_witness_class(int genus, int r);

/// ∫ ξ_{g,r} ψ_2^{g−2−r} ∩ [Δ_{1,2}(1,g−1)]. Requires g ≥ 2 and 0 ≤ r ≤ g−2.
BigRat xi_witness(CorrelatorEngine& engine, int genus, int r);

/// Closed form (1/24) · 1/(24^{g−1}(g−1)!) of the witness integral.
BigRat xi_witness_expected(int genus);

/// Pairs the expression against every complementary-degree test monomial.
VerificationReport verify(CorrelatorEngine& engine, const ClassExpr& expr, std::string relation = "class",
                          std::vector<std::pair<std::string, ParamValue>> params = {});

/// ι_*(ξ_{g,r}) = 0 in M̄_{g+1}, checked against all κ monomials of
/// degree g − r − 1. For odd r the report also requires ξ to flip sign
/// term by term under exchanging the two markings.
VerificationReport verify_vyt(CorrelatorEngine& engine, int genus, int r);

VerificationReport verify_xi_witness(CorrelatorEngine& engine, int genus, int r);

/// True iff ξ_{g,r} with markings swapped equals −ξ_{g,r} term by term.
bool xi_is_antisymmetric(int genus, int r);

}  // namespace taut
