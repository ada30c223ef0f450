#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taut/bigrat.hpp"

namespace taut {

inline constexpr std::string_view kEngineVersion = "taut-rr 1.0.0";

/// Canonical key of a ψ–κ integral over M̄_{g,n}. Both lists are sorted in
/// non-increasing order.
struct CorrelatorKey {
    int genus = 0;
    std::vector<int> psi;
    std::vector<int> kappa;

    static CorrelatorKey make(int genus, std::vector<int> psi, std::vector<int> kappa = {});

    [[nodiscard]] int n() const { return static_cast<int>(psi.size()); }
    [[nodiscard]] int degree() const;

    friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
    friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;
};

struct CorrelatorKeyHash {
    std::size_t operator()(const CorrelatorKey& k) const noexcept;
};

inline bool is_stable(int genus, int n) { return genus >= 0 && n >= 0 && 2 * genus - 2 + n > 0; }
inline int moduli_dimension(int genus, int n) { return 3 * genus - 3 + n; }

/// Memoized evaluator of ⟨τ_{d_1}…τ_{d_n} κ_{b_1}…κ_{b_k}⟩_g.
///
/// Pure ψ integrals come from the DVV recursion with string and dilaton
/// shortcuts; κ classes (Arbarello–Cornalba convention) are traded one at a
/// time for an extra ψ insertion on M̄_{g,n+1}.
///
/// The memo is guarded by a single lock held for the whole of a top-level
/// evaluation. Concurrent callers asking for the same key see exactly one
/// computation.
class CorrelatorEngine {
public:
    using WarningSink = std::function<void(const std::string&)>;

    CorrelatorEngine();
    explicit CorrelatorEngine(WarningSink sink);

    /// ⟨τ_{d_1}…τ_{d_n}⟩_g. Throws std::invalid_argument for unstable (g, n)
    /// or a negative exponent; returns 0 when Σd ≠ 3g−3+n.
    BigRat psi_integral(int genus, std::span<const int> psi);

    /// ∫ ψ^d κ_b over M̄_{g,n}. Throws std::invalid_argument for unstable
    /// (g, n), negative exponents or κ indices < 1.
    BigRat psi_kappa_integral(int genus, std::span<const int> psi, std::span<const int> kappa);

    /// Like psi_kappa_integral but total: unstable spaces and negative
    /// exponents give 0.
    BigRat value_or_zero(int genus, std::span<const int> psi, std::span<const int> kappa = {});

    struct Stats {
        std::size_t entries = 0;
        std::size_t pending = 0;
        std::size_t computed = 0;  ///< fresh evaluations since construction/reset
        std::size_t revalidated = 0;
        std::size_t mismatches = 0;
    };
    [[nodiscard]] Stats stats() const;

    /// Copy of every memoized entry.
    [[nodiscard]] std::map<CorrelatorKey, BigRat> entries() const;

    /// Loads entries. When `trusted` is false they are only used after being
    /// recomputed and compared.
    void absorb(const std::map<CorrelatorKey, BigRat>& entries, bool trusted);

    void clear();

private:
    BigRat lookup(const CorrelatorKey& key);
    BigRat compute(const CorrelatorKey& key);
    BigRat compute_psi(const CorrelatorKey& key);
    BigRat compute_kappa(const CorrelatorKey& key);
    BigRat term(int genus, std::vector<int> psi, std::vector<int> kappa = {});

    mutable std::recursive_mutex mutex_;
    std::unordered_map<CorrelatorKey, BigRat, CorrelatorKeyHash> memo_;
    std::unordered_map<CorrelatorKey, BigRat, CorrelatorKeyHash> pending_;
    std::size_t computed_ = 0;
    std::size_t revalidated_ = 0;
    std::size_t mismatches_ = 0;
    WarningSink warn_;
};

/// Process-wide engine shared by the CLI and the Python module.
CorrelatorEngine& default_engine();

/// 1 / (24^g g!), the value of ⟨τ_{3g−2}⟩_g. Throws for g < 1.
BigRat one_point_value(int genus);

/// (n−3)! / ∏ d_i!, the genus-zero correlator. Throws unless n ≥ 3 and
/// Σd = n − 3.
BigRat genus0_closed_form(std::span<const int> psi);

}  // namespace taut
