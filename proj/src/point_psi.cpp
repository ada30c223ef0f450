#include "taut/point_psi.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace taut {

VectorFieldPt VectorFieldPt::coordinate(int level, BigRat coeff) {
    VectorFieldPt w;
    w.add(level, coeff);
    return w;
}

VectorFieldPt& VectorFieldPt::add(int level, const BigRat& coeff) {
    if (level < 0 || coeff.is_zero()) return *this;
    auto& slot = terms_[level];
    slot += coeff;
    if (slot.is_zero()) terms_.erase(level);
    return *this;
}

std::string VectorFieldPt::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [level, c] : terms_) {
        if (!out.empty()) out += '+';
        if (c != BigRat(1)) out += c.str() + '*';
        out += "tau" + std::to_string(level);
    }
    return out;
}

VectorFieldPt operator+(VectorFieldPt a, const VectorFieldPt& b) {
    for (const auto& [level, c] : b.terms_) a.add(level, c);
    return a;
}

VectorFieldPt operator*(const BigRat& c, const VectorFieldPt& w) {
    VectorFieldPt out;
    for (const auto& [level, x] : w.terms_) out.add(level, c * x);
    return out;
}

VectorFieldPt tau_shift(const VectorFieldPt& w, int k) {
    VectorFieldPt out;
    for (const auto& [level, c] : w.terms()) out.add(level + k, c);
    return out;
}

BigRat correlator_pt(CorrelatorEngine& engine, int genus, const std::vector<int>& levels) {
    return engine.value_or_zero(genus, levels);
}

namespace {

BigRat sign(int e) { return (e % 2 == 0) ? BigRat(1) : BigRat(-1); }

std::vector<int> with(int first, const std::vector<int>& rest) {
    std::vector<int> out;
    out.reserve(rest.size() + 1);
    out.push_back(first);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

PsiBreakdown psi_breakdown(CorrelatorEngine& engine, int genus, int m, const std::vector<int>& w,
                           const std::vector<int>& v) {
    if (genus < 0 || m < 0) throw std::invalid_argument("psi needs g >= 0 and m >= 0");
    const int r = static_cast<int>(w.size());
    const int s = static_cast<int>(v.size());
    const int w_total = std::accumulate(w.begin(), w.end(), 0);
    PsiBreakdown out;

    // ⟨τ_k W⟩_{g1} survives only when k = 3g1 − 2 + r − ΣW.
    for (int g1 = 0; g1 <= genus; ++g1) {
        const int k = 3 * g1 - 2 + r - w_total;
        if (k < 0 || k > m) continue;
        BigRat left = correlator_pt(engine, g1, with(k, w));
        if (left.is_zero()) continue;
        out.split_sum += sign(k) * left * correlator_pt(engine, genus - g1, with(m - k, v));
    }
    if (r == 0) out.r0_term = correlator_pt(engine, genus, with(m + 2, v));
    if (r == 1) out.r1_term = -correlator_pt(engine, genus, with(w[0] + m + 1, v));
    if (s == 0) out.s0_term = sign(m) * correlator_pt(engine, genus, with(m + 2, w));
    if (s == 1) out.s1_term = sign(m + 1) * correlator_pt(engine, genus, with(v[0] + m + 1, w));
    return out;
}

BigRat psi_eval_levels(CorrelatorEngine& engine, int genus, int m, const std::vector<int>& w,
                       const std::vector<int>& v) {
    return psi_breakdown(engine, genus, m, w, v).total();
}

BigRat psi_eval(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                const std::vector<VectorFieldPt>& v) {
    const std::size_t r = w.size();
    std::vector<const VectorFieldPt*> slots;
    for (const auto& f : w) slots.push_back(&f);
    for (const auto& f : v) slots.push_back(&f);

    std::vector<int> levels(slots.size());
    BigRat acc;
    std::function<void(std::size_t, const BigRat&)> expand = [&](std::size_t i, const BigRat& coeff) {
        if (i == slots.size()) {
            std::vector<int> wl(levels.begin(), levels.begin() + static_cast<long>(r));
            std::vector<int> vl(levels.begin() + static_cast<long>(r), levels.end());
            acc += coeff * psi_eval_levels(engine, genus, m, wl, vl);
            return;
        }
        for (const auto& [level, c] : slots[i]->terms()) {
            levels[i] = level;
            expand(i + 1, coeff * c);
        }
    };
    expand(0, BigRat(1));
    return acc;
}

std::string render_fields(const std::vector<VectorFieldPt>& fields) {
    std::string out = "[";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i].str();
    }
    return out + "]";
}

VerificationReport verify_conjC(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                                const std::vector<VectorFieldPt>& v) {
    const int r = static_cast<int>(w.size());
    const int s = static_cast<int>(v.size());
    if (m < conj_threshold(genus, r, s)) throw std::invalid_argument("below conjecture threshold");
    Stopwatch clock;
    VerificationReport report;
    report.relation = "conjC";
    report.params = {{"g", genus}, {"r", r}, {"s", s}, {"m", m}, {"W", render_fields(w)}, {"V", render_fields(v)}};
    BigRat value = psi_eval(engine, genus, m, w, v);
    report.pass = value.is_zero();
    report.tests.push_back(TestResult{"Psi", std::move(value)});
    report.millis = clock.millis();
    return report;
}

IdentityCheck symmetry_check(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                             const std::vector<VectorFieldPt>& v) {
    IdentityCheck out;
    out.lhs = psi_eval(engine, genus, m, w, v);
    out.rhs = sign(m) * psi_eval(engine, genus, m, v, w);
    out.pass = out.lhs == out.rhs;
    return out;
}

IdentityCheck sreduce_check(CorrelatorEngine& engine, int genus, int m, const std::vector<VectorFieldPt>& w,
                            const std::vector<VectorFieldPt>& v) {
    if (m < 1) throw std::invalid_argument("string reduction needs m >= 1");
    IdentityCheck out;
    auto with_string = w;
    with_string.push_back(VectorFieldPt::coordinate(0));
    out.lhs = psi_eval(engine, genus, m, with_string, v);

    out.rhs = -psi_eval(engine, genus, m - 1, w, v);
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto lowered = w;
        lowered[i] = tau_shift(w[i], -1);
        if (lowered[i].is_zero()) continue;
        out.rhs += psi_eval(engine, genus, m, lowered, v);
    }
    out.pass = out.lhs == out.rhs;
    return out;
}

}  // namespace taut
