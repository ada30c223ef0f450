#include "taut/stratum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace taut {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

bool all_nonnegative(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

AmbientSpace AmbientSpace::make(int genus, int n) {
    if (genus < 0 || n < 0 || !is_stable(genus, n)) throw std::invalid_argument("unstable moduli space");
    return AmbientSpace{genus, n};
}

int InteriorTerm::codimension() const { return sum(psi) + sum(kappa); }

int SeparatingStratum::codimension() const { return 1 + node_first + node_second + sum(marking_exps); }

std::vector<int> SeparatingStratum::second_markings(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!std::binary_search(first_markings.begin(), first_markings.end(), i)) out.push_back(i);
    }
    return out;
}

SeparatingStratum SeparatingStratum::swapped(int n) const {
    return SeparatingStratum{g2, g1, second_markings(n), node_second, node_first, marking_exps};
}

int NonSeparatingPushforward::codimension() const { return 1 + node_first + node_second + sum(marking_exps); }

int TestMonomial::degree() const { return sum(psi) + sum(kappa); }

std::string TestMonomial::str() const {
    const bool has_psi = std::any_of(psi.begin(), psi.end(), [](int d) { return d != 0; });
    if (!has_psi && kappa.empty()) return "1";
    std::string out;
    if (has_psi) out = "psi(" + join(psi) + ")";
    if (!kappa.empty()) {
        if (!out.empty()) out += ' ';
        out += "kappa(" + join(kappa) + ")";
    }
    return out;
}

ClassExpr::ClassExpr(AmbientSpace ambient, int degree) : ambient_(AmbientSpace::make(ambient.genus, ambient.n)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative class degree");
}

ClassExpr& ClassExpr::add(BigRat coeff, Term term) {
    const int n = ambient_.n;
    const int g = ambient_.genus;
    int codim = 0;
    std::visit(
        [&](auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, InteriorTerm>) {
                if (t.psi.size() > static_cast<std::size_t>(n)) {
                    throw std::invalid_argument("interior term references marking absent from ambient");
                }
                t.psi.resize(n, 0);
                if (!all_nonnegative(t.psi)) throw std::invalid_argument("negative descendent level");
                if (std::any_of(t.kappa.begin(), t.kappa.end(), [](int b) { return b <= 0; })) {
                    throw std::invalid_argument("kappa index must be positive");
                }
                t.kappa = sorted_desc(std::move(t.kappa));
            } else if constexpr (std::is_same_v<T, SeparatingStratum>) {
                if (t.g1 < 0 || t.g2 < 0 || t.g1 + t.g2 != g) throw std::invalid_argument("genus splitting mismatch");
                std::sort(t.first_markings.begin(), t.first_markings.end());
                if (std::adjacent_find(t.first_markings.begin(), t.first_markings.end()) != t.first_markings.end() ||
                    std::any_of(t.first_markings.begin(), t.first_markings.end(),
                                [n](int i) { return i < 1 || i > n; })) {
                    throw std::invalid_argument("invalid marking set for separating stratum");
                }
                t.marking_exps.resize(n, 0);
                const int n1 = static_cast<int>(t.first_markings.size());
                if (!is_stable(t.g1, n1 + 1) || !is_stable(t.g2, n - n1 + 1)) {
                    throw std::invalid_argument("unstable component in separating stratum");
                }
                if (t.node_first < 0 || t.node_second < 0 || !all_nonnegative(t.marking_exps)) {
                    throw std::invalid_argument("negative descendent level");
                }
            } else {
                if (!is_stable(g - 1, n + 2)) throw std::invalid_argument("irreducible boundary absent from ambient");
                t.marking_exps.resize(n, 0);
                if (t.node_first < 0 || t.node_second < 0 || !all_nonnegative(t.marking_exps)) {
                    throw std::invalid_argument("negative descendent level");
                }
            }
            codim = t.codimension();
        },
        term);
    if (codim != degree_) {
        throw std::invalid_argument("term of codimension " + std::to_string(codim) + " added to degree " +
                                    std::to_string(degree_) + " expression");
    }
    terms_.emplace_back(std::move(coeff), std::move(term));
    return *this;
}

ClassExpr& ClassExpr::add_interior(BigRat coeff, std::vector<int> psi, std::vector<int> kappa) {
    const auto zeros = std::erase(kappa, 0);
    for (std::size_t i = 0; i < zeros; ++i) coeff *= BigRat(2 * ambient_.genus - 2 + ambient_.n);
    return add(std::move(coeff), InteriorTerm{std::move(psi), std::move(kappa)});
}

namespace {

Term canonical(const Term& term, int n) {
    if (const auto* s = std::get_if<SeparatingStratum>(&term)) {
        auto other = s->swapped(n);
        return std::min(*s, other);
    }
    return term;
}

}  // namespace

ClassExpr ClassExpr::normalized() const {
    std::map<Term, BigRat> merged;
    for (const auto& [c, t] : terms_) merged[canonical(t, ambient_.n)] += c;
    ClassExpr out(ambient_, degree_);
    for (auto& [t, c] : merged) {
        if (!c.is_zero()) out.terms_.emplace_back(c, t);
    }
    return out;
}

ClassExpr ClassExpr::relabeled(const std::vector<int>& perm) const {
    const int n = ambient_.n;
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    auto move_exps = [&](const std::vector<int>& exps) {
        std::vector<int> out(n, 0);
        for (int i = 0; i < n; ++i) out[perm[i] - 1] = exps[i];
        return out;
    };
    ClassExpr out(ambient_, degree_);
    for (const auto& [c, t] : terms_) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                T y = x;
                if constexpr (std::is_same_v<T, InteriorTerm>) {
                    y.psi = move_exps(x.psi);
                } else {
                    y.marking_exps = move_exps(x.marking_exps);
                    if constexpr (std::is_same_v<T, SeparatingStratum>) {
                        for (auto& i : y.first_markings) i = perm[i - 1];
                        std::sort(y.first_markings.begin(), y.first_markings.end());
                    }
                }
                out.add(c, y);
            },
            t);
    }
    return out;
}

ClassExpr ClassExpr::scaled(const BigRat& c) const {
    ClassExpr out(ambient_, degree_);
    for (const auto& [coeff, t] : terms_) out.terms_.emplace_back(coeff * c, t);
    return out;
}

ClassExpr ClassExpr::plus(const ClassExpr& other) const {
    if (!(other.ambient_ == ambient_) || other.degree_ != degree_) {
        throw std::invalid_argument("cannot add classes on different spaces or degrees");
    }
    ClassExpr out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

std::string ClassExpr::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [c, t] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + " * ";
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, InteriorTerm>) {
                    out += TestMonomial{x.psi, x.kappa}.str();
                } else {
                    if constexpr (std::is_same_v<T, SeparatingStratum>) {
                        out += "Delta[" + std::to_string(x.g1) + "," + std::to_string(x.g2) + "|" +
                               join(x.first_markings) + "]";
                    } else {
                        out += "Irr";
                    }
                    out += "(psi*^" + std::to_string(x.node_first) + ",psi*^" + std::to_string(x.node_second) + ")";
                    if (std::any_of(x.marking_exps.begin(), x.marking_exps.end(), [](int d) { return d != 0; })) {
                        out += " psi(" + join(x.marking_exps) + ")";
                    }
                }
            },
            t);
    }
    return out;
}

bool same_class_terms(const ClassExpr& a, const ClassExpr& b) {
    if (!(a.ambient() == b.ambient()) || a.degree() != b.degree()) return false;
    const auto na = a.normalized();
    const auto nb = b.normalized();
    return na.terms() == nb.terms();
}

namespace {

void partitions_desc(int total, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(total, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_desc(total - part, part, current, out);
        current.pop_back();
    }
}

void compositions_desc(int total, int slots, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        if (total == 0) out.push_back(current);
        return;
    }
    if (slots == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        current.push_back(first);
        compositions_desc(total - first, slots - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<TestMonomial> enumerate_tests(const AmbientSpace& ambient, int degree) {
    std::vector<TestMonomial> out;
    if (degree < 0) return out;
    for (int kdeg = 0; kdeg <= degree; ++kdeg) {
        std::vector<std::vector<int>> parts;
        std::vector<int> scratch;
        partitions_desc(kdeg, kdeg, scratch, parts);
        std::vector<std::vector<int>> psis;
        compositions_desc(degree - kdeg, ambient.n, scratch, psis);
        for (const auto& kappa : parts) {
            for (const auto& psi : psis) out.push_back(TestMonomial{psi, kappa});
        }
    }
    return out;
}

namespace {

std::vector<int> padded_test_psi(const AmbientSpace& ambient, const TestMonomial& test) {
    if (test.psi.size() > static_cast<std::size_t>(ambient.n)) {
        throw std::invalid_argument("test monomial references marking absent from ambient");
    }
    auto psi = test.psi;
    psi.resize(ambient.n, 0);
    return psi;
}

}  // namespace

std::vector<SplitPullback> pullback_test_to_separating(const AmbientSpace& ambient, const TestMonomial& test,
                                                       const SeparatingStratum& stratum) {
    const auto psi = padded_test_psi(ambient, test);
    TestMonomial first;
    TestMonomial second;
    for (int i : stratum.first_markings) first.psi.push_back(psi[i - 1]);
    for (int i : stratum.second_markings(ambient.n)) second.psi.push_back(psi[i - 1]);

    // κ_a ↦ κ_a ⊗ 1 + 1 ⊗ κ_a, expanded over all assignments of the parts.
    const int k = static_cast<int>(test.kappa.size());
    std::vector<SplitPullback> out;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> a;
        std::vector<int> b;
        for (int j = 0; j < k; ++j) ((mask & (1u << j)) ? b : a).push_back(test.kappa[j]);
        a = sorted_desc(std::move(a));
        b = sorted_desc(std::move(b));
        auto [it, fresh] = index.try_emplace({a, b}, out.size());
        if (fresh) {
            out.push_back(SplitPullback{TestMonomial{first.psi, a}, TestMonomial{second.psi, b}, BigRat(1)});
        } else {
            out[it->second].coeff += BigRat(1);
        }
    }
    return out;
}

namespace {

BigRat pair_term(CorrelatorEngine& engine, const AmbientSpace& ambient, const Term& term, const TestMonomial& test,
                 const std::vector<int>& test_psi) {
    return std::visit(
        [&](const auto& t) -> BigRat {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, InteriorTerm>) {
                std::vector<int> psi(ambient.n);
                for (int i = 0; i < ambient.n; ++i) psi[i] = t.psi[i] + test_psi[i];
                std::vector<int> kappa = t.kappa;
                kappa.insert(kappa.end(), test.kappa.begin(), test.kappa.end());
                return engine.value_or_zero(ambient.genus, psi, kappa);
            } else if constexpr (std::is_same_v<T, SeparatingStratum>) {
                BigRat acc;
                for (const auto& piece : pullback_test_to_separating(ambient, test, t)) {
                    auto psi1 = piece.first.psi;
                    auto second = t.second_markings(ambient.n);
                    for (std::size_t j = 0; j < t.first_markings.size(); ++j) psi1[j] += t.marking_exps[t.first_markings[j] - 1];
                    psi1.push_back(t.node_first);
                    auto psi2 = piece.second.psi;
                    for (std::size_t j = 0; j < second.size(); ++j) psi2[j] += t.marking_exps[second[j] - 1];
                    psi2.push_back(t.node_second);
                    BigRat left = engine.value_or_zero(t.g1, psi1, piece.first.kappa);
                    if (left.is_zero()) continue;
                    acc += piece.coeff * left * engine.value_or_zero(t.g2, psi2, piece.second.kappa);
                }
                return acc;
            } else {
                std::vector<int> psi(ambient.n);
                for (int i = 0; i < ambient.n; ++i) psi[i] = t.marking_exps[i] + test_psi[i];
                psi.push_back(t.node_first);
                psi.push_back(t.node_second);
                return engine.value_or_zero(ambient.genus - 1, psi, test.kappa);
            }
        },
        term);
}

}  // namespace

std::vector<BigRat> pairing_summands(CorrelatorEngine& engine, const ClassExpr& expr, const TestMonomial& test) {
    const auto test_psi = padded_test_psi(expr.ambient(), test);
    std::vector<BigRat> out;
    out.reserve(expr.terms().size());
    const bool complementary = expr.degree() + test.degree() == expr.ambient().dimension();
    for (const auto& [c, t] : expr.terms()) {
        out.push_back(complementary ? c * pair_term(engine, expr.ambient(), t, test, test_psi) : BigRat(0));
    }
    return out;
}

Pairing pair_with_test(CorrelatorEngine& engine, const ClassExpr& expr, const TestMonomial& test) {
    const auto test_psi = padded_test_psi(expr.ambient(), test);
    if (std::any_of(test.kappa.begin(), test.kappa.end(), [](int b) { return b <= 0; })) {
        throw std::invalid_argument("kappa index must be positive");
    }
    if (expr.degree() + test.degree() != expr.ambient().dimension()) return Pairing{BigRat(0), true};
    BigRat acc;
    for (const auto& [c, t] : expr.terms()) acc += c * pair_term(engine, expr.ambient(), t, test, test_psi);
    return Pairing{acc, false};
}

Pairing pair_pushforward_irreducible(CorrelatorEngine& engine, const ClassExpr& expr, const std::vector<int>& kappa) {
    if (expr.ambient().n != 2) throw std::invalid_argument("irreducible pushforward needs an ambient M_{g,2}");
    return pair_with_test(engine, expr, TestMonomial{{0, 0}, kappa});
}

}  // namespace taut
