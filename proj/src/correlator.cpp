#include "taut/correlator.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <stdexcept>

namespace taut {

CorrelatorKey CorrelatorKey::make(int genus, std::vector<int> psi, std::vector<int> kappa) {
    std::sort(psi.begin(), psi.end(), std::greater<>());
    std::sort(kappa.begin(), kappa.end(), std::greater<>());
    return CorrelatorKey{genus, std::move(psi), std::move(kappa)};
}

int CorrelatorKey::degree() const {
    return std::accumulate(psi.begin(), psi.end(), 0) + std::accumulate(kappa.begin(), kappa.end(), 0);
}

std::size_t CorrelatorKeyHash::operator()(const CorrelatorKey& k) const noexcept {
    std::size_t h = std::hash<int>{}(k.genus);
    auto mix = [&h](int v) { h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (int v : k.psi) mix(v);
    mix(-1);
    for (int v : k.kappa) mix(v);
    return h;
}

CorrelatorEngine::CorrelatorEngine()
    : CorrelatorEngine([](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }) {}

CorrelatorEngine::CorrelatorEngine(WarningSink sink) : warn_(std::move(sink)) {}

namespace {

void check_arguments(int genus, std::span<const int> psi, std::span<const int> kappa) {
    if (genus < 0 || !is_stable(genus, static_cast<int>(psi.size()))) {
        throw std::invalid_argument("unstable moduli space");
    }
    if (std::any_of(psi.begin(), psi.end(), [](int d) { return d < 0; })) {
        throw std::invalid_argument("negative descendent level");
    }
    if (std::any_of(kappa.begin(), kappa.end(), [](int b) { return b <= 0; })) {
        throw std::invalid_argument("kappa index must be positive");
    }
}

}  // namespace

BigRat CorrelatorEngine::psi_integral(int genus, std::span<const int> psi) {
    check_arguments(genus, psi, {});
    return term(genus, {psi.begin(), psi.end()});
}

BigRat CorrelatorEngine::psi_kappa_integral(int genus, std::span<const int> psi, std::span<const int> kappa) {
    check_arguments(genus, psi, kappa);
    return term(genus, {psi.begin(), psi.end()}, {kappa.begin(), kappa.end()});
}

BigRat CorrelatorEngine::value_or_zero(int genus, std::span<const int> psi, std::span<const int> kappa) {
    if (genus < 0 || !is_stable(genus, static_cast<int>(psi.size()))) return 0;
    if (std::any_of(psi.begin(), psi.end(), [](int d) { return d < 0; })) return 0;
    if (std::any_of(kappa.begin(), kappa.end(), [](int b) { return b <= 0; })) {
        throw std::invalid_argument("kappa index must be positive");
    }
    return term(genus, {psi.begin(), psi.end()}, {kappa.begin(), kappa.end()});
}

// Total evaluation used inside the recursions: unstable or negative -> 0,
// dimension gate before any lookup.
BigRat CorrelatorEngine::term(int genus, std::vector<int> psi, std::vector<int> kappa) {
    const int n = static_cast<int>(psi.size());
    if (genus < 0 || !is_stable(genus, n)) return 0;
    auto key = CorrelatorKey::make(genus, std::move(psi), std::move(kappa));
    if (!key.psi.empty() && key.psi.back() < 0) return 0;
    if (key.degree() != moduli_dimension(genus, n)) return 0;
    return lookup(key);
}

BigRat CorrelatorEngine::lookup(const CorrelatorKey& key) {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigRat value = compute(key);
    ++computed_;
    if (auto it = pending_.find(key); it != pending_.end()) {
        ++revalidated_;
        if (it->second != value) {
            ++mismatches_;
            warn_("cached value for genus " + std::to_string(key.genus) + " disagrees with recomputation; using " +
                  value.str());
        }
        pending_.erase(it);
    }
    memo_.emplace(key, value);
    return value;
}

BigRat CorrelatorEngine::compute(const CorrelatorKey& key) {
    return key.kappa.empty() ? compute_psi(key) : compute_kappa(key);
}

BigRat CorrelatorEngine::compute_psi(const CorrelatorKey& key) {
    const int g = key.genus;
    const int n = key.n();
    const auto& d = key.psi;  // non-increasing

    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return BigRat(1, 24);

    // String equation: remove a τ_0.
    if (d.back() == 0 && is_stable(g, n - 1)) {
        std::vector<int> rest(d.begin(), d.end() - 1);
        BigRat acc;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;
            auto lowered = rest;
            --lowered[i];
            acc += term(g, std::move(lowered));
        }
        return acc;
    }

    // Dilaton equation: remove a τ_1.
    if (auto it = std::find(d.begin(), d.end(), 1); it != d.end() && is_stable(g, n - 1)) {
        std::vector<int> rest(d.begin(), d.end());
        rest.erase(rest.begin() + (it - d.begin()));
        return BigRat(2 * g - 2 + n - 1) * term(g, std::move(rest));
    }

    // DVV on the largest insertion τ_{k+1}.
    const int k = d.front() - 1;
    const std::vector<int> rest(d.begin() + 1, d.end());
    const int m = static_cast<int>(rest.size());
    BigRat acc;

    for (int j = 0; j < m; ++j) {
        auto raised = rest;
        raised[j] += k;
        BigRat coeff = double_factorial_odd(k + rest[j] + 1) / double_factorial_odd(rest[j]);
        acc += coeff * term(g, std::move(raised));
    }

    BigRat split_sum;
    for (int a = 0; a <= k - 1; ++a) {
        const int b = k - 1 - a;
        const BigRat weight = double_factorial_odd(a + 1) * double_factorial_odd(b + 1);

        if (g >= 1) {
            std::vector<int> loop = rest;
            loop.push_back(a);
            loop.push_back(b);
            split_sum += weight * term(g - 1, std::move(loop));
        }

        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> left{a};
            std::vector<int> right{b};
            int left_sum = a;
            for (int j = 0; j < m; ++j) {
                if (mask & (1u << j)) {
                    left.push_back(rest[j]);
                    left_sum += rest[j];
                } else {
                    right.push_back(rest[j]);
                }
            }
            // Genus of the left factor is pinned by its dimension.
            const int numer = left_sum - static_cast<int>(left.size()) + 3;
            if (numer < 0 || numer % 3 != 0) continue;
            const int g1 = numer / 3;
            if (g1 > g) continue;
            BigRat lhs = term(g1, std::move(left));
            if (lhs.is_zero()) continue;
            split_sum += weight * lhs * term(g - g1, std::move(right));
        }
    }
    acc += split_sum / BigRat(2);

    return acc / double_factorial_odd(k + 2);
}

// κ_b ∏κ_R on M̄_{g,n} = π_*(ψ_{n+1}^{b+1} ∏(κ_c − ψ_{n+1}^c)), c ∈ R.
BigRat CorrelatorEngine::compute_kappa(const CorrelatorKey& key) {
    const int traded = key.kappa.front();
    const std::vector<int> rest(key.kappa.begin() + 1, key.kappa.end());
    const int m = static_cast<int>(rest.size());
    BigRat acc;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int exponent = traded + 1;
        std::vector<int> kept;
        int picked = 0;
        for (int j = 0; j < m; ++j) {
            if (mask & (1u << j)) {
                exponent += rest[j];
                ++picked;
            } else {
                kept.push_back(rest[j]);
            }
        }
        auto psi = key.psi;
        psi.push_back(exponent);
        BigRat v = term(key.genus, std::move(psi), std::move(kept));
        if (picked % 2 == 0) {
            acc += v;
        } else {
            acc -= v;
        }
    }
    return acc;
}

CorrelatorEngine::Stats CorrelatorEngine::stats() const {
    std::lock_guard lock(mutex_);
    return Stats{memo_.size(), pending_.size(), computed_, revalidated_, mismatches_};
}

std::map<CorrelatorKey, BigRat> CorrelatorEngine::entries() const {
    std::lock_guard lock(mutex_);
    return {memo_.begin(), memo_.end()};
}

void CorrelatorEngine::absorb(const std::map<CorrelatorKey, BigRat>& entries, bool trusted) {
    std::lock_guard lock(mutex_);
    for (const auto& [key, value] : entries) {
        if (memo_.contains(key)) continue;
        if (trusted) {
            memo_.emplace(key, value);
        } else {
            pending_.insert_or_assign(key, value);
        }
    }
}

void CorrelatorEngine::clear() {
    std::lock_guard lock(mutex_);
    memo_.clear();
    pending_.clear();
    computed_ = revalidated_ = mismatches_ = 0;
}

CorrelatorEngine& default_engine() {
    static CorrelatorEngine engine;
    return engine;
}

BigRat one_point_value(int genus) {
    if (genus < 1) throw std::invalid_argument("one-point value needs genus >= 1");
    return BigRat(1) / (pow(BigRat(24), static_cast<unsigned>(genus)) * factorial(genus));
}

BigRat genus0_closed_form(std::span<const int> psi) {
    const int n = static_cast<int>(psi.size());
    const int total = std::accumulate(psi.begin(), psi.end(), 0);
    if (n < 3 || total != n - 3 || std::any_of(psi.begin(), psi.end(), [](int d) { return d < 0; })) {
        throw std::invalid_argument("dimension mismatch");
    }
    BigRat denom = 1;
    for (int d : psi) denom *= factorial(d);
    return factorial(n - 3) / denom;
}

}  // namespace taut
