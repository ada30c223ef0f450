// taut-rr: exact ψ/κ intersection numbers and relation sweeps.
//
// Exit codes: 0 when every check passed, 1 when a verification failed,
// 2 for usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taut/cache.hpp"
#include "taut/correlator.hpp"
#include "taut/report.hpp"
#include "taut/sweep.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr const char* kCacheEnv = "TAUT_RR_CACHE";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << '\n'; }

std::string resolve_cache_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv(kCacheEnv)) return env;
    return {};
}

void load_cache_into(taut::CorrelatorEngine& engine, const std::string& path) {
    if (path.empty()) return;
    taut::install(engine, taut::cache_load_or_empty(path), warn);
}

void save_cache_from(const taut::CorrelatorEngine& engine, const std::string& path) {
    if (path.empty()) return;
    taut::cache_save(taut::snapshot(engine), path);
}

std::optional<taut::IntRange> range_flag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    try {
        return taut::IntRange::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// Every ψ exponent multiset of total 3g−3+n on M̄_{g,n}.
void warm(taut::CorrelatorEngine& engine, taut::IntRange genus, int n_max) {
    for (int g = std::max(0, genus.lo); g <= genus.hi; ++g) {
        for (int n = 0; n <= n_max; ++n) {
            if (!taut::is_stable(g, n)) continue;
            const int dim = taut::moduli_dimension(g, n);
            for (const auto& d : taut::level_multisets(n, {0, dim})) {
                int total = 0;
                for (int x : d) total += x;
                if (total == dim) engine.psi_integral(g, d);
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact psi/kappa intersection numbers on moduli of stable curves and relation sweeps", "taut-rr"};
    app.require_subcommand(1);

    std::string cache_flag;
    app.add_option("--cache", cache_flag, "Correlator cache file (default: $TAUT_RR_CACHE)");

    // integral
    auto* integral = app.add_subcommand("integral", "Evaluate <tau_d1 ... tau_dn kappa_b1 ...>_g");
    int genus = 0;
    std::vector<int> psi;
    std::vector<int> kappa;
    integral->add_option("-g,--genus", genus, "Genus")->required();
    integral->add_option("-d,--psi", psi, "Comma-separated psi exponents")->delimiter(',');
    integral->add_option("-k,--kappa", kappa, "Comma-separated kappa indices")->delimiter(',');

    // verify
    auto* verify = app.add_subcommand("verify", "Run a relation sweep and write reports");
    std::string relation;
    std::string g_text, r_text, s_text, m_text, levels_text, out_path;
    std::string format = "json";
    int n1 = 2, n2 = 2;
    bool force = false;
    bool no_timing = false;
    verify->add_option("relation", relation, "Relation to check")
        ->required()
        ->check(CLI::IsMember(taut::sweep_relations()));
    verify->add_option("--g", g_text, "Genus range, e.g. 2..5");
    verify->add_option("--r", r_text, "r range");
    verify->add_option("--s", s_text, "s range (point Psi relations)");
    verify->add_option("--m", m_text, "m range (point Psi relations; default threshold..3g+3)");
    verify->add_option("--levels", levels_text, "Descendent level range for vector fields");
    verify->add_option("--n1", n1, "Markings on the first component (variation)");
    verify->add_option("--n2", n2, "Markings on the second component (variation)");
    verify->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("-o,--out", out_path, "Write reports to this file instead of stdout");
    verify->add_flag("--force", force, "Allow sweeps beyond the desk-scale bounds");
    verify->add_flag("--no-timing", no_timing, "Write millis as 0 so reruns are byte-identical");

    // cache
    auto* cache = app.add_subcommand("cache", "Manage the correlator cache file");
    cache->require_subcommand(1);
    std::string cache_path;
    std::string warm_genus = "0..4";
    int warm_n = 4;
    auto* cache_save = cache->add_subcommand("save", "Evaluate a table of correlators and save it");
    cache_save->add_option("path", cache_path)->required();
    cache_save->add_option("--g", warm_genus, "Genus range to tabulate");
    cache_save->add_option("--n-max", warm_n, "Largest number of markings to tabulate");
    auto* cache_load = cache->add_subcommand("load", "Parse and revalidate a cache file");
    cache_load->add_option("path", cache_path)->required();
    auto* cache_stats = cache->add_subcommand("stats", "Print entry count and maximum genus");
    cache_stats->add_option("path", cache_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto& engine = taut::default_engine();
    const std::string cache_file = resolve_cache_path(cache_flag);

    try {
        if (*integral) {
            load_cache_into(engine, cache_file);
            const auto value = engine.psi_kappa_integral(genus, psi, kappa);
            std::cout << value.str() << '\n';
            save_cache_from(engine, cache_file);
            return 0;
        }

        if (*verify) {
            taut::SweepConfig config;
            config.genus = range_flag(g_text);
            config.r = range_flag(r_text);
            config.s = range_flag(s_text);
            config.m = range_flag(m_text);
            config.levels = range_flag(levels_text);
            config.n1 = n1;
            config.n2 = n2;
            const auto resolved = taut::default_sweep(relation, config);
            if (auto problem = taut::exceeds_desk_bounds(relation, resolved)) {
                if (!force) throw UsageError(*problem + "; pass --force to run anyway");
                warn(*problem + "; combinatorial growth may make this slow");
            }

            load_cache_into(engine, cache_file);
            const auto reports = taut::run_sweep(engine, relation, resolved);
            save_cache_from(engine, cache_file);

            std::string body;
            if (format == "json") {
                body = taut::to_json(reports, !no_timing);
            } else if (format == "csv") {
                body = taut::to_csv(reports, !no_timing);
            } else {
                for (const auto& r : reports) body += taut::to_text(r) + '\n';
            }

            std::size_t passed = 0;
            for (const auto& r : reports) passed += r.pass ? 1 : 0;
            if (out_path.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(out_path, std::ios::trunc);
                if (!out) throw std::runtime_error("cannot write report file '" + out_path + "'");
                out << body;
                std::cout << relation << ": " << passed << "/" << reports.size() << " passed\n";
            }
            return passed == reports.size() ? 0 : kExitFail;
        }

        if (*cache_save) {
            load_cache_into(engine, cache_file);
            const auto range = range_flag(warm_genus);
            warm(engine, *range, warm_n);
            taut::cache_save(taut::snapshot(engine), cache_path);
            std::cout << "saved " << engine.stats().entries << " entries to " << cache_path << '\n';
            return 0;
        }

        if (*cache_load) {
            const auto store = taut::cache_load(cache_path);
            if (store.version != taut::kEngineVersion) {
                warn("cache written by '" + store.version + "'; revalidating every entry");
            }
            taut::CorrelatorEngine checker;
            std::size_t bad = 0;
            for (const auto& [key, value] : store.entries) {
                if (checker.psi_kappa_integral(key.genus, key.psi, key.kappa) != value) {
                    ++bad;
                    std::cerr << "mismatch: genus " << key.genus << " entry disagrees with recomputation\n";
                }
            }
            std::cout << "loaded " << store.entries.size() << " entries, " << bad << " mismatches\n";
            return bad == 0 ? 0 : kExitFail;
        }

        if (*cache_stats) {
            const auto store = taut::cache_load(cache_path);
            std::cout << store.entries.size() << " entries";
            if (!store.entries.empty()) std::cout << ", max genus " << store.max_genus();
            std::cout << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
