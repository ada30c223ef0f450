#include "taut/cache.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace taut {

CacheFormatError::CacheFormatError(std::size_t line, std::string detail, const std::string& source)
    : std::runtime_error(source + " line " + std::to_string(line) + ": " + detail), line_(line), detail_(std::move(detail)) {}

int CacheStore::max_genus() const {
    int g = -1;
    for (const auto& [key, value] : entries) g = std::max(g, key.genus);
    return g;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_int(std::string_view s, std::size_t line) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw CacheFormatError(line, "bad integer '" + std::string(s) + "'");
    }
    return v;
}

std::vector<int> parse_list(std::string_view s, std::size_t line) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part, line));
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

CacheStore parse_cache(std::istream& in) {
    CacheStore store;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    bool foreign_format = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (line.starts_with("#taut-rr-cache ")) {
                saw_header = true;
                if (line != kCacheHeader) {
                    foreign_format = true;
                    store.version = line.substr(1);
                }
            } else if (line.starts_with("#engine ") && !foreign_format) {
                store.version = line.substr(8);
            }
            continue;
        }
        if (!saw_header) throw CacheFormatError(lineno, "missing '#taut-rr-cache' header");
        const auto fields = split(line, ';');
        if (fields.size() != 4) {
            throw CacheFormatError(lineno, "expected 4 ';'-separated fields, got " + std::to_string(fields.size()));
        }
        const int genus = parse_int(fields[0], lineno);
        auto psi = parse_list(fields[1], lineno);
        auto kappa = parse_list(fields[2], lineno);
        if (genus < 0) throw CacheFormatError(lineno, "negative genus");
        for (int d : psi) {
            if (d < 0) throw CacheFormatError(lineno, "negative descendent level");
        }
        for (int b : kappa) {
            if (b <= 0) throw CacheFormatError(lineno, "kappa index must be positive");
        }
        BigRat value;
        try {
            value = BigRat::parse(fields[3]);
        } catch (const std::exception& e) {
            throw CacheFormatError(lineno, e.what());
        }
        store.entries.insert_or_assign(CorrelatorKey::make(genus, std::move(psi), std::move(kappa)), value);
    }
    return store;
}

void write_cache(const CacheStore& store, std::ostream& out) {
    out << kCacheHeader << '\n';
    out << "#engine " << store.version << '\n';
    for (const auto& [key, value] : store.entries) {
        out << key.genus << ';' << join(key.psi) << ';' << join(key.kappa) << ';' << value.str() << '\n';
    }
}

CacheStore cache_load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cache file '" + path.string() + "'");
    try {
        return parse_cache(in);
    } catch (const CacheFormatError& e) {
        throw CacheFormatError(e.line(), e.detail(), "'" + path.string() + "'");
    }
}

CacheStore cache_load_or_empty(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return {};
    return cache_load(path);
}

void cache_save(const CacheStore& store, const std::filesystem::path& path) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file '" + path.string() + "'");
        write_cache(store, out);
        if (!out) throw std::runtime_error("write failed for cache file '" + path.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

CacheStore snapshot(const CorrelatorEngine& engine) {
    CacheStore store;
    store.entries = engine.entries();
    return store;
}

bool install(CorrelatorEngine& engine, const CacheStore& store, const CorrelatorEngine::WarningSink& warn) {
    const bool trusted = store.version == kEngineVersion;
    if (!trusted && warn) {
        warn("cache written by '" + store.version + "', expected '" + std::string(kEngineVersion) +
             "'; entries will be revalidated on use");
    }
    engine.absorb(store.entries, trusted);
    return trusted;
}

}  // namespace taut
