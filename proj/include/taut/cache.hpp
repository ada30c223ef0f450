#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "taut/bigrat.hpp"
#include "taut/correlator.hpp"

namespace taut {

/// Snapshot of the correlator memo as stored on disk.
///
/// File layout, one entry per line, keys in ascending order:
///
///     #taut-rr-cache v1
///     #engine taut-rr 1.0.0
///     g;d1,d2,...;b1,b2,...;num/den
///
/// Empty lists leave their field empty, e.g. `1;2,0;;1/24`.
struct CacheStore {
    std::string version{kEngineVersion};
    std::map<CorrelatorKey, BigRat> entries;

    [[nodiscard]] int max_genus() const;
};

class CacheFormatError : public std::runtime_error {
public:
    CacheFormatError(std::size_t line, std::string detail, const std::string& source = "cache");
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

inline constexpr std::string_view kCacheHeader = "#taut-rr-cache v1";

CacheStore parse_cache(std::istream& in);
void write_cache(const CacheStore& store, std::ostream& out);

/// Throws std::runtime_error naming the path on I/O failure and
/// CacheFormatError for malformed content. A missing or empty file is an
/// empty store only for `load_cache_or_empty`.
CacheStore cache_load(const std::filesystem::path& path);
CacheStore cache_load_or_empty(const std::filesystem::path& path);
void cache_save(const CacheStore& store, const std::filesystem::path& path);

CacheStore snapshot(const CorrelatorEngine& engine);

/// Installs a store into an engine. Returns false (and warns) when the
/// store came from a different engine version; its entries are then checked
/// against recomputation as they are used.
bool install(CorrelatorEngine& engine, const CacheStore& store, const CorrelatorEngine::WarningSink& warn);

}  // namespace taut
