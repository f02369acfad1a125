#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "rsavg/brandt.hpp"
#include "rsavg/kernel.hpp"
#include "rsavg/quadfield.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

inline constexpr int cache_schema_version = 1;
inline constexpr const char * cache_dir_env = "RSAVG_CACHE_DIR";

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string const & bytes);

struct CacheEntry {
    int schema_version = cache_schema_version;
    std::string kind;  // classgroup | reptable | kernel | brandt
    std::string key;
    std::string payload;
    std::uint64_t checksum = 0;

    std::string encode() const;
    static CacheEntry decode(std::string const & text);  // throws Error(cache_corrupt)
};

enum class CacheStatus { hit, miss, stale, corrupt };

/// One file per (kind, key) under the cache directory; writes go to a
/// temporary file that is renamed into place.
class Cache
{
  public:
    explicit Cache(std::filesystem::path dir);

    /// Directory from the flag if nonempty, else from RSAVG_CACHE_DIR; no
    /// cache when both are empty.
    static std::optional<Cache> from_environment(std::string const & flag_override = {});

    std::filesystem::path const & dir() const { return dir_; }
    std::filesystem::path path_for(std::string const & kind, std::string const & key) const;

    /// Payload on a hit. Stale (other schema version) and corrupt entries
    /// report their status and return nothing, so the caller recomputes.
    std::optional<std::string> load(std::string const & kind, std::string const & key,
                                    CacheStatus * status = nullptr) const;
    void store(std::string const & kind, std::string const & key, std::string const & payload) const;

  private:
    std::filesystem::path dir_;
};

std::shared_ptr<ClassGroup const> cached_class_group(Cache const * cache, i64 D);
RepTable cached_rep_table(Cache const * cache, std::shared_ptr<ClassGroup const> const & G, i64 M_max);
KernelSeries cached_kernel(Cache const * cache, std::shared_ptr<ClassGroup const> const & G, i64 N, int k, i64 M_max,
                           Orientation orientation = Orientation::direct,
                           ConstantTerm convention = ConstantTerm::brandt);
BrandtModule cached_brandt(Cache const * cache, i64 N, i64 M_max, BrandtOptions const & options = {});

}  // namespace rsavg
