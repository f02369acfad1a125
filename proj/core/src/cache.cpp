#include "rsavg/cache.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rsavg/error.hpp"
#include "rsavg/serialize.hpp"

namespace rsavg {

using nlohmann::json;

std::uint64_t fnv1a64(std::string const & bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex64(std::uint64_t x)
{
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << x;
    return os.str();
}

std::string file_stem(std::string const & key)
{
    std::string s;
    for (char c : key) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '=' || c == '_') ? c : '_';
    return s + "-" + hex64(fnv1a64(key)).substr(0, 8);
}

}  // namespace

std::string CacheEntry::encode() const
{
    return json{{"schema_version", schema_version},
                {"kind", kind},
                {"key", key},
                {"checksum", hex64(checksum)},
                {"payload", payload}}
        .dump();
}

CacheEntry CacheEntry::decode(std::string const & text)
{
    try {
        json const j = json::parse(text);
        CacheEntry e;
        e.schema_version = j.at("schema_version").get<int>();
        e.kind = j.at("kind").get<std::string>();
        e.key = j.at("key").get<std::string>();
        e.payload = j.at("payload").get<std::string>();
        e.checksum = std::stoull(j.at("checksum").get<std::string>(), nullptr, 16);
        return e;
    } catch (std::exception const & ex) {
        throw Error(ErrorCode::cache_corrupt, ex.what());
    }
}

Cache::Cache(std::filesystem::path dir)
    : dir_(std::move(dir))
{
}

std::optional<Cache> Cache::from_environment(std::string const & flag_override)
{
    if (!flag_override.empty()) return Cache(flag_override);
    if (char const * env = std::getenv(cache_dir_env); env && *env) return Cache(env);
    return std::nullopt;
}

std::filesystem::path Cache::path_for(std::string const & kind, std::string const & key) const
{
    return dir_ / kind / (file_stem(key) + ".json");
}

std::optional<std::string> Cache::load(std::string const & kind, std::string const & key, CacheStatus * status) const
{
    auto set = [&](CacheStatus s) {
        if (status) *status = s;
    };
    std::ifstream in(path_for(kind, key), std::ios::binary);
    if (!in) {
        set(CacheStatus::miss);
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    CacheEntry e;
    try {
        e = CacheEntry::decode(ss.str());
    } catch (Error const &) {
        set(CacheStatus::corrupt);
        return std::nullopt;
    }
    if (e.schema_version != cache_schema_version) {
        set(CacheStatus::stale);
        return std::nullopt;
    }
    if (e.kind != kind || e.key != key || fnv1a64(e.payload) != e.checksum) {
        set(CacheStatus::corrupt);
        return std::nullopt;
    }
    set(CacheStatus::hit);
    return e.payload;
}

void Cache::store(std::string const & kind, std::string const & key, std::string const & payload) const
{
    static std::atomic<unsigned long> counter{0};
    auto const target = path_for(kind, key);
    std::filesystem::create_directories(target.parent_path());
    CacheEntry e;
    e.kind = kind;
    e.key = key;
    e.payload = payload;
    e.checksum = fnv1a64(payload);
    std::ostringstream tmpname;
    tmpname << target.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
            << counter++;
    auto const tmp = target.parent_path() / tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << e.encode();
        if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::shared_ptr<ClassGroup const> cached_class_group(Cache const * cache, i64 D)
{
    auto const disc = FundamentalDiscriminant::validate(D);
    std::string const key = "D=" + std::to_string(D);
    if (cache) {
        if (auto p = cache->load("classgroup", key)) {
            try {
                return deserialize_class_group(*p);
            } catch (Error const &) {
            }
        }
    }
    auto G = std::make_shared<ClassGroup const>(disc);
    if (cache) cache->store("classgroup", key, serialize(*G));
    return G;
}

RepTable cached_rep_table(Cache const * cache, std::shared_ptr<ClassGroup const> const & G, i64 M_max)
{
    std::string const key = "D=" + std::to_string(G->D()) + ";M=" + std::to_string(M_max);
    if (cache) {
        if (auto p = cache->load("reptable", key)) {
            try {
                return deserialize_rep_table(*p, G);
            } catch (Error const &) {
            }
        }
    }
    RepTable T(G, M_max);
    if (cache) cache->store("reptable", key, serialize(T));
    return T;
}

KernelSeries cached_kernel(Cache const * cache, std::shared_ptr<ClassGroup const> const & G, i64 N, int k, i64 M_max,
                           Orientation orientation, ConstantTerm convention)
{
    std::string const key = "D=" + std::to_string(G->D()) + ";N=" + std::to_string(N) + ";k=" + std::to_string(k) +
                            ";M=" + std::to_string(M_max) + ";orientation=" + to_string(orientation) +
                            ";convention=" + to_string(convention);
    if (cache) {
        if (auto p = cache->load("kernel", key)) {
            try {
                return deserialize_kernel(*p, G);
            } catch (Error const &) {
            }
        }
    }
    KernelSeries K(G, N, k, M_max, orientation, convention);
    if (cache) cache->store("kernel", key, serialize(K));
    return K;
}

BrandtModule cached_brandt(Cache const * cache, i64 N, i64 M_max, BrandtOptions const & options)
{
    std::string const key = "N=" + std::to_string(N) + ";M=" + std::to_string(M_max);
    if (cache) {
        if (auto p = cache->load("brandt", key)) {
            try {
                return deserialize_brandt(*p);
            } catch (Error const &) {
            }
        }
    }
    BrandtModule M = build_module(N, M_max, options);
    if (cache) cache->store("brandt", key, serialize(M));
    return M;
}

}  // namespace rsavg
