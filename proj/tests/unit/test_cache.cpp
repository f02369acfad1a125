#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rsavg/cache.hpp"
#include "rsavg/serialize.hpp"
#include "testing.hpp"

using namespace rsavg;
using support::error_code;
namespace fs = std::filesystem;

namespace {

class TempDir
{
  public:
    TempDir()
    {
        path_ = fs::temp_directory_path() / ("rsavg-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path const & path() const { return path_; }

  private:
    fs::path path_;
};

std::string slurp(fs::path const & p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void spit(fs::path const & p, std::string const & text)
{
    std::ofstream out(p, std::ios::trunc);
    out << text;
}

}  // namespace

TEST(Cache, Fnv1a)
{
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Cache, EntryRoundTrip)
{
    CacheEntry e;
    e.kind = "classgroup";
    e.key = "D=23";
    e.payload = "{\"x\":1}";
    e.checksum = fnv1a64(e.payload);
    auto const d = CacheEntry::decode(e.encode());
    EXPECT_EQ(d.kind, e.kind);
    EXPECT_EQ(d.key, e.key);
    EXPECT_EQ(d.payload, e.payload);
    EXPECT_EQ(d.checksum, e.checksum);
    EXPECT_EQ(error_code([] { CacheEntry::decode("not json"); }), ErrorCode::cache_corrupt);
}

TEST(Cache, StatusesAndRecovery)
{
    TempDir tmp;
    Cache const cache(tmp.path());
    CacheStatus st{};
    EXPECT_FALSE(cache.load("classgroup", "D=23", &st));
    EXPECT_EQ(st, CacheStatus::miss);

    cache.store("classgroup", "D=23", "payload");
    EXPECT_EQ(cache.load("classgroup", "D=23", &st), "payload");
    EXPECT_EQ(st, CacheStatus::hit);

    auto const file = cache.path_for("classgroup", "D=23");
    auto text = slurp(file);
    text.replace(text.find("payload"), 7, "paYload");
    spit(file, text);
    EXPECT_FALSE(cache.load("classgroup", "D=23", &st));
    EXPECT_EQ(st, CacheStatus::corrupt);

    spit(file, "{");
    EXPECT_FALSE(cache.load("classgroup", "D=23", &st));
    EXPECT_EQ(st, CacheStatus::corrupt);

    CacheEntry old;
    old.schema_version = cache_schema_version + 1;
    old.kind = "classgroup";
    old.key = "D=23";
    old.payload = "payload";
    old.checksum = fnv1a64(old.payload);
    spit(file, old.encode());
    EXPECT_FALSE(cache.load("classgroup", "D=23", &st));
    EXPECT_EQ(st, CacheStatus::stale);

    // a different key never collides onto the same file
    EXPECT_NE(cache.path_for("classgroup", "D=23"), cache.path_for("classgroup", "D=2/3"));
}

TEST(Cache, EnvironmentAndFlag)
{
    ::unsetenv(cache_dir_env);
    EXPECT_FALSE(Cache::from_environment().has_value());
    ::setenv(cache_dir_env, "/tmp/from-env", 1);
    EXPECT_EQ(Cache::from_environment()->dir(), fs::path("/tmp/from-env"));
    EXPECT_EQ(Cache::from_environment("/tmp/from-flag")->dir(), fs::path("/tmp/from-flag"));
    ::unsetenv(cache_dir_env);
}

TEST(Cache, CachedObjectsRoundTrip)
{
    TempDir tmp;
    Cache const cache(tmp.path());
    auto const G = cached_class_group(&cache, 39);
    auto const G2 = cached_class_group(&cache, 39);
    EXPECT_EQ(G->elements(), G2->elements());

    auto const T = cached_rep_table(&cache, G, 40);
    EXPECT_EQ(cached_rep_table(&cache, G, 40).rows(), T.rows());

    auto const K = cached_kernel(&cache, G, 7, 2, 10);
    auto const K2 = cached_kernel(&cache, G, 7, 2, 10);
    EXPECT_EQ(K2.rows(), K.rows());
    EXPECT_EQ(K2.aux().q, K.aux().q);

    auto const M = cached_brandt(&cache, 37, 10);
    auto const M2 = cached_brandt(&cache, 37, 10);
    EXPECT_EQ(M2.matrices(), M.matrices());
    EXPECT_EQ(M2.weights(), M.weights());

    std::size_t files = 0;
    for (auto const & e : fs::recursive_directory_iterator(tmp.path()))
        if (e.is_regular_file()) ++files;
    EXPECT_EQ(files, 4u);

    // corrupted files are recomputed and overwritten
    for (auto const & e : fs::recursive_directory_iterator(tmp.path()))
        if (e.is_regular_file()) spit(e.path(), "garbage");
    EXPECT_EQ(cached_brandt(&cache, 37, 10).matrices(), M.matrices());
    EXPECT_EQ(cached_kernel(&cache, G, 7, 2, 10).rows(), K.rows());
    EXPECT_EQ(cached_brandt(nullptr, 37, 10).matrices(), M.matrices());
}

TEST(Serialize, RejectsMalformedPayloads)
{
    auto const G = support::group(23);
    EXPECT_EQ(error_code([] { deserialize_class_group("{}"); }), ErrorCode::cache_corrupt);
    EXPECT_EQ(error_code([&] { deserialize_rep_table("[1,2]", G); }), ErrorCode::cache_corrupt);
    EXPECT_EQ(error_code([] { deserialize_brandt("{\"N\": 11}"); }), ErrorCode::cache_corrupt);
    RepTable const T(G, 5);
    EXPECT_EQ(deserialize_rep_table(serialize(T), G).rows(), T.rows());
    EXPECT_EQ(deserialize_class_group(serialize(*G))->elements(), G->elements());
    EXPECT_EQ(parse_orientation(to_string(Orientation::inverse)), Orientation::inverse);
}
