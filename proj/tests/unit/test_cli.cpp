#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(std::string const & args)
{
    std::string const cmd = std::string(RSAVG_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE * pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int const st = ::pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool contains(std::string const & s, std::string const & needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ClassGroup)
{
    auto const r = run("classgroup 23");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "\"h\":{\"num\":\"3\"")) << r.out;
    EXPECT_EQ(run("classgroup 8").status, 2);
    EXPECT_EQ(run("classgroup").status, 2);
}

TEST(Cli, Average)
{
    auto const r = run("average 23 5 2 0 1");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "\"exact_value\":{\"num\":\"1\",\"den\":\"23\"}")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"kernel_agrees\":true"));
    EXPECT_TRUE(contains(r.out, "aux_q=41"));
    auto const csv = run("average 3 5 1 0 1 --format csv");
    EXPECT_EQ(csv.status, 0);
    EXPECT_TRUE(contains(csv.out, "kind,D,N,k,m")) << csv.out;
    EXPECT_EQ(run("average 23 13 1 0 1").status, 2);  // 13 splits
    EXPECT_EQ(run("average 23 5 1 7 1").status, 2);   // no such character
}

TEST(Cli, BrandtVerify)
{
    auto const r = run("brandt-verify 3 11 10");
    EXPECT_EQ(r.status, 0);
    EXPECT_FALSE(contains(r.out, "\"equal\":false")) << r.out;
    EXPECT_TRUE(contains(r.out, "\"equal\":true"));
    EXPECT_EQ(run("brandt-verify 3 4 10").status, 2);
    EXPECT_EQ(run("brandt-verify 3 71 5 --brandt-bound 1").status, 3);
}

TEST(Cli, Scans)
{
    auto const s = run("scan stability --D 3..7 --N-max 20 --format csv");
    EXPECT_EQ(s.status, 0);
    EXPECT_TRUE(contains(s.out, "average,3,5,1,1,0,1,0,0,-3,3,0,true,true")) << s.out;
    EXPECT_EQ(run("scan nonvanishing --D 3..23 --N-max 60").status, 0);
    EXPECT_EQ(run("scan modp --D 23 --N 24..60 --p 5").status, 0);
    EXPECT_EQ(run("scan theorem6 --D 23 --N 24..200 --p 5").status, 0);
    EXPECT_EQ(run("scan subconvexity --D 23..47 --N-max 60").status, 0);
    EXPECT_EQ(run("scan bogus").status, 2);
    EXPECT_EQ(run("scan stability --D x..y").status, 2);
}

TEST(Cli, CacheDirectoryIsUsed)
{
    auto const dir = std::filesystem::temp_directory_path() / "rsavg-cli-cache-test";
    std::filesystem::remove_all(dir);
    auto const first = run("average 23 5 2 0 3 --cache-dir " + dir.string());
    auto const second = run("average 23 5 2 0 3 --cache-dir " + dir.string());
    EXPECT_EQ(first.status, 0);
    EXPECT_EQ(first.out, second.out);
    EXPECT_TRUE(std::filesystem::exists(dir));
    std::filesystem::remove_all(dir);
}
