#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dpg/emit.hpp"
#include "dpg/pipeline.hpp"

using namespace dpg;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(DPG_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool keys_sorted(const nlohmann::json& j) {
    if (j.is_object()) {
        std::string prev;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first && it.key() < prev) return false;
            prev = it.key();
            first = false;
            if (!keys_sorted(it.value())) return false;
        }
    } else if (j.is_array()) {
        for (const auto& x : j)
            if (!keys_sorted(x)) return false;
    }
    return true;
}

}  // namespace

TEST(Pipeline, InvalidInstances) {
    EXPECT_THROW(validate_instance(Instance{{Family::C, 2}, 2}), InstanceError);
    EXPECT_THROW(validate_instance(Instance{{Family::C, 3}, 6}), InstanceError);
    try {
        validate_instance(Instance{{Family::TwoAOdd, 3}, 3});
        FAIL() << "expected an exception";
    } catch (const InstanceError& ex) {
        EXPECT_STREQ(ex.what(), "Hermitian family requires square q");
    }
    EXPECT_NO_THROW(validate_instance(Instance{{Family::TwoAOdd, 3}, 4}));
    EXPECT_NO_THROW(validate_instance(Instance{{Family::TwoAOdd, 3}, 0}));
    EXPECT_THROW(run_pipeline(Instance{{Family::C, 3}, 3}, {100}), InstanceError);
}

TEST(Pipeline, ConcreteRunPasses) {
    WModule<AlgNum> w;
    auto r = run_pipeline(Instance{{Family::D, 3}, 2}, {}, &w);
    EXPECT_TRUE(r.passed()) << r.summary();
    EXPECT_EQ(w.dim(), 6u);
    EXPECT_TRUE(keys_sorted(r.to_json(true)));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("verify --family D --q 2 --D 3").code, 0);
    auto bad = cli("verify --family 2A-odd --q 3 --D 3");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("Hermitian family requires square q"), std::string::npos) << bad.out;
    EXPECT_EQ(cli("verify --family C --q 2 --D 2").code, 2);
    EXPECT_EQ(cli("verify --family X --q 2 --D 3").code, 2);
    EXPECT_EQ(cli("nonsense").code, 2);
    EXPECT_EQ(cli("verify --family C --q 2 --D 3 --out /nonexistent/dir/r.json").code, 2);
    EXPECT_EQ(cli("sweep --instances ''").code, 2);
}

TEST(Cli, EmitIsDeterministicAndMatchesTheLibrary) {
    const std::string args = "emit --what ell-polys --format csv --family C --q 2 --D 3";
    auto a = cli(args), b = cli(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, ell_polys_csv(build_family(Rational(1), 3), 2));

    auto j1 = cli("emit --what orthogonality --format json --family B --D 3");
    auto j2 = cli("emit --what orthogonality --format json --family B --D 3");
    ASSERT_EQ(j1.code, 0) << j1.out;
    EXPECT_EQ(j1.out, j2.out);
    auto j = nlohmann::json::parse(j1.out);
    EXPECT_TRUE(keys_sorted(j));
    EXPECT_TRUE(j["gram_is_diagonal_with_cell_sizes"].get<bool>());
}

TEST(Cli, ReportFileAndEdgeList) {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "dpg_test_pipeline";
    fs::create_directories(dir);
    auto path = (dir / "report.json").string();
    ASSERT_EQ(cli("verify --family C --q 2 --D 3 --out " + path).code, 0);
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_TRUE(keys_sorted(j));
    ASSERT_TRUE(j.contains("checks"));
    for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass");

    auto g = cli("export-graph --family D --q 2 --D 3");
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(g.out.substr(0, g.out.find('\n')), "# D 2 3 30");
    fs::remove_all(dir);
}
