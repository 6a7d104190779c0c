#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "adjdyn/cli.hpp"
#include "adjdyn/io.hpp"
#include "adjdyn/matrix_market.hpp"
#include "adjdyn/systems.hpp"
#include "adjdyn/topology.hpp"

using namespace adjdyn;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "adjdyn_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST(Cli, GenCa1dMatchesGolden) {
    const auto r = invoke({"gen", "ca1d", "--width", "16", "--stencil", "4,2,1", "--center", "1", "--wrapped"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, slurp(ADJDYN_TEST_DATA "/eca_w16_wrapped.mtx"));
    EXPECT_NE(r.err.find("nnz = 48"), std::string::npos);
}

TEST(Cli, GenCa2dFromFileAndBuiltin) {
    const auto path = scratch("vn.mtx");
    const auto a = invoke({"gen", "ca2d", "--width", "4", "--height", "4", "--stencil-file",
                           ADJDYN_TEST_DATA "/von_neumann.txt", "--wrapped", "-o", path.string()});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("symmetric = true"), std::string::npos);
    EXPECT_EQ(slurp(path), slurp(ADJDYN_TEST_DATA "/von_neumann_4x4_wrapped.mtx"));
    const auto b = invoke({"gen", "ca2d", "--width", "4", "--height", "4", "--neighborhood", "von_neumann",
                           "--wrapped"});
    EXPECT_EQ(b.out, slurp(path));
}

TEST(Cli, GenRandomNeedsSeed) {
    EXPECT_EQ(invoke({"gen", "rbn", "--nodes", "8", "--k", "2"}).code, cli::kExitUsage);
    const auto r = invoke({"gen", "rbn", "--nodes", "8", "--k", "2", "--seed", "3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    EXPECT_EQ(read_matrix_market(is), generate_random_digraph(8, 2, PositionalBase{2}, false, 3).matrix);
    const auto esn = invoke({"gen", "esn", "--nodes", "40", "--density", "0.1", "--rho", "0.9", "--seed", "1"});
    ASSERT_EQ(esn.code, 0) << esn.err;
    std::istringstream es(esn.out);
    EXPECT_NEAR(spectral_radius(read_matrix_market(es), 200000, 1e-13), 0.9, 1e-6);
}

TEST(Cli, DataErrorsExitThree) {
    const auto r = invoke({"gen", "ca1d", "--width", "2", "--stencil", "4,2,1", "--center", "1"});
    EXPECT_EQ(r.code, cli::kExitData);
    EXPECT_NE(r.err.find("StencilWiderThanGrid"), std::string::npos);
    EXPECT_EQ(invoke({"gen", "rbn", "--nodes", "3", "--k", "3", "--seed", "1"}).code, cli::kExitData);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"gen", "ca1d", "--width", "x", "--stencil", "1", "--center", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"gen", "ca2d", "--width", "4", "--height", "4"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST(Cli, RunRenderCycleAndPca) {
    const auto cfg = scratch("glider.cfg");
    const auto states = scratch("glider.lfst");
    {
        std::ofstream f(cfg);
        f << "kind = life\nwidth = 7\nheight = 7\nsteps = 40\ninit = glider\nformat = lfst\n"
          << "output = " << states.string() << "\n";
    }
    const auto run = invoke({"run", "-c", cfg.string()});
    ASSERT_EQ(run.code, 0) << run.err;
    const auto h = read_states(states);
    EXPECT_EQ(h.size(), 41u);

    const auto cycle = invoke({"cycle", "--states", states.string()});
    ASSERT_EQ(cycle.code, 0);
    EXPECT_EQ(cycle.out, "transient = 0\nperiod = 28\n");
    const auto approx = invoke({"cycle", "--states", states.string(), "--tol", "1e-9"});
    EXPECT_NE(approx.out.find("approximate = true"), std::string::npos);

    const auto txt = invoke({"render", "--states", states.string(), "--width", "7", "--height", "7"});
    ASSERT_EQ(txt.code, 0);
    EXPECT_EQ(txt.out.substr(0, 8 * 3), ".#.....\n..#....\n###....\n");

    const auto pgm = invoke({"render", "--states", states.string(), "--width", "7", "--format", "pgm", "-o",
                             scratch("g").string()});
    ASSERT_EQ(pgm.code, 0) << pgm.err;
    EXPECT_TRUE(fs::exists(scratch("g_0040.pgm")));

    const auto svg = scratch("traj.svg");
    const auto pca = invoke({"pca", "--states", states.string(), "--svg", svg.string()});
    ASSERT_EQ(pca.code, 0) << pca.err;
    EXPECT_EQ(pca.out.substr(0, 13), "step,pc1,pc2\n");
    EXPECT_TRUE(fs::exists(svg));

    // Overrides on the command line.
    const auto csv = invoke({"run", "-c", cfg.string(), "--steps", "3", "--format", "csv", "-o", "-"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 4);
}

TEST(Cli, RunRandomWithoutSeedIsUsageError) {
    const auto cfg = scratch("esn.cfg");
    {
        std::ofstream f(cfg);
        f << "kind = esn\nnodes = 20\nsteps = 5\n";
    }
    EXPECT_EQ(invoke({"run", "-c", cfg.string()}).code, cli::kExitUsage);
    {
        std::ofstream f(cfg, std::ios::app);
        f << "seed = 4\n";
    }
    EXPECT_EQ(invoke({"run", "-c", cfg.string()}).code, cli::kExitOk);
}

TEST(Cli, Bench) {
    const auto r = invoke({"bench", "--n", "200", "--density", "0.01", "--repeats", "3", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("speedup"), std::string::npos);
}
