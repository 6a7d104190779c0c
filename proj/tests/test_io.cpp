#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "adjdyn/analysis.hpp"
#include "adjdyn/config.hpp"
#include "adjdyn/error.hpp"
#include "adjdyn/io.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/topology.hpp"

using namespace adjdyn;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "adjdyn_test_io";
    fs::create_directories(dir);
    return dir / name;
}

StateHistory awkward_history() {
    return StateHistory::from_rows({{0.1, -0.0, 1e-300, 5e-324},
                                    {1.0 / 3.0, -2.5e17, std::nextafter(1.0, 2.0), 123456789.0},
                                    {std::numeric_limits<double>::max(), -1, 0, 42}});
}

}  // namespace

TEST(StatesCsv, RoundTripIsExact) {
    const auto h = awkward_history();
    std::stringstream ss;
    write_states_csv(ss, h);
    const auto back = read_states_csv(ss);
    ASSERT_EQ(back.size(), h.size());
    for (std::size_t i = 0; i < h.values().size(); ++i) {
        EXPECT_EQ(back.values()[i], h.values()[i]);
    }
}

TEST(StatesCsv, Malformed) {
    std::istringstream ragged("1,2\n3\n");
    EXPECT_EQ(kind_of([&] { read_states_csv(ragged); }), ErrorKind::DimensionMismatch);
    std::istringstream junk("1,x\n");
    EXPECT_EQ(kind_of([&] { read_states_csv(junk); }), ErrorKind::ParseError);
}

TEST(StatesLfst, LayoutAndRoundTrip) {
    const auto h = StateHistory::from_rows({{1.0, 2.0}, {3.0, -0.5}});
    std::stringstream ss;
    write_states_lfst(ss, h);
    const std::string bytes = ss.str();
    ASSERT_EQ(bytes.size(), 4u + 4 + 4 + 4 * 8);
    EXPECT_EQ(bytes.substr(0, 4), "LFST");
    EXPECT_EQ(bytes.substr(4, 4), std::string("\x02\x00\x00\x00", 4));
    EXPECT_EQ(bytes.substr(8, 4), std::string("\x02\x00\x00\x00", 4));
    // 1.0 little-endian.
    EXPECT_EQ(bytes.substr(12, 8), std::string("\x00\x00\x00\x00\x00\x00\xf0\x3f", 8));
    EXPECT_EQ(read_states_lfst(ss), h);

    const auto awkward = awkward_history();
    std::stringstream s2;
    write_states_lfst(s2, awkward);
    EXPECT_EQ(read_states_lfst(s2), awkward);
}

TEST(StatesLfst, Truncated) {
    std::stringstream ss;
    write_states_lfst(ss, StateHistory::from_rows({{1.0, 2.0}}));
    std::istringstream cut(ss.str().substr(0, 20));
    EXPECT_THROW(read_states_lfst(cut), Error);
    std::istringstream magic("LFSX\x01\x00\x00\x00");
    EXPECT_THROW(read_states_lfst(magic), Error);
}

TEST(States, FileFormatDetection) {
    const auto h = awkward_history();
    for (auto fmt : {StateFormat::Csv, StateFormat::Lfst}) {
        const auto path = scratch(fmt == StateFormat::Csv ? "h.csv" : "h.lfst");
        write_states(path, h, fmt);
        const auto back = read_states(path);
        EXPECT_EQ(back.size(), h.size());
        for (std::size_t i = 0; i < h.values().size(); ++i) EXPECT_EQ(back.values()[i], h.values()[i]);
    }
    EXPECT_EQ(kind_of([] { read_states(scratch("missing.csv")); }), ErrorKind::IoError);
}

TEST(Stencil, ParseAndRoundTrip) {
    std::istringstream is("# von Neumann\n0 1 0\n1, 0, 1\n\n0 1 0\ncenter 1 1\n");
    const auto s = read_stencil(is);
    EXPECT_EQ(s.weights, von_neumann_stencil().weights);
    EXPECT_EQ(s.center_row, 1u);
    EXPECT_EQ(s.center_col, 1u);
    std::istringstream again(stencil_to_text(moore_stencil(9)));
    const auto m = read_stencil(again);
    EXPECT_EQ(m.weights, moore_stencil(9).weights);
}

TEST(Stencil, Malformed) {
    for (const char* bad : {"1 1\n", "1 1\ncenter 2 0\n", "1 1\n1\ncenter 0 0\n", "1 a\ncenter 0 0\n",
                            "center 0 0\n", "1 1\ncenter 0\n"}) {
        std::istringstream is(bad);
        EXPECT_THROW(read_stencil(is), Error) << bad;
    }
}

TEST(Render, Text) {
    const auto h = StateHistory::from_rows({{0, 1, 1, 0}, {0, 0, 0, 0}});
    EXPECT_EQ(render_text(h, 2, 2), ".#\n#.\n\n..\n..\n");
    EXPECT_EQ(render_text(StateHistory::from_rows({{0, 2, 1}}), 3, 1), "021\n");
    EXPECT_EQ(kind_of([&] { render_text(h, 3, 1); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([] { render_text(StateHistory::from_rows({{0, 0.5}}), 2, 1); }), ErrorKind::BadStateValue);
    EXPECT_EQ(kind_of([] { render_text(StateHistory::from_rows({{11}}), 1, 1); }), ErrorKind::InvalidArgument);
}

TEST(Render, Pgm) {
    const StateVector s{0, 1, 1, 0, 0, 1};
    EXPECT_EQ(render_pgm(s, 3, 2, 2), "P2\n3 2\n1\n0 1 1\n0 0 1\n");
    const auto paths = write_pgm_frames(StateHistory::from_rows({s, s}), 3, 2, 2, scratch("frame").string());
    ASSERT_EQ(paths.size(), 2u);
    EXPECT_EQ(paths[1].filename(), "frame_0001.pgm");
    std::ifstream f(paths[0]);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(buf.str(), render_pgm(s, 3, 2, 2));
}

TEST(Trajectory, CsvAndSvg) {
    Projection p;
    p.points = {{1.5, -2.0}, {0.0, 0.25}};
    std::ostringstream os;
    write_trajectory_csv(os, p);
    EXPECT_EQ(os.str(), "step,pc1,pc2\n0,1.5,-2\n1,0,0.25\n");
    const auto svg = trajectory_svg(p);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("1.5,-2 0,0.25"), std::string::npos);
}

TEST(RunConfig, ParseAndRoundTrip) {
    const auto c = parse_run_config(
        "# glider\nkind = life\nwidth = 7\nheight = 7\nsteps = 28   # one lap\ninit = glider\n"
        "format = lfst\noutput = out.lfst\n");
    EXPECT_EQ(c.system.kind, SystemKind::Life);
    EXPECT_EQ(c.system.width, 7u);
    EXPECT_EQ(c.steps, 28u);
    EXPECT_EQ(c.init, InitKind::Glider);
    EXPECT_EQ(c.format, StateFormat::Lfst);
    EXPECT_EQ(c.output, "out.lfst");
    EXPECT_FALSE(c.has_seed);
    EXPECT_EQ(parse_run_config(write_run_config(c)), c);

    RunConfig esn;
    esn.system.kind = SystemKind::Esn;
    esn.system.nodes = 30;
    esn.system.density = 0.125;
    esn.system.rho = 0.95;
    esn.system.seed = 1234567890123ULL;
    esn.has_seed = true;
    esn.steps = 10;
    esn.init = InitKind::Random;
    EXPECT_EQ(parse_run_config(write_run_config(esn)), esn);
    EXPECT_TRUE(needs_seed(esn));
    EXPECT_FALSE(needs_seed(c));
}

TEST(RunConfig, Errors) {
    for (const char* bad : {"kind = life\ncolour = red\n", "kind = pond\n", "width = -3\n", "width\n",
                            "wrapped = maybe\n", "eps = 0.3x\n", "init = sideways\n"}) {
        EXPECT_EQ(kind_of([&] { parse_run_config(std::string(bad)); }), ErrorKind::ParseError) << bad;
    }
}

TEST(RunConfig, InitialStates) {
    RunConfig c;
    c.system.kind = SystemKind::ElementaryCa;
    c.system.width = 9;
    c.init = InitKind::Center;
    EXPECT_EQ(initial_state(c), (StateVector{0, 0, 0, 0, 1, 0, 0, 0, 0}));
    c.init = InitKind::Random;
    c.has_seed = true;
    c.system.seed = 5;
    EXPECT_EQ(initial_state(c), initial_state(c));
    c.system.kind = SystemKind::Cml;
    for (double v : initial_state(c)) EXPECT_TRUE(v >= 0.0 && v < 1.0);
    c.init = InitKind::File;
    c.init_file = scratch("init.csv").string();
    write_states(c.init_file, StateHistory::from_rows({{0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5}}),
                 StateFormat::Csv);
    EXPECT_EQ(initial_state(c), StateVector(9, 0.5));
}
