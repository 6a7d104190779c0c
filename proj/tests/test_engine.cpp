#include <gtest/gtest.h>

#include <vector>

#include "adjdyn/engine.hpp"
#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/systems.hpp"
#include "adjdyn/topology.hpp"
#include "oracles.hpp"

using namespace adjdyn;

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

std::vector<int> as_ints(const StateVector& v) { return {v.begin(), v.end()}; }
StateVector as_reals(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::vector<int> random_bits(Rng& rng, std::size_t n) {
    std::vector<int> out(n);
    for (auto& b : out) b = rng.bernoulli(0.5) ? 1 : 0;
    return out;
}

}  // namespace

TEST(StateHistory, Basics) {
    StateHistory h(3);
    EXPECT_TRUE(h.empty());
    h.append(StateVector{1, 2, 3});
    h.append(StateVector{4, 5, 6});
    EXPECT_EQ(h.size(), 2u);
    EXPECT_EQ(h.row(1)[2], 6.0);
    EXPECT_EQ(kind_of([&] { h.append(StateVector{1}); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(StateHistory::from_rows({{1, 2, 3}, {4, 5, 6}}), h);
    EXPECT_EQ(kind_of([] { StateHistory::from_rows({{1, 2}, {3}}); }), ErrorKind::DimensionMismatch);
}

TEST(DynamicalSystem, ConstructorChecks) {
    const auto m = generate_ca_1d({5, 1, true}, {{4, 2, 1}, 1});
    EXPECT_EQ(kind_of([&] { DynamicalSystem(m, elementary_rule(1), StateVector(4)); }), ErrorKind::DimensionMismatch);
    EXPECT_EQ(kind_of([&] { DynamicalSystem(m, elementary_rule(1), StateVector{0, 1, 2, 0, 0}); }),
              ErrorKind::BadStateValue);
    EXPECT_EQ(kind_of([] { DynamicalSystem(SparseMatrix::from_triplets(2, 3, {}), tanh_map(), StateVector(2)); }),
              ErrorKind::NotSquare);
}

TEST(DynamicalSystem, RunRecordsAndAdvancesTime) {
    auto sys = elementary_ca(8, 90, true, one_hot_state(8, 4));
    const auto h = sys.run(4, true);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->size(), 5u);
    EXPECT_EQ(sys.time(), 4u);
    EXPECT_EQ(h->row(0)[4], 1.0);
    EXPECT_EQ(std::vector<double>(h->row(4).begin(), h->row(4).end()), sys.state());
    EXPECT_FALSE(sys.run(3, false));
    EXPECT_EQ(sys.time(), 7u);
    sys.set_state(zeros_state(8));
    EXPECT_EQ(sys.time(), 0u);
    EXPECT_EQ(kind_of([&] { sys.set_state(StateVector(8, 0.5)); }), ErrorKind::BadStateValue);
}

TEST(ElementaryCa, AllRulesMatchOracle) {
    Rng rng(2024);
    for (int rule = 0; rule < 256; ++rule) {
        for (bool wrapped : {true, false}) {
            for (int trial = 0; trial < 3; ++trial) {
                const std::size_t width = 5 + rng.below(20);
                auto s = random_bits(rng, width);
                auto sys = elementary_ca(width, rule, wrapped, as_reals(s));
                for (int t = 0; t < 20; ++t) {
                    sys.step();
                    s = oracle::elementary_step(s, rule, wrapped);
                    ASSERT_EQ(as_ints(sys.state()), s) << "rule " << rule << " t " << t;
                }
            }
        }
    }
}

TEST(ElementaryCa, Rule110FromSingleCell) {
    auto sys = elementary_ca(8, 110, true, one_hot_state(8, 4));
    sys.step();
    // Cell 4 is set; 110 grows leftward.
    EXPECT_EQ(as_ints(sys.state()), (std::vector<int>{0, 0, 0, 1, 1, 0, 0, 0}));
}

TEST(Life, MatchesOracle) {
    Rng rng(99);
    for (bool wrapped : {true, false}) {
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t w = 3 + rng.below(12), h = 3 + rng.below(12);
            auto s = random_bits(rng, w * h);
            auto sys = game_of_life(w, h, wrapped, as_reals(s));
            for (int t = 0; t < 30; ++t) {
                sys.step();
                s = oracle::life_step(s, static_cast<long>(w), static_cast<long>(h), wrapped);
                ASSERT_EQ(as_ints(sys.state()), s) << "trial " << trial << " t " << t;
            }
        }
    }
}

TEST(Life, BlinkerAndGlider) {
    auto blinker = game_of_life(5, 5, true, blinker_state(5, 5));
    const auto start = blinker.state();
    blinker.step();
    EXPECT_NE(blinker.state(), start);
    blinker.step();
    EXPECT_EQ(blinker.state(), start);

    auto glider = game_of_life(7, 7, true, glider_state(7, 7, 0, 0));
    const auto g0 = glider.state();
    for (int t = 1; t <= 28; ++t) {
        glider.step();
        if (t < 28) EXPECT_NE(glider.state(), g0) << t;
    }
    EXPECT_EQ(glider.state(), g0);
}

TEST(Rbn, MatchesOracle) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t n = 12;
        const auto graph = generate_random_digraph(n, 2, PositionalBase{2}, false, seed);
        const auto tables = random_boolean_tables(n, 2, derive_seed(seed, 1));
        auto sys = random_boolean_network(n, 2, seed, zeros_state(n));
        ASSERT_EQ(sys.matrix(), graph.matrix);
        ASSERT_EQ(sys.rule(), tables);
        Rng rng(seed + 100);
        auto s = random_bits(rng, n);
        sys.set_state(as_reals(s));
        const auto& t = std::get<PerNodeLut>(tables.variant()).tables;
        for (int step = 0; step < 50; ++step) {
            sys.step();
            s = oracle::rbn_step(s, graph.inputs, t);
            ASSERT_EQ(as_ints(sys.state()), s);
        }
    }
}

TEST(ContinuousOrders, MixThenMapVsMapThenMix) {
    const auto m = SparseMatrix::from_triplets(2, 2, {{0, 0, 0.5}, {0, 1, 0.5}, {1, 0, 1.0}});
    const StateVector x{0.2, 0.6};
    DynamicalSystem mix_first(m, logistic_map(4.0, ApplyOrder::MixThenMap), x);
    DynamicalSystem map_first(m, logistic_map(4.0, ApplyOrder::MapThenMix), x);
    mix_first.step();
    map_first.step();
    auto g = [](double v) { return 4.0 * v * (1.0 - v); };
    EXPECT_DOUBLE_EQ(mix_first.state()[0], g(0.5 * 0.2 + 0.5 * 0.6));
    EXPECT_DOUBLE_EQ(mix_first.state()[1], g(0.2));
    EXPECT_DOUBLE_EQ(map_first.state()[0], 0.5 * g(0.2) + 0.5 * g(0.6));
    EXPECT_DOUBLE_EQ(map_first.state()[1], g(0.2));
}

TEST(DynamicalSystem, KeyErrorsPropagate) {
    // Rule 30 table on a matrix whose keys run past 7.
    const auto m = SparseMatrix::from_triplets(2, 2, {{0, 0, 8}, {1, 1, 1}});
    DynamicalSystem sys(m, elementary_rule(30), StateVector{1, 1});
    EXPECT_EQ(kind_of([&] { sys.step(); }), ErrorKind::KeyOutOfTable);
    const auto half = SparseMatrix::from_triplets(1, 1, {{0, 0, 0.5}});
    DynamicalSystem frac(half, elementary_rule(30), StateVector{1});
    EXPECT_EQ(kind_of([&] { frac.step(); }), ErrorKind::NonIntegerKey);
}
