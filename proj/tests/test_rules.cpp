#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "adjdyn/error.hpp"
#include "adjdyn/rules.hpp"

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

StateVector apply(const RuleSpec& rule, StateVector pre) {
    return apply_rule(rule, pre, StateVector(pre.size(), 0.0));
}

}  // namespace

TEST(ElementaryRule, WolframBits) {
    const auto r110 = std::get<PatternLut>(elementary_rule(110).variant());
    EXPECT_EQ(r110.table, (std::vector<int>{0, 1, 1, 1, 0, 1, 1, 0}));
    EXPECT_EQ(std::get<PatternLut>(elementary_rule(0).variant()).table, std::vector<int>(8, 0));
    EXPECT_EQ(std::get<PatternLut>(elementary_rule(255).variant()).table, std::vector<int>(8, 1));
    EXPECT_EQ(kind_of([] { elementary_rule(256); }), ErrorKind::RuleOutOfRange);
    EXPECT_EQ(kind_of([] { elementary_rule(-1); }), ErrorKind::RuleOutOfRange);
}

TEST(ApplyRule, PatternLookup) {
    const auto rule = elementary_rule(30);
    EXPECT_EQ(apply(rule, {0, 1, 2, 3, 4, 5, 6, 7}), (StateVector{0, 1, 1, 1, 1, 0, 0, 0}));
}

TEST(ApplyRule, KeyGuard) {
    const auto rule = elementary_rule(30);
    // Rounding noise inside the guard is absorbed.
    EXPECT_EQ(apply(rule, {3.0 + 4e-7, 1.0 - 9e-7}), (StateVector{1, 1}));
    EXPECT_EQ(kind_of([&] { apply(rule, {2.5}); }), ErrorKind::NonIntegerKey);
    EXPECT_EQ(kind_of([&] { apply(rule, {3.00001}); }), ErrorKind::NonIntegerKey);
    EXPECT_EQ(kind_of([&] { apply(rule, {8.0}); }), ErrorKind::KeyOutOfTable);
    EXPECT_EQ(kind_of([&] { apply(rule, {-1.0}); }), ErrorKind::KeyOutOfTable);
    EXPECT_EQ(kind_of([&] { apply(rule, {std::numeric_limits<double>::quiet_NaN()}); }),
              ErrorKind::NonIntegerKey);
    EXPECT_EQ(kind_of([&] { apply_rule(rule, StateVector{1, 2}, StateVector{0}); }),
              ErrorKind::DimensionMismatch);
}

TEST(LifeRule, CountTable) {
    const auto life = std::get<CountLut>(game_of_life_rule().variant());
    ASSERT_EQ(life.center_weight, 9u);
    ASSERT_EQ(life.table.size(), 18u);
    for (int own = 0; own <= 1; ++own) {
        for (int count = 0; count <= 8; ++count) {
            const int want = (count == 3 || (own == 1 && count == 2)) ? 1 : 0;
            EXPECT_EQ(life.table[static_cast<std::size_t>(count + 9 * own)], want) << own << " " << count;
        }
    }
}

TEST(LifeRule, LifeLikeVariant) {
    // HighLife B36/S23.
    const int birth[] = {3, 6};
    const int survive[] = {2, 3};
    const auto rule = life_like_rule(birth, survive);
    EXPECT_EQ(apply(rule, {6, 15, 12, 11, 16}), (StateVector{1, 0, 1, 1, 0}));
}

TEST(RandomBooleanTables, ShapeAndDeterminism) {
    const auto a = std::get<PerNodeLut>(random_boolean_tables(10, 3, 4).variant());
    ASSERT_EQ(a.tables.size(), 10u);
    int ones = 0;
    for (const auto& t : a.tables) {
        ASSERT_EQ(t.size(), 8u);
        for (int b : t) {
            ASSERT_TRUE(b == 0 || b == 1);
            ones += b;
        }
    }
    EXPECT_GT(ones, 10);
    EXPECT_LT(ones, 70);
    EXPECT_EQ(random_boolean_tables(10, 3, 4), random_boolean_tables(10, 3, 4));
    EXPECT_NE(random_boolean_tables(10, 3, 4), random_boolean_tables(10, 3, 5));
}

TEST(ApplyRule, PerNodeTables) {
    const RuleSpec rule(PerNodeLut{2, 1, {{1, 0}, {0, 1}}});
    EXPECT_EQ(apply(rule, {0, 0}), (StateVector{1, 0}));
    EXPECT_EQ(apply(rule, {1, 1}), (StateVector{0, 1}));
    EXPECT_EQ(kind_of([&] { apply(rule, {0, 0, 0}); }), ErrorKind::DimensionMismatch);
}

TEST(ContinuousMaps, Values) {
    EXPECT_DOUBLE_EQ(apply(tanh_map(), {0.5})[0], std::tanh(0.5));
    EXPECT_DOUBLE_EQ(apply(logistic_map(4.0), {0.3})[0], 4.0 * 0.3 * 0.7);
    EXPECT_EQ(apply(identity_map(), {-2.5})[0], -2.5);
    EXPECT_EQ(logistic_map(3.5).order(), ApplyOrder::MapThenMix);
    EXPECT_EQ(tanh_map().order(), ApplyOrder::MixThenMap);
    EXPECT_EQ(kind_of([] { logistic_map(4.5); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { logistic_map(std::nan("")); }), ErrorKind::InvalidArgument);
}

TEST(RuleSpec, Validation) {
    EXPECT_EQ(kind_of([] { RuleSpec(PatternLut{2, 3, {0, 1}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { RuleSpec(PatternLut{2, 1, {0, 2}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { RuleSpec(CountLut{2, 3, {0, 1, 0}}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { RuleSpec(PerNodeLut{2, 2, {{0, 1, 1, 0}, {0, 1}}}); }), ErrorKind::InvalidArgument);
    EXPECT_NO_THROW(RuleSpec(PatternLut{3, 2, std::vector<int>(9, 2)}));
    EXPECT_EQ(RuleSpec(PatternLut{3, 2, std::vector<int>(9, 2)}).n_states(), 3u);
    EXPECT_EQ(tanh_map().n_states(), 0u);
}

TEST(ValidateState, Cases) {
    EXPECT_NO_THROW(validate_state(elementary_rule(1), StateVector{0, 1, 1}));
    EXPECT_EQ(kind_of([] { validate_state(elementary_rule(1), StateVector{0, 2}); }), ErrorKind::BadStateValue);
    EXPECT_EQ(kind_of([] { validate_state(elementary_rule(1), StateVector{0.5}); }), ErrorKind::BadStateValue);
    EXPECT_EQ(kind_of([] { validate_state(elementary_rule(1), StateVector{-1}); }), ErrorKind::BadStateValue);
    EXPECT_NO_THROW(validate_state(tanh_map(), StateVector{-3.2, 7.0}));
    EXPECT_EQ(kind_of([] { validate_state(tanh_map(), StateVector{INFINITY}); }), ErrorKind::BadStateValue);
}

TEST(RuleText, Forms) {
    EXPECT_EQ(rule_to_text(elementary_rule(110)), "rule pattern index0first n=2 k=3 table=01110110");
    EXPECT_EQ(rule_to_text(game_of_life_rule()), "rule count index0first n=2 c=9 table=000100000001100000");
    EXPECT_EQ(rule_to_text(RuleSpec(PerNodeLut{2, 2, {{0, 1, 1, 0}, {1, 0, 0, 0}}})),
              "rule pernode index0first n=2 k=2 tables=0110,1000");
    EXPECT_EQ(rule_to_text(logistic_map(4.0)), "rule map name=logistic r=4 order=map_then_mix");
}

TEST(RuleText, RoundTrip) {
    std::vector<RuleSpec> rules{elementary_rule(30),
                                game_of_life_rule(),
                                random_boolean_tables(5, 2, 11),
                                RuleSpec(PatternLut{12, 1, {0, 11, 3, 10, 2, 2, 2, 9, 8, 7, 6, 5}}),
                                tanh_map(),
                                logistic_map(3.7, ApplyOrder::MixThenMap),
                                identity_map(ApplyOrder::MapThenMix)};
    for (int n = 0; n < 256; n += 17) rules.push_back(elementary_rule(n));
    for (const auto& r : rules) {
        const auto text = rule_to_text(r);
        EXPECT_EQ(rule_from_text(text), r) << text;
    }
}

TEST(RuleText, Malformed) {
    for (const char* bad : {"", "rule", "rule pattern n=2 k=3 table=01110110",
                            "rule pattern index0first n=2 k=3 table=0111011",
                            "rule pattern index0first n=2 k=3 table=0111011x",
                            "rule map name=cosine", "rule map name=logistic r=9 order=map_then_mix",
                            "rule pattern index0first n=2 k=3 table=01110110 extra=1", "law pattern"}) {
        EXPECT_THROW(rule_from_text(bad), Error) << bad;
    }
}
