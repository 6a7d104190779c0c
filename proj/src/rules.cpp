#include "adjdyn/rules.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/text.hpp"

namespace adjdyn {

namespace {

constexpr double kKeyTolerance = 1e-6;

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

void check_table(const std::vector<int>& table, std::size_t expected, std::size_t n_states,
                 const char* what) {
    if (table.size() != expected) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " table has " +
                                                    std::to_string(table.size()) + " entries, expected " +
                                                    std::to_string(expected));
    }
    for (int v : table) {
        if (v < 0 || static_cast<std::size_t>(v) >= n_states) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string(what) + " table value " + std::to_string(v) + " out of range");
        }
    }
}

struct Validator {
    void operator()(const PatternLut& p) const {
        if (p.n_states < 2) throw Error(ErrorKind::InvalidArgument, "pattern rule needs n_states >= 2");
        check_table(p.table, ipow(p.n_states, p.k), p.n_states, "pattern");
    }
    void operator()(const CountLut& c) const {
        if (c.n_states < 2) throw Error(ErrorKind::InvalidArgument, "count rule needs n_states >= 2");
        if (c.center_weight < 1) throw Error(ErrorKind::InvalidArgument, "center weight must be >= 1");
        check_table(c.table, c.center_weight * c.n_states, c.n_states, "count");
    }
    void operator()(const PerNodeLut& p) const {
        if (p.n_states < 2) throw Error(ErrorKind::InvalidArgument, "per-node rule needs n_states >= 2");
        const std::size_t len = ipow(p.n_states, p.k);
        for (const auto& t : p.tables) check_table(t, len, p.n_states, "per-node");
    }
    void operator()(const ContinuousMap& m) const {
        if (m.kind == MapKind::Logistic && !(m.r >= 0.0 && m.r <= 4.0)) {
            throw Error(ErrorKind::InvalidArgument, "logistic parameter must be in [0, 4]");
        }
    }
};

std::size_t lookup_key(double pre, std::size_t table_size) {
    const double rounded = std::nearbyint(pre);
    if (!(std::abs(pre - rounded) <= kKeyTolerance)) {
        throw Error(ErrorKind::NonIntegerKey, "preactivation " + text::format_real(pre) +
                                                  " is not an integer key");
    }
    if (rounded < 0.0 || rounded >= static_cast<double>(table_size)) {
        throw Error(ErrorKind::KeyOutOfTable, "key " + text::format_real(rounded) +
                                                  " outside table of " + std::to_string(table_size));
    }
    return static_cast<std::size_t>(rounded);
}

}  // namespace

double ContinuousMap::operator()(double x) const noexcept {
    switch (kind) {
        case MapKind::Tanh: return std::tanh(x);
        case MapKind::Logistic: return r * x * (1.0 - x);
        case MapKind::Identity: return x;
    }
    return x;
}

RuleSpec::RuleSpec(Variant v) : v_(std::move(v)) { std::visit(Validator{}, v_); }

std::size_t RuleSpec::n_states() const noexcept {
    return std::visit(
        [](const auto& r) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ContinuousMap>) {
                return 0;
            } else {
                return r.n_states;
            }
        },
        v_);
}

ApplyOrder RuleSpec::order() const noexcept {
    if (const auto* m = std::get_if<ContinuousMap>(&v_)) return m->order;
    return ApplyOrder::MixThenMap;
}

RuleSpec elementary_rule(int rule_number) {
    if (rule_number < 0 || rule_number > 255) {
        throw Error(ErrorKind::RuleOutOfRange, "elementary rule " + std::to_string(rule_number));
    }
    PatternLut lut{2, 3, std::vector<int>(8)};
    for (int p = 0; p < 8; ++p) lut.table[static_cast<std::size_t>(p)] = (rule_number >> p) & 1;
    return RuleSpec(std::move(lut));
}

RuleSpec life_like_rule(std::span<const int> birth, std::span<const int> survive,
                        std::size_t max_count) {
    const std::size_t cw = max_count + 1;
    CountLut lut{2, cw, std::vector<int>(2 * cw, 0)};
    auto contains = [](std::span<const int> s, std::size_t v) {
        return std::find(s.begin(), s.end(), static_cast<int>(v)) != s.end();
    };
    for (std::size_t count = 0; count <= max_count; ++count) {
        lut.table[count] = contains(birth, count) ? 1 : 0;
        lut.table[cw + count] = contains(survive, count) ? 1 : 0;
    }
    return RuleSpec(std::move(lut));
}

RuleSpec game_of_life_rule() {
    static constexpr int birth[] = {3};
    static constexpr int survive[] = {2, 3};
    return life_like_rule(birth, survive, 8);
}

RuleSpec random_boolean_tables(std::size_t n_nodes, std::size_t in_degree, std::uint64_t seed) {
    Rng rng(seed);
    PerNodeLut lut{2, in_degree, {}};
    const std::size_t len = ipow(2, in_degree);
    lut.tables.resize(n_nodes);
    for (auto& table : lut.tables) {
        table.resize(len);
        for (auto& bit : table) bit = static_cast<int>(rng.next() >> 63);
    }
    return RuleSpec(std::move(lut));
}

RuleSpec tanh_map() { return RuleSpec(ContinuousMap{MapKind::Tanh, 0.0, ApplyOrder::MixThenMap}); }

RuleSpec logistic_map(double r, ApplyOrder order) {
    return RuleSpec(ContinuousMap{MapKind::Logistic, r, order});
}

RuleSpec identity_map(ApplyOrder order) {
    return RuleSpec(ContinuousMap{MapKind::Identity, 0.0, order});
}

StateVector apply_rule(const RuleSpec& rule, std::span<const double> preactivation,
                       std::span<const double> current) {
    if (preactivation.size() != current.size()) {
        throw Error(ErrorKind::DimensionMismatch, "preactivation length " +
                                                      std::to_string(preactivation.size()) + " vs state " +
                                                      std::to_string(current.size()));
    }
    StateVector out(preactivation.size());
    const auto& v = rule.variant();
    if (const auto* p = std::get_if<PatternLut>(&v)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = p->table[lookup_key(preactivation[i], p->table.size())];
        }
    } else if (const auto* c = std::get_if<CountLut>(&v)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = c->table[lookup_key(preactivation[i], c->table.size())];
        }
    } else if (const auto* pn = std::get_if<PerNodeLut>(&v)) {
        if (pn->tables.size() != out.size()) {
            throw Error(ErrorKind::DimensionMismatch, std::to_string(pn->tables.size()) +
                                                          " node tables for " + std::to_string(out.size()) +
                                                          " nodes");
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = pn->tables[i][lookup_key(preactivation[i], pn->tables[i].size())];
        }
    } else {
        const auto& g = std::get<ContinuousMap>(v);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = g(preactivation[i]);
    }
    return out;
}

void validate_state(const RuleSpec& rule, std::span<const double> values) {
    const std::size_t n = rule.n_states();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        if (!std::isfinite(x)) {
            throw Error(ErrorKind::BadStateValue, "non-finite value at index " + std::to_string(i));
        }
        if (rule.is_discrete() &&
            (x != std::floor(x) || x < 0.0 || x >= static_cast<double>(n))) {
            throw Error(ErrorKind::BadStateValue, "value " + text::format_real(x) + " at index " +
                                                      std::to_string(i) + " is not a state in [0, " +
                                                      std::to_string(n) + ")");
        }
    }
}

namespace {

std::string encode_table(const std::vector<int>& table, std::size_t n_states) {
    std::string out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (n_states <= 10) {
            out.push_back(static_cast<char>('0' + table[i]));
        } else {
            if (i > 0) out.push_back(':');
            out += std::to_string(table[i]);
        }
    }
    return out;
}

std::vector<int> decode_table(std::string_view s, std::size_t n_states) {
    std::vector<int> out;
    if (n_states <= 10) {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw Error(ErrorKind::ParseError, "bad table digit");
            out.push_back(ch - '0');
        }
    } else {
        for (auto tok : text::split(s, ":")) out.push_back(static_cast<int>(text::parse_int(tok, "table")));
    }
    return out;
}

const char* order_name(ApplyOrder o) {
    return o == ApplyOrder::MixThenMap ? "mix_then_map" : "map_then_mix";
}

}  // namespace

std::string rule_to_text(const RuleSpec& rule) {
    std::ostringstream os;
    const auto& v = rule.variant();
    if (const auto* p = std::get_if<PatternLut>(&v)) {
        os << "rule pattern index0first n=" << p->n_states << " k=" << p->k
           << " table=" << encode_table(p->table, p->n_states);
    } else if (const auto* c = std::get_if<CountLut>(&v)) {
        os << "rule count index0first n=" << c->n_states << " c=" << c->center_weight
           << " table=" << encode_table(c->table, c->n_states);
    } else if (const auto* pn = std::get_if<PerNodeLut>(&v)) {
        os << "rule pernode index0first n=" << pn->n_states << " k=" << pn->k << " tables=";
        for (std::size_t i = 0; i < pn->tables.size(); ++i) {
            if (i > 0) os << ',';
            os << encode_table(pn->tables[i], pn->n_states);
        }
    } else {
        const auto& m = std::get<ContinuousMap>(v);
        os << "rule map name=";
        switch (m.kind) {
            case MapKind::Tanh: os << "tanh"; break;
            case MapKind::Logistic: os << "logistic r=" << text::format_real(m.r); break;
            case MapKind::Identity: os << "identity"; break;
        }
        os << " order=" << order_name(m.order);
    }
    return os.str();
}

RuleSpec rule_from_text(const std::string& line) {
    const auto tokens = text::split(text::trim(line), " \t");
    if (tokens.size() < 2 || tokens[0] != "rule") {
        throw Error(ErrorKind::ParseError, "rule line must start with 'rule <kind>'");
    }
    const std::string_view kind = tokens[1];
    std::map<std::string, std::string, std::less<>> fields;
    bool index0first = false;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (tokens[i] == "index0first") {
            index0first = true;
            continue;
        }
        const auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::ParseError, "expected key=value, got '" + std::string(tokens[i]) + "'");
        }
        fields[std::string(tokens[i].substr(0, eq))] = std::string(tokens[i].substr(eq + 1));
    }
    auto need = [&](const char* key) -> const std::string& {
        const auto it = fields.find(key);
        if (it == fields.end()) throw Error(ErrorKind::ParseError, std::string("missing field ") + key);
        return it->second;
    };
    auto need_count = [&](const char* key) {
        const auto v = text::parse_int(need(key), key);
        if (v < 0) throw Error(ErrorKind::ParseError, std::string("negative ") + key);
        return static_cast<std::size_t>(v);
    };
    static const std::map<std::string_view, std::vector<std::string_view>> allowed{
        {"pattern", {"n", "k", "table"}},
        {"count", {"n", "c", "table"}},
        {"pernode", {"n", "k", "tables"}},
        {"map", {"name", "r", "order"}},
    };
    if (const auto it = allowed.find(kind); it != allowed.end()) {
        for (const auto& [key, value] : fields) {
            if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
                throw Error(ErrorKind::ParseError, "unexpected field '" + key + "' for rule " + std::string(kind));
            }
        }
    }
    if (kind != "map" && !index0first) {
        throw Error(ErrorKind::ParseError, "table rules must declare index0first ordering");
    }
    try {
        if (kind == "pattern") {
            const auto n = need_count("n");
            return RuleSpec(PatternLut{n, need_count("k"), decode_table(need("table"), n)});
        }
        if (kind == "count") {
            const auto n = need_count("n");
            return RuleSpec(CountLut{n, need_count("c"), decode_table(need("table"), n)});
        }
        if (kind == "pernode") {
            const auto n = need_count("n");
            PerNodeLut lut{n, need_count("k"), {}};
            const auto& all = need("tables");
            for (auto tok : text::split(all, ",")) lut.tables.push_back(decode_table(tok, n));
            return RuleSpec(std::move(lut));
        }
        if (kind == "map") {
            ContinuousMap m;
            const auto& name = need("name");
            if (name == "tanh") {
                m.kind = MapKind::Tanh;
            } else if (name == "logistic") {
                m.kind = MapKind::Logistic;
                m.r = text::parse_real(need("r"), "r");
            } else if (name == "identity") {
                m.kind = MapKind::Identity;
            } else {
                throw Error(ErrorKind::ParseError, "unknown map '" + name + "'");
            }
            const auto& order = need("order");
            if (order == "mix_then_map") {
                m.order = ApplyOrder::MixThenMap;
            } else if (order == "map_then_mix") {
                m.order = ApplyOrder::MapThenMix;
            } else {
                throw Error(ErrorKind::ParseError, "unknown order '" + order + "'");
            }
            return RuleSpec(m);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidArgument) throw Error(ErrorKind::ParseError, e.what());
        throw;
    }
    throw Error(ErrorKind::ParseError, "unknown rule kind '" + std::string(kind) + "'");
}

}  // namespace adjdyn
