#include "adjdyn/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "adjdyn/error.hpp"
#include "adjdyn/random.hpp"
#include "adjdyn/text.hpp"

namespace adjdyn {

std::string_view to_string(InitKind kind) noexcept {
    switch (kind) {
        case InitKind::Zeros: return "zeros";
        case InitKind::Center: return "center";
        case InitKind::Random: return "random";
        case InitKind::Glider: return "glider";
        case InitKind::Blinker: return "blinker";
        case InitKind::File: return "file";
    }
    return "unknown";
}

namespace {

bool parse_bool(std::string_view v, const std::string& where) {
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw Error(ErrorKind::ParseError, where + ": expected a boolean, got '" + std::string(v) + "'");
}

std::size_t parse_count(std::string_view v, const std::string& where) {
    const auto x = text::parse_int(v, where);
    if (x < 0) throw Error(ErrorKind::ParseError, where + ": expected a non-negative integer");
    return static_cast<std::size_t>(x);
}

InitKind parse_init(std::string_view v, const std::string& where) {
    for (auto k : {InitKind::Zeros, InitKind::Center, InitKind::Random, InitKind::Glider,
                   InitKind::Blinker, InitKind::File}) {
        if (to_string(k) == v) return k;
    }
    throw Error(ErrorKind::ParseError, where + ": unknown init '" + std::string(v) + "'");
}

}  // namespace

RunConfig parse_run_config(std::istream& is) {
    RunConfig cfg;
    auto& sys = cfg.system;
    using Setter = std::function<void(std::string_view, const std::string&)>;
    const std::map<std::string, Setter, std::less<>> setters = {
        {"kind", [&](auto v, auto&) { sys.kind = system_kind_from_string(v); }},
        {"width", [&](auto v, auto& w) { sys.width = parse_count(v, w); }},
        {"height", [&](auto v, auto& w) { sys.height = parse_count(v, w); }},
        {"nodes", [&](auto v, auto& w) { sys.nodes = parse_count(v, w); }},
        {"rule", [&](auto v, auto& w) { sys.rule_number = static_cast<int>(text::parse_int(v, w)); }},
        {"wrapped", [&](auto v, auto& w) { sys.wrapped = parse_bool(v, w); }},
        {"k", [&](auto v, auto& w) { sys.in_degree = parse_count(v, w); }},
        {"eps", [&](auto v, auto& w) { sys.eps = text::parse_real(v, w); }},
        {"r", [&](auto v, auto& w) { sys.r = text::parse_real(v, w); }},
        {"density", [&](auto v, auto& w) { sys.density = text::parse_real(v, w); }},
        {"rho", [&](auto v, auto& w) { sys.rho = text::parse_real(v, w); }},
        {"seed",
         [&](auto v, auto& w) {
             const auto s = text::parse_int(v, w);
             if (s < 0) throw Error(ErrorKind::ParseError, w + ": seed must be non-negative");
             sys.seed = static_cast<std::uint64_t>(s);
             cfg.has_seed = true;
         }},
        {"steps", [&](auto v, auto& w) { cfg.steps = parse_count(v, w); }},
        {"init", [&](auto v, auto& w) { cfg.init = parse_init(v, w); }},
        {"init_density", [&](auto v, auto& w) { cfg.init_density = text::parse_real(v, w); }},
        {"init_file", [&](auto v, auto&) { cfg.init_file = std::string(v); }},
        {"output", [&](auto v, auto&) { cfg.output = std::string(v); }},
        {"format",
         [&](auto v, auto& w) {
             if (v == "csv") {
                 cfg.format = StateFormat::Csv;
             } else if (v == "lfst") {
                 cfg.format = StateFormat::Lfst;
             } else {
                 throw Error(ErrorKind::ParseError, w + ": format must be csv or lfst");
             }
         }},
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = text::trim(body);
        if (body.empty()) continue;
        const std::string where = "config line " + std::to_string(line_no);
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, where + ": expected key = value");
        const auto key = text::trim(body.substr(0, eq));
        const auto value = text::trim(body.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw Error(ErrorKind::ParseError, where + ": unknown key '" + std::string(key) + "'");
        }
        it->second(value, where);
    }
    return cfg;
}

RunConfig parse_run_config(const std::string& text) {
    std::istringstream is(text);
    return parse_run_config(is);
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return parse_run_config(is);
}

std::string write_run_config(const RunConfig& c) {
    const auto& s = c.system;
    std::ostringstream os;
    os << "kind = " << to_string(s.kind) << '\n'
       << "width = " << s.width << '\n'
       << "height = " << s.height << '\n'
       << "nodes = " << s.nodes << '\n'
       << "rule = " << s.rule_number << '\n'
       << "wrapped = " << (s.wrapped ? "true" : "false") << '\n'
       << "k = " << s.in_degree << '\n'
       << "eps = " << text::format_real(s.eps) << '\n'
       << "r = " << text::format_real(s.r) << '\n'
       << "density = " << text::format_real(s.density) << '\n'
       << "rho = " << text::format_real(s.rho) << '\n';
    if (c.has_seed) os << "seed = " << s.seed << '\n';
    os << "steps = " << c.steps << '\n'
       << "init = " << to_string(c.init) << '\n'
       << "init_density = " << text::format_real(c.init_density) << '\n';
    if (!c.init_file.empty()) os << "init_file = " << c.init_file << '\n';
    if (!c.output.empty()) os << "output = " << c.output << '\n';
    os << "format = " << (c.format == StateFormat::Csv ? "csv" : "lfst") << '\n';
    return os.str();
}

bool needs_seed(const RunConfig& c) {
    return c.system.kind == SystemKind::Rbn || c.system.kind == SystemKind::Esn ||
           c.init == InitKind::Random;
}

StateVector initial_state(const RunConfig& c) {
    const auto& s = c.system;
    const std::size_t n = state_size(s);
    switch (c.init) {
        case InitKind::Zeros: return zeros_state(n);
        case InitKind::Center: return one_hot_state(n, n / 2);
        case InitKind::Random: {
            const auto seed = derive_seed(s.seed, 2);
            if (s.kind == SystemKind::Cml) return random_uniform_state(n, 0.0, 1.0, seed);
            if (s.kind == SystemKind::Esn) return random_uniform_state(n, -1.0, 1.0, seed);
            return random_binary_state(n, c.init_density, seed);
        }
        case InitKind::Glider:
            if (s.kind != SystemKind::Life) throw Error(ErrorKind::InvalidArgument, "glider needs kind = life");
            return glider_state(s.width, s.height);
        case InitKind::Blinker:
            if (s.kind != SystemKind::Life) throw Error(ErrorKind::InvalidArgument, "blinker needs kind = life");
            return blinker_state(s.width, s.height);
        case InitKind::File: {
            if (c.init_file.empty()) throw Error(ErrorKind::InvalidArgument, "init = file needs init_file");
            const auto h = read_states(c.init_file);
            if (h.empty()) throw Error(ErrorKind::InvalidArgument, "init_file has no rows");
            const auto row = h.row(0);
            return StateVector(row.begin(), row.end());
        }
    }
    return zeros_state(n);
}

}  // namespace adjdyn
