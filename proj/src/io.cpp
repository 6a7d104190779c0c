#include "adjdyn/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adjdyn/error.hpp"
#include "adjdyn/text.hpp"

namespace adjdyn {

void write_states_csv(std::ostream& os, const StateHistory& history) {
    for (std::size_t t = 0; t < history.size(); ++t) {
        const auto row = history.row(t);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) os << ',';
            os << text::format_real(row[j]);
        }
        os << '\n';
    }
}

StateHistory read_states_csv(std::istream& is) {
    std::vector<StateVector> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto body = text::trim(line);
        if (body.empty()) continue;
        StateVector row;
        for (auto tok : text::split(body, ",")) {
            row.push_back(text::parse_real(tok, "line " + std::to_string(line_no)));
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw Error(ErrorKind::DimensionMismatch, "line " + std::to_string(line_no) + " has " +
                                                   std::to_string(row.size()) + " values, expected " +
                                                   std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    return StateHistory::from_rows(rows);
}

namespace {

constexpr std::array<char, 4> kLfstMagic{'L', 'F', 'S', 'T'};

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_f64(std::ostream& os, double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    os.write(b, 8);
}

std::uint64_t get_le(std::istream& is, int bytes) {
    unsigned char b[8] = {};
    is.read(reinterpret_cast<char*>(b), bytes);
    if (is.gcount() != bytes) throw Error(ErrorKind::ParseError, "truncated LFST stream");
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | b[i];
    return v;
}

}  // namespace

void write_states_lfst(std::ostream& os, const StateHistory& history) {
    os.write(kLfstMagic.data(), 4);
    put_u32(os, static_cast<std::uint32_t>(history.size()));
    put_u32(os, static_cast<std::uint32_t>(history.dim()));
    for (double x : history.values()) put_f64(os, x);
}

StateHistory read_states_lfst(std::istream& is) {
    std::array<char, 4> magic{};
    is.read(magic.data(), 4);
    if (is.gcount() != 4 || magic != kLfstMagic) throw Error(ErrorKind::ParseError, "missing LFST magic");
    const auto rows = static_cast<std::size_t>(get_le(is, 4));
    const auto n = static_cast<std::size_t>(get_le(is, 4));
    StateHistory h(n);
    StateVector row(n);
    for (std::size_t t = 0; t < rows; ++t) {
        for (auto& x : row) x = std::bit_cast<double>(get_le(is, 8));
        h.append(row);
    }
    return h;
}

void write_states(const std::filesystem::path& path, const StateHistory& history, StateFormat format) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    if (format == StateFormat::Csv) {
        write_states_csv(os, history);
    } else {
        write_states_lfst(os, history);
    }
    if (!os) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

StateHistory read_states(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::array<char, 4> head{};
    is.read(head.data(), 4);
    const bool binary = is.gcount() == 4 && head == kLfstMagic;
    is.clear();
    is.seekg(0);
    return binary ? read_states_lfst(is) : read_states_csv(is);
}

Stencil2D read_stencil(std::istream& is) {
    Stencil2D s;
    bool have_center = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto body = text::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto fields = text::split(body, " \t,");
        const std::string where = "stencil line " + std::to_string(line_no);
        if (fields.front() == "center") {
            if (fields.size() != 3) throw Error(ErrorKind::ParseError, where + ": expected 'center R C'");
            const auto r = text::parse_int(fields[1], where);
            const auto c = text::parse_int(fields[2], where);
            if (r < 0 || c < 0) throw Error(ErrorKind::ParseError, where + ": negative center");
            s.center_row = static_cast<std::size_t>(r);
            s.center_col = static_cast<std::size_t>(c);
            have_center = true;
            continue;
        }
        std::vector<double> row;
        for (auto f : fields) row.push_back(text::parse_real(f, where));
        if (!s.weights.empty() && row.size() != s.cols()) {
            throw Error(ErrorKind::ParseError, where + ": ragged stencil row");
        }
        s.weights.push_back(std::move(row));
    }
    if (s.weights.empty()) throw Error(ErrorKind::ParseError, "stencil has no rows");
    if (!have_center) throw Error(ErrorKind::ParseError, "stencil has no 'center R C' line");
    if (s.center_row >= s.rows() || s.center_col >= s.cols()) {
        throw Error(ErrorKind::ParseError, "stencil center outside the stencil");
    }
    return s;
}

Stencil2D read_stencil(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return read_stencil(is);
}

std::string stencil_to_text(const Stencil2D& stencil) {
    std::ostringstream os;
    for (const auto& row : stencil.weights) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ' ';
            os << text::format_real(row[c]);
        }
        os << '\n';
    }
    os << "center " << stencil.center_row << ' ' << stencil.center_col << '\n';
    return os.str();
}

namespace {

void check_grid(const StateHistory& history, std::size_t width, std::size_t height) {
    if (width * height != history.dim()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(width) + "x" + std::to_string(height) +
                                                      " grid for states of dimension " +
                                                      std::to_string(history.dim()));
    }
}

std::size_t cell_state(double x, std::size_t n_states) {
    if (!(x >= 0.0) || x != std::floor(x) || (n_states > 0 && x >= static_cast<double>(n_states))) {
        throw Error(ErrorKind::BadStateValue, "cannot render value " + text::format_real(x));
    }
    return static_cast<std::size_t>(x);
}

std::size_t infer_states(const StateHistory& history) {
    std::size_t top = 0;
    for (double x : history.values()) top = std::max(top, cell_state(x, 0));
    return top + 1;
}

}  // namespace

std::string render_text(const StateHistory& history, std::size_t width, std::size_t height,
                        std::size_t n_states) {
    check_grid(history, width, height);
    if (n_states == 0) n_states = infer_states(history);
    if (n_states > 10) {
        throw Error(ErrorKind::InvalidArgument,
                    "text rendering supports at most 10 states, got " + std::to_string(n_states));
    }
    const bool binary = n_states <= 2;
    std::string out;
    for (std::size_t t = 0; t < history.size(); ++t) {
        if (t > 0) out.push_back('\n');
        const auto row = history.row(t);
        for (std::size_t r = 0; r < height; ++r) {
            for (std::size_t c = 0; c < width; ++c) {
                const std::size_t s = cell_state(row[r * width + c], n_states);
                out.push_back(binary ? (s == 0 ? '.' : '#') : static_cast<char>('0' + s));
            }
            out.push_back('\n');
        }
    }
    return out;
}

std::string render_pgm(std::span<const double> state, std::size_t width, std::size_t height,
                       std::size_t n_states) {
    if (width * height != state.size()) {
        throw Error(ErrorKind::DimensionMismatch, "grid does not match state length");
    }
    if (n_states < 2) throw Error(ErrorKind::InvalidArgument, "PGM needs at least 2 states");
    std::ostringstream os;
    os << "P2\n" << width << ' ' << height << '\n' << (n_states - 1) << '\n';
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c > 0) os << ' ';
            os << cell_state(state[r * width + c], n_states);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::filesystem::path> write_pgm_frames(const StateHistory& history, std::size_t width,
                                                    std::size_t height, std::size_t n_states,
                                                    const std::string& prefix) {
    check_grid(history, width, height);
    if (n_states == 0) n_states = std::max<std::size_t>(2, infer_states(history));
    const std::size_t digits =
        std::max<std::size_t>(4, std::to_string(history.size() == 0 ? 0 : history.size() - 1).size());
    std::vector<std::filesystem::path> paths;
    for (std::size_t t = 0; t < history.size(); ++t) {
        std::string step = std::to_string(t);
        step.insert(0, digits - step.size(), '0');
        const std::filesystem::path path = prefix + "_" + step + ".pgm";
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
        os << render_pgm(history.row(t), width, height, n_states);
        paths.push_back(path);
    }
    return paths;
}

void write_trajectory_csv(std::ostream& os, const Projection& projection) {
    const std::size_t k =
        projection.points.empty() ? projection.components.size() : projection.points.front().size();
    os << "step";
    for (std::size_t c = 0; c < k; ++c) os << ",pc" << (c + 1);
    os << '\n';
    for (std::size_t t = 0; t < projection.points.size(); ++t) {
        os << t;
        for (double x : projection.points[t]) os << ',' << text::format_real(x);
        os << '\n';
    }
}

std::string trajectory_svg(const Projection& projection) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& p : projection.points) {
        const double x = p.empty() ? 0.0 : p[0];
        const double y = p.size() < 2 ? 0.0 : p[1];
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << text::format_real(xmin - pad) << ' '
       << text::format_real(-ymax - pad) << ' ' << text::format_real(xmax - xmin + 2 * pad) << ' '
       << text::format_real(ymax - ymin + 2 * pad) << "\">\n";
    os << "<g transform=\"scale(1,-1)\">\n<polyline fill=\"none\" stroke=\"black\" "
          "stroke-width=\""
       << text::format_real(pad / 5) << "\" points=\"";
    for (std::size_t t = 0; t < projection.points.size(); ++t) {
        const auto& p = projection.points[t];
        if (t > 0) os << ' ';
        os << text::format_real(p.empty() ? 0.0 : p[0]) << ','
           << text::format_real(p.size() < 2 ? 0.0 : p[1]);
    }
    os << "\"/>\n</g>\n</svg>\n";
    return os.str();
}

}  // namespace adjdyn
