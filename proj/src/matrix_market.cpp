#include "adjdyn/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adjdyn/error.hpp"
#include "adjdyn/text.hpp"

namespace adjdyn {

void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
    os << "%%MatrixMarket matrix coordinate real general\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
    for (const auto& t : m.triplets()) {
        os << (t.row + 1) << ' ' << (t.col + 1) << ' ' << text::format_real(t.weight) << '\n';
    }
}

void write_matrix_market(const std::filesystem::path& path, const SparseMatrix& m) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    write_matrix_market(os, m);
    if (!os) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

std::string to_matrix_market(const SparseMatrix& m) {
    std::ostringstream os;
    write_matrix_market(os, m);
    return os.str();
}

SparseMatrix read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw Error(ErrorKind::ParseError, "empty matrix file");
    std::string lower = line;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto header = text::split(lower, " \t\r");
    if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix" ||
        header[2] != "coordinate") {
        throw Error(ErrorKind::ParseError, "expected a Matrix Market coordinate header, got '" + line + "'");
    }
    if (header[3] != "real" && header[3] != "integer") {
        throw Error(ErrorKind::ParseError, "unsupported field '" + std::string(header[3]) + "'");
    }
    if (header[4] != "general") {
        throw Error(ErrorKind::ParseError, "unsupported symmetry '" + std::string(header[4]) + "'");
    }

    bool have_size = false;
    std::size_t rows = 0, cols = 0, declared = 0;
    std::vector<Triplet> entries;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        const auto body = text::trim(line);
        if (body.empty() || body.front() == '%') continue;
        const auto fields = text::split(body, " \t");
        const std::string where = "line " + std::to_string(line_no);
        if (fields.size() != 3) throw Error(ErrorKind::ParseError, where + ": expected 3 fields");
        if (!have_size) {
            const auto r = text::parse_int(fields[0], where);
            const auto c = text::parse_int(fields[1], where);
            const auto n = text::parse_int(fields[2], where);
            if (r < 0 || c < 0 || n < 0) throw Error(ErrorKind::ParseError, where + ": negative size");
            rows = static_cast<std::size_t>(r);
            cols = static_cast<std::size_t>(c);
            declared = static_cast<std::size_t>(n);
            entries.reserve(declared);
            have_size = true;
            continue;
        }
        const auto r = text::parse_int(fields[0], where);
        const auto c = text::parse_int(fields[1], where);
        if (r < 1 || c < 1) {
            throw Error(ErrorKind::IndexOutOfBounds, where + ": indices are 1-based");
        }
        entries.push_back({static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1),
                           text::parse_real(fields[2], where)});
    }
    if (!have_size) throw Error(ErrorKind::ParseError, "missing size line");
    if (entries.size() != declared) {
        throw Error(ErrorKind::ParseError, "declared " + std::to_string(declared) + " entries, found " +
                                               std::to_string(entries.size()));
    }
    return SparseMatrix::from_triplets(rows, cols, std::move(entries));
}

SparseMatrix read_matrix_market(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return read_matrix_market(is);
}

}  // namespace adjdyn
