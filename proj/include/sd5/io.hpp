#pragma once

// Text formats.
//
//   matrix: one row per line, decimal integers separated by spaces;
//           lines starting with '#' and blank lines are ignored.
//   code:   header "q n k", then k generator rows.
//   gram:   header "dim", then dim rows of the symmetric Gram matrix,
//           optionally followed by "basis <scale>" and dim rows of ambient
//           integer coordinates.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sd5/codes.hpp"
#include "sd5/lattices.hpp"

namespace sd5 {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-comment, non-blank line; false at end of input.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++number_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    }

    std::vector<Int> integers(const std::string& line) const {
        std::istringstream ss(line);
        std::vector<Int> out;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            Int v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                fail("expected an integer, got '" + tok + "'");
            }
            if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
            out.push_back(v);
        }
        return out;
    }

    std::vector<std::vector<Int>> rows(std::size_t count, std::size_t width) {
        std::vector<std::vector<Int>> out;
        std::string line;
        for (std::size_t i = 0; i < count; ++i) {
            if (!next(line)) fail("expected " + std::to_string(count) + " rows, found " + std::to_string(i));
            auto r = integers(line);
            if (r.size() != width)
                fail("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(width));
            out.push_back(std::move(r));
        }
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("line " + std::to_string(number_) + ": " + msg);
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

}  // namespace detail

/// All rows of a matrix text block.
inline std::vector<std::vector<Int>> read_matrix(std::istream& in) {
    detail::LineReader r(in);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (r.next(line)) {
        rows.push_back(r.integers(line));
        if (rows.back().size() != rows.front().size()) r.fail("ragged matrix");
    }
    return rows;
}

inline void write_matrix(std::ostream& out, const std::vector<std::vector<Int>>& rows) {
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
}

inline LinearCode read_code(std::istream& in) {
    detail::LineReader r(in);
    std::string line;
    if (!r.next(line)) r.fail("missing 'q n k' header");
    const auto header = r.integers(line);
    if (header.size() != 3) r.fail("header must be 'q n k'");
    const Int q = header[0], n = header[1], k = header[2];
    if (q < 3 || q > 31 || !is_prime(static_cast<unsigned>(q))) r.fail("q must be an odd prime <= 31");
    if (n < 0 || k < 0 || k > n) r.fail("need 0 <= k <= n");
    const auto rows = r.rows(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    if (r.next(line)) r.fail("trailing data after generator rows");
    LinearCode c(FpMatrix::from_rows(static_cast<unsigned>(q), rows, static_cast<std::size_t>(n)));
    if (c.dimension() != static_cast<std::size_t>(k)) r.fail("generator rows are linearly dependent");
    return c;
}

inline void write_code(std::ostream& out, const LinearCode& c) {
    out << c.modulus() << ' ' << c.length() << ' ' << c.dimension() << '\n';
    write_matrix(out, c.generator().to_rows());
}

inline GramLattice read_gram(std::istream& in) {
    detail::LineReader r(in);
    std::string line;
    if (!r.next(line)) r.fail("missing dimension header");
    const auto header = r.integers(line);
    if (header.size() != 1 || header[0] < 0) r.fail("header must be a single nonnegative dimension");
    const auto dim = static_cast<std::size_t>(header[0]);
    const ZMatrix gram = ZMatrix::from_rows(r.rows(dim, dim), dim);

    std::optional<BasisProvenance> prov;
    if (r.next(line)) {
        std::istringstream ss(line);
        std::string word;
        Int scale = 0;
        if (!(ss >> word) || word != "basis" || !(ss >> scale) || scale <= 0)
            r.fail("expected 'basis <scale>' section");
        std::string extra;
        if (ss >> extra) r.fail("unexpected text after basis scale");
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!r.next(line)) r.fail("basis section has too few rows");
            rows.push_back(r.integers(line));
            if (rows.back().size() != rows.front().size()) r.fail("ragged basis rows");
        }
        if (r.next(line)) r.fail("trailing data after basis rows");
        prov = BasisProvenance{ZMatrix::from_rows(rows), scale};
    }
    try {
        return GramLattice(gram, std::move(prov));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid lattice: ") + e.what());
    }
}

inline void write_gram(std::ostream& out, const GramLattice& l) {
    out << l.dim() << '\n';
    write_matrix(out, l.gram().to_rows());
    if (l.provenance()) {
        out << "basis " << l.provenance()->scale << '\n';
        write_matrix(out, l.provenance()->basis.to_rows());
    }
}

template <class Reader>
auto read_file(const std::string& path, Reader&& reader) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return reader(in);
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

inline LinearCode read_code_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_code(in); });
}
inline GramLattice read_gram_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_gram(in); });
}

}  // namespace sd5
