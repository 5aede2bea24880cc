#include "ramsey/clr_io.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {

ClrParseError::ClrParseError(std::size_t line_, std::size_t column_, const std::string& what_)
    : std::runtime_error("CLR parse error at line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ": " + what_),
      line(line_),
      column(column_) {}

void write_clr(std::ostream& out, const Colouring& f) {
    Vertex m = f.size();
    out << "RAMSEY-CLR 1 " << m << '\n';
    for (Vertex i = 0; i + 1 < m; ++i) {
        for (Vertex j = i + 1; j < m; ++j) {
            out << char('0' + f.colour(i, j));
        }
        out << '\n';
    }
}

void write_clr_file(const std::string& path, const Colouring& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_clr(out, f);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Colouring read_clr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;

    // comments allowed before the header only
    for (;;) {
        if (!std::getline(in, line)) throw ClrParseError(lineno + 1, 1, "missing header");
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        break;
    }

    std::istringstream hdr(line);
    std::string magic;
    unsigned version = 0;
    long long m_signed = -1;
    hdr >> magic >> version >> m_signed;
    if (magic != "RAMSEY-CLR") throw ClrParseError(lineno, 1, "expected RAMSEY-CLR header");
    if (!hdr || version != 1) throw ClrParseError(lineno, 12, "unsupported version");
    if (m_signed < 1) throw ClrParseError(lineno, 14, "vertex count must be >= 1");
    Vertex m = static_cast<Vertex>(m_signed);

    Colouring f(m);
    for (Vertex i = 0; i + 1 < m; ++i) {
        if (!std::getline(in, line)) {
            throw ClrParseError(lineno + 1, 1,
                                "truncated: expected row " + std::to_string(i));
        }
        ++lineno;
        std::size_t expected = m - 1 - i;
        if (line.size() != expected) {
            throw ClrParseError(lineno, line.size() + 1,
                                "row " + std::to_string(i) + " has " +
                                    std::to_string(line.size()) + " bits, expected " +
                                    std::to_string(expected));
        }
        for (std::size_t p = 0; p < line.size(); ++p) {
            char c = line[p];
            if (c != '0' && c != '1') {
                throw ClrParseError(lineno, p + 1, "expected '0' or '1'");
            }
            f.set_colour(i, static_cast<Vertex>(i + 1 + p), static_cast<Bit>(c - '0'));
        }
    }
    return f;
}

Colouring read_clr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_clr(in);
}

}  // namespace ramsey
