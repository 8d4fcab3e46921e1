#include "sdc/gf2_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sdc {

bool LineReader::next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        size_t start = raw.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (raw[start] == '#') continue;
        size_t end = raw.find_last_not_of(" \t");
        out = raw.substr(start, end - start + 1);
        return true;
    }
    return false;
}

namespace {

BitVector parse_bits(const std::string& s, size_t line) {
    for (char ch : s)
        if (ch != '0' && ch != '1')
            throw ParseError(line, std::string("expected 0/1 digits, got '") + ch + "'");
    return BitVector::from_string(s);
}

}  // namespace

LinearCode read_code(std::istream& in) {
    LineReader rd{in};
    std::string s;
    if (!rd.next(s)) throw ParseError(rd.line, "missing header");
    std::istringstream hdr(s);
    size_t n = 0, k = 0;
    if (!(hdr >> n >> k)) throw ParseError(rd.line, "header must be two integers: n k");
    std::string extra;
    if (hdr >> extra) throw ParseError(rd.line, "trailing text after header");
    if (k > n) throw ParseError(rd.line, "dimension exceeds length");
    std::vector<BitVector> rows;
    rows.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        if (!rd.next(s)) throw ParseError(rd.line, "expected " + std::to_string(k) +
                                                       " generator rows, file ended after " +
                                                       std::to_string(i));
        BitVector v = parse_bits(s, rd.line);
        if (v.n != n)
            throw ParseError(rd.line, "row has length " + std::to_string(v.n) + ", expected " +
                                          std::to_string(n));
        rows.push_back(std::move(v));
    }
    LinearCode c = LinearCode::from_rows(n, std::move(rows));
    if (c.k() != k)
        throw ParseError(rd.line, "generators have rank " + std::to_string(c.k()) +
                                      ", header claims " + std::to_string(k));
    return c;
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << c.n << ' ' << c.k() << '\n';
    for (const auto& r : c.rows) out << r.to_string() << '\n';
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_code(in);
}

void write_code_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_code(out, c);
}

BitVector read_vector(std::istream& in) {
    LineReader rd{in};
    std::string s;
    if (!rd.next(s)) throw ParseError(rd.line, "missing vector line");
    return parse_bits(s, rd.line);
}

void write_vector(std::ostream& out, const BitVector& v) { out << v.to_string() << '\n'; }

BitVector read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_vector(in);
}

}  // namespace sdc
