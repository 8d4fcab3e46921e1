#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdc/linear_code.hpp"

namespace sdc {

struct ParseError : std::runtime_error {
    size_t line;
    ParseError(size_t line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct LineReader {
    std::istream& in;
    size_t line = 0;

    // next line that carries content; comments and blanks skipped
    bool next(std::string& out);
};

// text form: optional '#' comment lines, a "n k" header, then k generator
// rows written as 0/1 strings of length n. generators are stored reduced, so
// writing a code back out is canonical.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& c);
LinearCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const LinearCode& c);

// a vector is a single 0/1 string line, length taken from the string
BitVector read_vector(std::istream& in);
void write_vector(std::ostream& out, const BitVector& v);
BitVector read_vector_file(const std::string& path);

}  // namespace sdc
