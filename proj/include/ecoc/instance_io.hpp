#pragma once

#include <stdexcept>
#include <string>

#include "ecoc/instance.hpp"

namespace ecoc {

// Instance files follow a DIMACS-style convention:
//
//   c free-form comment, allowed anywhere
//   p ecoc <n> <m> <l> <k>
//   e <u> <v>              (m lines, 1-based ids, u != v, no duplicates)
//
// Parsing is strict; every error names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

Instance parse_instance(const std::string& text);

// Inverse of parse_instance up to isomorphism: surviving vertices are
// renumbered 1..n in sorted id order and edges emitted in ascending
// order, so parse(emit(i)) has the same shape, k and l as i.
std::string emit_instance(const Instance& inst);

}  // namespace ecoc
