#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rdv/core.hpp"
#include "rdv/matching.hpp"

namespace rdv {

/// Malformed instance text; what() names the 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads the line-oriented instance format:
///
///     tree <N>
///     parents <p_1> ... <p_N>        # 0 marks the root
///     vertices <n> <delta>
///     v <top> <bottom_1> [<bottom_2> ...]
///
/// Node ids are 1-based in the text. Only syntax is checked here; use
/// validate_instance for structure.
RdvInstance parse_instance(std::istream& in);
RdvInstance parse_instance_string(const std::string& text);
RdvInstance load_instance(const std::string& path);

void write_instance(std::ostream& out, const RdvInstance& inst);
std::string instance_to_string(const RdvInstance& inst);

/// `matching <size>` then `e <i> <j>` lines, 1-based, i < j, sorted.
void write_matching(std::ostream& out, const Matching& m);

}  // namespace rdv
