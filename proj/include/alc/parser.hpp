#pragma once

#include "alc/term.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alc {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, std::string found, std::vector<std::string> expected);

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }
    const std::string& found() const { return found_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_, col_;
    std::string found_;
    std::vector<std::string> expected_;
};

struct ParseOptions {
    // Type names expanded during parsing, e.g. qbool.
    std::map<std::string, Type> type_aliases;
};

Term parse_term(std::string_view src, const ParseOptions& opts = {});
Type parse_type(std::string_view src, const ParseOptions& opts = {});
// "{1/2 + i/2}" or a bare expression "1/2 + i/2".
Scalar parse_scalar(std::string_view src);

}  // namespace alc
