#pragma once

#include <stdexcept>
#include <string>

namespace slopecalc {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad slope strings, bad JSON, bad database files.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// A rule precondition failed or the available data is insufficient
// to draw a conclusion.
struct rule_error : error {
    explicit rule_error(const std::string& what) : error(what) {}
};

// An internal invariant was violated; indicates a bug, not bad input.
struct invariant_error : error {
    explicit invariant_error(const std::string& what) : error(what) {}
};

} // namespace slopecalc
