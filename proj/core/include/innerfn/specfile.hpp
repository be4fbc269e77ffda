#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "innerfn/inner.hpp"

namespace innerfn {

struct SpecParseError : std::runtime_error {
    int line;
    SpecParseError(int line, const std::string& msg);
};

/* Text format: one section per product part, '#' starts a comment.
 *
 *   [blaschke]
 *   family = geometric        # power logpower geometric doubleexp tangential
 *   alpha = 2
 *   count = 100
 *   rotation = 0              # optional, radians
 *
 *   [blaschke]
 *   zeros = 0.5+0i; -0.25+0.1i   # explicit list, semicolon separated
 *
 *   [singular]
 *   family = dyadic_square
 *   count = 30
 *   gamma0 = 1
 *
 *   [singular]
 *   atoms = 0:1; 1.5707963267948966:0.5   # theta:gamma pairs
 *
 * Unknown keys, duplicate keys, keys that the chosen family does not use and
 * malformed numbers are reported with their line number. */
InnerFunctionSpec parse_spec(const std::string& text);

// parse_spec on the contents of a file; file errors use line 0.
InnerFunctionSpec load_spec_file(const std::string& path);

// Canonical text for a spec; parse_spec(write_spec(s)) reproduces s.
std::string write_spec(const InnerFunctionSpec& spec);

// Named example specs covering each family.
InnerFunctionSpec builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

/* Ordered "key = value" lines with deterministic float formatting (%.17g,
 * round-trip exact).  Used for machine-readable CLI reports. */
class Report {
  public:
    void add(const std::string& key, double value);
    void add(const std::string& key, int value);
    void add(const std::string& key, const std::string& value);

    const std::string& text() const { return text_; }
    void write_file(const std::string& path) const;

  private:
    std::string text_;
};

std::string format_double(double v); // %.17g

// REAL or REAL+IMAGi / REAL-IMAGi with no spaces, as in spec files.
// Throws std::invalid_argument on malformed input.
Complex parse_complex_literal(const std::string& s);

} // namespace innerfn
