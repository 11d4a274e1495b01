#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey_p5 {

// Graph order exceeds what an operation supports.
struct order_too_large : std::length_error {
  using std::length_error::length_error;
};

struct order_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed certificate or design text. `line` is 1-based, 0 when unknown.
struct parse_error : std::runtime_error {
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

struct malformed_design : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct missing_resolution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct not_a_packing : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct uncoloured_pair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// g(r) is undefined for r = 2 (mod 4); those colour counts go through the lift.
struct lift_path : std::domain_error {
  using std::domain_error::domain_error;
};

// No native witness construction for this colour count; supply a design file.
struct unsupported_r : std::domain_error {
  using std::domain_error::domain_error;
};

struct infeasible_parameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct parameters_out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};

}  // namespace ramsey_p5
