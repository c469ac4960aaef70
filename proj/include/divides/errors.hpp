#pragma once

#include <stdexcept>
#include <string>

namespace divides {

// Malformed input text. line/col are 1-based; col 0 means "whole line".
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("parse error at line " + std::to_string(line_) +
                           (col_ > 0 ? ", col " + std::to_string(col_) : "") + ": " + what_),
        line(line_),
        col(col_) {}
};

// Input parses but violates a documented precondition (non-generic divide,
// endpoint off the circle, disconnected where connectivity is required, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what_) : std::runtime_error(what_) {}
};

}  // namespace divides
