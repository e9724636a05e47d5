#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace phylocover {

// Malformed input text; line/column are 1-based file positions.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// exact_cover exhausted its search-node budget. Raised instead of ever
// returning a cover that is not proven minimum.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::uint64_t budget)
      : std::runtime_error("exact cover search exceeded node budget of " +
                           std::to_string(budget)),
        budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// A matrix required to be a perfect phylogeny is not; carries one
// conflicting character pair as the witness.
class IncompatibleMatrixError : public std::domain_error {
 public:
  IncompatibleMatrixError(int char_a, int char_b)
      : std::domain_error("matrix is not a perfect phylogeny: characters " +
                          std::to_string(char_a) + " and " +
                          std::to_string(char_b) + " conflict"),
        char_a_(char_a),
        char_b_(char_b) {}

  int char_a() const { return char_a_; }
  int char_b() const { return char_b_; }

 private:
  int char_a_;
  int char_b_;
};

}  // namespace phylocover
