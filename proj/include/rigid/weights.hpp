#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace rigid {

/// Fixed-point data of one row: nonzero weights and a sign of +1 or -1.
struct Row {
  std::vector<int> weights;
  int sign = 1;

  auto operator<=>(const Row&) const = default;

  int positives() const;
  int negatives() const;
};

/// m rows of n nonzero integer weights, each row carrying a sign.
/// Construction validates: m >= 1, n >= 1, equal row lengths, no zero
/// weights, signs in {+1, -1}.
class WeightMatrix {
 public:
  explicit WeightMatrix(std::vector<Row> rows);

  std::size_t m() const { return rows_.size(); }
  std::size_t n() const { return rows_.front().weights.size(); }

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t i) const { return rows_[i]; }

  /// Every weight multiplied by lambda (lambda > 0).
  WeightMatrix scaled(int lambda) const;

  auto operator<=>(const WeightMatrix&) const = default;

  /// Single-line summary, e.g. "[+: 1 2 | -: 1 2]".
  std::string to_string() const;

 private:
  std::vector<Row> rows_;
};

}  // namespace rigid
