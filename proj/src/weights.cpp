#include "rigid/weights.hpp"

#include <algorithm>
#include <sstream>

#include "rigid/error.hpp"

namespace rigid {

int Row::positives() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int w) { return w > 0; }));
}

int Row::negatives() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(), [](int w) { return w < 0; }));
}

WeightMatrix::WeightMatrix(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::InvalidMatrix, "weight matrix needs at least one row");
  const std::size_t n = rows_.front().weights.size();
  if (n == 0) throw Error(ErrorCode::InvalidMatrix, "rows need at least one weight");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (r.weights.size() != n) {
      throw Error(ErrorCode::InvalidMatrix,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(r.weights.size()) +
                      " weights, expected " + std::to_string(n));
    }
    if (r.sign != 1 && r.sign != -1) {
      throw Error(ErrorCode::InvalidMatrix, "row " + std::to_string(i + 1) + " sign must be +1 or -1");
    }
    if (std::find(r.weights.begin(), r.weights.end(), 0) != r.weights.end()) {
      throw Error(ErrorCode::ZeroWeight, "row " + std::to_string(i + 1) + " contains a zero weight");
    }
  }
}

WeightMatrix WeightMatrix::scaled(int lambda) const {
  if (lambda <= 0) throw Error(ErrorCode::InvalidMatrix, "scale factor must be positive");
  std::vector<Row> out = rows_;
  for (Row& r : out) {
    for (int& w : r.weights) w *= lambda;
  }
  return WeightMatrix(std::move(out));
}

std::string WeightMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << " | ";
    os << (rows_[i].sign > 0 ? '+' : '-') << ':';
    for (int w : rows_[i].weights) os << ' ' << w;
  }
  os << ']';
  return os.str();
}

}  // namespace rigid
