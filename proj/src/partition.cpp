#include "jordan/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "jordan/error.hpp"

namespace jordan {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw Error(ErrorCode::InvariantViolation, "partition part must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(ErrorCode::InvariantViolation, "partition must be weakly decreasing: " + str());
    }
  }
}

Partition Partition::from_unsorted(std::vector<std::size_t> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::trivial(std::size_t n) { return Partition(std::vector<std::size_t>(n, 1)); }

std::size_t Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

bool Partition::pairwise_distinct() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

std::vector<std::size_t> Partition::offsets() const {
  std::vector<std::size_t> out;
  out.reserve(parts_.size());
  std::size_t at = 0;
  for (const auto p : parts_) {
    out.push_back(at);
    at += p;
  }
  return out;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

}  // namespace jordan
