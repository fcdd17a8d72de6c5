#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace jordan {

// Weakly decreasing sequence of positive integers; the Jordan type of a nilpotent matrix.
class Partition {
 public:
  Partition() = default;
  /// Throws InvariantViolation unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);
  Partition(std::initializer_list<std::size_t> parts) : Partition(std::vector<std::size_t>(parts)) {}

  /// Sorts arbitrary positive block sizes into a partition.
  static Partition from_unsorted(std::vector<std::size_t> parts);
  /// (1, 1, ..., 1) with n parts.
  static Partition trivial(std::size_t n);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t operator[](std::size_t i) const { return parts_[i]; }
  std::size_t total() const;
  bool pairwise_distinct() const;
  /// Start index of each block inside the ambient space.
  std::vector<std::size_t> offsets() const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

}  // namespace jordan
