#pragma once

#include <span>
#include <string>
#include <vector>

namespace superbethe {

class Rng;

/// Weakly decreasing sequence of positive integers; trailing zeros are
/// trimmed on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::vector<int> parts);  // NOLINT: list-initialization is the natural spelling
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  /// Number of nonzero rows.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based row length; zero beyond the last row.
  int operator[](int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int weight() const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Skew diagram lambda ⊂ mu. Cell (i, j) (1-based, i down, j right) belongs
/// to the shape when lambda_i < j <= mu_i.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}
  SkewShape(Partition inner, Partition outer);

  const Partition& inner() const noexcept { return inner_; }
  const Partition& outer() const noexcept { return outer_; }
  int rows() const noexcept { return outer_.length(); }
  int cols() const noexcept { return outer_[1]; }
  bool contains(int i, int j) const noexcept { return j > inner_[i] && j <= outer_[i]; }
  int cell_count() const noexcept { return outer_.weight() - inner_.weight(); }
  bool empty() const noexcept { return cell_count() == 0; }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

  /// "mu" or "mu/lambda" with comma-separated parts, "()" for the empty partition.
  std::string to_string() const;

 private:
  Partition inner_;
  Partition outer_;
};

Partition parse_partition(const std::string& text);
SkewShape parse_skew_shape(const std::string& text);

/// True iff some rows x cols block of cells lies entirely inside the shape.
bool contains_rectangle(const SkewShape& shape, int rows, int cols);

/// Kac-Dynkin labels a_1..a_{r+s+1} of a covariant diagram; requires
/// mu_{r+2} <= s + 1.
std::vector<int> kac_dynkin_covariant(const Partition& mu, int r, int s);
/// Labels of a contravariant diagram; requires mu'_{s+2} <= r + 1.
std::vector<int> kac_dynkin_contravariant(const Partition& mu, int r, int s);

/// Uniform-ish random partition fitting inside a rows x cols box (may be empty).
Partition random_partition(Rng& rng, int max_rows, int max_cols);
/// Random nonempty skew shape with mu_1 <= max_cols and mu'_1 <= max_rows.
SkewShape random_skew_shape(Rng& rng, int max_rows, int max_cols);

}  // namespace superbethe
