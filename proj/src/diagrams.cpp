#include "superbethe/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "superbethe/error.hpp"
#include "superbethe/rng.hpp"

namespace superbethe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(Errc::invalid_argument, "negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(Errc::invalid_argument, "partition parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p[1]), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

SkewShape::SkewShape(Partition inner, Partition outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  for (int i = 1; i <= inner_.length(); ++i) {
    if (inner_[i] > outer_[i]) {
      throw Error(Errc::invalid_argument, "inner partition must fit inside the outer one");
    }
  }
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string digits;
  const auto flush = [&] {
    if (!digits.empty()) parts.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      digits += c;
    } else if (c == ',' || c == ' ') {
      flush();
    } else if (c != '(' && c != ')') {
      throw Error(Errc::invalid_argument, "bad character in partition '" + text + "'");
    }
  }
  flush();
  return Partition(std::move(parts));
}

SkewShape parse_skew_shape(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(slash + 1)), parse_partition(text.substr(0, slash)));
}

bool contains_rectangle(const SkewShape& shape, int rows, int cols) {
  if (rows < 1 || cols < 1) throw Error(Errc::invalid_argument, "rectangle sides must be positive");
  for (int i1 = 1; i1 + rows - 1 <= shape.rows(); ++i1) {
    for (int j1 = 1; j1 + cols - 1 <= shape.cols(); ++j1) {
      bool inside = true;
      for (int i = i1; i < i1 + rows && inside; ++i) {
        for (int j = j1; j < j1 + cols && inside; ++j) inside = shape.contains(i, j);
      }
      if (inside) return true;
    }
  }
  return false;
}

std::vector<int> kac_dynkin_covariant(const Partition& mu, int r, int s) {
  if (r < 0 || s < 0) throw Error(Errc::invalid_argument, "r and s must be non-negative");
  if (mu[r + 2] > s + 1) {
    throw Error(Errc::not_covariant_dominant,
                "mu_{r+2} exceeds s+1 for " + mu.to_string());
  }
  const Partition mc = conjugate(mu);
  const auto eta = [&](int j) { return std::max(mc[j] - r - 1, 0); };
  std::vector<int> a(static_cast<std::size_t>(r + s + 1));
  for (int j = 1; j <= r; ++j) a[static_cast<std::size_t>(j - 1)] = mu[j] - mu[j + 1];
  a[static_cast<std::size_t>(r)] = mu[r + 1] + eta(1);
  for (int j = 1; j <= s; ++j) a[static_cast<std::size_t>(j + r)] = eta(j) - eta(j + 1);
  return a;
}

std::vector<int> kac_dynkin_contravariant(const Partition& mu, int r, int s) {
  if (r < 0 || s < 0) throw Error(Errc::invalid_argument, "r and s must be non-negative");
  const Partition mc = conjugate(mu);
  if (mc[s + 2] > r + 1) {
    throw Error(Errc::not_covariant_dominant,
                "mu'_{s+2} exceeds r+1 for " + mu.to_string());
  }
  const auto xi = [&](int j) { return std::max(mu[j] - s - 1, 0); };
  std::vector<int> a(static_cast<std::size_t>(r + s + 1));
  for (int j = 1; j <= r; ++j) a[static_cast<std::size_t>(r - j)] = xi(j) - xi(j + 1);
  a[static_cast<std::size_t>(r)] = -xi(1) - mc[s + 1];
  for (int j = 1; j <= s; ++j) a[static_cast<std::size_t>(r + s + 1 - j)] = mc[j] - mc[j + 1];
  return a;
}

Partition random_partition(Rng& rng, int max_rows, int max_cols) {
  std::vector<int> parts;
  int prev = max_cols;
  for (int i = 0; i < max_rows && prev > 0; ++i) {
    const int part = static_cast<int>(rng.uniform(i == 0 ? 1 : 0, prev));
    if (part == 0) break;
    parts.push_back(part);
    prev = part;
  }
  return Partition(std::move(parts));
}

SkewShape random_skew_shape(Rng& rng, int max_rows, int max_cols) {
  for (;;) {
    Partition outer = random_partition(rng, max_rows, max_cols);
    if (outer.empty()) continue;
    std::vector<int> inner;
    if (rng.uniform(0, 2) != 0) {
      int prev = outer[1];
      for (int i = 1; i <= outer.length(); ++i) {
        const int part = static_cast<int>(rng.uniform(0, std::min(prev, outer[i])));
        inner.push_back(part);
        prev = part;
      }
    }
    SkewShape shape(Partition(std::move(inner)), std::move(outer));
    if (!shape.empty()) return shape;
  }
}

}  // namespace superbethe
