#include "superbethe/tableaux.hpp"

#include "superbethe/error.hpp"

namespace superbethe {

LabelSet::LabelSet(std::vector<int> labels, std::vector<int> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size()) {
    throw Error(Errc::invalid_argument, "label and parity lists differ in length");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (parities_[i] != 0 && parities_[i] != 1) throw Error(Errc::invalid_argument, "parity must be 0 or 1");
    for (std::size_t k = 0; k < i; ++k) {
      if (labels_[k] == labels_[i]) throw Error(Errc::invalid_argument, "duplicate label");
    }
  }
}

LabelSet LabelSet::distinguished(int r, int s) {
  std::vector<int> labels;
  std::vector<int> parities;
  for (int a = 1; a <= r + s + 2; ++a) {
    labels.push_back(a);
    parities.push_back(a <= r + 1 ? 0 : 1);
  }
  return LabelSet(std::move(labels), std::move(parities));
}

int LabelSet::index_of(int label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  throw Error(Errc::unknown_label, "label " + std::to_string(label) + " is not in the alphabet");
}

bool LabelSet::contains(int label) const noexcept {
  for (int l : labels_) {
    if (l == label) return true;
  }
  return false;
}

CellOrder::CellOrder(const SkewShape& shape) {
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = shape.inner()[i] + 1; j <= shape.outer()[i]; ++j) {
      Cell c{i, j, -1, -1};
      for (int k = static_cast<int>(cells.size()) - 1; k >= 0; --k) {
        const Cell& o = cells[static_cast<std::size_t>(k)];
        if (o.i == i && o.j == j - 1) c.left = k;
        if (o.i == i - 1 && o.j == j) {
          c.up = k;
          break;
        }
        if (o.i < i - 1) break;
      }
      cells.push_back(c);
    }
  }
}

Tableau::Tableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.cell_count()) {
    throw Error(Errc::invalid_argument, "tableau entry count does not match its shape");
  }
}

int Tableau::at(int i, int j) const {
  if (!shape_.contains(i, j)) throw Error(Errc::invalid_argument, "cell outside the shape");
  int k = 0;
  for (int row = 1; row < i; ++row) k += shape_.outer()[row] - shape_.inner()[row];
  return entries_[static_cast<std::size_t>(k + j - shape_.inner()[i] - 1)];
}

std::string Tableau::to_string() const {
  std::string s;
  std::size_t k = 0;
  for (int i = 1; i <= shape_.rows(); ++i) {
    if (i > 1) s += "|";
    for (int j = 1; j <= shape_.outer()[i]; ++j) {
      if (j > 1) s += " ";
      s += j <= shape_.inner()[i] ? std::string(".") : std::to_string(entries_[k++]);
    }
  }
  return s;
}

namespace {

struct Collect {
  const LabelSet& labels;
  const SkewShape& shape;
  std::vector<int> current;
  std::vector<Tableau> out;

  void push(int pos, int idx) { current[static_cast<std::size_t>(pos)] = labels.label(idx); }
  void pop(int, int) {}
  void leaf() { out.emplace_back(shape, current); }
};

struct Count {
  std::uint64_t n = 0;
  void push(int, int) {}
  void pop(int, int) {}
  void leaf() { ++n; }
};

}  // namespace

std::vector<Tableau> enumerate(const SkewShape& shape, const LabelSet& labels) {
  const CellOrder order(shape);
  Collect c{labels, shape, std::vector<int>(order.cells.size()), {}};
  walk_tableaux(order, labels, c);
  return std::move(c.out);
}

std::uint64_t count(const SkewShape& shape, const LabelSet& labels) {
  const CellOrder order(shape);
  Count c;
  walk_tableaux(order, labels, c);
  return c.n;
}

bool is_admissible(const Tableau& t, const LabelSet& labels) {
  const SkewShape& sh = t.shape();
  for (int i = 1; i <= sh.rows(); ++i) {
    for (int j = sh.inner()[i] + 1; j <= sh.outer()[i]; ++j) {
      const int b = labels.index_of(t.at(i, j));
      if (sh.contains(i, j + 1)) {
        const int c = labels.index_of(t.at(i, j + 1));
        if (c < b) return false;
        if (c == b && labels.parity_at(b) == 1) return false;
      }
      if (sh.contains(i + 1, j)) {
        const int c = labels.index_of(t.at(i + 1, j));
        if (c < b) return false;
        if (c == b && labels.parity_at(b) == 0) return false;
      }
    }
  }
  return true;
}

Tableau top_tableau(const Partition& mu, int r, int s) {
  if (mu[r + 2] > s + 1) {
    throw Error(Errc::not_covariant_dominant, "mu_{r+2} exceeds s+1 for " + mu.to_string());
  }
  std::vector<int> entries;
  for (int i = 1; i <= mu.length(); ++i) {
    for (int j = 1; j <= mu[i]; ++j) entries.push_back(i <= r + 1 ? i : r + j + 1);
  }
  return Tableau(SkewShape(mu), std::move(entries));
}

}  // namespace superbethe
