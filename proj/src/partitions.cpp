#include "kalvar/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kalvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition with negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<int> Partition::padded(int len) const {
  if (len < length()) throw std::invalid_argument("cannot pad partition to a shorter length");
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(len), 0);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew shape " + outer.to_string() + "/" + inner.to_string() + ": inner not contained in outer");
}

std::string SkewShape::to_string() const { return outer.to_string() + "/" + inner.to_string(); }

Partition conjugate(const Partition& lambda) {
  std::vector<int> t(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
  return Partition(std::move(t));
}

namespace {

void enumerate_box(int rows, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == rows) return;
  for (int v = 1; v <= cap; ++v) {
    prefix.push_back(v);
    enumerate_box(rows, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(BoxConstraint box, PartitionFilter filter) {
  std::vector<Partition> all;
  if (box.rows < 0 || box.cols < 0) return all;
  std::vector<int> prefix;
  enumerate_box(box.rows, box.cols, prefix, all);

  std::erase_if(all, [&](const Partition& p) {
    return (filter.exact_size && p.size() != *filter.exact_size) ||
           (filter.exact_length && p.length() != *filter.exact_length);
  });
  std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return all;
}

BigInt schur_dim(std::span<const int> eta, int m) {
  if (m <= 0) throw std::invalid_argument("schur_dim: m must be positive");
  for (std::size_t i = 1; i < eta.size(); ++i)
    if (eta[i] > eta[i - 1]) throw std::invalid_argument("schur_dim: weight must be weakly decreasing");

  std::vector<int> w(eta.begin(), eta.end());
  if (static_cast<int>(w.size()) > m) {
    if (w.back() < 0) throw std::invalid_argument("schur_dim: weight longer than m must be a partition");
    if (w[static_cast<std::size_t>(m)] > 0) return BigInt(0);
    w.resize(static_cast<std::size_t>(m));
  }
  // a short weight with negative entries is not weakly decreasing once zero padded
  w.resize(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) throw std::invalid_argument("schur_dim: zero padding breaks weak decrease");

  BigInt num = 1, den = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      num *= w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

BigInt schur_dim(const Partition& lambda, int m) { return schur_dim(std::span<const int>(lambda.parts()), m); }

namespace {

// Counts chains inner = nu^0 ⊆ nu^1 ⊆ ... ⊆ nu^m = outer where each step adds a
// horizontal strip; the boxes of step k carry entry k in the skew tableau.
class SkewCounter {
 public:
  SkewCounter(const SkewShape& shape, int m)
      : m_(m), rows_(shape.outer.length()), outer_(shape.outer.padded(rows_)) {
    inner_ = shape.inner.padded(rows_);
  }

  BigInt count() { return from(inner_, 0); }

 private:
  BigInt from(const std::vector<int>& nu, int used) {
    if (nu == outer_) return 1;
    if (used == m_) return 0;
    auto key = std::make_pair(nu, used);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt total = 0;
    std::vector<int> next(nu);
    extend(nu, next, 0, used, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Chooses next[row] in [nu[row], min(outer[row], nu[row-1])].
  void extend(const std::vector<int>& nu, std::vector<int>& next, int row, int used, BigInt& total) {
    if (row == rows_) {
      total += from(next, used + 1);
      return;
    }
    const int hi = row == 0 ? outer_[0] : std::min(outer_[static_cast<std::size_t>(row)], nu[static_cast<std::size_t>(row - 1)]);
    for (int v = nu[static_cast<std::size_t>(row)]; v <= hi; ++v) {
      next[static_cast<std::size_t>(row)] = v;
      extend(nu, next, row + 1, used, total);
    }
    next[static_cast<std::size_t>(row)] = nu[static_cast<std::size_t>(row)];
  }

  int m_;
  int rows_;
  std::vector<int> outer_;
  std::vector<int> inner_;
  std::map<std::pair<std::vector<int>, int>, BigInt> memo_;
};

}  // namespace

BigInt skew_schur_dim(const SkewShape& shape, int m) {
  if (m <= 0) throw std::invalid_argument("skew_schur_dim: m must be positive");
  // a column longer than m cannot be filled strictly increasing
  const Partition ot = conjugate(shape.outer), it = conjugate(shape.inner);
  for (int c = 0; c < ot.length(); ++c)
    if (ot[static_cast<std::size_t>(c)] - it[static_cast<std::size_t>(c)] > m) return 0;
  return SkewCounter(shape, m).count();
}

bool is_horizontal_strip(const SkewShape& shape) {
  const Partition ot = conjugate(shape.outer), it = conjugate(shape.inner);
  for (int c = 0; c < ot.length(); ++c)
    if (ot[static_cast<std::size_t>(c)] - it[static_cast<std::size_t>(c)] > 1) return false;
  return true;
}

std::vector<CauchyTerm> cauchy_terms(int p, int dim_e, int dim_f) {
  std::vector<CauchyTerm> out;
  for (auto& lambda : partitions_in_box({dim_e, dim_f}, {.exact_size = p, .exact_length = std::nullopt})) {
    Partition t = conjugate(lambda);
    out.push_back({std::move(lambda), std::move(t)});
  }
  return out;
}

Partition tilde_shift(const Partition& lambda, int s) {
  if (lambda.length() != s) throw std::invalid_argument("tilde_shift: partition " + lambda.to_string() + " must have exactly " + std::to_string(s) + " positive parts");
  std::vector<int> parts(lambda.parts());
  for (int& p : parts) --p;
  return Partition(std::move(parts));
}

}  // namespace kalvar
