#include "partitions.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace gpi {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("Partition: zero part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts not weakly decreasing");
    sum_ += parts_[i];
  }
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void gen_partitions(unsigned m, unsigned max_part, unsigned rows_left, std::vector<unsigned>& acc,
                    std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(acc);
    return;
  }
  if (rows_left == 0) return;
  unsigned hi = std::min(m, max_part);
  for (unsigned p = hi; p >= 1; --p) {
    // Remaining rows must be able to absorb m - p with parts <= p.
    if (static_cast<unsigned long>(p) * rows_left < m) break;
    acc.push_back(p);
    gen_partitions(m - p, p, rows_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned m, unsigned max_height) {
  if (max_height < 1) throw std::invalid_argument("enumerate_partitions: max_height must be >= 1");
  std::vector<Partition> out;
  std::vector<unsigned> acc;
  gen_partitions(m, m == 0 ? 1 : m, max_height, acc, out);
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<unsigned> c;
  unsigned h = p.height();
  if (h == 0) return Partition();
  c.reserve(p.parts()[0]);
  for (unsigned col = 1; col <= p.parts()[0]; ++col) {
    unsigned cnt = 0;
    for (unsigned i = 0; i < h; ++i) {
      if (p.parts()[i] >= col) ++cnt;
    }
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

Partition scale(const Partition& p, unsigned q) {
  if (q == 0) throw std::invalid_argument("scale: q must be >= 1");
  std::vector<unsigned> parts = p.parts();
  for (auto& x : parts) x *= q;
  return Partition(std::move(parts));
}

Int dim_irrep(const Partition& lambda) {
  if (lambda.height() == 0) throw std::invalid_argument("dim_irrep: empty partition");
  Partition conj = conjugate(lambda);
  Int hooks = 1;
  for (unsigned i = 0; i < lambda.height(); ++i) {
    for (unsigned j = 0; j < lambda.parts()[i]; ++j) {
      unsigned hook = lambda.parts()[i] - j + conj.parts()[j] - i - 1;
      hooks *= hook;
    }
  }
  return factorial(lambda.sum()) / hooks;
}

Partition push_down_box(const Partition& nu, unsigned i, unsigned j, unsigned d) {
  if (i < 1 || j <= i || j > d) throw std::invalid_argument("push_down_box: need 1 <= i < j <= d");
  if (nu.height() > d) throw std::invalid_argument("push_down_box: height exceeds d");
  std::vector<unsigned> rows(d, 0);
  for (unsigned t = 0; t < nu.height(); ++t) rows[t] = nu.parts()[t];
  if (rows[i - 1] == 0) throw std::invalid_argument("push_down_box: row " + std::to_string(i) + " is empty");
  rows[i - 1] -= 1;
  rows[j - 1] += 1;
  for (unsigned t = 0; t + 1 < d; ++t) {
    if (rows[t] < rows[t + 1]) {
      throw std::invalid_argument("push_down_box: result not weakly decreasing between rows " +
                                  std::to_string(t + 1) + " and " + std::to_string(t + 2));
    }
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

CycleType cycle_type(const Partition& cycles) {
  std::map<unsigned, unsigned> mult;
  for (unsigned l : cycles.parts()) ++mult[l];
  Int z = 1;
  for (auto [l, m] : mult) {
    for (unsigned t = 0; t < m; ++t) z *= l;
    z *= factorial(m);
  }
  return CycleType{cycles, factorial(cycles.sum()) / z};
}

std::vector<CycleType> conjugacy_classes(unsigned m) {
  std::vector<CycleType> out;
  for (const auto& p : enumerate_partitions(m, m == 0 ? 1 : m)) out.push_back(cycle_type(p));
  return out;
}

}  // namespace gpi
