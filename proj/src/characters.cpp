#include "characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace gpi {

namespace {

using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

std::map<Key, Int> g_memo;
std::mutex g_memo_mu;

// Beta set of a partition: {lambda_i + (h - i)}, strictly decreasing.
std::vector<unsigned> beta_set(const std::vector<unsigned>& parts) {
  unsigned h = static_cast<unsigned>(parts.size());
  std::vector<unsigned> beta(h);
  for (unsigned i = 0; i < h; ++i) beta[i] = parts[i] + (h - 1 - i);
  return beta;
}

std::vector<unsigned> partition_from_beta(std::vector<unsigned> beta) {
  std::sort(beta.rbegin(), beta.rend());
  unsigned h = static_cast<unsigned>(beta.size());
  std::vector<unsigned> parts;
  for (unsigned t = 0; t < h; ++t) {
    unsigned p = beta[t] - (h - 1 - t);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

Int mn(const std::vector<unsigned>& lambda, const std::vector<unsigned>& cycles) {
  if (lambda.empty()) return 1;  // cycles empty too (sizes tracked by caller)
  Key key(lambda, cycles);
  {
    std::lock_guard<std::mutex> lk(g_memo_mu);
    auto it = g_memo.find(key);
    if (it != g_memo.end()) return it->second;
  }
  unsigned l = cycles.front();
  std::vector<unsigned> rest(cycles.begin() + 1, cycles.end());
  std::vector<unsigned> beta = beta_set(lambda);
  Int total = 0;
  for (size_t bi = 0; bi < beta.size(); ++bi) {
    unsigned b = beta[bi];
    if (b < l) continue;
    unsigned target = b - l;
    bool occupied = false;
    unsigned between = 0;
    for (unsigned c : beta) {
      if (c == target) occupied = true;
      if (c > target && c < b) ++between;
    }
    if (occupied) continue;
    std::vector<unsigned> nb = beta;
    nb[bi] = target;
    Int sub = mn(partition_from_beta(std::move(nb)), rest);
    if (between % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  {
    std::lock_guard<std::mutex> lk(g_memo_mu);
    g_memo.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

Int char_value(const Partition& lambda, const Partition& cycles) {
  if (lambda.sum() != cycles.sum()) {
    throw std::invalid_argument("char_value: partition of " + std::to_string(lambda.sum()) +
                                " vs cycle type of " + std::to_string(cycles.sum()));
  }
  return mn(lambda.parts(), cycles.parts());
}

}  // namespace gpi
