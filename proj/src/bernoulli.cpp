#include "stirling/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace stirling {

namespace {

std::mutex cache_mutex;
std::vector<ExactRational> cache;  // cache[k] = B_k, standard convention

// Extends the cache through index k.  Entries are write-once: existing
// values are never recomputed.
void extend_cache(unsigned k) {
  if (cache.empty()) cache.emplace_back(1);
  for (unsigned m = cache.size(); m <= k; ++m) {
    ExactRational s(0);
    for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, j) * cache[j];
    cache.push_back(-s / ExactRational(m + 1));
  }
}

}  // namespace

ExactRational bernoulli_number(unsigned k, B1Convention convention) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  extend_cache(k);
  if (k == 1 && convention == B1Convention::plus_half) return ExactRational(1, 2);
  return cache[k];
}

ExactRational faulhaber_sum(unsigned p, unsigned long m) {
  if (p < 1) throw std::invalid_argument("faulhaber_sum: p must be >= 1");
  const ExactRational mq{ExactInteger(m)};
  ExactRational s(0);
  for (unsigned j = 0; j <= p; ++j) {
    const ExactRational bj = bernoulli_number(j, B1Convention::plus_half);
    if (bj == 0) continue;
    s += binomial(p + 1, j) * bj * pow_rational(mq, static_cast<long>(p + 1 - j));
  }
  return s / ExactRational(p + 1);
}

}  // namespace stirling
