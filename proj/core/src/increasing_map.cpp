#include "zoll/increasing_map.hpp"

#include <string>

#include "zoll/errors.hpp"

namespace zoll {

IncreasingMap::IncreasingMap(std::vector<std::size_t> values, std::size_t target)
    : values_(std::move(values)), target_(target) {
  std::size_t prev = 0;
  for (std::size_t v : values_) {
    if (v <= prev || v > target_)
      throw DomainError("increasing map: value " + std::to_string(v) +
                        " breaks strict monotonicity or exceeds target " + std::to_string(target_));
    prev = v;
  }
}

namespace {

void value_lists_rec(std::size_t n, std::size_t next, std::size_t hi, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const std::size_t still_needed = n - cur.size();
  for (std::size_t v = next; v + still_needed <= hi + 1; ++v) {
    cur.push_back(v);
    value_lists_rec(n, v + 1, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> increasing_value_lists(std::size_t n, std::size_t lo,
                                                             std::size_t hi) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  if (lo > hi || hi - lo + 1 < n) return out;
  std::vector<std::size_t> cur;
  cur.reserve(n);
  value_lists_rec(n, lo, hi, cur, out);
  return out;
}

std::vector<IncreasingMap> enumerate_increasing_maps(std::size_t n, std::size_t d) {
  std::vector<IncreasingMap> out;
  for (auto& values : increasing_value_lists(n, 1, d)) out.emplace_back(std::move(values), d);
  return out;
}

Polynomial pushforward(const IncreasingMap& alpha, const Polynomial& p) {
  const std::size_t n = alpha.source_size();
  return p.transform([&](const Monomial& m) {
    if (m.width() > n + 1)
      throw DomainError("pushforward: variable t" + std::to_string(m.width() - 1) +
                        " outside the source [1," + std::to_string(n) + "]");
    std::vector<Monomial::Exponent> e(alpha.target_size() + 1, 0);
    e[0] = m.exponent(0);
    for (std::size_t i = 1; i < m.width(); ++i) e[alpha(i)] = m.exponent(i);
    return Polynomial(Monomial(std::move(e)));
  });
}

Polynomial pullback(const IncreasingMap& alpha, const Polynomial& p) {
  const std::size_t d = alpha.target_size();
  std::vector<std::size_t> preimage(d + 1, 0);
  for (std::size_t j = 1; j <= alpha.source_size(); ++j) preimage[alpha(j)] = j;
  return p.transform([&](const Monomial& m) {
    if (m.width() > d + 1)
      throw DomainError("pullback: variable t" + std::to_string(m.width() - 1) +
                        " outside the target [1," + std::to_string(d) + "]");
    std::vector<Monomial::Exponent> e(alpha.source_size() + 1, 0);
    e[0] = m.exponent(0);
    for (std::size_t i = 1; i < m.width(); ++i) {
      if (m.exponent(i) == 0) continue;
      if (preimage[i] == 0) return Polynomial();
      e[preimage[i]] = m.exponent(i);
    }
    return Polynomial(Monomial(std::move(e)));
  });
}

std::size_t binomial(std::size_t d, std::size_t n) {
  if (n > d) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = r * (d - n + i) / i;
  return r;
}

}  // namespace zoll
