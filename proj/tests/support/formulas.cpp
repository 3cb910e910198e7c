#include "formulas.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hrrc::testing {

namespace {

// Literals encoded as 2v for x_v and 2v+1 for its negation, so sorting
// gives a canonical form.
using Code = std::vector<std::vector<int>>;

CnfFormula decode(int n, const Code& code) {
  CnfFormula f;
  f.num_variables = n;
  for (const auto& clause : code) {
    Clause c;
    for (int lit : clause) c.push_back({lit / 2, lit % 2 == 0});
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace

std::vector<CnfFormula> all_ppn_formulas(int n) {
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v) pool.insert(pool.end(), {2 * v, 2 * v, 2 * v + 1});
  std::set<Code> seen;
  std::function<void(std::vector<int>, Code)> split = [&](std::vector<int> rest, Code done) {
    if (rest.empty()) {
      std::sort(done.begin(), done.end());
      seen.insert(done);
      return;
    }
    const int head = rest.front();
    for (std::size_t p = 1; p < rest.size(); ++p) {
      // two-literal clause {head, rest[p]}
      {
        std::vector<int> left;
        for (std::size_t k = 1; k < rest.size(); ++k)
          if (k != p) left.push_back(rest[k]);
        Code next = done;
        next.push_back({head, rest[p]});
        split(left, next);
      }
      for (std::size_t q = p + 1; q < rest.size(); ++q) {
        std::vector<int> left;
        for (std::size_t k = 1; k < rest.size(); ++k)
          if (k != p && k != q) left.push_back(rest[k]);
        Code next = done;
        next.push_back({head, rest[p], rest[q]});
        split(left, next);
      }
    }
  };
  split(pool, {});
  std::vector<CnfFormula> out;
  for (const auto& code : seen) {
    CnfFormula f = decode(n, code);
    if (check_ppn(f).empty()) out.push_back(f);
  }
  return out;
}

CnfFormula random_cnf(Rng& rng, int n, int m, int max_len) {
  CnfFormula f;
  f.num_variables = n;
  std::vector<int> vars(n);
  for (int v = 0; v < n; ++v) vars[v] = v + 1;
  for (int j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    const int len = std::uniform_int_distribution<int>(1, std::min(max_len, n))(rng);
    Clause c;
    for (int k = 0; k < len; ++k) c.push_back({vars[k], std::bernoulli_distribution(0.5)(rng)});
    f.clauses.push_back(c);
  }
  return f;
}

CnfFormula random_ppn(Rng& rng, int n, int m2, int m3) {
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v) pool.insert(pool.end(), {2 * v, 2 * v, 2 * v + 1});
  for (;;) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Code code;
    std::size_t k = 0;
    for (int j = 0; j < m2 + m3; ++j) {
      const std::size_t len = j < m2 ? 2 : 3;
      code.emplace_back(pool.begin() + k, pool.begin() + k + len);
      k += len;
    }
    std::shuffle(code.begin(), code.end(), rng);
    CnfFormula f = decode(n, code);
    if (check_ppn(f).empty()) return f;
  }
}

}  // namespace hrrc::testing
