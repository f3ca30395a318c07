#include "elliptope/oracle.hpp"

#include <algorithm>
#include <bit>

#include "elliptope/error.hpp"

namespace ell {

MaxCutResult brute_force_maxcut(const Graph& g) {
  int n = g.n();
  if (n > 28) fail(ErrorCode::too_large, "brute_force_maxcut caps at 28 vertices");
  MaxCutResult res;
  if (n == 0) {
    res.count = 1;
    res.optimal_cuts.push_back(VertexPartition{});
    return res;
  }

  std::vector<std::vector<std::pair<int, const Rational*>>> adj(n);
  for (const auto& [e, w] : g.edges()) {
    adj[e.first].push_back({e.second, &w});
    adj[e.second].push_back({e.first, &w});
  }

  std::vector<unsigned char> side(n, 0);
  Rational cut;  // value for the all-A partition
  Rational best = cut;
  long long best_count = 1;
  std::vector<unsigned long long> best_masks{0};
  const size_t kMaxStoredCuts = 4096;  // count stays exact beyond the cap

  unsigned long long total = n == 1 ? 1ULL : (1ULL << (n - 1));
  for (unsigned long long i = 1; i < total; ++i) {
    int v = std::countr_zero(i) + 1;  // Gray code flip; vertex 0 stays on A
    for (const auto& [u, w] : adj[v]) {
      if (side[u] == side[v])
        cut += *w;
      else
        cut -= *w;
    }
    side[v] ^= 1;
    if (cut > best) {
      best = cut;
      best_count = 1;
      best_masks.clear();
      best_masks.push_back(i);
    } else if (cut == best) {
      ++best_count;
      if (best_masks.size() < kMaxStoredCuts) best_masks.push_back(i);
    }
  }

  res.value = best;
  res.count = best_count;
  for (unsigned long long gmask : best_masks) {
    unsigned long long m = gmask ^ (gmask >> 1);  // Gray decode
    VertexPartition p;
    p.side.assign(n, 0);
    for (int v = 1; v < n; ++v)
      if ((m >> (v - 1)) & 1ULL) p.side[v] = 1;
    res.optimal_cuts.push_back(p.canonical());
  }
  std::sort(res.optimal_cuts.begin(), res.optimal_cuts.end(),
            [](const VertexPartition& a, const VertexPartition& b) { return a.side < b.side; });
  return res;
}

Rational cut_value(const Graph& g, const VertexPartition& p) {
  if (p.n() != g.n()) fail(ErrorCode::size_mismatch, "partition does not cover the graph");
  Rational s;
  for (const auto& [e, w] : g.edges())
    if (p.side[e.first] != p.side[e.second]) s += w;
  return s;
}

std::optional<std::vector<int>> exact_sum_decision(const std::vector<long long>& a) {
  if (a.empty()) return std::nullopt;
  long long total = 0;
  for (long long x : a) {
    if (x <= 0) fail(ErrorCode::internal_error, "exact_sum_decision needs positive inputs");
    total += x;
  }
  if (total % 2 != 0) return std::nullopt;
  long long target = total / 2;

  // from[t] = index of the item that first reached sum t
  std::vector<int> from(static_cast<size_t>(target) + 1, -1);
  from[0] = static_cast<int>(a.size());  // sentinel: sum 0 uses nothing
  // descending t: states read during item i's pass predate the pass
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i] > target) continue;
    for (long long t = target; t >= a[i]; --t)
      if (from[t] < 0 && from[t - a[i]] >= 0) from[t] = i;
    if (from[target] >= 0) break;
  }
  if (from[target] < 0) return std::nullopt;

  std::vector<int> subset;
  long long t = target;
  while (t > 0) {
    int i = from[t];
    subset.push_back(i);
    t -= a[i];
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

std::optional<std::vector<int>> exact_sum_decision(const std::vector<Rational>& a) {
  // scale by the lcm of denominators so the DP target is integral
  mpz_class lcm = 1;
  for (const auto& x : a) {
    if (x.sign() <= 0) fail(ErrorCode::internal_error, "exact_sum_decision needs positive inputs");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
  }
  std::vector<long long> ints;
  ints.reserve(a.size());
  for (const auto& x : a) {
    mpz_class v = x.num() * (lcm / x.den());
    if (!v.fits_slong_p())
      fail(ErrorCode::too_large, "scaled subset-sum input exceeds the integer range");
    ints.push_back(v.get_si());
  }
  return exact_sum_decision(ints);
}

long long count_balanced_partitions(const std::vector<Rational>& m, long long cap) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  if (n > 30) fail(ErrorCode::too_large, "count_balanced_partitions caps at 30 masses");
  Rational total;
  for (const auto& x : m) total += x;
  Rational half = total / Rational(2);
  long long count = 0;
  // fix index 0 on side A to quotient out the complement
  for (unsigned long long mask = 0; mask < (1ULL << (n - 1)); ++mask) {
    Rational s = m[0];
    for (int i = 1; i < n; ++i)
      if ((mask >> (i - 1)) & 1ULL) s += m[i];
    if (s == half) {
      if (++count >= cap) return cap;
    }
  }
  return count;
}

}  // namespace ell
