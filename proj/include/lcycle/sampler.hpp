#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace lcycle {

struct Edge {
  std::uint32_t u = 0;  // u < v
  std::uint32_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One realization of G(n, M): M distinct unordered pairs of [0, n).
struct GraphSample {
  std::int64_t n = 0;
  std::vector<Edge> edges;
};

/// C(n, 2).
std::uint64_t pair_count(std::int64_t n);

/// Colexicographic bijection [0, C(n,2)) <-> {u < v}: i = v(v-1)/2 + u.
Edge edge_unrank(std::int64_t n, std::uint64_t i);
std::uint64_t edge_rank(const Edge& e);

/// The generator behind every random draw: std::mt19937_64. Stream `index` of
/// `seed` is the engine seeded through std::seed_seq with the four 32-bit words
/// (seed low, seed high, index low, index high).
using Rng = std::mt19937_64;
Rng make_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound) by Lemire's multiply-and-reject; bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Floyd's combination sampler over edge indices. Keeps its hash set between
/// calls so repeated trials do not reallocate. Not thread-safe; one per worker.
class GnmSampler {
 public:
  void sample(std::int64_t n, std::int64_t m, Rng& rng, std::vector<Edge>& out);

 private:
  bool insert(std::uint64_t key);
  void reset(std::size_t expected);

  std::vector<std::uint64_t> slots_;
  std::uint64_t mask_ = 0;
  int shift_ = 64;
};

/// Uniform G(n, M) on stream 0 of `seed`.
GraphSample sample_gnm(std::int64_t n, std::int64_t m, std::uint64_t seed);
GraphSample sample_gnm(std::int64_t n, std::int64_t m, Rng& rng);

/// Header line "n M seed", then one "u v" per edge.
void write_edge_list(std::ostream& os, const GraphSample& g, std::uint64_t seed);

}  // namespace lcycle
