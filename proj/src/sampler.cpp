#include "lcycle/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lcycle {

namespace {

constexpr std::uint64_t kEmpty = std::numeric_limits<std::uint64_t>::max();

void check_vertices(std::int64_t n) {
  if (n < 1) throw std::domain_error("graph needs n >= 1");
  if (n > static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max())) {
    throw std::domain_error("n exceeds the 32-bit vertex id range");
  }
}

}  // namespace

std::uint64_t pair_count(std::int64_t n) {
  if (n < 0) throw std::domain_error("pair_count needs n >= 0");
  auto un = static_cast<std::uint64_t>(n);
  return un < 2 ? 0 : un * (un - 1) / 2;
}

Edge edge_unrank(std::int64_t n, std::uint64_t i) {
  if (i >= pair_count(n)) {
    throw std::domain_error("edge index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  }
  // v is the largest integer with v(v-1)/2 <= i; fix up the floating estimate.
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
  while (v * (v - 1) / 2 > i) --v;
  while ((v + 1) * v / 2 <= i) ++v;
  return {static_cast<std::uint32_t>(i - v * (v - 1) / 2), static_cast<std::uint32_t>(v)};
}

std::uint64_t edge_rank(const Edge& e) {
  if (e.u >= e.v) throw std::domain_error("edge must satisfy u < v");
  return static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
}

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32u),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32u)};
  return Rng(seq);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64u);
}

void GnmSampler::reset(std::size_t expected) {
  std::size_t capacity = std::bit_ceil(std::max<std::size_t>(16, 2 * expected));
  if (slots_.size() != capacity) {
    slots_.assign(capacity, kEmpty);
  } else {
    std::fill(slots_.begin(), slots_.end(), kEmpty);
  }
  mask_ = capacity - 1;
  shift_ = 64 - std::countr_zero(capacity);
}

bool GnmSampler::insert(std::uint64_t key) {
  std::uint64_t pos = (key * 0x9E3779B97F4A7C15ull) >> shift_;
  while (true) {
    std::uint64_t& slot = slots_[pos];
    if (slot == key) return false;
    if (slot == kEmpty) {
      slot = key;
      return true;
    }
    pos = (pos + 1) & mask_;
  }
}

void GnmSampler::sample(std::int64_t n, std::int64_t m, Rng& rng, std::vector<Edge>& out) {
  check_vertices(n);
  const std::uint64_t total = pair_count(n);
  if (m < 0 || static_cast<std::uint64_t>(m) > total) {
    throw std::domain_error("M = " + std::to_string(m) + " exceeds C(n,2) = " + std::to_string(total));
  }
  out.clear();
  out.reserve(static_cast<std::size_t>(m));
  reset(static_cast<std::size_t>(m));
  // Floyd: for j in [N-M, N), draw t in [0, j]; take t unless already taken, else j.
  for (std::uint64_t j = total - static_cast<std::uint64_t>(m); j < total; ++j) {
    std::uint64_t t = uniform_below(rng, j + 1);
    std::uint64_t chosen = t;
    if (!insert(t)) {
      insert(j);
      chosen = j;
    }
    out.push_back(edge_unrank(n, chosen));
  }
}

GraphSample sample_gnm(std::int64_t n, std::int64_t m, Rng& rng) {
  GraphSample g{n, {}};
  GnmSampler sampler;
  sampler.sample(n, m, rng, g.edges);
  return g;
}

GraphSample sample_gnm(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  Rng rng = make_stream(seed, 0);
  return sample_gnm(n, m, rng);
}

void write_edge_list(std::ostream& os, const GraphSample& g, std::uint64_t seed) {
  os << g.n << ' ' << g.edges.size() << ' ' << seed << '\n';
  for (const auto& e : g.edges) os << e.u << ' ' << e.v << '\n';
}

}  // namespace lcycle
