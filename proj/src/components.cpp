#include "lcycle/components.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lcycle {

std::uint32_t ComponentCensus::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void ComponentCensus::run(std::int64_t n, std::span<const Edge> edges) {
  if (n < 1) throw std::domain_error("census needs n >= 1");
  n_ = n;
  const auto un = static_cast<std::size_t>(n);
  parent_.resize(un);
  std::iota(parent_.begin(), parent_.end(), 0u);
  size_.assign(un, 1);
  edges_in_.assign(un, 0);
  degree_.assign(un, 0);
  neighbour_xor_.assign(un, 0);
  core_.assign(un, 0);

  for (const auto& e : edges) {
    if (e.v >= un || e.u >= e.v) throw std::domain_error("edge outside [0, n) or not u < v");
    ++degree_[e.u];
    ++degree_[e.v];
    neighbour_xor_[e.u] ^= e.v;
    neighbour_xor_[e.v] ^= e.u;
    std::uint32_t a = find(e.u);
    std::uint32_t b = find(e.v);
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
    }
  }
  for (const auto& e : edges) ++edges_in_[find(e.u)];

  // Peel leaves down to the 2-core. A leaf's only remaining neighbour is the
  // xor of its neighbour list once the peeled ones have been xored out.
  stack_.clear();
  std::vector<std::uint32_t>& deg = degree_;
  for (std::uint32_t x = 0; x < un; ++x) {
    if (deg[x] <= 1) stack_.push_back(x);
  }
  // degree_ doubles as the "removed" marker: peeled vertices get UINT32_MAX.
  constexpr std::uint32_t kPeeled = std::numeric_limits<std::uint32_t>::max();
  while (!stack_.empty()) {
    std::uint32_t x = stack_.back();
    stack_.pop_back();
    if (deg[x] == kPeeled) continue;
    if (deg[x] == 1) {
      std::uint32_t y = neighbour_xor_[x];
      neighbour_xor_[y] ^= x;
      if (--deg[y] == 1) stack_.push_back(y);
    }
    deg[x] = kPeeled;
  }
  for (std::uint32_t x = 0; x < un; ++x) {
    if (deg[x] != kPeeled) ++core_[find(x)];
  }
}

template <class Visit>
void ComponentCensus::for_each_component(Visit&& visit) const {
  for (std::size_t x = 0; x < static_cast<std::size_t>(n_); ++x) {
    if (parent_[x] != x) continue;
    ComponentSummary c;
    c.vertices = size_[x];
    c.edges = edges_in_[x];
    if (c.edges + 1 == c.vertices) {
      c.kind = ComponentClass::Tree;
    } else if (c.edges == c.vertices) {
      c.kind = ComponentClass::Unicyclic;
      c.cycle_length = core_[x];
    } else {
      c.kind = ComponentClass::Complex;
    }
    visit(c);
  }
}

std::vector<ComponentSummary> ComponentCensus::summaries() const {
  std::vector<ComponentSummary> out;
  for_each_component([&](const ComponentSummary& c) { out.push_back(c); });
  return out;
}

TrialStats ComponentCensus::stats(const LengthSet& L) const {
  TrialStats s;
  for_each_component([&](const ComponentSummary& c) {
    switch (c.kind) {
      case ComponentClass::Tree:
        ++s.num_trees;
        break;
      case ComponentClass::Unicyclic:
        ++s.num_unicyclic;
        ++s.cycle_length_histogram[c.cycle_length];
        if (L.contains(c.cycle_length)) ++s.x_L;
        break;
      case ComponentClass::Complex:
        ++s.num_complex;
        s.total_excess += c.excess();
        break;
    }
  });
  return s;
}

std::vector<ComponentSummary> decompose(const GraphSample& g) {
  ComponentCensus census;
  census.run(g.n, g.edges);
  return census.summaries();
}

std::int64_t cycle_length(std::int64_t vertices, std::span<const Edge> edges) {
  if (vertices < 3 || static_cast<std::int64_t>(edges.size()) != vertices) {
    throw std::invalid_argument("cycle_length needs a unicyclic component (edges == vertices >= 3)");
  }
  ComponentCensus census;
  census.run(vertices, edges);
  auto comps = census.summaries();
  if (comps.size() != 1 || comps.front().kind != ComponentClass::Unicyclic) {
    throw std::invalid_argument("cycle_length needs a connected unicyclic component");
  }
  return comps.front().cycle_length;
}

std::int64_t count_L_cycles(std::span<const ComponentSummary> comps, const LengthSet& L) {
  std::int64_t k = 0;
  for (const auto& c : comps) {
    if (c.kind == ComponentClass::Unicyclic && L.contains(c.cycle_length)) ++k;
  }
  return k;
}

std::int64_t total_excess(std::span<const ComponentSummary> comps) {
  std::int64_t r = 0;
  for (const auto& c : comps) {
    if (c.kind == ComponentClass::Complex) r += c.excess();
  }
  return r;
}

}  // namespace lcycle
