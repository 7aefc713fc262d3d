#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "lcycle/length_set.hpp"
#include "lcycle/sampler.hpp"

namespace lcycle {

enum class ComponentClass { Tree, Unicyclic, Complex };

/// One connected component. Excess is edges - vertices: -1 for trees, 0 for
/// unicyclic components, >= 1 for complex ones.
struct ComponentSummary {
  std::int64_t vertices = 1;
  std::int64_t edges = 0;
  ComponentClass kind = ComponentClass::Tree;
  std::int64_t cycle_length = 0;  // unicyclic only

  std::int64_t excess() const { return edges - vertices; }
};

/// Per-sample census of the quantities the limit theorems talk about.
struct TrialStats {
  std::int64_t x_L = 0;
  std::int64_t total_excess = 0;
  std::int64_t num_complex = 0;
  std::int64_t num_unicyclic = 0;
  std::int64_t num_trees = 0;
  std::map<std::int64_t, std::int64_t> cycle_length_histogram;
};

/// Union-find plus leaf peeling over one sample. The buffers are kept between
/// calls so a worker can reuse a single census for many trials.
class ComponentCensus {
 public:
  void run(std::int64_t n, std::span<const Edge> edges);

  std::vector<ComponentSummary> summaries() const;
  TrialStats stats(const LengthSet& L) const;

 private:
  std::uint32_t find(std::uint32_t x);
  template <class Visit>
  void for_each_component(Visit&& visit) const;

  std::int64_t n_ = 0;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> edges_in_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> neighbour_xor_;
  std::vector<std::uint32_t> core_;
  std::vector<std::uint32_t> stack_;
};

std::vector<ComponentSummary> decompose(const GraphSample& g);

/// Length of the unique cycle of a connected unicyclic graph on vertices
/// [0, vertices). Throws std::invalid_argument for any other graph.
std::int64_t cycle_length(std::int64_t vertices, std::span<const Edge> edges);

std::int64_t count_L_cycles(std::span<const ComponentSummary> comps, const LengthSet& L);
std::int64_t total_excess(std::span<const ComponentSummary> comps);

}  // namespace lcycle
