// Compares the greedy approximation, the bottleneck heuristic and the exact
// optimum on the bottleneck lower-bound construction.

#include <cstdio>

#include "dilation/dilation.hpp"

int main() {
  using namespace dil;
  for (std::size_t k = 1; k <= 3; ++k) {
    const Construction c = gen_bottleneck_lb(k, 1e-3, /*perturb=*/true);
    const auto greedy = augment(c.graph, k, 0.1);
    const auto bottleneck = bottleneck_augment(c.graph, k);
    const auto exact = exact_optimal(c.graph, k);
    std::printf("k=%zu  n=%zu  initial=%.4f  greedy=%.4f  bottleneck=%.4f  optimum=%.4f\n", k, c.graph.size(),
                dil::dilation(c.graph).t, greedy.achieved_dilation, bottleneck.achieved_dilation, exact.t_star);
  }
  return 0;
}
