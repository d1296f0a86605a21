#include "slg/dict/dict_induction.hpp"

namespace slg {

Lexicon induce_dictionary(const LexicalGraph& taxonomy, const TermGraph& graph,
                          const SeedSet& seeds, const DictParams& params, Diagnostics* diag) {
  switch (params.algorithm) {
    case DictAlgorithm::hu_liu:
      return hu_liu(graph, seeds, params, diag);
    case DictAlgorithm::blair_goldensohn:
      return blair_goldensohn(graph, seeds, params, diag);
    case DictAlgorithm::kim_hovy:
      return kim_hovy(graph, seeds, params, diag);
    case DictAlgorithm::esuli_sebastiani:
      return esuli_sebastiani(taxonomy, graph, seeds, params, diag);
    case DictAlgorithm::rao_mincut:
      return rao_mincut(graph, seeds, params, diag);
    case DictAlgorithm::rao_label_propagation:
      return rao_label_propagation(graph, seeds, params, diag);
    case DictAlgorithm::awadallah_radwan:
      return awadallah_radwan(graph, seeds, params, diag);
  }
  return hu_liu(graph, seeds, params, diag);
}

}  // namespace slg
