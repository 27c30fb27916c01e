#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace milnor {

struct NotATree : std::runtime_error {
  explicit NotATree(const std::string& why) : std::runtime_error("not a tree: " + why) {}
};

/// Plumbing tree of Hopf annuli: one sign per node (+ positive band,
/// - negative band), edges the Murasugi-sum gluings. The invariants depend
/// only on the sign multiset, but the tree keeps the type faithful to the
/// construction and leaves room for genus bookkeeping later.
struct PlumbingTree {
  std::vector<int> signs;                     // +1 or -1 per node
  std::vector<std::pair<int, int>> edges;     // node-index pairs

  /// Throws NotATree unless the edges form a connected acyclic graph on the
  /// nodes (a single node with no edges is allowed).
  void validate() const;
};

/// Parses the JSON form {"signs": ["+","-"], "edges": [[0,1]]}.
PlumbingTree parse_plumbing_json(const std::string& json_text);

/// (lambda, mu): lambda counts the negative plumbands, mu the nodes.
std::pair<int, int> plumbing_invariants(const PlumbingTree& t);

/// Mirroring swaps positive and negative Hopf bands.
PlumbingTree plumbing_mirror(const PlumbingTree& t);

}  // namespace milnor
