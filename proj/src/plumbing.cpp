#include "milnor/plumbing.hpp"

#include <json.hpp>
#include <numeric>

namespace milnor {

namespace {

int find_root(std::vector<int>& parent, int a) {
  while (parent[static_cast<std::size_t>(a)] != a) {
    parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    a = parent[static_cast<std::size_t>(a)];
  }
  return a;
}

}  // namespace

void PlumbingTree::validate() const {
  const int n = static_cast<int>(signs.size());
  if (n == 0) throw NotATree("no nodes");
  for (int s : signs) {
    if (s != 1 && s != -1) throw NotATree("node sign must be + or -");
  }
  if (n == 1) {
    if (!edges.empty()) throw NotATree("single node must have no edges");
    return;
  }
  if (static_cast<int>(edges.size()) != n - 1)
    throw NotATree("a tree on " + std::to_string(n) + " nodes needs " + std::to_string(n - 1) +
                   " edges");
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw NotATree("edge index out of range");
    const int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra == rb) throw NotATree("edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
}

PlumbingTree parse_plumbing_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NotATree(std::string("invalid JSON: ") + e.what());
  }
  PlumbingTree t;
  if (!j.contains("signs") || !j["signs"].is_array()) throw NotATree("missing \"signs\" array");
  for (const auto& s : j["signs"]) {
    const std::string text = s.get<std::string>();
    if (text == "+")
      t.signs.push_back(+1);
    else if (text == "-")
      t.signs.push_back(-1);
    else
      throw NotATree("sign entries must be \"+\" or \"-\"");
  }
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw NotATree("edges must be [a,b] pairs");
      t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  t.validate();
  return t;
}

std::pair<int, int> plumbing_invariants(const PlumbingTree& t) {
  t.validate();
  int negatives = 0;
  for (int s : t.signs) negatives += (s < 0);
  return {negatives, static_cast<int>(t.signs.size())};
}

PlumbingTree plumbing_mirror(const PlumbingTree& t) {
  PlumbingTree out = t;
  for (int& s : out.signs) s = -s;
  return out;
}

}  // namespace milnor
