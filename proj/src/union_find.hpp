#pragma once

#include <numeric>
#include <vector>

namespace splitgraph::detail {

struct UnionFind {
  std::vector<int> parent;
  int sets = 0;

  explicit UnionFind(int n = 0) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    --sets;
    return true;
  }
};

}  // namespace splitgraph::detail
