#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "graph.hpp"
#include "graph_doc.hpp"

namespace ofc::testutil {

inline long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// Positive weight expression for the given backend. Series weights keep a
// positive leading coefficient; later terms may dip negative.
inline std::string random_weight(std::mt19937_64& rng, backend b) {
  auto frac = [&](bool allow_negative) {
    long p = pick(rng, 1, 9);
    long q = pick(rng, 1, 9);
    std::string s = std::to_string(p);
    if (q > 1) s += "/" + std::to_string(q);
    if (allow_negative && rng() % 2 == 0) s = "- " + s;
    return s;
  };
  if (b == backend::rational || b == backend::floating) return frac(false);
  int nterms = static_cast<int>(pick(rng, 1, 3));
  bool used[3] = {false, false, false};
  std::vector<int> exps;
  while (static_cast<int>(exps.size()) < nterms) {
    int e = static_cast<int>(rng() % 3);
    if (!used[e]) {
      used[e] = true;
      exps.push_back(e);
    }
  }
  std::sort(exps.begin(), exps.end());
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    std::string piece = frac(i > 0);
    if (exps[i] > 0) {
      std::size_t at = piece.find_first_not_of("- ");
      std::string mag = piece.substr(at);
      piece = piece.substr(0, at) + (mag == "1" ? "" : mag + "*") + "e^" +
              std::to_string(exps[i]);
    }
    if (i == 0) {
      out = piece;
    } else if (piece.rfind("- ", 0) == 0) {
      out += " " + piece;
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

// Connected graph on n >= 2 vertices: a random spanning tree plus extras.
inline GraphDoc random_connected_doc(std::mt19937_64& rng, backend b, int n) {
  GraphDoc d;
  d.field = b;
  for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) {
    pairs.push_back({static_cast<int>(rng() % i), i});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool tree = false;
      for (auto& pr : pairs) tree = tree || (pr.first == i && pr.second == j);
      if (!tree && rng() % 10 < 3) pairs.push_back({i, j});
    }
  }
  for (auto& pr : pairs) {
    d.edges.push_back({d.vertices[pr.first], d.vertices[pr.second],
                       random_weight(rng, b)});
  }
  return d;
}

// Disconnected graph assembled from connected blocks (each of size >= 2, so
// nobody is isolated). `sizes` must have at least two entries.
inline GraphDoc random_components_doc(std::mt19937_64& rng, backend b,
                                      const std::vector<int>& sizes) {
  GraphDoc d;
  d.field = b;
  int base = 0;
  for (int n : sizes) {
    GraphDoc block = random_connected_doc(rng, b, n);
    for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(base + i));
    for (const auto& e : block.edges) {
      int u = std::stoi(e.u.substr(1));
      int v = std::stoi(e.v.substr(1));
      d.edges.push_back({"v" + std::to_string(base + u),
                         "v" + std::to_string(base + v), e.w});
    }
    base += n;
  }
  return d;
}

}  // namespace ofc::testutil
