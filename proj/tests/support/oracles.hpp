#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's own algorithm for the quantity they check.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "legkh/front.hpp"
#include "legkh/laurent.hpp"
#include "legkh/link_diagram.hpp"
#include "legkh/smith.hpp"
#include "legkh/spanning.hpp"
#include "legkh/tait.hpp"

namespace oracle {

// Number of spanning trees via Bareiss elimination on a reduced Laplacian.
std::int64_t kirchhoff_tree_count(const legkh::TaitGraph& g);

// f is in cut(T, e) iff e is in cyc(T, f) iff T - e + f is a spanning tree.
bool exchangeable(const legkh::TaitGraph& g, const legkh::EdgeSet& tree, int e, int f);

// Activity labels from the exchange rule alone.
std::vector<legkh::EdgeLabel> exchange_labels(const legkh::TaitGraph& g, const legkh::EdgeSet& tree);

// Every (|V|-1)-subset of edges that is a tree, by brute force.
std::vector<legkh::EdgeSet> brute_force_trees(const legkh::TaitGraph& g);

// Unreduced Jones polynomial from a bracket state sum over the PD code,
// tracing state circles through PD labels rather than diagram arcs.
legkh::LaurentPoly pd_bracket_jones(const std::vector<std::array<int, 4>>& pd, int writhe);

// (q + q^-1) V(q^2) for the torus knot T(p, q) with p, q > 0 coprime.
legkh::LaurentPoly torus_knot_jones(int p, int q);

// Vertex bijection g -> h matching every edge id's endpoints (in either
// direction), sign and order, found by propagation from vertex 0. Empty when
// there is none.
std::vector<int> match_by_edge_ids(const legkh::TaitGraph& g, const legkh::TaitGraph& h);

// Smith form from determinantal divisors: d_k = gcd of all k x k minors.
// Only for small matrices.
legkh::SmithResult minors_smith(const std::vector<std::vector<std::int64_t>>& m);

// Random legal front word with the given cusp pairs and crossings.
std::string random_front_word(std::mt19937& rng, int cusp_pairs, int crossings);

// Random connected front (retries until one parses).
legkh::FrontDiagram random_front(std::mt19937& rng, int cusp_pairs, int crossings);

struct CorpusEntry {
  std::string name;
  legkh::FrontDiagram front;
};

std::filesystem::path corpus_dir();
std::vector<CorpusEntry> load_corpus();
legkh::FrontDiagram corpus_front(const std::string& name);

}  // namespace oracle
