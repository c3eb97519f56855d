#pragma once

// p-chains in restricted orbit categories Or(G, F) where F consists of the
// trivial subgroup, optionally a central subgroup {+-I}, and the maximal
// finite subgroups; plus the symbolic first page of the p-chain spectral
// sequence built from them.
//
// Under properties (M) and (NM) every Aut(G/H) = N(H)/H is trivial and every
// morphism G/M -> G/M' between maximal orbits is an isomorphism, so the
// category reduces to a finite poset and a p-chain is a strictly increasing
// sequence of p+1 of its elements.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbertk/assembler.hpp"

namespace hilbertk {

enum class NodeKind { Trivial, Central, Maximal };

struct OrbitNode {
  std::string label;  // "G/1", "G/{+-I}", "G/Z_5#2"
  NodeKind kind = NodeKind::Maximal;
  int order = 1;  // order of the isotropy subgroup
};

class OrbitPoset {
 public:
  OrbitPoset() = default;
  // strict_less holds index pairs (i, j) meaning node i < node j; the
  // transitive closure is taken here. Throws InvalidInput when the result is
  // not irreflexive (a cycle) or an index is out of range.
  OrbitPoset(std::vector<OrbitNode> nodes, const std::vector<std::pair<std::size_t, std::size_t>>& strict_less);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<OrbitNode>& nodes() const { return nodes_; }
  const OrbitNode& node(std::size_t i) const { return nodes_.at(i); }
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
  // All (i, j) with i < j in the order, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

 private:
  std::vector<OrbitNode> nodes_;
  std::vector<std::vector<bool>> less_;
};

// G/1 below one node per conjugacy class of maximal finite subgroups.
OrbitPoset psl_poset(const ClassCounts& counts);
// G/1 < G/{+-I} < each maximal node.
OrbitPoset sl_poset(const ClassCounts& counts);

// Node indices, strictly increasing in the poset order.
using Chain = std::vector<std::size_t>;

std::vector<std::string> chain_labels(const OrbitPoset& poset, const Chain& chain);

// All p-chains in lexicographic order of node indices.
std::vector<Chain> enumerate_pchains(const OrbitPoset& poset, int p);

enum class TokenKind {
  HqBG,  // H_q(BG; K(Z)) of the (projective) group
  KqZM,  // K_q(Z[M])
  HqBM,  // H_q(BM; K(Z))
  WhqM,  // Wh_q(M)
};

struct E1Token {
  TokenKind kind;
  int order;  // |M|; 0 for HqBG
  std::string to_string() const;
  friend auto operator<=>(const E1Token&, const E1Token&) = default;
};

using FormalSum = std::map<E1Token, int>;

std::string to_string(const FormalSum& sum);

struct E1Page {
  bool relative = false;
  std::map<int, FormalSum> columns;  // p -> formal sum; absent means zero
  std::vector<std::string> notes;    // differentials the page asserts injective

  const FormalSum& column(int p) const;
  int highest_nonzero_column() const;  // -1 for the zero page
};

// Absolute page (relative = false): 0-chain {G/1} gives H_q(BG), 0-chain
// {G/M} gives K_q(Z[M]), 1-chain {G/1, G/M} gives H_q(BM). Only posets of
// height <= 1 are modeled.
//
// Relative page (pair with the trivial family): chains whose least element
// is G/1 are dropped. Without a central node the 0-chains {G/M} give
// Wh_q(M) and the sequence collapses; with one, the remaining chains form
// the absolute page of the quotient by the center, G/{+-I} playing G/1.
//
// Throws InvalidInput when a maximal node lies below another node
// (property (M) fails) or a chain has no modeled coefficient.
E1Page build_E1(const OrbitPoset& poset, bool relative_to_trivial);

// Rank of column p in degree q. H_q(BG) counts 0 so that column 0 minus
// column 1 is the difference rk K_q(Z[G]) - rk H_q(BG; K(Z)); Wh_q(M)
// counts rk K_q(Z[M]) - rk H_q(BM; K(Z)).
int rank_E1_column(const E1Page& page, int p, int q);

}  // namespace hilbertk
