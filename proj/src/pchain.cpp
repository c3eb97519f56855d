#include "hilbertk/pchain.hpp"

#include <algorithm>

#include "hilbertk/errors.hpp"
#include "hilbertk/finite_k.hpp"

namespace hilbertk {

OrbitPoset::OrbitPoset(std::vector<OrbitNode> nodes,
                       const std::vector<std::pair<std::size_t, std::size_t>>& strict_less)
    : nodes_(std::move(nodes)), less_(nodes_.size(), std::vector<bool>(nodes_.size(), false)) {
  const std::size_t n = nodes_.size();
  for (auto [i, j] : strict_less) {
    if (i >= n || j >= n) throw InvalidInput("poset relation index out of range");
    less_[i][j] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (less_[i][i]) throw InvalidInput("poset relation has a cycle through " + nodes_[i].label);
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitPoset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less_[i][j]) out.emplace_back(i, j);
  return out;
}

namespace {

void add_maximal_nodes(const ClassCounts& counts, std::vector<OrbitNode>& nodes) {
  for (const auto& [order, count] : counts.entries())
    for (int c = 1; c <= count; ++c)
      nodes.push_back({"G/Z_" + std::to_string(order) + "#" + std::to_string(c), NodeKind::Maximal, order});
}

void extend(const OrbitPoset& poset, std::size_t remaining, Chain& cur, std::vector<Chain>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = 0; j < poset.size(); ++j) {
    if (!poset.less(cur.back(), j)) continue;
    cur.push_back(j);
    extend(poset, remaining - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

OrbitPoset psl_poset(const ClassCounts& counts) {
  std::vector<OrbitNode> nodes{{"G/1", NodeKind::Trivial, 1}};
  add_maximal_nodes(counts, nodes);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 1; i < nodes.size(); ++i) rel.emplace_back(0, i);
  return {std::move(nodes), rel};
}

OrbitPoset sl_poset(const ClassCounts& counts) {
  std::vector<OrbitNode> nodes{{"G/1", NodeKind::Trivial, 1}, {"G/{+-I}", NodeKind::Central, 2}};
  add_maximal_nodes(counts, nodes);
  std::vector<std::pair<std::size_t, std::size_t>> rel{{0, 1}};
  for (std::size_t i = 2; i < nodes.size(); ++i) rel.emplace_back(1, i);
  return {std::move(nodes), rel};
}

std::vector<std::string> chain_labels(const OrbitPoset& poset, const Chain& chain) {
  std::vector<std::string> out;
  out.reserve(chain.size());
  for (auto i : chain) out.push_back(poset.node(i).label);
  return out;
}

std::vector<Chain> enumerate_pchains(const OrbitPoset& poset, int p) {
  std::vector<Chain> out;
  if (p < 0) return out;
  Chain cur;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    cur.assign(1, i);
    extend(poset, static_cast<std::size_t>(p), cur, out);
  }
  return out;
}

std::string E1Token::to_string() const {
  const std::string m = "Z_" + std::to_string(order);
  switch (kind) {
    case TokenKind::HqBG: return "H_q(BG)";
    case TokenKind::KqZM: return "K_q(Z[" + m + "])";
    case TokenKind::HqBM: return "H_q(B" + m + ")";
    case TokenKind::WhqM: return "Wh_q(" + m + ")";
  }
  return "?";
}

std::string to_string(const FormalSum& sum) {
  std::string out;
  for (const auto& [tok, mult] : sum) {
    if (!out.empty()) out += " + ";
    out += (mult == 1 ? "" : std::to_string(mult) + "*") + tok.to_string();
  }
  return out.empty() ? "0" : out;
}

const FormalSum& E1Page::column(int p) const {
  static const FormalSum kEmpty;
  auto it = columns.find(p);
  return it == columns.end() ? kEmpty : it->second;
}

int E1Page::highest_nonzero_column() const {
  int top = -1;
  for (const auto& [p, sum] : columns)
    if (!sum.empty()) top = std::max(top, p);
  return top;
}

E1Page build_E1(const OrbitPoset& poset, bool relative_to_trivial) {
  for (const auto& [i, j] : poset.relation())
    if (poset.node(i).kind == NodeKind::Maximal)
      throw InvalidInput("property (M) violated: maximal node " + poset.node(i).label + " lies below " +
                         poset.node(j).label);

  bool has_central = false;
  for (const auto& node : poset.nodes()) has_central |= node.kind == NodeKind::Central;

  // The node kind that plays the role of G/1 on this page.
  NodeKind bottom = NodeKind::Trivial;
  if (relative_to_trivial && has_central) bottom = NodeKind::Central;
  if (!relative_to_trivial && has_central)
    throw InvalidInput("absolute pages are only modeled for posets without a central node");

  E1Page page;
  page.relative = relative_to_trivial;
  for (int p = 0;; ++p) {
    auto chains = enumerate_pchains(poset, p);
    if (chains.empty()) break;
    for (const Chain& c : chains) {
      const OrbitNode& least = poset.node(c.front());
      const OrbitNode& top = poset.node(c.back());
      if (relative_to_trivial && least.kind == NodeKind::Trivial) continue;

      E1Token tok{TokenKind::HqBG, 0};
      if (c.size() == 1) {
        if (least.kind == bottom) {
          tok = {TokenKind::HqBG, 0};
        } else if (relative_to_trivial && !has_central) {
          tok = {TokenKind::WhqM, top.order};
        } else {
          tok = {TokenKind::KqZM, top.order};
        }
      } else if (c.size() == 2 && least.kind == bottom) {
        tok = {TokenKind::HqBM, top.order};
      } else {
        std::string labels;
        for (const auto& l : chain_labels(poset, c)) labels += " " + l;
        throw InvalidInput("no modeled E1 coefficient for chain" + labels);
      }
      page.columns[p][tok] += 1;
    }
  }

  if (page.highest_nonzero_column() <= 0) {
    page.notes.emplace_back("single nonzero column: the spectral sequence collapses at E1");
  } else {
    page.notes.emplace_back(
        "d1: E1_{1,q} -> E1_{0,q} is rationally injective (inclusion on H_q(BG), classical assembly "
        "H_q(BM;K(Z)) -> K_q(Z[M]) on each summand); collapses at E2");
  }
  return page;
}

int rank_E1_column(const E1Page& page, int p, int q) {
  int total = 0;
  for (const auto& [tok, mult] : page.column(p)) {
    int rank = 0;
    switch (tok.kind) {
      case TokenKind::HqBG: rank = 0; break;
      case TokenKind::KqZM: rank = rank_K_cyclic(tok.order, q).value; break;
      case TokenKind::HqBM: rank = rank_H_BM(tok.order, q); break;
      case TokenKind::WhqM: rank = rank_K_cyclic(tok.order, q).value - rank_H_BM(tok.order, q); break;
    }
    total += mult * rank;
  }
  return total;
}

}  // namespace hilbertk
