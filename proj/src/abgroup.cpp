#include "hilbertk/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "hilbertk/errors.hpp"

namespace hilbertk {
namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long parse_positive(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InvalidInput("bad abelian group term '" + context + "'");
  long v = 0;
  try {
    v = std::stol(s);
  } catch (const std::out_of_range&) {
    throw InvalidInput("number out of range in '" + context + "'");
  }
  return v;
}

// Splits on '+' at parenthesis depth 0.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '+' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

}  // namespace

AbGroupExpr AbGroupExpr::free(int rank) {
  if (rank < 0) throw InvalidInput("negative free rank");
  AbGroupExpr g;
  g.free_rank_ = rank;
  return g;
}

AbGroupExpr AbGroupExpr::cyclic(long order) {
  if (order < 1) throw InvalidInput("cyclic order must be >= 1");
  AbGroupExpr g;
  if (order > 1) g.torsion_.push_back(order);
  return g;
}

AbGroupExpr AbGroupExpr::symbol(const std::string& token, int multiplicity) {
  if (token.empty()) throw InvalidInput("empty symbolic token");
  if (multiplicity < 0) throw InvalidInput("negative multiplicity");
  AbGroupExpr g;
  if (multiplicity > 0) g.symbolic_[token] = multiplicity;
  return g;
}

AbGroupExpr& AbGroupExpr::operator+=(const AbGroupExpr& rhs) {
  free_rank_ += rhs.free_rank_;
  torsion_.insert(torsion_.end(), rhs.torsion_.begin(), rhs.torsion_.end());
  std::sort(torsion_.begin(), torsion_.end(), std::greater<>());
  for (const auto& [tok, mult] : rhs.symbolic_) symbolic_[tok] += mult;
  return *this;
}

AbGroupExpr AbGroupExpr::times(int k) const {
  if (k < 0) throw InvalidInput("negative multiplicity");
  AbGroupExpr out;
  for (int i = 0; i < k; ++i) out += *this;
  return out;
}

std::string AbGroupExpr::to_string() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (long t : torsion_) parts.push_back("Z/" + std::to_string(t));
  for (const auto& [tok, mult] : symbolic_)
    parts.push_back(mult == 1 ? tok : std::to_string(mult) + "*" + tok);
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbGroupExpr AbGroupExpr::parse(const std::string& text) {
  AbGroupExpr out;
  for (const std::string& term : split_terms(text)) {
    if (term.empty()) throw InvalidInput("empty term in '" + text + "'");
    if (term == "0") continue;
    if (term == "Z") {
      out += free(1);
    } else if (term.rfind("Z^", 0) == 0) {
      out += free(static_cast<int>(parse_positive(term.substr(2), term)));
    } else if (term.rfind("Z/", 0) == 0) {
      out += cyclic(parse_positive(term.substr(2), term));
    } else {
      auto star = term.find('*');
      int mult = 1;
      std::string tok = term;
      if (star != std::string::npos && star > 0 &&
          std::all_of(term.begin(), term.begin() + static_cast<long>(star),
                      [](char c) { return c >= '0' && c <= '9'; })) {
        mult = static_cast<int>(parse_positive(term.substr(0, star), term));
        tok = strip(term.substr(star + 1));
      }
      if (tok.empty() || tok.find_first_of(" \t") != std::string::npos)
        throw InvalidInput("bad abelian group term '" + term + "'");
      out += symbol(tok, mult);
    }
  }
  return out;
}

}  // namespace hilbertk
