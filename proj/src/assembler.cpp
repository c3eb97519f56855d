#include "hilbertk/assembler.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hilbertk/cyclic_reps.hpp"
#include "hilbertk/errors.hpp"
#include "hilbertk/finite_k.hpp"

namespace hilbertk {

ClassCounts::ClassCounts(std::map<int, int> entries) : entries_(std::move(entries)) {
  for (const auto& [order, count] : entries_) {
    if (order < 2) throw InvalidInput("maximal finite subgroup order must be >= 2, got " + std::to_string(order));
    if (count < 1) throw InvalidInput("class count must be >= 1, got " + std::to_string(count));
  }
}

ClassCounts ClassCounts::parse(const std::string& spec) {
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 9)
      throw InvalidInput("bad class spec '" + spec + "': expected order:count pairs");
    return std::stoi(s);
  };
  std::map<int, int> entries;
  if (spec.empty()) return ClassCounts{};
  std::stringstream ss(spec);
  std::string pair;
  int last_order = 0;
  while (std::getline(ss, pair, ',')) {
    pair.erase(std::remove_if(pair.begin(), pair.end(), [](unsigned char c) { return std::isspace(c); }),
               pair.end());
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw InvalidInput("bad class spec '" + spec + "': missing ':' in '" + pair + "'");
    int order = to_int(pair.substr(0, colon));
    int count = to_int(pair.substr(colon + 1));
    if (entries.count(order)) throw InvalidInput("bad class spec '" + spec + "': duplicate order " + std::to_string(order));
    if (order <= last_order) throw InvalidInput("bad class spec '" + spec + "': orders must be ascending");
    last_order = order;
    entries[order] = count;
  }
  if (!spec.empty() && spec.back() == ',') throw InvalidInput("bad class spec '" + spec + "': trailing ','");
  return ClassCounts(std::move(entries));
}

int ClassCounts::m() const {
  int total = 0;
  for (const auto& [order, count] : entries_) total += count;
  return total;
}

std::string ClassCounts::to_string() const {
  std::string out;
  for (const auto& [order, count] : entries_) {
    if (!out.empty()) out += ",";
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out;
}

GroupData GroupData::for_field(const FieldSpec& f, ClassCounts counts, GroupMode mode,
                               std::optional<AbGroupExpr> ab) {
  const auto allowed = allowed_orders(f);
  for (const auto& [order, count] : counts.entries()) {
    if (!std::binary_search(allowed.begin(), allowed.end(), order))
      throw InvalidInput("order " + std::to_string(order) + " does not occur in PSL_2(O_k) for d=" +
                         std::to_string(f.d()));
  }
  return {f, std::move(counts), std::move(ab), mode};
}

GroupData GroupData::builtin(const FieldSpec& f, GroupMode mode) {
  return for_field(f, class_counts_for_field(f), mode, builtin_abelianization(f));
}

GroupData GroupData::generic(std::string label, ClassCounts counts, GroupMode mode,
                             std::optional<AbGroupExpr> ab) {
  return {GenericSource{std::move(label)}, std::move(counts), std::move(ab), mode};
}

ClassCounts class_counts_for_field(const FieldSpec& f) {
  if (f.d() == 5) return ClassCounts({{2, 2}, {3, 2}, {5, 2}});
  throw MissingClassData("no built-in conjugacy class counts for d=" + std::to_string(f.d()) +
                         "; supply them explicitly (e.g. --classes 2:2,3:2)");
}

std::optional<AbGroupExpr> builtin_abelianization(const FieldSpec& f) {
  if (f.d() == 5) return AbGroupExpr::zero();
  return std::nullopt;
}

namespace {

void require_mode(const GroupData& g, GroupMode mode, const char* fn) {
  if (g.mode != mode)
    throw PreconditionViolation(std::string(fn) + ": wrong group mode (" +
                                (g.mode == GroupMode::PSL ? "PSL" : "SL") + ")");
}

AbGroupExpr sum_over_classes(const ClassCounts& counts, int q) {
  AbGroupExpr out;
  for (const auto& [order, count] : counts.entries()) out += wh_cyclic(order, q).times(count);
  return out;
}

}  // namespace

AbGroupExpr whitehead_psl(const GroupData& g, int q) {
  require_mode(g, GroupMode::PSL, "whitehead_psl");
  return sum_over_classes(g.class_counts, q);
}

AbGroupExpr whitehead_psl_formula(const GroupData& g) {
  AbGroupExpr out;
  for (const auto& [order, count] : g.class_counts.entries())
    out += AbGroupExpr::symbol("Wh_q(Z_" + std::to_string(order) + ")", count);
  return out;
}

AbGroupExpr whitehead_sl(const GroupData& g, int q) {
  require_mode(g, GroupMode::SL, "whitehead_sl");
  if (q > 1) throw InvalidInput("SL_2 Whitehead groups are only determined for q <= 1");
  switch (q) {
    case 1:
      if (!g.abelianization)
        throw MissingAbelianization("Wh_1(SL_2) needs the abelianization of the PSL_2 quotient (--ab)");
      return sum_over_classes(g.class_counts, 1) + *g.abelianization + AbGroupExpr::cyclic(2);
    case 0:
      return sum_over_classes(g.class_counts, 0) + AbGroupExpr::free(1);
    case -1: {
      // K_{-1}(Z[M]) = Wh_{-1}(M) for finite M
      return sum_over_classes(g.class_counts, -1);
    }
    default:
      return AbGroupExpr::zero();
  }
}

int rank_diff(const GroupData& g, int q) {
  require_mode(g, GroupMode::PSL, "rank_diff");
  int k_total = 0;
  int h_total = 0;
  for (const auto& [order, count] : g.class_counts.entries()) {
    k_total += count * rank_K_cyclic(order, q).value;
    h_total += count * rank_H_BM(order, q);
  }
  return k_total - h_total;
}

int rank_diff_table(const ClassCounts& counts, int q) {
  const int m = counts.m();
  int sum = 0;
  switch (rank_case(q)) {
    case RankCase::Q1Mod4:
      for (const auto& [n, k] : counts.entries()) sum += k * r_count(n);
      return sum - m;
    case RankCase::Q3Mod4:
      for (const auto& [n, k] : counts.entries()) sum += k * c_count(n);
      return sum;
    case RankCase::Qis1:
      for (const auto& [n, k] : counts.entries()) sum += k * (r_count(n) - q_count(n));
      return sum;
    case RankCase::QisMinus1:
      for (const auto& [n, k] : counts.entries()) {
        int local = 0;
        for (int p = 2; p <= n; ++p)
          if (n % p == 0 && is_prime(p)) local += kp_count(n, p) - rp_count(n, p);
        sum += k * (q_count(n) - local);
      }
      return m - sum;
    case RankCase::Qis0:
    case RankCase::Zero:
      return 0;
  }
  return 0;
}

}  // namespace hilbertk
