#include "hilbertk/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbertk/assembler.hpp"
#include "hilbertk/class_numbers.hpp"
#include "hilbertk/cyclic_reps.hpp"
#include "hilbertk/errors.hpp"
#include "hilbertk/finite_k.hpp"
#include "hilbertk/pchain.hpp"
#include "hilbertk/quad_field.hpp"

namespace hilbertk::cli {
namespace {

using json = nlohmann::json;

constexpr const char* kPaperTable = "paper-table";
constexpr const char* kComputed = "computed";

struct Options {
  bool as_json = false;
  bool approx = false;

  long d = 0;
  std::string classes;
  std::string q_list;
  std::string mode = "psl";
  std::string ab;

  long n = 0;
  long disc = 0;

  std::string poset = "psl";
  int m = 0;
  int p = 0;
  std::string page;
};

// Output of one command: human text plus the JSON envelope pieces.
struct Report {
  std::string text;
  json inputs = json::object();
  json result = json::object();
  json provenance = json::object();
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

json abgroup_json(const AbGroupExpr& g) {
  json sym = json::object();
  for (const auto& [tok, mult] : g.symbolic()) sym[tok] = mult;
  return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}, {"symbolic", sym}, {"text", g.to_string()}};
}

json class_counts_json(const ClassCounts& c) {
  json entries = json::object();
  for (const auto& [order, count] : c.entries()) entries[std::to_string(order)] = count;
  return {{"entries", entries}, {"m", c.m()}};
}

// Class data from a field (built-in table or --classes validated against the
// field) or from --classes alone.
struct ResolvedGroup {
  GroupData data;
  const char* counts_provenance;
};

ResolvedGroup resolve_group(const Options& o, GroupMode mode, Report& rep) {
  std::optional<AbGroupExpr> ab;
  if (!o.ab.empty()) ab = AbGroupExpr::parse(o.ab);
  if (o.d != 0) {
    const FieldSpec f = FieldSpec::make(o.d);
    rep.inputs["d"] = o.d;
    if (!o.classes.empty()) {
      rep.inputs["classes"] = o.classes;
      return {GroupData::for_field(f, ClassCounts::parse(o.classes), mode, ab), kComputed};
    }
    GroupData g = GroupData::builtin(f, mode);
    if (ab) g.abelianization = ab;
    return {std::move(g), kPaperTable};
  }
  if (o.classes.empty()) throw InvalidInput("give a field d or --classes");
  rep.inputs["classes"] = o.classes;
  return {GroupData::generic("classes " + o.classes, ClassCounts::parse(o.classes), mode, ab), "user-input"};
}

Report cmd_field(const Options& o) {
  Report rep;
  const FieldSpec f = FieldSpec::make(o.d);
  rep.inputs["d"] = o.d;
  const auto candidates = elliptic_trace_candidates(f);
  const auto orders = allowed_orders(f);

  std::ostringstream text;
  text << "field Q(sqrt(" << f.d() << "))\n";
  text << "integral basis: 1, " << f.omega_string() << "\n";
  text << "elliptic trace candidates: " << candidates.size() << "\n";
  json cand = json::array();
  for (const auto& c : candidates) {
    text << "  " << std::left << std::setw(24) << c.trace.to_string() << " order " << c.psl_order;
    json entry = {{"trace", c.trace.to_string()},
                  {"a", c.trace.a().to_string()},
                  {"b", c.trace.b().to_string()},
                  {"psl_order", c.psl_order}};
    if (o.approx) {
      std::ostringstream s1, s2;
      s1 << std::setprecision(10) << embed(c.trace, 1).approx;
      s2 << std::setprecision(10) << embed(c.trace, 2).approx;
      text << "   sigma1 ~ " << s1.str() << ", sigma2 ~ " << s2.str() << " (approximate)";
      entry["approximate"] = {{"sigma1", s1.str()}, {"sigma2", s2.str()}};
    }
    text << "\n";
    cand.push_back(entry);
  }
  text << "allowed orders:";
  for (int ord : orders) text << " " << ord;
  text << "\n";

  rep.text = text.str();
  rep.result = {{"integral_basis", {"1", f.omega_string()}},
                {"trace_candidates", cand},
                {"candidate_count", candidates.size()},
                {"allowed_orders", orders}};
  rep.provenance = {{"integral_basis", kComputed},
                    {"trace_candidates", kComputed}, {"candidate_count", kComputed}, {"allowed_orders", kComputed}};
  return rep;
}

Report cmd_ranks(const Options& o) {
  Report rep;
  auto [g, counts_prov] = resolve_group(o, GroupMode::PSL, rep);
  const auto qs = parse_int_list(o.q_list.empty() ? "-1,0,1,2,3,4,5,6,7" : o.q_list);
  rep.inputs["q"] = qs;

  std::ostringstream text;
  text << "classes " << g.class_counts.to_string() << " (m=" << g.class_counts.m() << ")\n";
  text << std::left << std::setw(6) << "q" << std::setw(12) << "rank_diff" << "case\n";
  json rows = json::array();
  for (int q : qs) {
    const int value = rank_diff(g, q);
    const char* label = to_string(rank_case(q));
    text << std::left << std::setw(6) << q << std::setw(12) << value << label << "\n";
    rows.push_back({{"q", q}, {"rank_diff", value}, {"case", label}});
  }
  rep.text = text.str();
  rep.result = {{"class_counts", class_counts_json(g.class_counts)}, {"rows", rows}};
  rep.provenance = {{"class_counts", counts_prov}, {"rows", kComputed}};
  return rep;
}

Report cmd_whitehead(const Options& o) {
  Report rep;
  GroupMode mode;
  if (o.mode == "psl") {
    mode = GroupMode::PSL;
  } else if (o.mode == "sl") {
    mode = GroupMode::SL;
  } else {
    throw InvalidInput("--mode must be psl or sl");
  }
  auto [g, counts_prov] = resolve_group(o, mode, rep);
  rep.inputs["mode"] = o.mode;
  if (!o.ab.empty()) rep.inputs["ab"] = o.ab;

  AbGroupExpr value;
  std::string what;
  if (o.q_list.empty()) {
    if (mode == GroupMode::SL) throw InvalidInput("--q is required with --mode sl");
    value = whitehead_psl_formula(g);
    what = "Wh_q(PSL_2)";
  } else {
    const auto qs = parse_int_list(o.q_list);
    if (qs.size() != 1) throw InvalidInput("whitehead takes a single --q");
    const int q = qs.front();
    rep.inputs["q"] = q;
    value = mode == GroupMode::PSL ? whitehead_psl(g, q) : whitehead_sl(g, q);
    what = std::string("Wh_") + std::to_string(q) + (mode == GroupMode::PSL ? "(PSL_2)" : "(SL_2)");
  }
  rep.text = what + " = " + value.to_string() + "\n";
  rep.result = {{"group", abgroup_json(value)}, {"class_counts", class_counts_json(g.class_counts)}};
  rep.provenance = {{"group", kComputed}, {"class_counts", counts_prov}};
  if (g.abelianization) {
    rep.result["abelianization"] = abgroup_json(*g.abelianization);
    rep.provenance["abelianization"] = o.ab.empty() ? kPaperTable : "user-input";
  }
  return rep;
}

Report cmd_reps(const Options& o) {
  Report rep;
  if (o.n < 1 || o.n > 1000000) throw InvalidInput("n must be in [1, 1000000]");
  const RepCounts rc = rep_counts(static_cast<int>(o.n));
  rep.inputs["n"] = o.n;
  std::ostringstream text;
  text << "r=" << rc.r << " c=" << rc.c << " q=" << rc.q;
  json primes = json::object();
  for (const auto& [p, pc] : rc.per_prime) {
    text << " k_" << p << "=" << pc.k_p << " r_" << p << "=" << pc.r_p;
    primes[std::to_string(p)] = {{"k_p", pc.k_p}, {"r_p", pc.r_p}};
  }
  text << "\n";
  rep.text = text.str();
  rep.result = {{"r", rc.r}, {"c", rc.c}, {"q", rc.q}, {"primes", primes}};
  rep.provenance = {{"r", kComputed}, {"c", kComputed}, {"q", kComputed}, {"primes", kComputed}};
  return rep;
}

Report cmd_classnum(const Options& o) {
  Report rep;
  const Discriminant disc(o.disc);
  rep.inputs["D"] = o.disc;
  const auto forms = reduced_forms(disc);
  std::ostringstream text;
  text << "h(" << o.disc << ") = " << forms.size() << "\n";
  json fj = json::array();
  for (const auto& f : forms) {
    text << "  (" << f.a << ", " << f.b << ", " << f.c << ")\n";
    fj.push_back({f.a, f.b, f.c});
  }
  rep.text = text.str();
  rep.result = {{"class_number", forms.size()}, {"reduced_forms", fj}};
  rep.provenance = {{"class_number", kComputed}, {"reduced_forms", kComputed}};
  return rep;
}

Report cmd_chains(const Options& o) {
  Report rep;
  if (o.m < 0 || o.m > 64) throw InvalidInput("--m must be in [0, 64]");
  std::map<int, int> entries;
  if (o.m > 0) entries[2] = o.m;  // node orders are irrelevant to the chain census
  const ClassCounts counts(entries);
  OrbitPoset poset;
  if (o.poset == "psl") {
    poset = psl_poset(counts);
  } else if (o.poset == "sl") {
    poset = sl_poset(counts);
  } else {
    throw InvalidInput("--poset must be psl or sl");
  }
  rep.inputs = {{"poset", o.poset}, {"m", o.m}, {"p", o.p}};
  const auto chains = enumerate_pchains(poset, o.p);
  std::ostringstream text;
  text << chains.size() << " chains\n";
  json cj = json::array();
  for (const auto& c : chains) {
    auto labels = chain_labels(poset, c);
    text << "  {";
    for (std::size_t i = 0; i < labels.size(); ++i) text << (i ? ", " : "") << labels[i];
    text << "}\n";
    cj.push_back(labels);
  }
  rep.result = {{"count", chains.size()}, {"chains", cj}};
  rep.provenance = {{"count", kComputed}, {"chains", kComputed}};

  if (!o.page.empty()) {
    if (o.page != "absolute" && o.page != "relative") throw InvalidInput("--page must be absolute or relative");
    const E1Page page = build_E1(poset, o.page == "relative");
    rep.inputs["page"] = o.page;
    text << "E1 page (" << o.page << "):\n";
    json cols = json::object();
    for (const auto& [p, sum] : page.columns) {
      text << "  E1_{" << p << ",q} = " << to_string(sum) << "\n";
      cols[std::to_string(p)] = to_string(sum);
    }
    for (const auto& note : page.notes) text << "  note: " << note << "\n";
    rep.result["e1_page"] = {{"columns", cols}, {"notes", page.notes}};
    rep.provenance["e1_page"] = kComputed;
  }
  rep.text = text.str();
  return rep;
}

// CLI11 reads "-23" as a short option; arguments that look like negative
// integers are passed through as values instead.
std::vector<std::string> protect_negative_numbers(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1]))) {
      // --q=-1 style already safe; a bare negative number is a positional or
      // the value of the preceding option.
      const bool is_value = i > 0 && args[i - 1].rfind("--", 0) == 0 && args[i - 1].find('=') == std::string::npos &&
                            args[i - 1] != "--json" && args[i - 1] != "--approx";
      if (is_value) {
        args[i - 1] += "=" + a;
        args.erase(args.begin() + static_cast<long>(i));
        --i;
      }
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Whitehead groups and rational K-theory of Hilbert modular groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* field = app.add_subcommand("field", "integral basis, elliptic traces and element orders of Q(sqrt d)");
  field->add_option("d", o.d, "square-free d >= 2")->required();
  field->add_flag("--approx", o.approx, "also print decimal approximations");

  auto* ranks = app.add_subcommand("ranks", "rk K_q(Z[G]) - rk H_q(BG;K(Z)) for G = PSL_2(O_k)");
  ranks->add_option("d", o.d, "square-free d >= 2 (built-in class data)");
  ranks->add_option("--classes", o.classes, "class counts, e.g. 2:2,3:2,5:2");
  ranks->add_option("--q", o.q_list, "comma-separated degrees");

  auto* wh = app.add_subcommand("whitehead", "Whitehead groups of PSL_2(O_k) / SL_2(O_k)");
  wh->add_option("d", o.d, "square-free d >= 2 (built-in class data)");
  wh->add_option("--classes", o.classes, "class counts, e.g. 2:1,3:1");
  wh->add_option("--mode", o.mode, "psl or sl");
  wh->add_option("--q", o.q_list, "degree; omitted in psl mode gives the symbolic formula");
  wh->add_option("--ab", o.ab, "abelianization of PSL_2(O_k), e.g. 0 or Z/6");

  auto* reps = app.add_subcommand("reps", "irreducible representation counts of Z_n");
  reps->add_option("n", o.n, "group order")->required();

  auto* classnum = app.add_subcommand("classnum", "class number of a negative discriminant");
  classnum->add_option("D", o.disc, "discriminant D < 0, D = 0,1 mod 4")->required();

  auto* chains = app.add_subcommand("chains", "p-chains of the orbit poset");
  chains->add_option("--poset", o.poset, "psl or sl");
  chains->add_option("--m", o.m, "number of maximal finite subgroup classes")->required();
  chains->add_option("--p", o.p, "chain length index p")->required();
  chains->add_option("--page", o.page, "also build the E1 page: absolute or relative");

  for (auto* sub : {field, ranks, wh, reps, classnum, chains})
    sub->add_flag("--json", o.as_json, "emit the JSON envelope");

  std::vector<std::string> args = protect_negative_numbers(raw_args);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  std::string command;
  try {
    Report rep;
    if (field->parsed()) {
      command = "field";
      rep = cmd_field(o);
    } else if (ranks->parsed()) {
      command = "ranks";
      rep = cmd_ranks(o);
    } else if (wh->parsed()) {
      command = "whitehead";
      rep = cmd_whitehead(o);
    } else if (reps->parsed()) {
      command = "reps";
      rep = cmd_reps(o);
    } else if (classnum->parsed()) {
      command = "classnum";
      rep = cmd_classnum(o);
    } else {
      command = "chains";
      rep = cmd_chains(o);
    }
    if (o.as_json) {
      json envelope = {{"schema_version", kSchemaVersion},
                       {"command", command},
                       {"inputs", rep.inputs},
                       {"result", rep.result},
                       {"provenance", rep.provenance}};
      out << envelope.dump(2) << "\n";
    } else {
      out << rep.text;
    }
    return kOk;
  } catch (const MissingClassData& e) {
    err << "error: " << e.what() << "\n";
    return kMissingClassData;
  } catch (const MissingAbelianization& e) {
    err << "error: " << e.what() << "\n";
    return kMissingAbelianization;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace hilbertk::cli
