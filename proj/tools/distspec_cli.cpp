// distspec: distance spectra of graphs from the command line.
//
//   distspec spectrum petersen
//   distspec check graham-pollack path:9
//   distspec search three-distinct-trees 10 --json
//   distspec family t42:2
//
// Graphs are given as family specs (path:n, star:n, cycle:n, complete:n,
// kpart:a,b,..., dstar:a,b, petersen, t42:q, tfam:a1,a2,...) or as inline
// graph6 with a "g6:" prefix. With no graph argument, spectrum and check read
// a newline-separated graph6 corpus from stdin.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distspec/enumeration.hpp"
#include "distspec/error.hpp"
#include "distspec/exact.hpp"
#include "distspec/families.hpp"
#include "distspec/graph.hpp"
#include "distspec/report.hpp"
#include "distspec/spectra.hpp"
#include "distspec/theorems.hpp"

using namespace distspec;

namespace {

struct Flags {
  double tol = kDefaultCheckTol;
  double group_tol = kDefaultGroupTol;
  bool json = false;
  bool csv = false;
  bool no_meta = false;
  int workers = 1;
  int n_max = 0;
  std::string checkpoint;
};

// Bad arguments exit 2, like parse errors; a claim that fails exits 1.
struct UsageError : Error {
  using Error::Error;
};

std::vector<std::pair<std::string, Graph>> read_inputs(const std::vector<std::string>& args) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!args.empty()) {
    for (const auto& a : args) out.emplace_back(a, parse_family_spec(a));
    return out;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.emplace_back(line, parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("stdin line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

Json spectrum_report(const Graph& g, const Flags& f) {
  const Spectrum s = distance_spectrum(g, {f.group_tol, kDefaultSnapTol});
  const Inertia in = inertia(s);
  Json j;
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  j["diameter"] = diameter(g);
  auto gi = girth(g);
  j["girth"] = gi ? Json(*gi) : Json(nullptr);
  j["spectrum"] = spectrum_json(s);
  j["inertia"] = {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}};
  j["distinct"] = count_distinct(s);
  Json exact = Json::array();
  for (const auto& it : s.items)
    if (it.exact) exact.push_back({{"value", std::llround(it.value)}, {"multiplicity", it.multiplicity}});
  j["exact_integer_eigenvalues"] = exact;
  return j;
}

void print_spectrum_text(const std::string& label, const Graph& g, const Json& j, const Flags& f) {
  const Spectrum s = distance_spectrum(g, {f.group_tol, kDefaultSnapTol});
  std::cout << label << " (" << j["graph6"].get<std::string>() << ")\n";
  std::cout << "  n=" << g.order() << " diameter=" << j["diameter"] << " girth="
            << (j["girth"].is_null() ? std::string("none") : j["girth"].dump()) << '\n';
  std::cout << "  spectrum: " << spectrum_text(s, 10) << '\n';
  std::cout << "  inertia: (" << j["inertia"]["positive"] << ", " << j["inertia"]["zero"] << ", "
            << j["inertia"]["negative"] << ")\n";
  std::cout << "  exact integer eigenvalues:";
  if (j["exact_integer_eigenvalues"].empty()) std::cout << " none";
  for (const auto& e : j["exact_integer_eigenvalues"])
    std::cout << ' ' << e["value"] << '^' << e["multiplicity"];
  std::cout << '\n';
}

int cmd_spectrum(const std::vector<std::string>& args, const Flags& f) {
  const auto inputs = read_inputs(args);
  if (f.csv) {
    std::cout << "graph6,n,spectrum\n";
    for (const auto& [label, g] : inputs) {
      const Spectrum s = distance_spectrum(g, {f.group_tol, kDefaultSnapTol});
      std::cout << encode_graph6(g) << ',' << g.order() << ',' << spectrum_text(s, 10) << '\n';
    }
    return 0;
  }
  Json all = Json::array();
  for (const auto& [label, g] : inputs) {
    Json j = spectrum_report(g, f);
    if (f.json)
      all.push_back(std::move(j));
    else
      print_spectrum_text(label, g, j, f);
  }
  if (f.json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  return 0;
}

// -- check ---------------------------------------------------------------------

using GraphClaim = std::function<Verdict(const Graph&, const Flags&)>;
using ArgClaim = std::function<Verdict(const std::string&, const Flags&)>;

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " expects an integer, got '" + s + "'");
}

const std::map<std::string, GraphClaim>& graph_claims() {
  static const std::map<std::string, GraphClaim> claims{
      {"graham-pollack", [](const Graph& g, const Flags&) { return check_graham_pollack(g); }},
      {"merris", [](const Graph& g, const Flags& f) { return check_merris_interlacing(g, f.tol); }},
      {"inertia", [](const Graph& g, const Flags&) { return check_tree_inertia(g); }},
      {"collins", [](const Graph& g, const Flags&) { return check_collins_bound(g); }},
      {"smallest-bound", [](const Graph& g, const Flags& f) { return check_smallest_eig_bound(g, f.tol); }},
      {"laplacian-distinct", [](const Graph& g, const Flags&) { return check_laplacian_distinct_bound(g); }},
      {"three-distinct-class",
       [](const Graph& g, const Flags& f) { return classify_three_distinct(g, f.group_tol).verdict(); }},
      {"interval-count",
       [](const Graph& g, const Flags&) {
         const int c = count_eigs_in_interval(g);
         Verdict v{"interval-count", c <= g.order() / 2, {}};
         v.witness = {{"count", c}, {"bound", g.order() / 2}};
         return v;
       }},
  };
  return claims;
}

const std::map<std::string, ArgClaim>& arg_claims() {
  static const std::map<std::string, ArgClaim> claims{
      {"path-minus-one",
       [](const std::string& a, const Flags&) {
         const int k = parse_int(a, "path-minus-one");
         const auto r = path_minus_one(k);
         const bool predicted = k % 4 == 2;
         Verdict v{"path-minus-one", r.has == predicted && (!r.has || r.multiplicity == 1), {}};
         v.witness = {{"k", k}, {"has", r.has}, {"multiplicity", r.multiplicity}, {"predicted", predicted}};
         return v;
       }},
      {"path-secular",
       [](const std::string& a, const Flags& f) {
         const int n = parse_int(a, "path-secular");
         const auto s = path_secular_spectrum(n);
         const auto e = eig_symmetric(distance_matrix(path(n)));
         double worst = 0;
         for (std::size_t i = 0; i < s.size(); ++i) worst = std::max(worst, std::abs(s[i] - e[i]));
         Verdict v{"path-secular", worst <= f.tol, {}};
         v.witness = {{"n", n}, {"max_abs_diff", worst}};
         return v;
       }},
      {"minus-one-eigenvector",
       [](const std::string& a, const Flags&) {
         const auto recipe = TreeRecipe::parse(a);
         const auto x = build_minus_one_eigenvector(recipe);  // throws on failure
         Json vec = Json::array();
         for (const auto& q : x) vec.push_back(q.get_str());
         Verdict v{"minus-one-eigenvector", true, {}};
         v.witness = {{"recipe", recipe.to_string()}, {"vector", vec}};
         return v;
       }},
      {"form-exclusions",
       [](const std::string& a, const Flags&) { return check_form_exclusions(parse_int(a, "form-exclusions")); }},
      {"s22-p4-growth",
       [](const std::string& a, const Flags&) { return s22_plus_p4_negative_check(parse_int(a, "s22-p4-growth")); }},
      {"remark-values",
       [](const std::string&, const Flags&) {
         const auto [a, b] = remark3_second_eigenvalues();
         Verdict v{"remark-values", std::abs(a - 0.0841) < 5e-5 && std::abs(b - 0.3542) < 5e-5, {}};
         v.witness = {{"lambda2_f1", a}, {"lambda2_f2", b}};
         return v;
       }},
  };
  return claims;
}

std::string claim_list() {
  std::string s;
  for (const auto& [k, _] : graph_claims()) s += "  " + k + " <graph>\n";
  for (const auto& [k, _] : arg_claims()) s += "  " + k + " <arg>\n";
  return s;
}

int cmd_check(const std::string& claim, const std::vector<std::string>& args, const Flags& f) {
  std::vector<Verdict> verdicts;
  if (auto it = graph_claims().find(claim); it != graph_claims().end()) {
    for (const auto& [label, g] : read_inputs(args)) verdicts.push_back(it->second(g, f));
  } else if (auto jt = arg_claims().find(claim); jt != arg_claims().end()) {
    if (args.empty() && claim != "remark-values") throw UsageError("claim '" + claim + "' needs an argument");
    if (args.empty()) verdicts.push_back(jt->second("", f));
    for (const auto& a : args) verdicts.push_back(jt->second(a, f));
  } else {
    throw UsageError("unknown claim '" + claim + "'; known claims:\n" + claim_list());
  }
  bool ok = true;
  for (const auto& v : verdicts) {
    ok = ok && v.holds;
    std::cout << to_json(v).dump(f.json ? 2 : -1) << '\n';
  }
  return ok ? 0 : 1;
}

// -- search ----------------------------------------------------------------------

int cmd_search(const std::string& kind, std::optional<int> n_pos, const Flags& f) {
  const int n_max = n_pos ? *n_pos : f.n_max;
  if (n_max < 1) throw UsageError("search needs a positive n_max (positional or --n-max)");
  SearchOptions opts;
  opts.tol = f.group_tol;
  opts.workers = f.workers;
  opts.checkpoint = f.checkpoint;

  SearchReport r;
  bool expected = true;
  if (kind == "three-distinct-trees") {
    r = search_three_distinct_trees(n_max, opts);
    expected = r.summary["only_stars"].get<bool>();
  } else if (kind == "minus-one-trees") {
    r = search_trees_with_minus_one(n_max, opts);
  } else if (kind == "c3c4free-minus3") {
    r = search_c3c4free_minus3(n_max, opts);
    expected = r.summary["non_petersen"].get<int>() == 0;
  } else if (kind == "interval-count") {
    r = search_interval_count(n_max, opts);
    expected = r.summary["violations"].get<std::size_t>() == 0;
  } else {
    throw UsageError("unknown search kind '" + kind +
                     "'; expected three-distinct-trees, minus-one-trees, c3c4free-minus3 or interval-count");
  }

  if (f.json) {
    std::cout << r.to_json(!f.no_meta).dump(2) << '\n';
  } else if (f.csv) {
    std::cout << r.to_csv();
  } else {
    std::cout << r.kind << " n_max=" << n_max << ": scanned " << r.scanned << ", " << r.hits.size() << " hits";
    if (!f.no_meta) std::cout << " in " << static_cast<long>(r.elapsed_ms) << " ms";
    std::cout << '\n';
    for (const auto& h : r.hits) {
      std::cout << "  " << h.graph6 << "  n=" << h.n << "  " << h.category;
      if (h.detail.contains("recipe")) std::cout << "  recipe=" << h.detail["recipe"].get<std::string>();
      if (h.detail.contains("multiplicity")) std::cout << "  mult=" << h.detail["multiplicity"];
      std::cout << '\n';
    }
    std::cout << "summary: " << r.summary.dump() << '\n';
  }
  return expected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance spectra of graphs: spectra, claim checks and exhaustive searches."};
  app.require_subcommand(1);
  app.footer(
      "Graph arguments: path:n star:n cycle:n complete:n kpart:a,b,.. dstar:a,b petersen t42:q\n"
      "tfam:a1,a2,.. (empty list = P2) or g6:<graph6>. Without graph arguments, spectrum and\n"
      "check read newline-separated graph6 from stdin. DISTSPEC_MAX_N overrides enumeration bounds.");

  Flags f;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "slack for numeric inequalities in checks")->check(CLI::PositiveNumber);
    sub->add_option("--group-tol", f.group_tol, "tolerance for grouping eigenvalues")->check(CLI::PositiveNumber);
    sub->add_flag("--json", f.json, "machine-readable JSON output");
  };

  std::vector<std::string> spec_args;
  auto* spectrum = app.add_subcommand("spectrum", "distance spectrum, inertia, diameter, girth");
  spectrum->add_option("graphs", spec_args, "graph specs (stdin graph6 corpus when omitted)");
  add_common(spectrum);
  spectrum->add_flag("--csv", f.csv, "CSV of spectra");

  std::string claim;
  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "check one claim; exit 0 iff it holds");
  check->add_option("claim", claim, "claim id")->required();
  check->add_option("args", check_args, "graph specs or the claim's argument");
  add_common(check);
  check->footer("Claims:\n" + claim_list());

  std::string kind;
  std::optional<int> n_pos;
  auto* search = app.add_subcommand("search", "exhaustive search over small trees or graphs");
  search->add_option("kind", kind, "three-distinct-trees | minus-one-trees | c3c4free-minus3 | interval-count")
      ->required();
  search->add_option("n_max", n_pos, "largest order to scan");
  search->add_option("--n-max", f.n_max, "largest order to scan");
  search->add_option("--workers", f.workers, "worker threads")->check(CLI::Range(1, 256));
  search->add_option("--checkpoint", f.checkpoint, "checkpoint file for resumable scans");
  search->add_flag("--csv", f.csv, "CSV of hits with spectra");
  search->add_flag("--no-meta", f.no_meta, "omit timing so output is byte-identical across runs");
  add_common(search);

  std::string family_spec;
  bool labeled = false;
  auto* family = app.add_subcommand("family", "print the canonical graph6 string of a family member");
  family->add_option("spec", family_spec, "family spec")->required();
  family->add_flag("--labeled", labeled, "keep the generator's documented labeling");
  family->footer("Canonical for trees of any order and for other graphs up to 9 vertices;\n"
                 "larger non-trees are printed with the generator labeling.");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spectrum) return cmd_spectrum(spec_args, f);
    if (*check) return cmd_check(claim, check_args, f);
    if (*search) return cmd_search(kind, n_pos, f);
    if (*family) {
      const Graph g = parse_family_spec(family_spec);
      const auto c = labeled ? std::nullopt : canonical_form(g);
      std::cout << encode_graph6(c ? *c : g) << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "distspec: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
