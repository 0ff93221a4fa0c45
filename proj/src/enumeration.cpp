#include "distspec/enumeration.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "distspec/error.hpp"
#include "distspec/exact.hpp"

namespace distspec {

namespace {

std::optional<int> env_bound() {
  const char* s = std::getenv("DISTSPEC_MAX_N");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) throw DomainError("DISTSPEC_MAX_N must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

int max_tree_order() { return env_bound().value_or(kDefaultMaxTreeOrder); }
int max_graph_order() { return std::min(env_bound().value_or(kDefaultMaxGraphOrder), 9); }

// -- Free trees -----------------------------------------------------------------

namespace {

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, int p = -1) {
  if (p < 0) {
    p = static_cast<int>(pred.size()) - 1;
    while (pred[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  int q = p - 1;
  while (pred[q] != pred[p] - 1) --q;
  Layout result = pred;
  for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
  return result;
}

// Splits at the root's second subtree: left is the first subtree (levels
// shifted up), rest is the root with its remaining subtrees.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

Layout next_tree(const Layout& candidate) {
  auto [left, rest] = split_tree(candidate);
  const int lh = *std::max_element(left.begin(), left.end());
  const int rh = *std::max_element(rest.begin(), rest.end());
  bool valid = rh >= lh;
  if (valid && rh == lh) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;
  const int p = static_cast<int>(left.size());
  Layout fresh = *next_rooted_tree(candidate, p);
  if (candidate[p] > 2) {
    auto [nl, nr] = split_tree(fresh);
    const int nlh = *std::max_element(nl.begin(), nl.end());
    for (int k = 0; k <= nlh; ++k) fresh[fresh.size() - (nlh + 1) + k] = k + 1;
  }
  return fresh;
}

Graph layout_to_graph(const Layout& layout) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(layout.size()); ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), i);
    }
    stack.push_back(i);
  }
  return Graph(static_cast<int>(layout.size()), edges);
}

}  // namespace

FreeTreeGenerator::FreeTreeGenerator(int n) : n_(n) {
  if (n < 1 || n > max_tree_order())
    throw DomainError("free-tree enumeration: n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(max_tree_order()) + "]");
  if (n >= 2) {
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
  }
}

std::optional<Graph> FreeTreeGenerator::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    current_ = {0};
    return Graph(1, {});
  }
  if (!first_) {
    auto succ = next_rooted_tree(layout_);
    if (!succ) {
      done_ = true;
      return std::nullopt;
    }
    layout_ = std::move(*succ);
  }
  first_ = false;
  layout_ = next_tree(layout_);
  current_ = layout_;
  return layout_to_graph(layout_);
}

FreeTreeGenerator enumerate_free_trees(int n) { return FreeTreeGenerator(n); }

std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  auto gen = enumerate_free_trees(n);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

namespace {

std::string ahu(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(ahu(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg = t.degrees(), layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string tree_canonical_string(const Graph& t) {
  if (!is_tree(t)) throw DomainError("tree_canonical_string: input is not a tree");
  std::string best;
  for (int c : tree_centers(t)) {
    auto s = ahu(t, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

// -- Connected graphs ---------------------------------------------------------------

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Adjacency bitstring of the edges relabeled by perm, in graph6 column order
// with the first pair most significant.
std::uint64_t labeling_code(const EdgeList& edges, int n, const std::vector<int>& perm) {
  const int bits = n * (n - 1) / 2;
  std::uint64_t code = 0;
  for (auto [u, v] : edges) {
    int i = perm[u], j = perm[v];
    if (i > j) std::swap(i, j);
    code |= std::uint64_t{1} << (bits - 1 - (j * (j - 1) / 2 + i));
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw DomainError("canonical_code: n must be <= 9");
  const auto edges = g.edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, labeling_code(edges, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
  const int bits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int j = 1, k = 0; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (code & (std::uint64_t{1} << (bits - 1 - k))) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace

// Every connected graph on n >= 2 vertices has a non-cut vertex, so adding a
// vertex with every nonempty neighborhood to each connected graph on n-1
// vertices reaches all of them.
namespace {

// Preorder labels with children visited in AHU-code order.
void canonical_preorder(const Graph& t, int v, int parent, std::vector<int>& order) {
  order.push_back(v);
  std::vector<std::pair<std::string, int>> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.emplace_back(ahu(t, w, v), w);
  std::sort(kids.begin(), kids.end());
  for (const auto& [code, w] : kids) canonical_preorder(t, w, v, order);
}

}  // namespace

std::optional<Graph> canonical_form(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  if (is_tree(g)) {
    int root = -1;
    std::string best;
    for (int c : tree_centers(g)) {
      auto s = ahu(g, c, -1);
      if (root < 0 || s < best) {
        best = std::move(s);
        root = c;
      }
    }
    std::vector<int> order;
    canonical_preorder(g, root, -1, order);
    for (int i = 0; i < n; ++i) perm[order[i]] = i;
    return g.relabeled(perm);
  }
  if (n > 9) return std::nullopt;
  const std::uint64_t target = canonical_code(g);
  const auto edges = g.edges();
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (labeling_code(edges, n, perm) == target) return g.relabeled(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;  // unreachable: some permutation attains the minimum
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > max_graph_order())
    throw DomainError("connected-graph enumeration: n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(max_graph_order()) + "]");
  std::vector<Graph> level{Graph(1, {})};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> codes;
    for (const auto& g : level) {
      const auto base = g.edges();
      for (std::uint32_t mask = 1; mask < (1u << (m - 1)); ++mask) {
        auto edges = base;
        for (int v = 0; v < m - 1; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, m - 1);
        codes.insert(canonical_code(Graph(m, edges)));
      }
    }
    level.clear();
    for (auto c : codes) level.push_back(graph_from_code(m, c));
  }
  return level;
}

// -- P4-family recognition ---------------------------------------------------------

namespace {

struct Peel {
  int anchor;
  std::array<int, 4> path;  // w1..w4, w1 adjacent to anchor
};

bool peel_to_p2(const Graph& t, const std::vector<int>& labels, std::vector<Peel>& peels,
                std::set<std::string>& dead) {
  const int n = t.order();
  if (n == 2) return true;
  if (n < 6 || n % 4 != 2) return false;
  const std::string key = tree_canonical_string(t);
  if (dead.count(key)) return false;
  for (int leaf = 0; leaf < n; ++leaf) {
    if (t.degree(leaf) != 1) continue;
    // leaf = w4, walk inward through three degree-2 vertices.
    std::array<int, 4> w{};
    w[3] = leaf;
    int prev = leaf, cur = t.neighbors(leaf)[0];
    bool ok = true;
    for (int k = 2; k >= 0; --k) {
      if (t.degree(cur) != 2) {
        ok = false;
        break;
      }
      w[k] = cur;
      const auto& nb = t.neighbors(cur);
      const int nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
    }
    if (!ok) continue;
    const int anchor = cur;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (std::find(w.begin(), w.end(), v) == w.end()) keep.push_back(v);
    std::vector<int> sub_labels;
    for (int v : keep) sub_labels.push_back(labels[v]);
    peels.push_back({labels[anchor], {labels[w[0]], labels[w[1]], labels[w[2]], labels[w[3]]}});
    if (peel_to_p2(t.induced(keep), sub_labels, peels, dead)) return true;
    peels.pop_back();
  }
  dead.insert(key);
  return false;
}

}  // namespace

std::optional<RecognizedRecipe> recognize_t_family(const Graph& t) {
  if (!is_tree(t)) throw DomainError("recognize_t_family: input is not a tree");
  const int n = t.order();
  if (n % 4 != 2) return std::nullopt;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<Peel> peels;
  std::set<std::string> dead;
  if (!peel_to_p2(t, labels, peels, dead)) return std::nullopt;

  // The two vertices never peeled form the base P2.
  std::vector<char> peeled(n, 0);
  for (const auto& p : peels)
    for (int v : p.path) peeled[v] = 1;
  RecognizedRecipe out;
  out.relabel.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!peeled[v]) out.relabel[v] = next++;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
    out.recipe.steps.push_back(out.relabel[it->anchor]);
    for (int v : it->path) out.relabel[v] = next++;
  }
  return out;
}

int count_eigs_in_interval(const Graph& t) {
  if (!is_tree(t)) throw DomainError("count_eigs_in_interval: input is not a tree");
  if (t.order() == 1) return 0;
  const IntMatrix d = distance_matrix(t);
  auto eig = eig_symmetric(d);
  const int minus_one = eigen_multiplicity_exact(d, -1);
  // Drop the eigenvalues closest to -1 that are exactly -1.
  std::sort(eig.begin(), eig.end(), [](double a, double b) { return std::abs(a + 1) < std::abs(b + 1); });
  int count = minus_one;
  for (std::size_t i = minus_one; i < eig.size(); ++i)
    if (eig[i] > -1 && eig[i] < 0) ++count;
  return count;
}

// -- Search driver ----------------------------------------------------------------

Json SearchReport::to_json(bool include_meta) const {
  Json j;
  j["kind"] = kind;
  j["parameters"] = parameters;
  j["scanned"] = scanned;
  j["hit_count"] = hits.size();
  Json arr = Json::array();
  for (const auto& h : hits) {
    Json x;
    x["graph6"] = h.graph6;
    x["n"] = h.n;
    x["category"] = h.category;
    x["detail"] = h.detail;
    arr.push_back(std::move(x));
  }
  j["hits"] = std::move(arr);
  j["summary"] = summary;
  if (include_meta) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string SearchReport::to_csv() const {
  std::ostringstream os;
  os << "graph6,n,category,spectrum\n";
  for (const auto& h : hits) {
    std::string spec;
    if (h.detail.contains("spectrum")) {
      for (const auto& it : h.detail["spectrum"]) {
        if (!spec.empty()) spec += ' ';
        spec += it["value"].dump() + "^" + it["multiplicity"].dump();
      }
    }
    os << h.graph6 << ',' << h.n << ',' << h.category << ',' << spec << '\n';
  }
  return os.str();
}

namespace {

using HitFn = std::function<std::optional<SearchHit>(const Graph&)>;

Json hit_to_json(const SearchHit& h) {
  return {{"graph6", h.graph6}, {"n", h.n}, {"category", h.category}, {"detail", h.detail}};
}

SearchHit hit_from_json(const Json& j) {
  return {j.at("graph6").get<std::string>(), j.at("n").get<int>(), j.at("category").get<std::string>(),
          j.at("detail")};
}

void write_checkpoint(const std::string& path, const SearchReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["parameters"] = r.parameters;
  j["scanned"] = r.scanned;
  Json hits = Json::array();
  for (const auto& h : r.hits) hits.push_back(hit_to_json(h));
  j["hits"] = hits;
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write checkpoint " + tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void resume_checkpoint(const std::string& path, SearchReport& r) {
  std::ifstream in(path);
  if (!in) return;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("kind", "") != r.kind || j.value("parameters", Json()) != r.parameters) return;
  r.scanned = j.at("scanned").get<std::size_t>();
  for (const auto& h : j.at("hits")) r.hits.push_back(hit_from_json(h));
}

// Scans items in order, kCheckpointEvery at a time, each chunk fanned out
// over the workers by stride. Hits keep scan order, so the report does not
// depend on the worker count.
void run_search(SearchReport& r, const std::vector<Graph>& items, const HitFn& fn, const SearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!opts.checkpoint.empty()) resume_checkpoint(opts.checkpoint, r);
  const int workers = std::max(1, opts.workers);
  while (r.scanned < items.size()) {
    const std::size_t begin = r.scanned;
    const std::size_t end = std::min(items.size(), begin + kCheckpointEvery);
    std::vector<std::optional<SearchHit>> found(end - begin);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](int w) {
      try {
        for (std::size_t i = begin + w; i < end; i += workers) found[i - begin] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& h : found)
      if (h) r.hits.push_back(std::move(*h));
    r.scanned = end;
    if (!opts.checkpoint.empty()) write_checkpoint(opts.checkpoint, r);
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Graph> trees_up_to(int lo, int n_max) {
  if (n_max > max_tree_order())
    throw DomainError("n_max=" + std::to_string(n_max) + " exceeds the tree bound " + std::to_string(max_tree_order()));
  std::vector<Graph> out;
  for (int n = lo; n <= n_max; ++n) {
    auto level = all_free_trees(n);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

Json base_parameters(int n_max, const SearchOptions& opts) { return {{"n_max", n_max}, {"tol", opts.tol}}; }

bool is_star(const Graph& t) {
  if (t.order() < 3) return false;
  auto d = t.degrees();
  return *std::max_element(d.begin(), d.end()) == t.order() - 1;
}

}  // namespace

SearchReport search_three_distinct_trees(int n_max, const SearchOptions& opts) {
  SearchReport r;
  r.kind = "three-distinct-trees";
  r.parameters = base_parameters(n_max, opts);
  const auto trees = trees_up_to(1, n_max);
  run_search(r, trees, [&](const Graph& t) -> std::optional<SearchHit> {
    auto s = distance_spectrum(t, {opts.tol, kDefaultSnapTol});
    if (count_distinct(s) != 3) return std::nullopt;
    return SearchHit{encode_graph6(t), t.order(), is_star(t) ? "star" : "non-star", {{"spectrum", spectrum_json(s)}}};
  }, opts);

  int stars = 0, others = 0;
  for (const auto& h : r.hits) (h.category == "star" ? stars : others)++;
  r.summary = {{"stars", stars}, {"non_stars", others}, {"expected_stars", std::max(0, n_max - 2)},
               {"only_stars", others == 0 && stars == std::max(0, n_max - 2)}};
  return r;
}

SearchReport search_trees_with_minus_one(int n_max, const SearchOptions& opts) {
  SearchReport r;
  r.kind = "minus-one-trees";
  r.parameters = base_parameters(n_max, opts);
  const auto trees = trees_up_to(2, n_max);
  const Graph s22 = double_star(2, 2);
  run_search(r, trees, [&](const Graph& t) -> std::optional<SearchHit> {
    const int mult = eigen_multiplicity_exact(distance_matrix(t), -1);
    if (mult == 0) return std::nullopt;
    SearchHit h{encode_graph6(t), t.order(), "other", {{"multiplicity", mult}}};
    if (auto rec = recognize_t_family(t)) {
      h.category = "t-family";
      h.detail["recipe"] = rec->recipe.to_string();
    } else if (are_isomorphic(t, s22)) {
      h.category = "s22";
    }
    return h;
  }, opts);

  std::map<std::string, int> counts{{"t-family", 0}, {"s22", 0}, {"other", 0}};
  for (const auto& h : r.hits) ++counts[h.category];
  r.summary = {{"t_family", counts["t-family"]}, {"s22", counts["s22"]}, {"other", counts["other"]}};
  return r;
}

SearchReport search_c3c4free_minus3(int n_max, const SearchOptions& opts, bool inject_petersen) {
  SearchReport r;
  r.kind = "c3c4free-minus3";
  r.parameters = base_parameters(n_max, opts);
  r.parameters["inject_petersen"] = inject_petersen;
  std::vector<Graph> items;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_connected_graphs(n);
    items.insert(items.end(), level.begin(), level.end());
  }
  if (inject_petersen) items.push_back(petersen());
  run_search(r, items, [&](const Graph& g) -> std::optional<SearchHit> {
    if (!is_c3c4_free(g)) return std::nullopt;
    auto s = distance_spectrum(g, {opts.tol, kDefaultSnapTol});
    if (count_distinct(s) != 3 || !s.items.back().exact || std::lround(s.smallest()) != -3) return std::nullopt;
    return SearchHit{encode_graph6(g), g.order(), are_isomorphic(g, petersen()) ? "petersen" : "other",
                     {{"spectrum", spectrum_json(s)}}};
  }, opts);
  int others = 0;
  for (const auto& h : r.hits) others += h.category != "petersen";
  r.summary = {{"hits", r.hits.size()}, {"non_petersen", others}};
  return r;
}

SearchReport search_interval_count(int n_max, const SearchOptions& opts) {
  SearchReport r;
  r.kind = "interval-count";
  r.parameters = base_parameters(n_max, opts);
  const auto trees = trees_up_to(2, n_max);
  // Per-tree ratios are needed for the summary, so collect every tree's count
  // as a hit-less scan and record violations as hits.
  std::vector<double> ratio(trees.size());
  std::vector<int> counts(trees.size(), -1);
  std::map<const Graph*, std::size_t> index;
  for (std::size_t i = 0; i < trees.size(); ++i) index[&trees[i]] = i;
  run_search(r, trees, [&](const Graph& t) -> std::optional<SearchHit> {
    const int c = count_eigs_in_interval(t);
    const int bound = t.order() / 2;
    const std::size_t i = index.at(&t);
    counts[i] = c;
    ratio[i] = static_cast<double>(c) / bound;
    if (c <= bound) return std::nullopt;
    return SearchHit{encode_graph6(t), t.order(), "violation", {{"count", c}, {"bound", bound}}};
  }, opts);
  // Trees restored from a checkpoint were not revisited; fill them in.
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (counts[i] >= 0) continue;
    counts[i] = count_eigs_in_interval(trees[i]);
    ratio[i] = static_cast<double>(counts[i]) / (trees[i].order() / 2);
  }
  double max_ratio = 0;
  int max_count = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    max_ratio = std::max(max_ratio, ratio[i]);
    max_count = std::max(max_count, counts[i]);
  }
  r.summary = {{"max_ratio", max_ratio}, {"max_count", max_count}, {"violations", r.hits.size()}};
  return r;
}

}  // namespace distspec
