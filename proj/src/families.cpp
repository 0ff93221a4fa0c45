#include "distspec/families.hpp"

#include <charconv>
#include <functional>

#include "distspec/error.hpp"

namespace distspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::vector<int> parse_int_list(std::string_view csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw DomainError("expected a comma-separated integer list, got '" + std::string(csv) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star(int n) {
  require(n >= 1, "star: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph double_star(int a, int b) {
  require(a >= 1 && b >= 1, "double_star: a and b must be >= 1");
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int i = 0; i < a; ++i) e.emplace_back(0, 2 + i);
  for (int i = 0; i < b; ++i) e.emplace_back(1, 2 + a + i);
  return Graph(a + b + 2, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) {
      auto [a, b] = subsets[u];
      auto [c, d] = subsets[v];
      if (a != c && a != d && b != c && b != d) e.emplace_back(u, v);
    }
  return Graph(10, e);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(parts.size() >= 2, "complete_multipartite: need at least two parts");
  std::vector<int> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "complete_multipartite: parts must be nonempty");
    owner.insert(owner.end(), parts[p], static_cast<int>(p));
  }
  std::vector<std::pair<int, int>> e;
  const int n = static_cast<int>(owner.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (owner[u] != owner[v]) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph t42_spider(int q) {
  require(q >= 2, "t42_spider: q must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < q; ++i) {
    e.emplace_back(0, 2 * i + 1);
    e.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return Graph(2 * q + 1, e);
}

Graph attach_pendant_p4(const Graph& g, int v) {
  const int n = g.order();
  require(v >= 0 && v < n, "attach_pendant_p4: vertex out of range");
  auto e = g.edges();
  e.emplace_back(v, n);
  e.emplace_back(n, n + 1);
  e.emplace_back(n + 1, n + 2);
  e.emplace_back(n + 2, n + 3);
  return Graph(n + 4, e);
}

std::string TreeRecipe::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(steps[i]);
  }
  return out;
}

TreeRecipe TreeRecipe::parse(std::string_view csv) { return TreeRecipe{parse_int_list(csv)}; }

Graph build_t_family(const TreeRecipe& recipe) {
  Graph g = path(2);
  for (std::size_t i = 0; i < recipe.steps.size(); ++i) {
    const int step = static_cast<int>(i) + 1;
    const int a = recipe.steps[i];
    if (a < 0 || a > 4 * step - 3)
      throw DomainError("tree recipe step " + std::to_string(step) + ": attachment index " +
                        std::to_string(a) + " outside [0, " + std::to_string(4 * step - 3) + "]");
    g = attach_pendant_p4(g, a);
  }
  return g;
}

std::vector<TreeRecipe> all_recipes(int steps) {
  std::vector<TreeRecipe> out;
  TreeRecipe cur;
  std::function<void(int)> rec = [&](int step) {
    if (step > steps) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= 4 * step - 3; ++a) {
      cur.steps.push_back(a);
      rec(step + 1);
      cur.steps.pop_back();
    }
  };
  rec(1);
  return out;
}

IntMatrix f1_submatrix() {
  return IntMatrix{{0, 1, 2, 1, 1}, {1, 0, 1, 2, 2}, {2, 1, 0, 1, 2}, {1, 2, 1, 0, 2}, {1, 2, 2, 2, 0}};
}

IntMatrix f2_submatrix() {
  return IntMatrix{{0, 1, 2, 1, 2}, {1, 0, 1, 2, 1}, {2, 1, 0, 1, 2}, {1, 2, 1, 0, 1}, {2, 1, 2, 1, 0}};
}

Graph parse_family_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == spec.npos ? std::string_view{} : spec.substr(colon + 1);
  if (name == "g6") return parse_graph6(arg);
  if (name == "petersen") {
    require(arg.empty(), "petersen takes no arguments");
    return petersen();
  }
  if (name == "tfam") return build_t_family(TreeRecipe::parse(arg));

  const auto args = parse_int_list(arg);
  auto one = [&]() {
    require(args.size() == 1, "family '" + std::string(name) + "' expects one integer");
    return args[0];
  };
  if (name == "path") return path(one());
  if (name == "star") return star(one());
  if (name == "cycle") return cycle(one());
  if (name == "complete") return complete(one());
  if (name == "t42") return t42_spider(one());
  if (name == "kpart") return complete_multipartite(args);
  if (name == "dstar") {
    require(args.size() == 2, "dstar expects two integers a,b");
    return double_star(args[0], args[1]);
  }
  throw DomainError("unknown family spec '" + std::string(spec) + "'");
}

}  // namespace distspec
