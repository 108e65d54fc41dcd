#include "omegatt/tree.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace omegatt {

std::strong_ordering operator<=>(Tree const& a, Tree const& b) {
  auto n = std::min(a.children.size(), b.children.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return a.children.size() <=> b.children.size();
}

namespace {

void print_into(Tree const& t, std::string& out) {
  out += '[';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ',';
    print_into(t.children[i], out);
  }
  out += ']';
}

struct TreeReader {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r')) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("tree literal: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    }
    ++pos;
  }
  Tree read() {
    expect('[');
    Tree t;
    skip();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return t;
    }
    for (;;) {
      t.children.push_back(read());
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      return t;
    }
  }
};

std::vector<std::vector<Tree>> forests_by_size(std::size_t max_nodes);

}  // namespace

std::string to_string(Tree const& t) {
  std::string out;
  print_into(t, out);
  return out;
}

Tree parse_tree(std::string_view text) {
  TreeReader reader{text};
  Tree t = reader.read();
  reader.skip();
  if (reader.pos != text.size()) throw std::invalid_argument("tree literal: trailing input");
  return t;
}

int dim_tree(Tree const& t) {
  int d = 0;
  for (auto const& c : t.children) d = std::max(d, dim_tree(c) + 1);
  return d;
}

std::size_t node_count(Tree const& t) {
  std::size_t n = 1;
  for (auto const& c : t.children) n += node_count(c);
  return n;
}

Tree boundary_tree(int k, Tree const& t) {
  if (k < 0) throw std::invalid_argument("boundary_tree: negative k");
  if (k == 0) return Tree{};
  Tree out;
  for (auto const& c : t.children) out.children.push_back(boundary_tree(k - 1, c));
  return out;
}

Tree disk_tree(int k) {
  if (k < 0) throw std::invalid_argument("disk_tree: negative dimension");
  Tree t;
  for (int i = 0; i < k; ++i) t = suspend_tree(t);
  return t;
}

Tree comp_tree(int n, int k, int m) {
  if (k < 0 || n < 1 || m < 1 || k >= std::min(n, m)) {
    throw std::invalid_argument("comp_tree: need 0 <= k < min(n, m), got (" + std::to_string(n) + "," +
                                std::to_string(k) + "," + std::to_string(m) + ")");
  }
  if (k == 0) return Tree{{disk_tree(n - 1), disk_tree(m - 1)}};
  return suspend_tree(comp_tree(n - 1, k - 1, m - 1));
}

Tree suspend_tree(Tree const& t) { return Tree(std::vector<Tree>{t}); }

Tree op_tree(DimSet const& w, Tree const& t) {
  DimSet const lower = w.shifted_down();
  Tree out;
  for (auto const& c : t.children) out.children.push_back(op_tree(lower, c));
  if (w.contains(1)) std::reverse(out.children.begin(), out.children.end());
  return out;
}

namespace {

// forests[s] = all ordered lists of trees whose node counts sum to s.
std::vector<std::vector<Tree>> forests_by_size(std::size_t max_nodes) {
  std::vector<std::vector<Tree>> trees(max_nodes + 1);
  std::vector<std::vector<std::vector<Tree>>> forests(max_nodes + 1);
  forests[0].push_back({});
  for (std::size_t s = 1; s <= max_nodes; ++s) {
    for (auto const& kids : forests[s - 1]) trees[s].push_back(Tree{kids});
    // A forest of size s: first tree of size a, rest a forest of size s - a.
    for (std::size_t a = 1; a <= s; ++a) {
      for (auto const& first : trees[a]) {
        for (auto const& rest : forests[s - a]) {
          std::vector<Tree> f;
          f.reserve(rest.size() + 1);
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          forests[s].push_back(std::move(f));
        }
      }
    }
  }
  return trees;
}

}  // namespace

std::vector<Tree> enumerate_trees(std::size_t max_nodes) {
  auto by_size = forests_by_size(max_nodes);
  std::vector<Tree> out;
  for (std::size_t s = 1; s <= max_nodes; ++s) {
    out.insert(out.end(), by_size[s].begin(), by_size[s].end());
  }
  return out;
}

int position_dim(std::string_view position) {
  return static_cast<int>(std::count(position.begin(), position.end(), '.'));
}

std::string disk_top_position(int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += "1.";
  return out + "0";
}

PastingScheme const& positions(Tree const& t) {
  static std::mutex mu;
  static std::map<Tree, PastingScheme> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  std::vector<BipointedGlobularSet> parts;
  for (auto const& c : t.children) parts.push_back(suspend_glob(positions(c).scheme.carrier));
  PastingScheme ps{t, wedge(parts)};
  std::lock_guard lock(mu);
  return cache.emplace(t, std::move(ps)).first->second;
}

namespace {

CellMap boundary_inclusion(int k, Tree const& t, bool target) {
  if (k < 0) throw std::invalid_argument("boundary inclusion: negative k");
  if (k == 0) return {{"0", target ? std::to_string(t.arity()) : "0"}};
  CellMap out;
  for (std::size_t j = 0; j <= t.arity(); ++j) out[std::to_string(j)] = std::to_string(j);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::string const tag = std::to_string(i + 1) + ".";
    for (auto const& [from, to] : boundary_inclusion(k - 1, t.children[i], target)) {
      out[tag + from] = tag + to;
    }
  }
  return out;
}

}  // namespace

CellMap src_inclusion(int k, Tree const& t) { return boundary_inclusion(k, t, false); }
CellMap tgt_inclusion(int k, Tree const& t) { return boundary_inclusion(k, t, true); }

CellMap const& op_positions_iso(DimSet const& w, Tree const& t) {
  static std::mutex mu;
  static std::map<std::pair<DimSet, Tree>, CellMap> cache;
  auto key = std::make_pair(w, t);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::size_t const n = t.arity();
  bool const flip = w.contains(1);
  DimSet const lower = w.shifted_down();
  CellMap iso;
  for (std::size_t j = 0; j <= n; ++j) iso[std::to_string(j)] = std::to_string(flip ? n - j : j);
  for (std::size_t j = 1; j <= n; ++j) {
    // Branch j of op_w t is op_{w-1} of branch `src` of t.
    std::size_t const src = flip ? n + 1 - j : j;
    std::string const from_tag = std::to_string(j) + ".";
    std::string const to_tag = std::to_string(src) + ".";
    for (auto const& [p, q] : op_positions_iso(lower, t.children[src - 1])) iso[from_tag + p] = to_tag + q;
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(iso)).first->second;
}

CellMap invert(CellMap const& f) {
  CellMap out;
  for (auto const& [a, b] : f) {
    if (!out.emplace(b, a).second) throw std::logic_error("invert: map is not injective at '" + b + "'");
  }
  return out;
}

CellMap compose_maps(CellMap const& g, CellMap const& f) {
  CellMap out;
  for (auto const& [a, b] : f) {
    auto it = g.find(b);
    if (it == g.end()) throw std::out_of_range("compose_maps: '" + b + "' not in domain");
    out[a] = it->second;
  }
  return out;
}

}  // namespace omegatt
