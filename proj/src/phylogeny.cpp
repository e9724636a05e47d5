#include "phylocover/phylogeny.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "phylocover/baselines.hpp"
#include "phylocover/errors.hpp"

namespace phylocover {

BinaryCharacterMatrix::BinaryCharacterMatrix(int species, int characters)
    : m_(species), n_(characters) {
  if (species < 1 || characters < 1)
    throw std::invalid_argument("matrix: dimensions must be >= 1");
  cells_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_), 0);
}

std::size_t BinaryCharacterMatrix::cell_index(int i, int j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= n_)
    throw std::out_of_range("matrix: cell (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j);
}

CharacterSpeciesSet species_set(const BinaryCharacterMatrix& mtx, int j) {
  if (j < 0 || j >= mtx.char_count())
    throw std::out_of_range("species_set: no character " + std::to_string(j));
  CharacterSpeciesSet out;
  out.character = j;
  for (int i = 0; i < mtx.species_count(); ++i)
    if (mtx.at(i, j)) out.species.push_back(i);
  return out;
}

bool compatible(const CharacterSpeciesSet& a, const CharacterSpeciesSet& b) {
  std::size_t shared = 0;
  std::size_t i = 0, j = 0;
  while (i < a.species.size() && j < b.species.size()) {
    if (a.species[i] == b.species[j]) {
      ++shared;
      ++i;
      ++j;
    } else if (a.species[i] < b.species[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return shared == 0 || shared == a.species.size() ||
         shared == b.species.size();
}

namespace {

// One bitset word-row per character for fast pairwise support tests.
struct SupportBits {
  std::size_t words;
  std::vector<std::uint64_t> bits;  // character-major
  std::vector<int> count;

  explicit SupportBits(const BinaryCharacterMatrix& mtx)
      : words((static_cast<std::size_t>(mtx.species_count()) + 63) / 64),
        bits(static_cast<std::size_t>(mtx.char_count()) * words, 0),
        count(static_cast<std::size_t>(mtx.char_count()), 0) {
    for (int j = 0; j < mtx.char_count(); ++j) {
      for (int i = 0; i < mtx.species_count(); ++i) {
        if (mtx.at(i, j)) {
          bits[static_cast<std::size_t>(j) * words +
               static_cast<std::size_t>(i) / 64] |=
              std::uint64_t{1} << (static_cast<std::size_t>(i) % 64);
          ++count[static_cast<std::size_t>(j)];
        }
      }
    }
  }

  bool conflict(int a, int b) const {
    int shared = 0;
    const auto* pa = bits.data() + static_cast<std::size_t>(a) * words;
    const auto* pb = bits.data() + static_cast<std::size_t>(b) * words;
    for (std::size_t w = 0; w < words; ++w)
      shared += std::popcount(pa[w] & pb[w]);
    return shared != 0 && shared != count[static_cast<std::size_t>(a)] &&
           shared != count[static_cast<std::size_t>(b)];
  }
};

}  // namespace

Graph conflict_graph(const BinaryCharacterMatrix& mtx) {
  const SupportBits sup(mtx);
  std::vector<Edge> edges;
  for (int a = 0; a < mtx.char_count(); ++a)
    for (int b = a + 1; b < mtx.char_count(); ++b)
      if (sup.conflict(a, b)) edges.emplace_back(a, b);
  return Graph(mtx.char_count(), edges);
}

bool is_perfect_phylogeny(const BinaryCharacterMatrix& mtx) {
  const SupportBits sup(mtx);
  for (int a = 0; a < mtx.char_count(); ++a)
    for (int b = a + 1; b < mtx.char_count(); ++b)
      if (sup.conflict(a, b)) return false;
  return true;
}

PhyloTree build_perfect_phylogeny(const BinaryCharacterMatrix& mtx) {
  const int m = mtx.species_count();
  const int n = mtx.char_count();

  std::vector<std::vector<int>> supports(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) supports[static_cast<std::size_t>(j)] =
      species_set(mtx, j).species;

  const SupportBits sup(mtx);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (sup.conflict(a, b)) throw IncompatibleMatrixError(a, b);

  // Characters with identical supports share one edge; empty supports
  // attach nowhere.
  struct Group {
    std::vector<int> support;
    std::vector<int> chars;
  };
  std::vector<Group> groups;
  std::map<std::vector<int>, int> group_of_support;
  std::vector<int> group_of_char(static_cast<std::size_t>(n), -1);
  for (int j = 0; j < n; ++j) {
    const auto& s = supports[static_cast<std::size_t>(j)];
    if (s.empty()) continue;
    auto [it, fresh] = group_of_support.try_emplace(
        s, static_cast<int>(groups.size()));
    if (fresh) groups.push_back({s, {}});
    groups[static_cast<std::size_t>(it->second)].chars.push_back(j);
    group_of_char[static_cast<std::size_t>(j)] = it->second;
  }

  PhyloTree tree;
  tree.nodes.emplace_back();  // root
  // Transient child lookup per node, keyed by the group of the edge.
  std::vector<std::map<int, int>> child_by_group(1);
  std::vector<std::vector<int>> enders(1);  // species whose walk ends here

  for (int i = 0; i < m; ++i) {
    // The groups containing species i form a chain under inclusion, so
    // decreasing support size is the unique root-to-leaf order.
    std::vector<int> chain;
    for (int j = 0; j < n; ++j)
      if (mtx.at(i, j)) chain.push_back(group_of_char[static_cast<std::size_t>(j)]);
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    std::sort(chain.begin(), chain.end(), [&](int a, int b) {
      const auto& ga = groups[static_cast<std::size_t>(a)];
      const auto& gb = groups[static_cast<std::size_t>(b)];
      if (ga.support.size() != gb.support.size())
        return ga.support.size() > gb.support.size();
      return ga.chars.front() < gb.chars.front();
    });

    int cur = tree.root();
    for (int grp : chain) {
      const auto it = child_by_group[static_cast<std::size_t>(cur)].find(grp);
      if (it != child_by_group[static_cast<std::size_t>(cur)].end()) {
        cur = it->second;
        continue;
      }
      const int child = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes[static_cast<std::size_t>(child)].parent = cur;
      tree.nodes[static_cast<std::size_t>(child)].edge_characters =
          groups[static_cast<std::size_t>(grp)].chars;
      tree.nodes[static_cast<std::size_t>(cur)].children.push_back(child);
      child_by_group.emplace_back();  // may reallocate: index after, never hold refs
      enders.emplace_back();
      child_by_group[static_cast<std::size_t>(cur)].emplace(grp, child);
      cur = child;
    }
    enders[static_cast<std::size_t>(cur)].push_back(i);
  }

  // A lone species ending on a childless non-root node labels it as the
  // leaf; otherwise each ender hangs off its own unlabeled leaf edge.
  const std::size_t skeleton_size = tree.nodes.size();
  for (std::size_t v = 0; v < skeleton_size; ++v) {
    const auto& ending = enders[v];
    if (ending.empty()) continue;
    const bool label_in_place = v != 0 && ending.size() == 1 &&
                                tree.nodes[v].children.empty();
    if (label_in_place) {
      tree.nodes[v].species = ending.front();
      continue;
    }
    for (int species : ending) {
      const int leaf = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes[static_cast<std::size_t>(leaf)].parent = static_cast<int>(v);
      tree.nodes[static_cast<std::size_t>(leaf)].species = species;
      tree.nodes[v].children.push_back(leaf);
    }
  }
  return tree;
}

bool verify_phylo_tree(const BinaryCharacterMatrix& mtx, const PhyloTree& t) {
  const int m = mtx.species_count();
  const int n = mtx.char_count();
  const auto node_count = t.nodes.size();
  if (node_count == 0) return false;
  if (t.nodes[0].parent != -1) return false;

  // Structural soundness: parent/child links agree and all nodes hang
  // off the root exactly once.
  std::vector<char> reached(node_count, 0);
  std::vector<int> stack{t.root()};
  std::size_t seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v < 0 || static_cast<std::size_t>(v) >= node_count) return false;
    if (reached[static_cast<std::size_t>(v)]) return false;
    reached[static_cast<std::size_t>(v)] = 1;
    ++seen;
    for (int c : t.nodes[static_cast<std::size_t>(v)].children) {
      if (c < 0 || static_cast<std::size_t>(c) >= node_count) return false;
      if (t.nodes[static_cast<std::size_t>(c)].parent != v) return false;
      stack.push_back(c);
    }
  }
  if (seen != node_count) return false;

  // Property 1: exactly m leaves. Property 2: each species labels exactly
  // one leaf (and nothing else is labeled).
  std::vector<int> species_leaf(static_cast<std::size_t>(m), -1);
  std::size_t leaves = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    const auto& node = t.nodes[v];
    if (node.children.empty()) {
      ++leaves;
      if (node.species < 0 || node.species >= m) return false;
      if (species_leaf[static_cast<std::size_t>(node.species)] != -1)
        return false;
      species_leaf[static_cast<std::size_t>(node.species)] =
          static_cast<int>(v);
    } else if (node.species != -1) {
      return false;
    }
  }
  if (leaves != static_cast<std::size_t>(m)) return false;
  for (int i = 0; i < m; ++i)
    if (species_leaf[static_cast<std::size_t>(i)] == -1) return false;

  // Property 3: every character with a non-empty support labels exactly
  // one edge; all-zero characters label none.
  std::vector<int> label_uses(static_cast<std::size_t>(n), 0);
  for (std::size_t v = 1; v < node_count; ++v) {
    for (int c : t.nodes[v].edge_characters) {
      if (c < 0 || c >= n) return false;
      ++label_uses[static_cast<std::size_t>(c)];
    }
  }
  for (int j = 0; j < n; ++j) {
    bool empty_support = true;
    for (int i = 0; i < m; ++i)
      if (mtx.at(i, j)) {
        empty_support = false;
        break;
      }
    if (label_uses[static_cast<std::size_t>(j)] != (empty_support ? 0 : 1))
      return false;
  }

  // Property 4: the root path of each species' leaf carries exactly its
  // character set.
  for (int i = 0; i < m; ++i) {
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    for (int v = species_leaf[static_cast<std::size_t>(i)]; v != t.root();
         v = t.nodes[static_cast<std::size_t>(v)].parent)
      for (int c : t.nodes[static_cast<std::size_t>(v)].edge_characters)
        on_path[static_cast<std::size_t>(c)] = 1;
    for (int j = 0; j < n; ++j)
      if ((on_path[static_cast<std::size_t>(j)] != 0) != mtx.at(i, j))
        return false;
  }
  return true;
}

CompatibleSubset largest_compatible_subset(const BinaryCharacterMatrix& mtx,
                                           const std::string& solver,
                                           std::uint64_t seed,
                                           const GaParams* ga) {
  const Graph conflicts = conflict_graph(mtx);

  std::vector<int> cover;
  if (solver == "exact") {
    cover = exact_cover(conflicts);
  } else if (solver == "2approx") {
    cover = two_approx_cover(conflicts, seed);
  } else if (solver == "hybrid-ga") {
    GaParams params = ga != nullptr ? *ga : GaParams{};
    params.seed = seed;  // the seed argument wins
    cover = evolve(conflicts, params).cover;
  } else {
    throw std::invalid_argument("unknown cover solver: " + solver);
  }

  CompatibleSubset out;
  out.dropped = cover;  // already ascending
  std::vector<char> drop(static_cast<std::size_t>(mtx.char_count()), 0);
  for (int j : cover) drop[static_cast<std::size_t>(j)] = 1;
  for (int j = 0; j < mtx.char_count(); ++j)
    if (!drop[static_cast<std::size_t>(j)]) out.kept.push_back(j);

  if (out.kept.empty()) {
    // No columns left: a minimal one-species placeholder tree would lie
    // about the input, so report an empty tree instead.
    out.tree.nodes.emplace_back();
    return out;
  }

  BinaryCharacterMatrix kept_mtx(mtx.species_count(),
                                 static_cast<int>(out.kept.size()));
  for (int i = 0; i < mtx.species_count(); ++i)
    for (std::size_t k = 0; k < out.kept.size(); ++k)
      kept_mtx.set(i, static_cast<int>(k), mtx.at(i, out.kept[k]));

  out.tree = build_perfect_phylogeny(kept_mtx);
  for (auto& node : out.tree.nodes)
    for (auto& c : node.edge_characters) c = out.kept[static_cast<std::size_t>(c)];

  for (int j : out.kept)
    if (species_set(mtx, j).species.empty()) out.unattached.push_back(j);
  return out;
}

namespace {

void format_node(std::ostream& out, const PhyloTree& t, int v, int depth) {
  const auto& node = t.nodes[static_cast<std::size_t>(v)];
  for (int k = 0; k < depth; ++k) out << "  ";
  if (v == t.root()) {
    out << "root";
  } else {
    out << '[';
    for (std::size_t k = 0; k < node.edge_characters.size(); ++k) {
      if (k) out << ',';
      out << node.edge_characters[k];
    }
    out << "] ";
    if (node.children.empty())
      out << "species " << node.species;
    else
      out << "internal";
  }
  out << '\n';
  for (int c : node.children) format_node(out, t, c, depth + 1);
}

}  // namespace

void format_phylo_tree(std::ostream& out, const PhyloTree& t) {
  if (t.nodes.empty()) return;
  format_node(out, t, t.root(), 0);
}

namespace {

bool matrix_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BinaryCharacterMatrix read_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  int m = -1, n = -1;
  int row = 0;
  std::vector<std::uint8_t> cells;

  while (std::getline(in, line)) {
    ++line_no;
    if (matrix_blank_or_comment(line)) continue;
    if (m < 0) {
      std::size_t pos = 0;
      const auto read_int = [&]() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
          ++pos;
        if (pos >= line.size() ||
            !std::isdigit(static_cast<unsigned char>(line[pos])))
          throw ParseError("expected 'm n' header", line_no,
                           static_cast<int>(pos) + 1);
        long long v = 0;
        while (pos < line.size() &&
               std::isdigit(static_cast<unsigned char>(line[pos]))) {
          v = v * 10 + (line[pos] - '0');
          if (v > 1'000'000)
            throw ParseError("dimension too large", line_no,
                             static_cast<int>(pos) + 1);
          ++pos;
        }
        return static_cast<int>(v);
      };
      m = read_int();
      n = read_int();
      if (m < 1 || n < 1)
        throw ParseError("matrix dimensions must be >= 1", line_no, 1);
      cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
      continue;
    }
    if (row == m)
      throw ParseError("more than " + std::to_string(m) + " matrix rows",
                       line_no, 1);
    int col = 0;
    for (std::size_t pos = 0; pos < line.size(); ++pos) {
      const char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c == '#') break;
      if (c != '0' && c != '1')
        throw ParseError("matrix row " + std::to_string(row) + ", column " +
                             std::to_string(col) + ": expected '0' or '1', got '" +
                             std::string(1, c) + "'",
                         line_no, static_cast<int>(pos) + 1);
      if (col == n)
        throw ParseError("matrix row " + std::to_string(row) + ": more than " +
                             std::to_string(n) + " columns",
                         line_no, static_cast<int>(pos) + 1);
      cells.push_back(c == '1' ? 1 : 0);
      ++col;
    }
    if (col != n)
      throw ParseError("matrix row " + std::to_string(row) + ", column " +
                           std::to_string(col) + ": expected " +
                           std::to_string(n) + " cells, found " +
                           std::to_string(col),
                       line_no, static_cast<int>(line.size()) + 1);
    ++row;
  }
  if (m < 0) throw ParseError("missing 'm n' header", line_no + 1, 1);
  if (row != m)
    throw ParseError("expected " + std::to_string(m) + " matrix rows, found " +
                         std::to_string(row),
                     line_no + 1, 1);

  BinaryCharacterMatrix mtx(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      mtx.set(i, j, cells[static_cast<std::size_t>(i) *
                              static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(j)] != 0);
  return mtx;
}

void write_matrix(std::ostream& out, const BinaryCharacterMatrix& mtx) {
  out << mtx.species_count() << ' ' << mtx.char_count() << '\n';
  for (int i = 0; i < mtx.species_count(); ++i) {
    for (int j = 0; j < mtx.char_count(); ++j) out << (mtx.at(i, j) ? '1' : '0');
    out << '\n';
  }
}

BinaryCharacterMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  try {
    return read_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

}  // namespace phylocover
