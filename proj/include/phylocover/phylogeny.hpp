#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phylocover/ga.hpp"
#include "phylocover/graph.hpp"

namespace phylocover {

// m species x n characters, cells in {0,1}.
class BinaryCharacterMatrix {
 public:
  BinaryCharacterMatrix(int species, int characters);  // zero-filled

  int species_count() const { return m_; }
  int char_count() const { return n_; }

  bool at(int i, int j) const { return cells_[cell_index(i, j)] != 0; }
  void set(int i, int j, bool value) {
    cells_[cell_index(i, j)] = value ? 1 : 0;
  }

  // Labels are optional; empty vectors mean unnamed rows/columns.
  std::vector<std::string> species_labels;
  std::vector<std::string> char_labels;

 private:
  std::size_t cell_index(int i, int j) const;

  int m_;
  int n_;
  std::vector<std::uint8_t> cells_;
};

// Column support: the species exhibiting one character.
struct CharacterSpeciesSet {
  int character = -1;
  std::vector<int> species;  // ascending
};

CharacterSpeciesSet species_set(const BinaryCharacterMatrix& mtx, int j);

// Disjoint or nested supports are compatible; a proper overlap conflicts.
bool compatible(const CharacterSpeciesSet& a, const CharacterSpeciesSet& b);

// One vertex per character; an edge per incompatible pair.
Graph conflict_graph(const BinaryCharacterMatrix& mtx);

// True iff every character pair is compatible (conflict graph edgeless).
bool is_perfect_phylogeny(const BinaryCharacterMatrix& mtx);

// Rooted tree: nodes[0] is the root; edge_characters label the edge from
// the parent; species >= 0 marks a leaf with its species id.
struct PhyloTree {
  struct Node {
    int parent = -1;
    std::vector<int> children;
    std::vector<int> edge_characters;
    int species = -1;
  };
  std::vector<Node> nodes;
  int root() const { return 0; }
};

// Builds a perfect phylogenetic tree of mtx. Characters with identical
// supports share one edge; all-zero characters label no edge; a species
// with no characters hangs directly off the root. Throws
// IncompatibleMatrixError (naming a conflicting pair) when the matrix is
// not a perfect phylogeny.
PhyloTree build_perfect_phylogeny(const BinaryCharacterMatrix& mtx);

// Checks the defining tree properties: exactly m leaves; each species
// labels exactly one leaf; each character with a non-empty support labels
// exactly one edge (empty-support characters label none); and every
// root-to-leaf label path equals that species' character set.
bool verify_phylo_tree(const BinaryCharacterMatrix& mtx, const PhyloTree& t);

struct CompatibleSubset {
  std::vector<int> kept;        // U', ascending column indices
  std::vector<int> dropped;     // V', the conflict-graph cover
  std::vector<int> unattached;  // kept all-zero columns (label no edge)
  PhyloTree tree;               // labels carry original column indices
};

// Drops a conflict-graph vertex cover's worth of characters so the rest
// admits a perfect phylogeny. solver is "exact", "2approx" or "hybrid-ga"
// (std::invalid_argument otherwise); ga overrides the GA defaults.
CompatibleSubset largest_compatible_subset(const BinaryCharacterMatrix& mtx,
                                           const std::string& solver,
                                           std::uint64_t seed,
                                           const GaParams* ga = nullptr);

// Indented parent->child rendering with edge-label lists.
void format_phylo_tree(std::ostream& out, const PhyloTree& t);

// Matrix text format. Line 1: "m n"; then m rows of n '0'/'1' cells,
// contiguous or separated by single spaces; '#' starts a comment line.
// Any other character is a parse error naming the row and column.
BinaryCharacterMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BinaryCharacterMatrix& mtx);
BinaryCharacterMatrix load_matrix(const std::string& path);

}  // namespace phylocover
