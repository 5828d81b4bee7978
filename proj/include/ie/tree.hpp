#ifndef IE_TREE_HPP
#define IE_TREE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ie {

/// Default vertex-count guard for enumeration and matrix assembly.
inline constexpr int kDefaultMaxSize = 12;

/// Immutable rooted tree in canonical form.
///
/// The canonical text encoding is the parenthesis grammar
///   Tree := "(" Tree* ")"
/// with children sorted non-decreasing under the canonical total order:
/// size ascending, ties broken lexicographically on the canonical string
/// with '(' < ')'. Canonical form makes value equality coincide with
/// rooted-tree isomorphism.
class RootedTree {
public:
  /// The one-vertex tree.
  RootedTree() : size_(1), repr_("()") {}

  /// Builds a tree from its root subtrees; children are re-sorted, so any
  /// order is accepted.
  explicit RootedTree(std::vector<RootedTree> children);

  const std::vector<RootedTree>& children() const { return children_; }
  /// Vertex count |t|.
  int size() const { return size_; }
  /// Canonical parenthesis string.
  const std::string& repr() const { return repr_; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.repr_ == b.repr_;
  }
  friend bool operator!=(const RootedTree& a, const RootedTree& b) {
    return !(a == b);
  }
  friend bool operator<(const RootedTree& a, const RootedTree& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.repr_ < b.repr_;
  }

private:
  std::vector<RootedTree> children_;
  int size_;
  std::string repr_;
};

/// Total order on trees: size ascending, then canonical string with
/// '(' < ')'. Returns -1, 0, or +1.
int compare(const RootedTree& a, const RootedTree& b);

/// Immutable multiset of rooted trees, stored sorted non-decreasing.
///
/// Forests of equal total size are ordered by the canonical string of the
/// concatenated members; this is exactly the tree order transported through
/// add_root, so the two enumerations below stay aligned.
class Forest {
public:
  Forest() = default;  // the empty forest
  explicit Forest(std::vector<RootedTree> members);

  const std::vector<RootedTree>& members() const { return members_; }
  int total_size() const { return total_size_; }
  bool empty() const { return members_.empty(); }
  std::size_t count() const { return members_.size(); }

  /// Concatenated canonical member strings; the empty forest renders as "1".
  std::string to_string() const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.concat_ == b.concat_;
  }
  friend bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }
  friend bool operator<(const Forest& a, const Forest& b) {
    if (a.total_size_ != b.total_size_) return a.total_size_ < b.total_size_;
    return a.concat_ < b.concat_;
  }

private:
  std::vector<RootedTree> members_;
  int total_size_ = 0;
  std::string concat_;
};

/// One cut of a tree along an edge: the component containing the root and
/// the pruned component rooted at the lower endpoint.
struct CutResult {
  std::size_t edge_index;  // position in the depth-first edge traversal
  RootedTree root_part;
  RootedTree pruned_part;
};

/// Parses the parenthesis grammar; ASCII whitespace between tokens is
/// tolerated and children are re-sorted into canonical form.
/// Throws ParseError with a byte offset on malformed input; the empty
/// string is an error (the empty tree is a Forest, not a RootedTree).
RootedTree parse_tree(std::string_view text);

/// Canonical string; inverse of parse_tree on canonical output.
std::string render_tree(const RootedTree& t);

/// Parses a concatenation of tree strings; "1" denotes the empty forest.
Forest parse_forest(std::string_view text);

/// All isomorphism classes of rooted trees on n vertices, sorted ascending.
/// Throws DomainError for n < 1 and ResourceLimitError above the guard.
std::vector<RootedTree> enumerate_trees(int n, int max_size = kDefaultMaxSize);

/// All forests of total size n, sorted; n = 0 yields the empty forest.
std::vector<Forest> enumerate_forests(int n, int max_size = kDefaultMaxSize);

/// Multiset of trees obtained by grafting the root of t below each vertex
/// of s in turn, aggregated over isomorphic results. The counts sum to the
/// number of vertices of s.
std::map<RootedTree, long long> graft_counts(const RootedTree& s, const RootedTree& t);

/// Every single-edge cut of t, ordered by the depth-first edge traversal
/// (root first, children in canonical order). Exactly |t| - 1 results.
std::vector<CutResult> cuts(const RootedTree& t);

/// Order of the automorphism group of t (permutations of identical child
/// subtrees, recursively).
long long aut_count(const RootedTree& t);

/// The multiset of subtrees hanging off the root.
Forest branches(const RootedTree& t);

/// Joins the members of f under a fresh root; inverse of branches.
RootedTree add_root(const Forest& f);

}  // namespace ie

#endif
