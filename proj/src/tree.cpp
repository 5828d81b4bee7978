#include "ie/tree.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

RootedTree::RootedTree(std::vector<RootedTree> children)
    : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  size_ = 1;
  std::size_t len = 2;
  for (const auto& c : children_) {
    size_ += c.size_;
    len += c.repr_.size();
  }
  repr_.reserve(len);
  repr_ += '(';
  for (const auto& c : children_) repr_ += c.repr_;
  repr_ += ')';
}

int compare(const RootedTree& a, const RootedTree& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

Forest::Forest(std::vector<RootedTree> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (const auto& t : members_) {
    total_size_ += t.size();
    concat_ += t.repr();
  }
}

std::string Forest::to_string() const {
  return members_.empty() ? "1" : concat_;
}

namespace {

class TreeParser {
public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    RootedTree t = node();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
    return t;
  }

  RootedTree node() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(')
      throw ParseError("expected '('", pos_);
    ++pos_;
    std::vector<RootedTree> children;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) throw ParseError("unbalanced tree, missing ')'", pos_);
      if (text_[pos_] == ')') {
        ++pos_;
        return RootedTree(std::move(children));
      }
      if (text_[pos_] == '(') {
        children.push_back(node());
      } else {
        throw ParseError("unexpected character in tree", pos_);
      }
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string render_tree(const RootedTree& t) { return t.repr(); }

Forest parse_forest(std::string_view text) {
  TreeParser p(text);
  p.skip_ws();
  if (p.at_end()) throw ParseError("empty forest text (use \"1\")", 0);
  // "1" denotes the empty forest
  {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '1') {
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i != text.size()) throw ParseError("trailing characters after empty forest", i);
      return Forest();
    }
  }
  std::vector<RootedTree> members;
  while (!p.at_end()) members.push_back(p.node());
  return Forest(std::move(members));
}

namespace {

void check_enumeration_args(int n, int min_n, int max_size, const char* what) {
  if (n < min_n) throw DomainError(std::string(what) + ": size out of range");
  if (n > max_size)
    throw ResourceLimitError(std::string(what) + ": size " + std::to_string(n) +
                             " exceeds guard " + std::to_string(max_size));
}

// Non-decreasing member sequences with the given total size, drawn from the
// flattened tree list (sizes ascending).
void forests_rec(const std::vector<RootedTree>& pool, std::size_t start, int remaining,
                 std::vector<RootedTree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.push_back(Forest(current));
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].size() > remaining) break;  // pool is sorted by size
    current.push_back(pool[i]);
    forests_rec(pool, i, remaining - pool[i].size(), current, out);
    current.pop_back();
  }
}

// Builds trees of sizes 1..n; trees of size k+1 arise by adding a root to
// the forests of total size k.
std::vector<std::vector<RootedTree>> build_tree_table(int n) {
  std::vector<std::vector<RootedTree>> table(static_cast<std::size_t>(n) + 1);
  if (n < 1) return table;
  table[1] = {RootedTree()};
  std::vector<RootedTree> pool = table[1];
  for (int k = 2; k <= n; ++k) {
    std::vector<Forest> forests;
    std::vector<RootedTree> current;
    forests_rec(pool, 0, k - 1, current, forests);
    std::sort(forests.begin(), forests.end());
    auto& row = table[static_cast<std::size_t>(k)];
    row.reserve(forests.size());
    for (const auto& f : forests) row.push_back(add_root(f));
    pool.insert(pool.end(), row.begin(), row.end());
  }
  return table;
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int n, int max_size) {
  check_enumeration_args(n, 1, max_size, "enumerate_trees");
  return build_tree_table(n)[static_cast<std::size_t>(n)];
}

std::vector<Forest> enumerate_forests(int n, int max_size) {
  check_enumeration_args(n, 0, max_size, "enumerate_forests");
  if (n == 0) return {Forest()};
  auto table = build_tree_table(n);
  std::vector<RootedTree> pool;
  for (int k = 1; k <= n; ++k)
    pool.insert(pool.end(), table[static_cast<std::size_t>(k)].begin(),
                table[static_cast<std::size_t>(k)].end());
  std::vector<Forest> out;
  std::vector<RootedTree> current;
  forests_rec(pool, 0, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<RootedTree, long long> graft_counts(const RootedTree& s, const RootedTree& t) {
  std::map<RootedTree, long long> out;
  // attach below the root of s
  {
    std::vector<RootedTree> children = s.children();
    children.push_back(t);
    out[RootedTree(std::move(children))] += 1;
  }
  // attach inside each child subtree
  for (std::size_t ci = 0; ci < s.children().size(); ++ci) {
    for (const auto& [g, cnt] : graft_counts(s.children()[ci], t)) {
      std::vector<RootedTree> children = s.children();
      children[ci] = g;
      out[RootedTree(std::move(children))] += cnt;
    }
  }
  return out;
}

std::vector<CutResult> cuts(const RootedTree& t) {
  std::vector<CutResult> out;
  for (std::size_t ci = 0; ci < t.children().size(); ++ci) {
    const RootedTree& child = t.children()[ci];
    {
      std::vector<RootedTree> rest = t.children();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(ci));
      out.push_back({out.size(), RootedTree(std::move(rest)), child});
    }
    for (const auto& sub : cuts(child)) {
      std::vector<RootedTree> children = t.children();
      children[ci] = sub.root_part;
      out.push_back({out.size(), RootedTree(std::move(children)), sub.pruned_part});
    }
  }
  return out;
}

long long aut_count(const RootedTree& t) {
  long long total = 1;
  const auto& ch = t.children();
  std::size_t i = 0;
  while (i < ch.size()) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) total *= static_cast<long long>(k);
    for (; i < j; ++i) total *= aut_count(ch[i]);
  }
  return total;
}

Forest branches(const RootedTree& t) { return Forest(t.children()); }

RootedTree add_root(const Forest& f) { return RootedTree(f.members()); }

}  // namespace ie
