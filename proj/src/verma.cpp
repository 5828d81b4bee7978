#include "ie/verma.hpp"

#include <algorithm>
#include <utility>

#include "ie/ctrep.hpp"
#include "ie/ctvector.hpp"
#include "ie/errors.hpp"

namespace ie {

VermaVector VermaVector::monomial(Forest f) {
  VermaVector v(f.total_size());
  v.terms_.emplace(std::move(f), LambdaPoly(1));
  return v;
}

LambdaPoly VermaVector::coeff(const Forest& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? LambdaPoly() : it->second;
}

void VermaVector::add(const Forest& f, const LambdaPoly& c) {
  if (c.is_zero()) return;
  if (f.total_size() != weight_offset_) {
    if (!terms_.empty())
      throw DomainError("verma vector term with mismatched weight offset");
    weight_offset_ = f.total_size();
  }
  auto [it, inserted] = terms_.emplace(f, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  if (!o.is_zero() && !is_zero() && o.weight_offset_ != weight_offset_)
    throw DomainError("verma vector sum across weight offsets");
  for (const auto& [f, c] : o.terms_) add(f, c);
  return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
  if (!o.is_zero() && !is_zero() && o.weight_offset_ != weight_offset_)
    throw DomainError("verma vector sum across weight offsets");
  for (const auto& [f, c] : o.terms_) add(f, -c);
  return *this;
}

VermaVector& VermaVector::operator*=(const LambdaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

std::string VermaVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [f, c] : terms_) {
    int nonzero_terms = 0;
    for (const auto& coeff : c.coeffs())
      if (coeff != 0) ++nonzero_terms;
    bool negative_single = nonzero_terms == 1 && c.leading() < 0;
    if (out.empty()) {
      if (negative_single) out += '-';
    } else {
      out += negative_single ? " - " : " + ";
    }
    if (nonzero_terms > 1) {
      out += '(';
      out += c.to_string(/*spaced=*/false);
      out += ')';
    } else {
      LambdaPoly shown = negative_single ? -c : c;
      out += shown.to_string(/*spaced=*/false);
    }
    out += "*[";
    out += f.to_string();
    out += ']';
  }
  return out;
}

namespace {

using Word = std::vector<RootedTree>;  // leftmost entry outermost

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// [D+_a, D+_b] expressed in the insertion basis
std::map<RootedTree, long long> insertion_bracket_counts(const RootedTree& a,
                                                         const RootedTree& b) {
  std::map<RootedTree, long long> out;
  for (const auto& [g, cnt] : graft_counts(b, a)) out[g] += cnt;
  for (const auto& [g, cnt] : graft_counts(a, b)) out[g] -= cnt;
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

int word_total(const Word& w) {
  int total = 0;
  for (const auto& t : w) total += t.size();
  return total;
}

VermaVector pbw_sort_scaled(Word word, const LambdaPoly& scale) {
  VermaVector out(word_total(word));
  std::map<Word, BigInt, WordLess> pending;
  pending.emplace(std::move(word), BigInt(1));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const BigInt& c = node.mapped();
    if (c == 0) continue;
    // normal order: non-increasing left to right
    std::size_t bad = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] < w[i + 1]) {
        bad = i;
        break;
      }
    }
    if (bad == w.size()) {
      out.add(Forest(w), LambdaPoly(c) * scale);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    pending[std::move(swapped)] += c;
    for (const auto& [u, cnt] : insertion_bracket_counts(w[bad], w[bad + 1])) {
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(bad));
      shorter.push_back(u);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(bad) + 2, w.end());
      pending[std::move(shorter)] += c * cnt;
    }
  }
  return out;
}

Word monomial_word(const Forest& f) {
  // members ascending; the word lists operators outermost first
  Word w(f.members().rbegin(), f.members().rend());
  return w;
}

// D-_t applied to the operator word acting on the generator
VermaVector eliminate_word(const RootedTree& t, const Word& word) {
  const int total = word_total(word);
  VermaVector out(total - t.size());
  if (t.size() > total) return out;
  const RootedTree& head = word.front();
  Word rest(word.begin() + 1, word.end());

  // push past the head insertion
  VermaVector sub = eliminate_word(t, rest);
  if (!sub.is_zero()) {
    for (const auto& [f, c] : sub.terms()) {
      Word w = monomial_word(f);
      w.insert(w.begin(), head);
      out += pbw_sort_scaled(std::move(w), c);
    }
  }
  // insertion terms: cuts of the head that prune t
  for (const auto& cut : cuts(head)) {
    if (cut.pruned_part == t) {
      Word w = rest;
      w.insert(w.begin(), cut.root_part);
      out += pbw_sort_scaled(std::move(w), LambdaPoly(1));
    }
  }
  // elimination terms: distinct root parts u of cuts of t that prune the
  // head, weighted by the number of graft positions of u recovering t (the
  // same count the bracket uses)
  std::map<RootedTree, bool> seen;
  for (const auto& cut : cuts(t)) {
    if (cut.pruned_part != head || seen.count(cut.root_part)) continue;
    seen.emplace(cut.root_part, true);
    auto grafts = graft_counts(cut.root_part, head);
    auto it = grafts.find(t);
    if (it == grafts.end()) continue;
    VermaVector part = eliminate_word(cut.root_part, rest);
    part *= LambdaPoly(BigInt(it->second));
    out += part;
  }
  // the grading term: d acts on the tail monomial by (lam + its size)
  if (t == head) {
    VermaVector tail = VermaVector::monomial(Forest(rest));
    tail *= LambdaPoly::linear(BigInt(word_total(rest)), BigInt(1));
    out += tail;
  }
  return out;
}

}  // namespace

VermaVector pbw_sort(const std::vector<RootedTree>& word) {
  return pbw_sort_scaled(word, LambdaPoly(1));
}

VermaVector apply_basis_op(const BasisElement& b, const VermaVector& w) {
  switch (b.kind()) {
    case OpKind::insertion: {
      VermaVector out(w.weight_offset() + b.tree().size());
      for (const auto& [f, c] : w.terms()) {
        Word word = monomial_word(f);
        word.insert(word.begin(), b.tree());
        out += pbw_sort_scaled(std::move(word), c);
      }
      return out;
    }
    case OpKind::grading: {
      VermaVector out = w;
      out *= LambdaPoly::linear(BigInt(w.weight_offset()), BigInt(1));
      return out;
    }
    case OpKind::elimination: {
      VermaVector out(w.weight_offset() - b.tree().size());
      for (const auto& [f, c] : w.terms()) {
        VermaVector part = eliminate_word(b.tree(), monomial_word(f));
        part *= c;
        out += part;
      }
      return out;
    }
  }
  return VermaVector();
}

PolyMatrix SingularSystem::pencil() const {
  PolyMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      m.at(i, j) = LambdaPoly::linear(a.at(i, j), b.at(i, j));
    }
  }
  return m;
}

SingularSystem singular_system(int n, int max_n) {
  if (n < 1) throw DomainError("singular_system requires n >= 1");
  if (n > max_n)
    throw ResourceLimitError("singular_system: n " + std::to_string(n) +
                             " exceeds guard " + std::to_string(max_n));

  SingularSystem sys;
  sys.n = n;
  sys.columns = enumerate_forests(n, n);

  std::vector<RootedTree> ts;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : enumerate_trees(k, n)) ts.push_back(std::move(t));
  }
  std::reverse(ts.begin(), ts.end());  // largest eliminating tree first

  for (const auto& t : ts) {
    for (auto& j : enumerate_forests(n - t.size(), n)) sys.rows.push_back({t, std::move(j)});
  }

  sys.a = ZMatrix(sys.rows.size(), sys.columns.size());
  sys.b = ZMatrix(sys.rows.size(), sys.columns.size());

  std::size_t row = 0;
  for (const auto& t : ts) {
    std::size_t block = enumerate_forests(n - t.size(), n).size();
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
      VermaVector applied = apply_basis_op(BasisElement::elimination(t),
                                           VermaVector::monomial(sys.columns[col]));
      for (std::size_t k = 0; k < block; ++k) {
        const LambdaPoly& p = applied.coeff(sys.rows[row + k].j);
        if (p.degree() > 1)
          throw DomainError("lowest-weight condition entry of degree > 1 in lam");
        sys.a.at(row + k, col) = p.coeff(0);
        sys.b.at(row + k, col) = p.coeff(1);
      }
    }
    row += block;
  }
  return sys;
}

GenericDetReport generic_det(const SingularSystem& sys) {
  GenericDetReport report;
  PolyMatrix pencil = sys.pencil();
  PolyPivots piv = poly_row_pivots(pencil);
  report.generic_rank = piv.rank;
  if (piv.rank < pencil.cols) {
    report.rank_deficient = true;
    return report;
  }
  report.pivot_rows = piv.pivot_rows;
  PolyMatrix sub(piv.pivot_rows.size(), pencil.cols);
  for (std::size_t i = 0; i < piv.pivot_rows.size(); ++i) {
    for (std::size_t j = 0; j < pencil.cols; ++j) {
      sub.at(i, j) = pencil.at(piv.pivot_rows[i], j);
    }
  }
  report.det = bareiss_det(sub);
  return report;
}

GenericDetReport generic_det(int n, int max_n) {
  return generic_det(singular_system(n, max_n));
}

ExceptionalReport exceptional_candidates(int n, int max_n) {
  SingularSystem sys = singular_system(n, max_n);
  GenericDetReport det = generic_det(sys);
  ExceptionalReport report;
  if (det.rank_deficient) {
    report.rank_deficient = true;
    return report;
  }
  RationalRootReport roots = rational_roots(det.det);
  PolyMatrix pencil = sys.pencil();
  for (const auto& [root, mult] : roots.roots) {
    RankKernel rk = rank_kernel(eval_matrix(pencil, root));
    if (!rk.kernel.empty()) report.confirmed.push_back(root);
  }
  report.residual = roots.residual;
  return report;
}

std::vector<VermaVector> kernel_at(const Rational& lambda0, int n, int max_n) {
  SingularSystem sys = singular_system(n, max_n);
  RankKernel rk = rank_kernel(eval_matrix(sys.pencil(), lambda0));

  std::vector<VermaVector> out;
  for (const auto& vec : rk.kernel) {
    // clear denominators and divide by the content
    BigInt mult = 1;
    for (const auto& c : vec) mult = lcm(mult, c.den());
    BigInt content = 0;
    for (const auto& c : vec) content = gcd(content, c.num() * (mult / c.den()));
    VermaVector w(n);
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (vec[i].is_zero()) continue;
      w.add(sys.columns[i], LambdaPoly(vec[i].num() * (mult / vec[i].den()) / content));
    }
    // re-verify by direct application, independent of the elimination path
    for (int k = 1; k <= n; ++k) {
      for (const auto& t : enumerate_trees(k, n)) {
        VermaVector applied = apply_basis_op(BasisElement::elimination(t), w);
        for (const auto& [f, c] : applied.terms()) {
          if (!c.eval(lambda0).is_zero())
            throw std::logic_error("kernel vector not annihilated by D-_" + t.repr());
        }
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

// binomial(m + r - 1, m) as a BigInt, exact
BigInt repeated_binomial(long long r, long long m) {
  BigInt num = 1;
  BigInt den = 1;
  for (long long i = 1; i <= m; ++i) {
    num *= r - 1 + i;
    den *= i;
  }
  return num / den;
}

}  // namespace

VermaCharacterReport verma_character(int n, int max_size) {
  if (n < 0) throw DomainError("verma_character requires n >= 0");
  if (n + 1 > max_size)
    throw ResourceLimitError("verma_character: n exceeds guard");

  VermaCharacterReport report;
  for (int k = 0; k <= n; ++k)
    report.dims.push_back(static_cast<long long>(enumerate_forests(k, max_size).size()));

  std::vector<long long> tree_counts = {0};
  for (int k = 1; k <= n + 1; ++k)
    tree_counts.push_back(static_cast<long long>(enumerate_trees(k, max_size).size()));

  report.add_root_identity = true;
  for (int k = 0; k <= n; ++k) {
    if (report.dims[static_cast<std::size_t>(k)] != tree_counts[static_cast<std::size_t>(k + 1)])
      report.add_root_identity = false;
  }

  // prod_{m>=1} (1 - q^m)^{-r_m} truncated at order n
  std::vector<BigInt> series(static_cast<std::size_t>(n) + 1, BigInt(0));
  series[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long rm = tree_counts[static_cast<std::size_t>(m)];
    if (rm == 0) continue;
    std::vector<BigInt> next(series.size(), BigInt(0));
    for (int i = 0; i <= n; ++i) {
      for (long long mult = 0; m * mult <= i; ++mult) {
        const BigInt& base = series[static_cast<std::size_t>(i - m * mult)];
        if (base == 0) continue;
        next[static_cast<std::size_t>(i)] += base * repeated_binomial(rm, mult);
      }
    }
    series = std::move(next);
  }
  report.product_identity = true;
  for (int i = 0; i <= n; ++i) {
    if (series[static_cast<std::size_t>(i)] != report.dims[static_cast<std::size_t>(i)])
      report.product_identity = false;
  }
  return report;
}

namespace {

// transport of the forest monomials at a given offset into the quotient
// representation, acting on the one-vertex tree
CTVector transport_monomial(const Forest& f) {
  CTVector v = CTVector::tree(RootedTree());
  for (const auto& t : f.members()) {
    v = act_on_m(LieElement::basis(BasisElement::insertion(t)), v);
  }
  return v;
}

}  // namespace

Z1Report z1_isomorphism_check(int n, int max_size) {
  if (n < 1) throw DomainError("z1_isomorphism_check requires n >= 1");
  if (n > max_size) throw ResourceLimitError("z1_isomorphism_check: n exceeds guard");

  Z1Report report;
  report.n = n;
  std::vector<Forest> columns = enumerate_forests(n - 1, max_size);
  std::vector<RootedTree> rows = enumerate_trees(n, max_size);
  report.size = rows.size();
  report.square = columns.size() == rows.size();

  std::map<RootedTree, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

  std::map<Forest, CTVector> images;
  report.matrix = ZMatrix(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    CTVector image = transport_monomial(columns[j]);
    images[columns[j]] = image;
    for (const auto& [key, c] : image.terms()) {
      if (!c.is_integer()) throw std::logic_error("non-integer transport coefficient");
      report.matrix.at(row_index.at(*key), j) = c.num();
    }
  }

  if (report.square) {
    PolyMatrix pm(report.matrix.rows, report.matrix.cols);
    for (std::size_t i = 0; i < report.matrix.rows; ++i)
      for (std::size_t j = 0; j < report.matrix.cols; ++j)
        pm.at(i, j) = LambdaPoly(report.matrix.at(i, j));
    report.invertible = !bareiss_det(pm).is_zero();
  }

  // the transport commutes with every lowering operator at lowest weight 1
  const Rational one = 1;
  report.intertwines = true;
  for (const auto& column : columns) {
    for (int k = 1; k <= n && report.intertwines; ++k) {
      for (const auto& t : enumerate_trees(k, max_size)) {
        LieElement op = LieElement::basis(BasisElement::elimination(t));
        CTVector rhs = act_on_m(op, images.at(column));
        VermaVector lowered =
            apply_basis_op(BasisElement::elimination(t), VermaVector::monomial(column));
        CTVector lhs;
        for (const auto& [f, c] : lowered.terms()) {
          CTVector part = transport_monomial(f);
          part *= c.eval(one);
          lhs += part;
        }
        if (lhs != rhs) {
          report.intertwines = false;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace ie
