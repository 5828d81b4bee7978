#include "ie/ctrep.hpp"

#include <map>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

namespace {

CTVector act_basis(const BasisElement& b, const CTVector::Key& key) {
  CTVector out;
  if (!key) return out;  // every generator annihilates the empty tree
  const RootedTree& s = *key;
  switch (b.kind()) {
    case OpKind::insertion:
      for (const auto& [g, cnt] : graft_counts(s, b.tree()))
        out.add(CTVector::Key(g), Rational(cnt));
      break;
    case OpKind::elimination:
      for (const auto& cut : cuts(s)) {
        if (cut.pruned_part == b.tree()) out.add(CTVector::Key(cut.root_part), 1);
      }
      break;
    case OpKind::grading:
      out.add(key, Rational(s.size()));
      break;
  }
  return out;
}

}  // namespace

CTVector act(const LieElement& x, const CTVector& v) {
  CTVector out;
  for (const auto& [b, xc] : x.terms()) {
    for (const auto& [key, vc] : v.terms()) {
      CTVector part = act_basis(b, key);
      part *= xc * vc;
      out += part;
    }
  }
  return out;
}

CTVector act_on_m(const LieElement& x, const CTVector& v) {
  if (v.has_unit_component())
    throw DomainError("act_on_m input must have no empty-tree component");
  CTVector out = act(x, v);
  out.drop_unit();
  return out;
}

namespace {

// Basis of the degree-n piece; degree 0 is the empty tree alone.
std::vector<CTVector::Key> degree_basis(int n, int max_size) {
  if (n == 0) return {std::nullopt};
  std::vector<CTVector::Key> keys;
  for (auto& t : enumerate_trees(n, max_size)) keys.emplace_back(std::move(t));
  return keys;
}

RationalMatrix matrix_in_bases(const LieElement& x,
                               const std::vector<CTVector::Key>& domain,
                               const std::vector<CTVector::Key>& codomain) {
  std::map<CTVector::Key, std::size_t, CTVector::KeyLess> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) index[codomain[i]] = i;
  RationalMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    CTVector basis_vec;
    basis_vec.add(domain[j], 1);
    CTVector image = act(x, basis_vec);
    for (const auto& [key, c] : image.terms()) {
      auto it = index.find(key);
      if (it == index.end()) throw DomainError("action left the expected degree");
      m.at(it->second, j) = c;
    }
  }
  return m;
}

}  // namespace

RationalMatrix operator_matrix(const LieElement& x, int n, int max_size) {
  std::optional<int> deg = x.degree();
  if (!deg) throw DomainError("operator_matrix requires a nonzero homogeneous element");
  if (n < 0 || n + *deg < 0) throw DomainError("operator_matrix: negative degree");
  if (n > max_size || n + *deg > max_size)
    throw ResourceLimitError("operator_matrix: degree exceeds guard");
  return matrix_in_bases(x, degree_basis(n, max_size), degree_basis(n + *deg, max_size));
}

OracleReport oracle_bracket_check(const BasisElement& x, const BasisElement& y,
                                  int max_n, int max_size) {
  if (max_n > max_size) throw ResourceLimitError("oracle_bracket_check: max_n exceeds guard");
  const int kx = x.degree();
  const int ky = y.degree();
  const int k = kx + ky;

  std::vector<std::vector<CTVector::Key>> bases(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n)
    bases[static_cast<std::size_t>(n)] = degree_basis(n, max_size);
  auto dim = [&](int n) -> std::size_t {
    return n < 0 ? 0 : bases[static_cast<std::size_t>(n)].size();
  };
  // matrix of a basis element from degree n, zero map through negative degrees
  auto mat = [&](const BasisElement& b, int from, int to) -> RationalMatrix {
    if (from < 0 || to < 0) return RationalMatrix(dim(to), dim(from));
    return matrix_in_bases(LieElement::basis(b), bases[static_cast<std::size_t>(from)],
                           bases[static_cast<std::size_t>(to)]);
  };

  LieElement br = bracket(x, y);

  OracleReport report;
  for (int n = 0; n <= max_n; ++n) {
    int m = n + k;
    if (m < 0 || m > max_n) continue;
    if (n + ky > max_n || n + kx > max_n) continue;

    RationalMatrix lhs =
        br.is_zero() ? RationalMatrix(dim(m), dim(n))
                     : matrix_in_bases(br, bases[static_cast<std::size_t>(n)],
                                       bases[static_cast<std::size_t>(m)]);
    RationalMatrix xy = matmul(mat(x, n + ky, m), mat(y, n, n + ky));
    RationalMatrix yx = matmul(mat(y, n + kx, m), mat(x, n, n + kx));
    for (std::size_t i = 0; i < yx.entries.size(); ++i) xy.entries[i] -= yx.entries[i];

    ++report.checked_levels;
    if (!(lhs == xy)) {
      report.ok = false;
      report.first_failure_n = n;
      return report;
    }
  }
  return report;
}

std::vector<long long> ct_character(int n, int max_size) {
  if (n < 0) throw DomainError("ct_character requires n >= 0");
  if (n > max_size) throw ResourceLimitError("ct_character: n exceeds guard");
  std::vector<long long> dims = {1};
  for (int k = 1; k <= n; ++k)
    dims.push_back(static_cast<long long>(enumerate_trees(k, max_size).size()));
  return dims;
}

}  // namespace ie
