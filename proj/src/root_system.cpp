#include "adorb/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "adorb/errors.hpp"

namespace adorb {

namespace {

// Simple reflection acting on integer simple-root coordinates.
RootCoords reflect_simple_int(const std::vector<std::vector<int>>& cartan, int i,
                              const RootCoords& v) {
  int pairing = 0;
  for (std::size_t j = 0; j < v.size(); ++j) pairing += cartan[i][j] * v[j];
  RootCoords out = v;
  out[i] -= pairing;
  return out;
}

int height(const RootCoords& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem RootSystem::build(const CartanType& t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.symmetrizers_ = symmetrizers(t);
  rs.note_ = isomorphism_note(t);

  rs.form_.assign(rs.rank_, std::vector<int>(rs.rank_, 0));
  for (int i = 0; i < rs.rank_; ++i) {
    for (int j = 0; j < rs.rank_; ++j) {
      rs.form_[i][j] = rs.symmetrizers_[i] * rs.cartan_[i][j];
    }
  }

  // Every root is Weyl-conjugate to a simple root, so the reflection closure
  // of the simple roots is the full root set.
  std::set<RootCoords> roots;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < rs.rank_; ++i) {
    RootCoords alpha(rs.rank_, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rs.rank_; ++i) {
        RootCoords image = reflect_simple_int(rs.cartan_, i, beta);
        if (roots.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }

  for (const auto& beta : roots) {
    if (height(beta) > 0) rs.positive_roots_.push_back(beta);
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const RootCoords& a, const RootCoords& b) {
              const int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a < b;
            });

  if (rs.positive_roots_.size() != positive_root_count(t)) {
    throw std::logic_error("positive root count mismatch for " + t.name());
  }
  rs.weyl_order_ = weyl_order(t);
  return rs;
}

RootSystem build_root_system(const CartanType& t) { return RootSystem::build(t); }

Rational RootSystem::pairing(const CartanVector& v, const CartanVector& w) const {
  if (static_cast<int>(v.size()) != rank_ || static_cast<int>(w.size()) != rank_) {
    throw InvalidInputError("pairing: vector length does not match rank " +
                            std::to_string(rank_));
  }
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank_; ++j) {
      if (form_[i][j] != 0) row += Rational(form_[i][j]) * w[j];
    }
    sum += v[i] * row;
  }
  return sum;
}

Rational RootSystem::root_pairing(const RootCoords& beta, const CartanVector& v) const {
  if (static_cast<int>(beta.size()) != rank_ || static_cast<int>(v.size()) != rank_) {
    throw InvalidInputError("root_pairing: length does not match rank " +
                            std::to_string(rank_));
  }
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) {
    if (beta[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank_; ++j) {
      if (form_[i][j] != 0) row += Rational(form_[i][j]) * v[j];
    }
    sum += Rational(beta[i]) * row;
  }
  return sum;
}

Rational RootSystem::coroot_pairing(int i, const CartanVector& v) const {
  if (i < 0 || i >= rank_) throw InvalidInputError("simple-root index out of range");
  if (static_cast<int>(v.size()) != rank_) {
    throw InvalidInputError("coroot_pairing: vector length does not match rank");
  }
  Rational sum = 0;
  for (int j = 0; j < rank_; ++j) {
    if (cartan_[i][j] != 0) sum += Rational(cartan_[i][j]) * v[j];
  }
  return sum;
}

CartanVector RootSystem::reflect_simple(int i, const CartanVector& v) const {
  const Rational c = coroot_pairing(i, v);
  CartanVector out = v;
  out[i] -= c;
  return out;
}

bool RootSystem::is_root(const RootCoords& beta) const {
  if (static_cast<int>(beta.size()) != rank_) return false;
  RootCoords positive = beta;
  if (height(beta) < 0) {
    for (int& c : positive) c = -c;
  }
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), positive,
                            [](const RootCoords& a, const RootCoords& b) {
                              const int ha = height(a), hb = height(b);
                              return ha != hb ? ha < hb : a < b;
                            });
}

CartanVector RootSystem::reflect_root(const RootCoords& beta, const CartanVector& v) const {
  if (!is_root(beta)) {
    throw InvalidInputError("reflect_root: not a root of " + type_.name());
  }
  CartanVector beta_rat(beta.begin(), beta.end());
  const Rational norm = pairing(beta_rat, beta_rat);
  const Rational coeff = 2 * pairing(v, beta_rat) / norm;
  CartanVector out = v;
  for (int i = 0; i < rank_; ++i) out[i] -= coeff * beta[i];
  return out;
}

std::optional<RootCoords> RootSystem::vanishing_root(const CartanVector& h) const {
  if (static_cast<int>(h.size()) != rank_) {
    throw InvalidInputError("vanishing_root: vector length does not match rank");
  }
  for (const auto& beta : positive_roots_) {
    if (root_pairing(beta, h) == 0) return beta;
  }
  return std::nullopt;
}

CartanVector RootSystem::from_fundamental_weights(const CartanVector& c) const {
  if (static_cast<int>(c.size()) != rank_) {
    throw InvalidInputError("basis conversion: vector length does not match rank");
  }
  // Solve A x = c by exact Gaussian elimination; A is the Cartan matrix.
  const int n = rank_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n] = c[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("Cartan matrix is singular");
    std::swap(m[col], m[pivot]);
    const Rational inv = m[col][col];
    for (int j = col; j <= n; ++j) m[col][j] /= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (int j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  CartanVector x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

CartanVector RootSystem::to_fundamental_weights(const CartanVector& x) const {
  if (static_cast<int>(x.size()) != rank_) {
    throw InvalidInputError("basis conversion: vector length does not match rank");
  }
  CartanVector c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = coroot_pairing(i, x);
  return c;
}

}  // namespace adorb
