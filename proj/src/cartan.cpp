#include "adorb/cartan.hpp"

#include <algorithm>
#include <cctype>

#include "adorb/errors.hpp"

namespace adorb {

CartanType CartanType::parse(const std::string& name) {
  if (name.size() < 2) {
    throw InvalidInputError("not a Cartan type: '" + name + "'");
  }
  const char series_char = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (series_char < 'A' || series_char > 'G') {
    throw InvalidInputError("unknown series in Cartan type: '" + name + "'");
  }
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
      throw InvalidInputError("bad rank in Cartan type: '" + name + "'");
    }
  }
  if (name.size() > 4) {
    throw InvalidInputError("rank out of range in Cartan type: '" + name + "'");
  }
  CartanType t{static_cast<Series>(series_char), std::stoi(name.substr(1))};
  t.validate();
  return t;
}

void CartanType::validate() const {
  const auto reject = [&](const std::string& why) {
    throw InvalidInputError("invalid rank for series " + name() + ": " + why);
  };
  if (rank < 1) reject("rank must be positive");
  switch (series) {
    case Series::A:
      break;
    case Series::B:
      if (rank < 2) reject("B requires rank >= 2");
      break;
    case Series::C:
      if (rank < 2) reject("C requires rank >= 2 (C2 is accepted and flagged as B2)");
      break;
    case Series::D:
      if (rank < 4) reject("D requires rank >= 4");
      break;
    case Series::E:
      if (rank < 6 || rank > 8) reject("E requires rank in {6,7,8}");
      break;
    case Series::F:
      if (rank != 4) reject("F requires rank 4");
      break;
    case Series::G:
      if (rank != 2) reject("G requires rank 2");
      break;
  }
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;

  const auto chain_edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };

  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Series::B:
      // Bourbaki numbering, alpha_n short: a[n-1][n-2] = -2.
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Series::C:
      // alpha_n long: a[n-2][n-1] = -2.
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case Series::E:
      // Chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4 (1-based).
      chain_edge(0, 2);
      chain_edge(2, 3);
      chain_edge(1, 3);
      for (int i = 3; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Series::F:
      chain_edge(0, 1);
      chain_edge(1, 2);
      chain_edge(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Series::G:
      a[0][1] = -3;  // alpha_1 short, alpha_2 long
      a[1][0] = -1;
      break;
  }
  return a;
}

std::vector<int> symmetrizers(const CartanType& t) {
  t.validate();
  const int n = t.rank;
  std::vector<int> d(n, 1);
  switch (t.series) {
    case Series::B:
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      break;
    case Series::C:
      d[n - 1] = 2;
      break;
    case Series::F:
      d[0] = d[1] = 2;
      break;
    case Series::G:
      d[1] = 3;
      break;
    default:
      break;  // simply laced
  }
  return d;
}

BigInt weyl_order(const CartanType& t) {
  t.validate();
  const unsigned n = static_cast<unsigned>(t.rank);
  switch (t.series) {
    case Series::A:
      return factorial(n + 1);
    case Series::B:
    case Series::C:
      return (BigInt(1) << n) * factorial(n);
    case Series::D:
      return (BigInt(1) << (n - 1)) * factorial(n);
    case Series::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Series::F:
      return 1152;
    case Series::G:
      return 12;
  }
  throw std::logic_error("unreachable series");
}

std::size_t positive_root_count(const CartanType& t) {
  t.validate();
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.series) {
    case Series::A:
      return n * (n + 1) / 2;
    case Series::B:
    case Series::C:
      return n * n;
    case Series::D:
      return n * (n - 1);
    case Series::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
    case Series::F:
      return 24;
    case Series::G:
      return 6;
  }
  throw std::logic_error("unreachable series");
}

namespace {

// Order of one connected finite-type diagram, identified from its shape.
BigInt connected_component_order(const std::vector<std::vector<int>>& a,
                                 const std::vector<int>& nodes) {
  const int r = static_cast<int>(nodes.size());
  if (r == 1) return 2;

  int max_bond = 1;
  std::vector<std::pair<int, int>> edges;  // local indices
  std::vector<int> degree(r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const int w = a[nodes[i]][nodes[j]] * a[nodes[j]][nodes[i]];
      if (w > 0) {
        edges.emplace_back(i, j);
        degree[i]++;
        degree[j]++;
        max_bond = std::max(max_bond, w);
      }
    }
  }

  if (max_bond == 3) {
    if (r != 2) throw std::logic_error("triple bond outside G2");
    return 12;
  }
  if (max_bond == 2) {
    if (r == 2) return 8;  // B2 = C2
    // B/C have the double bond at an end of the chain; F4 has it interior.
    for (const auto& [i, j] : edges) {
      if (a[nodes[i]][nodes[j]] * a[nodes[j]][nodes[i]] == 2) {
        if (degree[i] == 1 || degree[j] == 1) {
          return (BigInt(1) << r) * factorial(static_cast<unsigned>(r));
        }
        if (r != 4) throw std::logic_error("interior double bond outside F4");
        return 1152;
      }
    }
    throw std::logic_error("double bond not found");
  }

  // Simply laced: A (chain), D (branch with two short arms), E6/E7/E8.
  int branch = -1;
  for (int i = 0; i < r; ++i) {
    if (degree[i] >= 3) {
      if (branch != -1 || degree[i] > 3) throw std::logic_error("not a finite-type diagram");
      branch = i;
    }
  }
  if (branch == -1) {
    return factorial(static_cast<unsigned>(r) + 1);  // A_r
  }

  // Arm lengths from the branch node.
  std::vector<std::vector<int>> adj(r);
  for (const auto& [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[cur]) {
        if (nb != prev) next = nb;
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw std::logic_error("branch arity mismatch");
  if (arms[0] == 1 && arms[1] == 1) {
    return (BigInt(1) << (r - 1)) * factorial(static_cast<unsigned>(r));  // D_r
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return 51840;    // E6
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return 2903040;  // E7
  if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return 696729600;  // E8
  throw std::logic_error("not a finite-type diagram");
}

}  // namespace

BigInt weyl_order_of_cartan(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<bool> seen(n, false);
  BigInt order = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> component;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (int v = 0; v < n; ++v) {
        if (!seen[v] && u != v && cartan[u][v] != 0) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    order *= connected_component_order(cartan, component);
  }
  return order;
}

std::optional<std::string> isomorphism_note(const CartanType& t) {
  if (t.series == Series::C && t.rank == 2) {
    return "C2 is isomorphic to B2; computations use the C-series Cartan data";
  }
  return std::nullopt;
}

}  // namespace adorb
