#include "bruhat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

QVector unit(std::size_t dim, std::size_t k, const Rational& c = 1) {
  QVector v(dim);
  v[k] = c;
  return v;
}

// Bourbaki realizations. Vectors e_1.. are 0-based below.
std::vector<QVector> bourbaki_simple_roots(const RootSystemId& id, std::size_t& dim) {
  const int n = id.rank;
  std::vector<QVector> roots;
  auto e = [&](std::size_t k) { return unit(dim, k); };
  switch (id.family) {
    case 'A':
      dim = n + 1;
      for (int i = 0; i < n; ++i) roots.push_back(e(i) - e(i + 1));
      break;
    case 'B':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(n - 1));
      break;
    case 'C':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(unit(dim, n - 1, 2));
      break;
    case 'D':
      dim = n;
      for (int i = 0; i + 1 < n; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(n - 2) + e(n - 1));
      break;
    case 'E': {
      // E6 and E7 are spanned by the first six / seven simple roots of E8.
      dim = 8;
      Rational h(1, 2);
      QVector a1(8);
      a1[0] = h;
      a1[7] = h;
      for (int k = 1; k <= 6; ++k) a1[k] = -h;
      roots.push_back(a1);
      roots.push_back(e(0) + e(1));
      for (int k = 1; k <= 6; ++k) roots.push_back(e(k) - e(k - 1));
      roots.resize(n);
      break;
    }
    case 'F': {
      dim = 4;
      roots.push_back(e(1) - e(2));
      roots.push_back(e(2) - e(3));
      roots.push_back(e(3));
      Rational h(1, 2);
      roots.push_back(QVector{h, -h, -h, -h});
      break;
    }
    case 'G':
      dim = 3;
      roots.push_back(e(0) - e(1));
      roots.push_back(QVector{-2, 1, 1});
      break;
    default:
      throw InvalidInput("unknown family");
  }
  return roots;
}

struct Component {
  std::vector<int> nodes;  // 0-based
};

std::vector<Component> components(const std::vector<std::vector<long>>& cartan,
                                  const std::vector<int>& nodes) {
  std::set<int> remaining(nodes.begin(), nodes.end());
  std::vector<Component> out;
  while (!remaining.empty()) {
    Component c;
    std::vector<int> stack{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.nodes.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (cartan[v][*it] != 0) {
          stack.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    out.push_back(std::move(c));
  }
  return out;
}

Integer component_order(const std::vector<std::vector<long>>& cartan, const std::vector<int>& nodes) {
  const unsigned long k = nodes.size();
  std::map<int, int> degree;
  long max_bond = 1;
  std::pair<int, int> multi_bond{-1, -1};
  for (int a : nodes) {
    for (int b : nodes) {
      if (a == b || cartan[a][b] == 0) continue;
      ++degree[a];
      long product = cartan[a][b] * cartan[b][a];
      if (product > max_bond) {
        max_bond = product;
        multi_bond = {a, b};
      }
    }
  }
  if (max_bond == 3) return 12;
  if (max_bond == 2) {
    if (k == 4 && degree[multi_bond.first] == 2 && degree[multi_bond.second] == 2) return 1152;
    Integer two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
    return two_k * factorial(k);
  }
  int branch = -1;
  for (int a : nodes) {
    if (degree[a] == 3) branch = a;
  }
  if (branch < 0) return factorial(k + 1);

  std::vector<int> arms;
  for (int start : nodes) {
    if (start == branch || cartan[branch][start] == 0) continue;
    int len = 0, prev = branch, cur = start;
    while (cur >= 0) {
      ++len;
      int next = -1;
      for (int b : nodes) {
        if (b != cur && b != prev && cartan[cur][b] != 0) next = b;
      }
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) {
    Integer two_k1;
    mpz_ui_pow_ui(two_k1.get_mpz_t(), 2, k - 1);
    return two_k1 * factorial(k);
  }
  if (arms == std::vector<int>{1, 2, 2}) return 51840;
  if (arms == std::vector<int>{1, 2, 3}) return 2903040;
  if (arms == std::vector<int>{1, 2, 4}) return Integer("696729600");
  throw InternalError("unrecognized Dynkin component");
}

void check_invariants(const RootSystemData& d) {
  const int n = d.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (dot(d.fundamental_coweights[i], d.simple_roots[j]) != (i == j ? 1 : 0) ||
          dot(d.fundamental_weights[i], d.simple_coroots[j]) != (i == j ? 1 : 0)) {
        throw InternalError("fundamental (co)weights are not dual to the simple (co)roots");
      }
    }
  }
  for (long m : d.marks) {
    if (m <= 0) throw InternalError("non-positive mark");
  }
  if (weyl_order(d, NodeSet::full(n)) != d.wf_order) {
    throw InternalError("|W_f| disagrees with the classification");
  }
  // Each simple reflection permutes the positive roots other than alpha_i.
  std::set<QVector> positives(d.positive_roots.begin(), d.positive_roots.end());
  for (int i = 1; i <= n; ++i) {
    for (const auto& beta : d.positive_roots) {
      if (beta == d.simple_roots[i - 1]) continue;
      if (!positives.count(reflect(d, i, beta))) {
        throw InternalError("simple reflection does not permute the positive roots");
      }
    }
  }
}

}  // namespace

std::string RootSystemId::to_string() const { return std::string(1, family) + std::to_string(rank); }

void validate(const RootSystemId& id) {
  const int n = id.rank;
  bool ok = false;
  switch (id.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default:
      throw InvalidInput(std::string("unknown root system family '") + id.family + "'");
  }
  // Bitmask node sets and int64 alcove keys cap the supported rank.
  if (!ok || n > 30) {
    throw InvalidInput("invalid rank " + std::to_string(n) + " for type " + id.family);
  }
}

Integer RootSystemData::factorial_times_marks() const {
  Integer p = factorial(n);
  for (long m : marks) p *= m;
  return p;
}

RootSystemData build_root_system(const RootSystemId& id) {
  validate(id);
  RootSystemData d;
  d.id = id;
  d.n = id.rank;
  const int n = d.n;
  d.simple_roots = bourbaki_simple_roots(id, d.ambient_dim);
  for (const auto& a : d.simple_roots) d.simple_coroots.push_back(Rational(2) / dot(a, a) * a);

  d.cartan.assign(n, std::vector<long>(n));
  QMatrix cartan_q(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational c = dot(d.simple_coroots[i], d.simple_roots[j]);
      if (!is_integer(c)) throw InternalError("non-integral Cartan entry");
      d.cartan[i][j] = c.get_num().get_si();
      cartan_q(i, j) = c;
    }
  }

  // Positive roots by closing the simple roots under simple reflections, in simple-root
  // coordinates: s_i(beta) = beta - (beta, alpha_i^vee) alpha_i.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long> b(n, 0);
    b[i] = 1;
    seen.insert(b);
    frontier.push_back(b);
  }
  while (!frontier.empty()) {
    std::vector<long> b = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      long pairing = 0;
      for (int k = 0; k < n; ++k) pairing += b[k] * d.cartan[i][k];
      std::vector<long> r = b;
      r[i] -= pairing;
      if (std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; }) && !seen.count(r)) {
        seen.insert(r);
        frontier.push_back(r);
      }
    }
  }
  // Order by height, then lexicographically, for reproducible output.
  std::vector<std::vector<long>> coords(seen.begin(), seen.end());
  std::stable_sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    return ha < hb;
  });
  for (const auto& b : coords) {
    QVector v(d.ambient_dim);
    for (int k = 0; k < n; ++k) v += Rational(b[k]) * d.simple_roots[k];
    d.positive_roots.push_back(v);
  }
  d.positive_root_coords = coords;

  d.marks = coords.back();
  d.highest_root = d.positive_roots.back();
  d.highest_coroot = Rational(2) / dot(d.highest_root, d.highest_root) * d.highest_root;
  for (int j = 0; j < n; ++j) {
    Rational p = dot(d.highest_coroot, d.simple_roots[j]);
    d.highest_coroot_pairing.push_back(p.get_num().get_si());
  }
  for (int i = 0; i < n; ++i) {
    if (d.marks[i] == 1) d.minuscule.push_back(i + 1);
  }

  d.coweight_to_coroot = inverse(cartan_q);
  QMatrix weight_to_root = inverse(cartan_q.transpose());
  for (int i = 0; i < n; ++i) {
    QVector cw(d.ambient_dim), w(d.ambient_dim);
    for (int j = 0; j < n; ++j) {
      cw += d.coweight_to_coroot(i, j) * d.simple_coroots[j];
      w += weight_to_root(i, j) * d.simple_roots[j];
    }
    d.fundamental_coweights.push_back(cw);
    d.fundamental_weights.push_back(w);
  }

  Rational det_c = determinant(cartan_q);
  d.index_of_connection = Rational(abs(det_c)).get_num().get_si();
  d.wf_order = d.factorial_times_marks() * d.index_of_connection;
  d.det_coweight_lattice = RadScalar::sqrt_of(gram_det(d.fundamental_coweights));
  d.alcove_volume = Rational(1, d.factorial_times_marks()) * d.det_coweight_lattice;

  check_invariants(d);
  return d;
}

Integer weyl_order(const RootSystemData& data, NodeSet J) {
  std::vector<int> nodes;
  for (int i : J.elements()) {
    if (i < 1 || i > data.n) throw InvalidInput("node " + std::to_string(i) + " outside I_n");
    nodes.push_back(i - 1);
  }
  Integer order = 1;
  for (const auto& c : components(data.cartan, nodes)) order *= component_order(data.cartan, c.nodes);
  return order;
}

std::vector<Rational> coweight_coords(const RootSystemData& data, const QVector& v) {
  std::vector<Rational> out;
  out.reserve(data.n);
  for (const auto& a : data.simple_roots) out.push_back(dot(v, a));
  return out;
}

std::vector<Rational> coroot_coords(const RootSystemData& data, const QVector& v) {
  std::vector<Rational> m = coweight_coords(data, v);
  std::vector<Rational> c(data.n, Rational(0));
  for (int i = 0; i < data.n; ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < data.n; ++j) c[j] += m[i] * data.coweight_to_coroot(i, j);
  }
  return c;
}

QVector coweight_vector(const RootSystemData& data, const std::vector<Rational>& coords) {
  if (coords.size() != static_cast<std::size_t>(data.n)) {
    throw InvalidInput("expected " + std::to_string(data.n) + " coweight coordinates");
  }
  QVector v(data.ambient_dim);
  for (int i = 0; i < data.n; ++i) {
    if (coords[i] != 0) v += coords[i] * data.fundamental_coweights[i];
  }
  return v;
}

QVector coweight_vector(const RootSystemData& data, const std::vector<long>& coords) {
  std::vector<Rational> q(coords.begin(), coords.end());
  return coweight_vector(data, q);
}

QVector reflect(const RootSystemData& data, int i, const QVector& v) {
  Rational p = dot(v, data.simple_roots[i - 1]);
  if (p == 0) return v;
  return v - p * data.simple_coroots[i - 1];
}

QMatrix reflection_matrix(const RootSystemData& data, int i) {
  const auto m = data.ambient_dim;
  QMatrix r = QMatrix::identity(m);
  const QVector& a = data.simple_roots[i - 1];
  const QVector& c = data.simple_coroots[i - 1];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t col = 0; col < m; ++col) r(row, col) -= c[row] * a[col];
  return r;
}

std::pair<QVector, std::vector<int>> dominant_representative(const RootSystemData& data,
                                                             const QVector& v) {
  QVector cur = v;
  std::vector<int> word;
  for (;;) {
    int violated = 0;
    for (int i = 1; i <= data.n; ++i) {
      if (dot(cur, data.simple_roots[i - 1]) < 0) {
        violated = i;
        break;
      }
    }
    if (violated == 0) break;
    cur = reflect(data, violated, cur);
    word.push_back(violated);
  }
  return {cur, word};
}

std::vector<QMatrix> enumerate_weyl_group(const RootSystemData& data, NodeSet J, std::size_t cap) {
  Integer expected = weyl_order(data, J);
  if (expected > cap) {
    throw BudgetExceeded("refusing to enumerate W_J of " + data.id.to_string() + ": order " +
                         expected.get_str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<QMatrix> gens;
  for (int i : J.elements()) gens.push_back(reflection_matrix(data, i));
  std::set<QMatrix> seen{QMatrix::identity(data.ambient_dim)};
  std::vector<QMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        QMatrix h = s * g;
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bruhat
