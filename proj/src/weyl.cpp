#include "bruhat/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "bruhat/errors.hpp"

namespace bruhat {

namespace {

constexpr int kMaxKeyRank = 8;

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw BudgetExceeded("alcove coordinates overflow 64 bits");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

QVector affine_fold(const RootSystemData& data, int i, const QVector& p) {
  if (i > 0) return reflect(data, i, p);
  Rational t = dot(p, data.highest_root) + 1;
  return p - t * data.highest_coroot;
}

void check_word(const RootSystemData& data, const std::vector<int>& word) {
  for (int i : word) {
    if (i < 0 || i > data.n) throw InvalidInput("word letter " + std::to_string(i) + " out of range");
  }
}

void validate_reduced(const RootSystemData& data, const AffineElement& w,
                      const std::vector<int>& word) {
  check_word(data, word);
  if (!(element_from_word(data, word) == w)) {
    throw InvalidInput("word does not represent the given element");
  }
  if (length(data, w) != static_cast<long>(word.size())) throw InvalidInput("non-reduced word");
}

}  // namespace

AffineElement AffineElement::identity(std::size_t dim) {
  return {QMatrix::identity(dim), QVector(dim)};
}

QVector AffineElement::apply(const QVector& x) const { return linear * x + translation; }

AffineElement AffineElement::inverse() const {
  // Linear parts are orthogonal.
  QMatrix inv = linear.transpose();
  return {inv, -(inv * translation)};
}

bool operator<(const AffineElement& a, const AffineElement& b) {
  if (a.linear < b.linear) return true;
  if (b.linear < a.linear) return false;
  return a.translation < b.translation;
}

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineElement simple_reflection(const RootSystemData& data, int i) {
  if (i < 0 || i > data.n) throw InvalidInput("reflection index out of range");
  const std::size_t m = data.ambient_dim;
  if (i > 0) return {reflection_matrix(data, i), QVector(m)};
  QMatrix l = QMatrix::identity(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) l(r, c) -= data.highest_coroot[r] * data.highest_root[c];
  return {l, -data.highest_coroot};
}

AffineElement element_from_word(const RootSystemData& data, const std::vector<int>& word) {
  check_word(data, word);
  AffineElement w = AffineElement::identity(data.ambient_dim);
  for (int i : word) w = w * simple_reflection(data, i);
  return w;
}

bool in_affine_weyl(const RootSystemData& data, const AffineElement& w) {
  auto c = coroot_coords(data, w.translation);
  return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
}

QVector alcove_barycenter(const RootSystemData& data) {
  QVector x(data.ambient_dim);
  for (int i = 0; i < data.n; ++i) {
    x -= Rational(1, data.marks[i]) * data.fundamental_coweights[i];
  }
  return Rational(1, data.n + 1) * x;
}

long length(const RootSystemData& data, const AffineElement& w) {
  const QVector x0 = alcove_barycenter(data);
  const QVector p = w.apply(x0);
  long total = 0;
  for (const auto& alpha : data.positive_roots) {
    Integer a = floor_of(dot(x0, alpha));
    Integer b = floor_of(dot(p, alpha));
    Integer d = abs(b - a);
    total += d.get_si();
  }
  return total;
}

ElementWithWord element_from_point(const RootSystemData& data, const QVector& p) {
  for (const auto& alpha : data.positive_roots) {
    if (is_integer(dot(p, alpha))) throw InvalidInput("point on reflection hyperplane");
  }
  QVector cur = p;
  std::vector<int> word;
  for (;;) {
    int violated = -1;
    if (dot(cur, data.highest_root) < -1) violated = 0;
    for (int i = 1; i <= data.n && violated < 0; ++i) {
      if (dot(cur, data.simple_roots[i - 1]) > 0) violated = i;
    }
    if (violated < 0) break;
    cur = affine_fold(data, violated, cur);
    word.push_back(violated);
  }
  AffineElement w = element_from_word(data, word);
  if (length(data, w) != static_cast<long>(word.size())) {
    throw InternalError("folding produced a non-reduced word");
  }
  return {std::move(w), std::move(word)};
}

ElementWithWord theta(const RootSystemData& data, const std::vector<long>& lambda) {
  if (lambda.size() != static_cast<std::size_t>(data.n)) {
    throw InvalidInput("expected " + std::to_string(data.n) + " coordinates for lambda");
  }
  if (std::any_of(lambda.begin(), lambda.end(), [](long m) { return m < 0; })) {
    throw InvalidInput("lambda must be dominant (non-negative coordinates)");
  }
  QVector top = dominant_representative(data, alcove_barycenter(data)).first;
  return element_from_point(data, coweight_vector(data, lambda) + top);
}

Descents descents(const RootSystemData& data, const AffineElement& w) {
  Descents d;
  const long l = length(data, w);
  for (int i = 0; i <= data.n; ++i) {
    AffineElement s = simple_reflection(data, i);
    if (length(data, s * w) < l) d.left = d.left.with(i);
    if (length(data, w * s) < l) d.right = d.right.with(i);
  }
  return d;
}

int sigma_reflection(const RootSystemData& data, const QVector& lambda) {
  auto integral = [&](const QVector& v) {
    auto c = coroot_coords(data, v);
    return std::all_of(c.begin(), c.end(), [](const Rational& q) { return is_integer(q); });
  };
  if (integral(lambda)) return 0;
  for (int i : data.minuscule) {
    if (integral(lambda + data.fundamental_coweights[i - 1])) return i;
  }
  throw InternalError("no minuscule representative for the coset of lambda");
}

std::vector<std::vector<int>> coxeter_matrix(const RootSystemData& data) {
  const int n = data.n;
  std::vector<QVector> beta{-data.highest_root};
  beta.insert(beta.end(), data.simple_roots.begin(), data.simple_roots.end());
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      Rational ip = dot(beta[i], beta[j]);
      Rational prod = 4 * ip * ip / (dot(beta[i], beta[i]) * dot(beta[j], beta[j]));
      static const std::map<long, int> table{{0, 2}, {1, 3}, {2, 4}, {3, 6}, {4, 0}};
      auto it = table.find(prod.get_num().get_si());
      if (!is_integer(prod) || it == table.end()) throw InternalError("unexpected bond");
      m[i][j] = it->second;
    }
  }
  return m;
}

std::size_t AlcoveKeyHash::operator()(const AlcoveKey& k) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : k) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

AlcoveWalker::AlcoveWalker(const RootSystemData& data) : data_(&data), n_(data.n) {
  if (n_ > kMaxKeyRank) throw InvalidInput("alcove enumeration supports rank at most 8");
  std::int64_t l = 1;
  for (long m : data.marks) l = std::lcm(l, static_cast<std::int64_t>(m));
  denom_ = (n_ + 1) * l;
  for (int j = 0; j < n_; ++j) base_[j] = -denom_ / ((n_ + 1) * data.marks[j]);
}

AlcoveKey AlcoveWalker::reflect(int i, const AlcoveKey& key) const {
  AlcoveKey out = key;
  if (i > 0) {
    const auto& row = data_->cartan[i - 1];
    const __int128 ci = key[i - 1];
    for (int j = 0; j < n_; ++j) {
      if (row[j] != 0) out[j] = checked(key[j] - ci * row[j]);
    }
    return out;
  }
  __int128 t = denom_;
  for (int k = 0; k < n_; ++k) t += static_cast<__int128>(data_->marks[k]) * key[k];
  for (int j = 0; j < n_; ++j) {
    long h = data_->highest_coroot_pairing[j];
    if (h != 0) out[j] = checked(key[j] - t * h);
  }
  return out;
}

AlcoveKey AlcoveWalker::translate(const AlcoveKey& key, const std::vector<long>& coweight) const {
  AlcoveKey out = key;
  for (int j = 0; j < n_; ++j) out[j] = checked(key[j] + static_cast<__int128>(denom_) * coweight[j]);
  return out;
}

long AlcoveWalker::length(const AlcoveKey& key) const {
  long total = 0;
  for (const auto& coords : data_->positive_root_coords) {
    __int128 p = 0;
    for (int i = 0; i < n_; ++i) p += static_cast<__int128>(coords[i]) * key[i];
    std::int64_t f = floor_div(checked(p), denom_) + 1;
    total += f < 0 ? -f : f;
  }
  return total;
}

AlcoveKey AlcoveWalker::key_of(const AffineElement& w) const {
  QVector p = w.apply(alcove_barycenter(*data_));
  AlcoveKey key{};
  for (int j = 0; j < n_; ++j) {
    Rational c = denom_ * dot(p, data_->simple_roots[j]);
    if (!is_integer(c)) throw InternalError("element does not map alcoves to alcoves");
    key[j] = c.get_num().get_si();
  }
  return key;
}

std::size_t lower_interval_size(const RootSystemData& data, const AffineElement& w,
                                const std::vector<int>& word, std::size_t cap) {
  validate_reduced(data, w, word);
  AlcoveWalker walker(data);
  std::unordered_set<AlcoveKey, AlcoveKeyHash> seen{walker.base()};
  std::vector<AlcoveKey> members{walker.base()};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k) {
      AlcoveKey next = walker.reflect(*it, members[k]);
      if (seen.insert(next).second) {
        members.push_back(next);
        if (members.size() > cap) {
          throw BudgetExceeded("lower interval exceeds cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return members.size();
}

std::vector<AffineElement> lower_interval(const RootSystemData& data, const AffineElement& w,
                                          const std::vector<int>& word, std::size_t cap) {
  validate_reduced(data, w, word);
  AlcoveWalker walker(data);
  std::vector<AffineElement> reflections;
  for (int i = 0; i <= data.n; ++i) reflections.push_back(simple_reflection(data, i));

  std::unordered_set<AlcoveKey, AlcoveKeyHash> seen{walker.base()};
  std::vector<std::pair<AlcoveKey, AffineElement>> members;
  members.emplace_back(walker.base(), AffineElement::identity(data.ambient_dim));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k) {
      AlcoveKey next = walker.reflect(*it, members[k].first);
      if (seen.insert(next).second) {
        members.emplace_back(next, reflections[*it] * members[k].second);
        if (members.size() > cap) {
          throw BudgetExceeded("lower interval exceeds cap of " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  std::vector<AffineElement> out;
  out.reserve(members.size());
  for (auto& [key, element] : members) out.push_back(std::move(element));
  return out;
}

std::unordered_set<AlcoveKey, AlcoveKeyHash> parabolic_alcoves(const RootSystemData& data,
                                                                NodeSet generators,
                                                                std::size_t cap) {
  AlcoveWalker walker(data);
  std::unordered_set<AlcoveKey, AlcoveKeyHash> seen{walker.base()};
  std::vector<AlcoveKey> frontier{walker.base()};
  const auto gens = generators.elements();
  while (!frontier.empty()) {
    AlcoveKey key = frontier.back();
    frontier.pop_back();
    for (int i : gens) {
      AlcoveKey next = walker.reflect(i, key);
      if (seen.insert(next).second) {
        frontier.push_back(next);
        if (seen.size() > cap) throw BudgetExceeded("parabolic subgroup exceeds cap");
      }
    }
  }
  return seen;
}

}  // namespace bruhat
