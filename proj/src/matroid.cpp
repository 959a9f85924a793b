#include "gelement/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gelement/error.hpp"

namespace gelement {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxElements)
    throw Error(ErrorKind::too_large, "ground set size " + std::to_string(n) + " outside [0, " +
                                          std::to_string(kMaxElements) + "]");
}

std::string describe(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<Subset> relabel(const std::vector<Subset>& sets, const std::vector<int>& labels) {
  std::vector<int> new_index(kMaxElements, -1);
  for (std::size_t i = 0; i < labels.size(); ++i) new_index[labels[i]] = static_cast<int>(i);
  std::vector<Subset> out;
  out.reserve(sets.size());
  for (Subset s : sets) {
    Subset t;
    for (int e : s.elements()) t = t.with(new_index[e]);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end(), [](Subset a, Subset b) { return a.bits() < b.bits(); });
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = bases_.front().size();
  independent_.assign(std::size_t{1} << n_, false);
  for (Subset b : bases_) {
    for_each_subset(b, [&](Subset s) { independent_[s.bits()] = true; });
  }
}

std::optional<ExchangeViolation> find_exchange_violation(int n, const std::vector<Subset>& bases) {
  check_ground_size(n);
  std::vector<bool> is_basis(std::size_t{1} << n, false);
  for (Subset b : bases) is_basis[b.bits()] = true;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      if (b1 == b2) continue;
      for (int e : (b1 - b2).elements()) {
        const Subset base = b1.without(e);
        bool repaired = false;
        for (int f : (b2 - b1).elements()) {
          if (is_basis[base.with(f).bits()]) {
            repaired = true;
            break;
          }
        }
        if (!repaired) return ExchangeViolation{b1, b2, e};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  check_ground_size(n);
  if (bases.empty()) throw Error(ErrorKind::empty_family, "basis family is empty");
  for (Subset b : bases) {
    if (!b.is_subset_of(Subset::range(n)))
      throw Error(ErrorKind::not_a_matroid, "basis " + describe(b) + " leaves the ground set");
    if (b.size() != bases.front().size())
      throw Error(ErrorKind::not_a_matroid, "bases " + describe(bases.front()) + " and " + describe(b) +
                                                " have different sizes");
  }
  std::sort(bases.begin(), bases.end(), [](Subset a, Subset b) { return a.bits() < b.bits(); });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (auto v = find_exchange_violation(n, bases)) {
    throw Error(ErrorKind::not_a_matroid, "exchange fails for " + describe(v->first) + " minus " +
                                              std::to_string(v->removed) + " against " + describe(v->second));
  }
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_circuits(int n, const std::vector<Subset>& circuits) {
  check_ground_size(n);
  for (Subset c : circuits) {
    if (c.empty()) throw Error(ErrorKind::not_a_matroid, "the empty set cannot be a circuit");
    if (!c.is_subset_of(Subset::range(n)))
      throw Error(ErrorKind::not_a_matroid, "circuit " + describe(c) + " leaves the ground set");
  }
  for (Subset a : circuits) {
    for (Subset b : circuits) {
      if (a == b) continue;
      if (a.is_subset_of(b))
        throw Error(ErrorKind::not_a_matroid, "circuit " + describe(a) + " lies inside " + describe(b));
      for (int e : (a & b).elements()) {
        const Subset u = (a | b).without(e);
        const bool eliminated =
            std::any_of(circuits.begin(), circuits.end(), [&](Subset c) { return c.is_subset_of(u); });
        if (!eliminated)
          throw Error(ErrorKind::not_a_matroid, "elimination of " + std::to_string(e) + " from " + describe(a) +
                                                    " and " + describe(b) + " fails");
      }
    }
  }
  const std::uint32_t full = std::uint32_t{1} << n;
  int best = 0;
  std::vector<Subset> bases;
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const Subset s(bits);
    const bool independent = std::none_of(circuits.begin(), circuits.end(), [&](Subset c) { return c.is_subset_of(s); });
    if (!independent) continue;
    if (s.size() > best) {
      best = s.size();
      bases.clear();
    }
    if (s.size() == best) bases.push_back(s);
  }
  return from_bases(n, std::move(bases));
}

Matroid Matroid::uniform(int rank, int n) {
  check_ground_size(n);
  if (rank < 0 || rank > n) throw Error(ErrorKind::not_a_matroid, "uniform matroid needs 0 <= r <= n");
  std::vector<Subset> bases;
  const std::uint32_t full = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < full; ++bits)
    if (Subset(bits).size() == rank) bases.emplace_back(bits);
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_graph(int vertices, std::span<const std::pair<int, int>> edges) {
  const int m = static_cast<int>(edges.size());
  check_ground_size(m);
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw Error(ErrorKind::parse_error, "edge endpoint out of range");

  UnionFind whole(vertices);
  int rank = 0;
  for (auto [u, v] : edges) rank += whole.unite(u, v) ? 1 : 0;

  std::vector<Subset> bases;
  const std::uint32_t full = std::uint32_t{1} << m;
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const Subset s(bits);
    if (s.size() != rank) continue;
    UnionFind forest(vertices);
    bool acyclic = true;
    for (int e : s.elements()) {
      if (!forest.unite(edges[e].first, edges[e].second)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) bases.push_back(s);
  }
  return Matroid(m, std::move(bases));
}

int Matroid::rank_of(Subset s) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, (b & s).size());
  return best;
}

Subset Matroid::loops() const {
  Subset used;
  for (Subset b : bases_) used = used | b;
  return ground_set() - used;
}

Subset Matroid::coloops() const {
  Subset common = ground_set();
  for (Subset b : bases_) common = common & b;
  return common;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  const std::uint32_t full = std::uint32_t{1} << n_;
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    if (independent_[bits]) continue;
    const Subset s(bits);
    bool minimal = true;
    for (int e : s.elements()) {
      if (!independent_[s.without(e).bits()]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<Subset> Matroid::series_classes() const {
  const auto all = circuits();
  Subset candidates;
  for (Subset c : all)
    if (c.size() >= 2) candidates = candidates | c;
  // Two elements are related iff they have the same circuit incidence pattern.
  std::vector<Subset> classes;
  Subset assigned;
  for (int e : candidates.elements()) {
    if (assigned.contains(e)) continue;
    Subset cls = Subset::single(e);
    for (int f : candidates.elements()) {
      if (f <= e || assigned.contains(f)) continue;
      const bool same = std::all_of(all.begin(), all.end(), [&](Subset c) { return c.contains(e) == c.contains(f); });
      if (same) cls = cls.with(f);
    }
    assigned = assigned | cls;
    classes.push_back(cls);
  }
  return classes;
}

int Matroid::components() const {
  UnionFind uf(n_);
  for (Subset c : circuits()) {
    const int first = c.min();
    for (int e : c.elements()) uf.unite(first, e);
  }
  int count = 0;
  for (int e = 0; e < n_; ++e) count += uf.find(e) == e ? 1 : 0;
  return count;
}

Minor delete_elements(const Matroid& m, Subset removed) {
  const Subset kept = m.ground_set() - removed;
  const int r = m.rank_of(kept);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if ((b & kept).size() == r) bases.push_back(b & kept);
  std::vector<int> labels = kept.elements();
  auto relabeled = relabel(bases, labels);
  return {Matroid(kept.size(), std::move(relabeled)), std::move(labels)};
}

Minor contract(const Matroid& m, Subset contracted) {
  contracted = contracted & m.ground_set();
  const Subset kept = m.ground_set() - contracted;
  const int r = m.rank_of(contracted);
  std::vector<Subset> bases;
  for (Subset b : m.bases())
    if ((b & contracted).size() == r) bases.push_back(b - contracted);
  std::vector<int> labels = kept.elements();
  auto relabeled = relabel(bases, labels);
  return {Matroid(kept.size(), std::move(relabeled)), std::move(labels)};
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_ground_size(a.size() + b.size());
  std::vector<Subset> bases;
  for (Subset x : a.bases())
    for (Subset y : b.bases()) bases.emplace_back(x.bits() | (y.bits() << a.size()));
  return Matroid(a.size() + b.size(), std::move(bases));
}

Matroid subdivided_parallel_matroid(int s) {
  if (s < 1) throw Error(ErrorKind::not_a_matroid, "subdivided parallel matroid needs s >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < s; ++t) {
    edges.emplace_back(0, 2 + t);
    edges.emplace_back(2 + t, 1);
  }
  return Matroid::from_graph(2 + s, edges);
}

ElementOrder::ElementOrder(std::vector<int> sequence) : sequence_(std::move(sequence)), position_(sequence_.size()) {
  for (std::size_t k = 0; k < sequence_.size(); ++k) position_[sequence_[k]] = static_cast<int>(k);
}

ElementOrder ElementOrder::natural(int n) {
  std::vector<int> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return ElementOrder(std::move(seq));
}

ElementOrder ElementOrder::from_sequence(std::vector<int> sequence) {
  std::vector<bool> seen(sequence.size(), false);
  for (int e : sequence) {
    if (e < 0 || e >= static_cast<int>(sequence.size()) || seen[e])
      throw Error(ErrorKind::parse_error, "order is not a permutation of 0..n-1");
    seen[e] = true;
  }
  return ElementOrder(std::move(sequence));
}

int ElementOrder::least(Subset s) const {
  int best = -1;
  for (int e : s.elements())
    if (best < 0 || less(e, best)) best = e;
  return best;
}

int ElementOrder::greatest(Subset s) const {
  int best = -1;
  for (int e : s.elements())
    if (best < 0 || less(best, e)) best = e;
  return best;
}

ElementOrder ElementOrder::induced(const std::vector<int>& labels) const {
  std::vector<int> seq(labels.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](int a, int b) { return less(labels[a], labels[b]); });
  return ElementOrder(std::move(seq));
}

}  // namespace gelement
