#include "gelement/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gelement/error.hpp"

namespace gelement {

namespace {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

HVector append_zero(HVector h) {
  h.entries.push_back(0);
  return h;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Subset> faces) : vertex_count_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxElements)
    throw Error(ErrorKind::too_large, "complexes are limited to " + std::to_string(kMaxElements) + " vertices");
  if (faces.empty()) faces.push_back(Subset{});
  for (Subset f : faces)
    if (!f.is_subset_of(Subset::range(vertex_count)))
      throw Error(ErrorKind::dimension_mismatch, "face uses a vertex outside the vertex set");

  std::sort(faces.begin(), faces.end(), [](Subset a, Subset b) { return a.size() > b.size(); });
  for (Subset f : faces) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](Subset g) { return f.is_subset_of(g); });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), lex_less);
  for (Subset f : facets_) face_size_ = std::max(face_size_, f.size());

  std::vector<bool> seen(std::size_t{1} << vertex_count_, false);
  faces_by_size_.assign(static_cast<std::size_t>(face_size_) + 1, {});
  for (Subset f : facets_) {
    for_each_subset(f, [&](Subset g) {
      if (seen[g.bits()]) return;
      seen[g.bits()] = true;
      faces_by_size_[g.size()].push_back(g);
    });
  }
  for (auto& layer : faces_by_size_)
    std::sort(layer.begin(), layer.end(), [](Subset a, Subset b) { return a.bits() < b.bits(); });
}

bool SimplicialComplex::contains(Subset face) const {
  if (face.size() > face_size_) return false;
  const auto& layer = faces_by_size_[face.size()];
  return std::binary_search(layer.begin(), layer.end(), face, [](Subset a, Subset b) { return a.bits() < b.bits(); });
}

std::vector<Subset> SimplicialComplex::faces_of_size(int k) const {
  if (k < 0 || k > face_size_) return {};
  return faces_by_size_[k];
}

int HVector::top_degree() const {
  for (std::size_t i = entries.size(); i-- > 0;)
    if (entries[i] != 0) return static_cast<int>(i);
  return 0;
}

LabeledComplex independence_complex(const Matroid& m) {
  const Subset vertices = m.ground_set() - m.loops();
  std::vector<int> labels = vertices.elements();
  std::vector<int> index(static_cast<std::size_t>(m.size()), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<Subset> facets;
  for (Subset b : m.bases()) {
    Subset f;
    for (int e : b.elements()) f = f.with(index[e]);
    facets.push_back(f);
  }
  return {SimplicialComplex(static_cast<int>(labels.size()), std::move(facets)), std::move(labels)};
}

SimplicialComplex broken_circuit_complex(const Matroid& m, const ElementOrder& order) {
  if (!m.loops().empty()) throw Error(ErrorKind::has_loops, "broken-circuit complex of a matroid with loops is void");
  if (order.size() != m.size()) throw Error(ErrorKind::dimension_mismatch, "order size differs from ground set size");
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) broken.push_back(c.without(order.least(c)));

  std::vector<Subset> faces;
  const std::uint32_t full = std::uint32_t{1} << m.size();
  for (std::uint32_t bits = 0; bits < full; ++bits) {
    const Subset s(bits);
    const bool clean = std::none_of(broken.begin(), broken.end(), [&](Subset b) { return b.is_subset_of(s); });
    if (clean) faces.push_back(s);
  }
  return SimplicialComplex(m.size(), std::move(faces));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
  std::vector<std::int64_t> f;
  for (const auto& layer : c.faces_by_size()) f.push_back(static_cast<std::int64_t>(layer.size()));
  return f;
}

HVector h_vector(const SimplicialComplex& c) {
  const auto f = f_vector(c);
  const int s = c.face_size();
  HVector h;
  h.entries.assign(static_cast<std::size_t>(s) + 1, 0);
  for (int i = 0; i <= s; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k <= i; ++k) {
      const std::int64_t term = f[k] * binomial(s - k, i - k);
      acc += ((i + k) % 2 == 0) ? term : -term;
    }
    h.entries[i] = acc;
  }
  // h(1+t) = f(t) with h(t) = sum h_i t^(s-i) and f(t) = sum f_k t^(s-k):
  // the coefficient of t^(s-k) on the left is sum_i h_i C(s-i, s-k).
  for (int k = 0; k <= s; ++k) {
    std::int64_t coeff = 0;
    for (int i = 0; i <= s; ++i) coeff += h.entries[i] * binomial(s - i, s - k);
    if (coeff != f[k]) throw std::logic_error("h_vector: h(1+t) != f(t)");
  }
  return h;
}

namespace {

HVector recurse(const Matroid& m, ComplexKind kind, const ElementOrder& order) {
  if (m.size() == 0) return HVector{{1}};
  const int e = kind == ComplexKind::broken_circuit ? order.greatest(m.ground_set()) : m.size() - 1;
  const Subset single = Subset::single(e);

  if (m.loops().contains(e)) {
    if (kind == ComplexKind::broken_circuit) return HVector{std::vector<std::int64_t>(m.rank() + 1, 0)};
    auto del = delete_elements(m, single);
    return recurse(del.matroid, kind, order.induced(del.labels));
  }
  auto del = delete_elements(m, single);
  HVector deleted = recurse(del.matroid, kind, order.induced(del.labels));
  if (m.coloops().contains(e)) return append_zero(std::move(deleted));

  auto con = contract(m, single);
  const HVector contracted = recurse(con.matroid, kind, order.induced(con.labels));
  HVector h;
  h.entries.assign(static_cast<std::size_t>(m.rank()) + 1, 0);
  for (std::size_t i = 0; i < h.entries.size(); ++i) h.entries[i] = deleted.at(i) + (i > 0 ? contracted.at(i - 1) : 0);
  return h;
}

}  // namespace

HVector h_recursive(const Matroid& m, ComplexKind kind, const ElementOrder& order) {
  if (order.size() != m.size()) throw Error(ErrorKind::dimension_mismatch, "order size differs from ground set size");
  return recurse(m, kind, order);
}

HVector h_recursive(const Matroid& m, ComplexKind kind) { return h_recursive(m, kind, ElementOrder::natural(m.size())); }

std::vector<std::int64_t> g_vector(const HVector& h, int r) {
  std::vector<std::int64_t> g;
  g.push_back(h.at(0));
  for (int i = 1; i <= r / 2; ++i) g.push_back(h.at(i) - h.at(i - 1));
  return g;
}

std::int64_t sum(const HVector& h) { return std::accumulate(h.entries.begin(), h.entries.end(), std::int64_t{0}); }

}  // namespace gelement
