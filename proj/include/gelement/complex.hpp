#pragma once

// Simplicial complexes stored by their facets, the f/h/g-vector transforms,
// and the two complexes attached to a matroid: the independence complex and
// the broken-circuit complex for a chosen element order.

#include <cstdint>
#include <vector>

#include "gelement/matroid.hpp"
#include "gelement/subset.hpp"

namespace gelement {

class SimplicialComplex {
 public:
  /// Generated by `faces`: keeps the inclusion-maximal ones. An empty list
  /// yields the complex {∅}.
  SimplicialComplex(int vertex_count, std::vector<Subset> faces);

  int vertex_count() const noexcept { return vertex_count_; }
  /// Inclusion-maximal faces, sorted lexicographically.
  const std::vector<Subset>& facets() const noexcept { return facets_; }
  /// Largest face cardinality s (dimension + 1).
  int face_size() const noexcept { return face_size_; }
  int dimension() const noexcept { return face_size_ - 1; }

  bool contains(Subset face) const;
  /// All faces of the given cardinality, sorted by bit mask.
  std::vector<Subset> faces_of_size(int k) const;
  /// Every face, grouped by cardinality (index k holds the k-faces).
  const std::vector<std::vector<Subset>>& faces_by_size() const noexcept { return faces_by_size_; }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
  }

 private:
  int vertex_count_;
  int face_size_ = 0;
  std::vector<Subset> facets_;
  std::vector<std::vector<Subset>> faces_by_size_;
};

/// h_0..h_s of a complex with largest face size s. Trailing zeros are kept.
struct HVector {
  std::vector<std::int64_t> entries;

  /// Index of the last nonzero entry (0 for the all-zero vector).
  int top_degree() const;
  std::int64_t at(std::size_t i) const { return i < entries.size() ? entries[i] : 0; }

  friend bool operator==(const HVector&, const HVector&) = default;
};

enum class ComplexKind { independence, broken_circuit };

/// Independence complex on the non-loop elements; `labels[vertex] = element`.
struct LabeledComplex {
  SimplicialComplex complex;
  std::vector<int> labels;
};

LabeledComplex independence_complex(const Matroid& m);

/// Sets containing no broken circuit; vertices are the matroid's elements
/// (unlabeled). Throws Error{has_loops} if m has a loop.
SimplicialComplex broken_circuit_complex(const Matroid& m, const ElementOrder& order);

/// (f_0, ..., f_s) with f_0 = 1 counting the empty face.
std::vector<std::int64_t> f_vector(const SimplicialComplex& c);

/// Binomial transform of the f-vector; checks h(1+t) = f(t) before returning.
HVector h_vector(const SimplicialComplex& c);

/// h-vector computed only by deletion and contraction.
///
/// For the broken-circuit target the order-greatest element is always the one
/// removed, and minors carry the induced order. A loop makes the broken-circuit
/// complex void, which contributes the zero vector.
HVector h_recursive(const Matroid& m, ComplexKind kind, const ElementOrder& order);
HVector h_recursive(const Matroid& m, ComplexKind kind);

/// g_0 = h_0 and g_i = h_i - h_{i-1} for 1 <= i <= floor(r/2).
std::vector<std::int64_t> g_vector(const HVector& h, int r);

/// Number of bases, i.e. facets of the independence complex; sum of h.
std::int64_t sum(const HVector& h);

}  // namespace gelement
