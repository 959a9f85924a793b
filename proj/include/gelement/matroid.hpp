#pragma once

// Matroids given by an explicit basis family on the ground set {0, ..., n-1}.
//
// Everything else (independence, rank, circuits, minors) is derived from the
// bases. The representation is meant for desk-scale matroids (n <= 16); the
// constructor tabulates independence over all 2^n subsets.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gelement/subset.hpp"

namespace gelement {

/// Witness that a set family violates basis exchange: removing `removed`
/// from `first` cannot be repaired by any element of `second`.
struct ExchangeViolation {
  Subset first;
  Subset second;
  int removed = -1;
};

struct Minor;

class Matroid {
 public:
  /// Validates the family (equal sizes, exchange axiom). Duplicates are dropped.
  /// Throws Error{empty_family} or Error{not_a_matroid}.
  static Matroid from_bases(int n, std::vector<Subset> bases);
  /// Throws Error{not_a_matroid} if the family is not a clutter satisfying circuit elimination.
  static Matroid from_circuits(int n, const std::vector<Subset>& circuits);
  static Matroid uniform(int rank, int n);
  /// Cycle matroid; graph loops and parallel edges are allowed.
  static Matroid from_graph(int vertices, std::span<const std::pair<int, int>> edges);

  int size() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  Subset ground_set() const noexcept { return Subset::range(n_); }
  /// Sorted by bit mask.
  const std::vector<Subset>& bases() const noexcept { return bases_; }

  bool is_independent(Subset s) const { return independent_[s.bits()]; }
  bool is_basis(Subset s) const { return s.size() == rank_ && is_independent(s); }
  int rank_of(Subset s) const;

  Subset loops() const;
  Subset coloops() const;
  /// Minimal dependent sets, sorted lexicographically.
  std::vector<Subset> circuits() const;
  /// Classes of non-loop elements lying in some circuit, related when every
  /// circuit through one passes through the other. Sorted by least element.
  std::vector<Subset> series_classes() const;
  int components() const;

  friend bool operator==(const Matroid& a, const Matroid& b) { return a.n_ == b.n_ && a.bases_ == b.bases_; }

 private:
  // Skips validation; used for families that are matroids by construction.
  Matroid(int n, std::vector<Subset> bases);

  friend Minor delete_elements(const Matroid&, Subset);
  friend Minor contract(const Matroid&, Subset);
  friend Matroid direct_sum(const Matroid&, const Matroid&);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::vector<bool> independent_;
};

/// Returns nullopt when the family satisfies basis exchange.
std::optional<ExchangeViolation> find_exchange_violation(int n, const std::vector<Subset>& bases);

/// A minor together with `labels[new_element] = old_element`.
struct Minor {
  Matroid matroid;
  std::vector<int> labels;
};

Minor delete_elements(const Matroid& m, Subset removed);
Minor contract(const Matroid& m, Subset contracted);
/// Elements of `b` are shifted by a.size().
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Cycle matroid of the graph with s parallel u-v edges, each subdivided once.
/// Vertices u = 0, v = 1, w_t = 2 + t; edge 2t joins u to w_t and edge 2t+1
/// joins w_t to v. Rank s + 1 on 2s elements.
Matroid subdivided_parallel_matroid(int s);

/// A linear order on the ground set: sequence()[k] is the k-th smallest element.
class ElementOrder {
 public:
  static ElementOrder natural(int n);
  /// Throws Error{parse_error} if `sequence` is not a permutation of 0..n-1.
  static ElementOrder from_sequence(std::vector<int> sequence);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const noexcept { return sequence_; }
  int position(int element) const { return position_[element]; }
  bool less(int a, int b) const { return position_[a] < position_[b]; }
  /// Order-least element of a nonempty subset.
  int least(Subset s) const;
  int greatest(Subset s) const;
  /// Order on a minor's relabeled ground set inherited from this order.
  ElementOrder induced(const std::vector<int>& labels) const;

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  explicit ElementOrder(std::vector<int> sequence);

  std::vector<int> sequence_;
  std::vector<int> position_;
};

}  // namespace gelement
