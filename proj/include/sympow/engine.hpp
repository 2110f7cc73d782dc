#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow::engine {

/// One term c * m * e_comp of a vector in a free module.
struct VTerm {
  Monomial mon;
  std::uint32_t comp;
  FieldElement coef;
};

/// Sparse module vector, terms strictly decreasing under the layout order.
using Vec = std::vector<VTerm>;

/// Describes a free module F = R(-s_0) + ... + R(-s_{k-1}) together with its
/// monomial order. Components are grouped into blocks; a term in a lower
/// block beats any term in a higher block (elimination of blocks). Inside a
/// block, `graded` layouts compare twisted degree first, then the ring order
/// on monomials, then the component index (smaller index is larger).
class ModuleLayout {
 public:
  explicit ModuleLayout(RingHandle ring, std::vector<int> shifts = {0},
                        std::vector<int> blocks = {}, bool graded = false);

  const Ring& ring() const { return *ring_; }
  const RingHandle& ring_handle() const { return ring_; }
  int rank() const { return static_cast<int>(shifts_.size()); }
  int shift(std::uint32_t comp) const { return shifts_[comp]; }
  int block(std::uint32_t comp) const { return blocks_[comp]; }
  const std::vector<int>& shifts() const { return shifts_; }

  int compare(Monomial a, std::uint32_t ca, Monomial b, std::uint32_t cb) const;
  int compare(const VTerm& a, const VTerm& b) const { return compare(a.mon, a.comp, b.mon, b.comp); }

  /// Weighted degree of the monomial plus the component twist.
  int degree(Monomial m, std::uint32_t comp) const {
    return ring_->weighted_degree(m) + shifts_[comp];
  }
  /// Maximum term degree; the sugar of an input vector.
  int max_degree(const Vec& v) const;
  bool is_homogeneous(const Vec& v) const;

  void sort(Vec& v) const;

 private:
  RingHandle ring_;
  std::vector<int> shifts_;
  std::vector<int> blocks_;
  bool graded_;
};

Vec from_polynomial(const Polynomial& f, std::uint32_t comp = 0);
Polynomial to_polynomial(const RingHandle& ring, const Vec& v, std::uint32_t comp = 0);
/// m * c * v; order of terms is preserved.
Vec mul_term(const Vec& v, Monomial m, const FieldElement& c);
/// a - b, both sorted under `layout`.
Vec subtract(const ModuleLayout& layout, const Vec& a, const Vec& b);

struct EngineStats {
  std::size_t pairs_formed = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Incremental Buchberger algorithm over a free module.
///
/// Work is processed by the normal strategy: the queued item (s-pair or
/// input vector) with the smallest sugar degree goes first, ties broken by
/// the smaller lcm and then by index, so runs are reproducible. Pairs are
/// pruned by the Gebauer-Moeller criteria; the coprime criterion is only
/// applied in rank one. For homogeneous input, after `compute(D)` the
/// current basis decides membership for every vector of degree <= D.
class GroebnerEngine {
 public:
  explicit GroebnerEngine(ModuleLayout layout);

  const ModuleLayout& layout() const { return layout_; }

  /// Queues a vector; it is reduced and inserted when its degree is reached.
  void add(Vec v);
  /// Processes queued work up to the given sugar degree (all when empty).
  void compute(std::optional<int> max_degree = std::nullopt);
  bool complete() const { return queue_.empty(); }
  bool homogeneous() const { return homogeneous_; }

  /// Normal form against the current basis; `full` also reduces tail terms.
  Vec reduce(const Vec& v, bool full = true) const;
  /// Reduces only while the leading term lies in a block < `stop_block`.
  Vec reduce_above_block(const Vec& v, int stop_block) const;

  /// Minimal, tail-reduced, monic basis sorted by increasing leading term.
  /// Reflects the work done so far; complete after `compute()`.
  std::vector<Vec> reduced_basis() const;
  /// Leading terms of the current minimal basis.
  std::vector<VTerm> leading_terms() const;

  const EngineStats& stats() const { return stats_; }

 private:
  struct Element {
    Vec vec;
    int sugar;
    bool live;
  };
  struct Work {
    int i;  // basis index, or -1 for an input vector
    int j;  // basis index, or input index when i == -1
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
  };

  Vec reduce_impl(Vec v, bool full, int stop_block) const;
  void insert(Vec h, int sugar);
  bool precedes(const Work& a, const Work& b) const;
  Vec spair(int i, int j) const;

  ModuleLayout layout_;
  std::vector<Element> elements_;
  std::vector<int> live_;  // indices of live elements, in insertion order
  std::vector<Vec> inputs_;
  std::vector<Work> queue_;
  bool homogeneous_ = true;
  EngineStats stats_;
};

}  // namespace sympow::engine
