#pragma once

#include "franke/percomplex.hpp"
#include "franke/posetkit.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace franke::diagramkit {

using percomplex::ChainMap;
using percomplex::ComplexPtr;
using percomplex::GradedMap;
using percomplex::GradedModule;
using percomplex::PeriodicComplex;
using posetkit::FinitePoset;
using posetkit::MonotoneMap;
using posetkit::PosetPtr;

using Edge = std::pair<std::size_t, std::size_t>;

namespace detail {

// Elements ordered so that everything above x comes before x.
inline std::vector<std::size_t> top_down(const FinitePoset& p) {
  std::vector<std::size_t> above(p.size(), 0), order(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    order[a] = a;
    for (std::size_t b = 0; b < p.size(); ++b) above[a] += p.lt(a, b);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return above[a] < above[b]; });
  return order;
}

}  // namespace detail

/// Functor from a finite poset to periodic complexes, given on covering relations.
class ComplexDiagram {
 public:
  ComplexDiagram() = default;

  /// `period` is only consulted when the shape is empty.
  ComplexDiagram(PosetPtr shape, std::vector<ComplexPtr> vertices, std::map<Edge, ChainMap> edges, int period = 1)
      : shape_(std::move(shape)), vertex_(std::move(vertices)), edge_(std::move(edges)) {
    const auto& P = *shape_;
    require(vertex_.size() == P.size(), ErrorKind::shape_mismatch, "one complex per element");
    period_ = vertex_.empty() ? period : vertex_[0]->period();
    for (std::size_t a = 1; a < vertex_.size(); ++a)
      require(vertex_[a]->period() == period_, ErrorKind::period_mismatch, "vertices differ in period");
    const auto cov = P.covers();
    require(cov.size() == edge_.size(), ErrorKind::shape_mismatch, "edges must be exactly the covering relations");
    for (const auto& e : cov) {
      auto it = edge_.find(e);
      require(it != edge_.end(), ErrorKind::shape_mismatch,
              "missing edge " + P.label(e.first).str() + " -> " + P.label(e.second).str());
      const auto& f = it->second;
      require((f.source_ptr() == vertex_[e.first] || f.source() == *vertex_[e.first]) &&
                  (f.target_ptr() == vertex_[e.second] || f.target() == *vertex_[e.second]),
              ErrorKind::shape_mismatch, "edge endpoints differ from the vertices");
    }
    build_composites();
  }

  const FinitePoset& shape() const { return *shape_; }
  const PosetPtr& shape_ptr() const { return shape_; }
  int period() const { return period_; }
  const PeriodicComplex& vertex(std::size_t a) const { return *vertex_[a]; }
  const ComplexPtr& vertex_ptr(std::size_t a) const { return vertex_[a]; }
  const std::vector<ComplexPtr>& vertices() const { return vertex_; }
  const std::map<Edge, ChainMap>& edges() const { return edge_; }

  /// Structure map for a <= b.
  const ChainMap& map(std::size_t a, std::size_t b) const {
    require(shape_->leq(a, b), ErrorKind::shape_mismatch, "no map between incomparable elements");
    if (a == b) return identity_[a];
    return composite_.at({a, b});
  }

  /// phi^* of this diagram.
  ComplexDiagram restrict(const MonotoneMap& phi) const {
    require(phi.target() == *shape_, ErrorKind::shape_mismatch, "restriction along a map into another shape");
    std::vector<ComplexPtr> v;
    for (std::size_t a = 0; a < phi.source().size(); ++a) v.push_back(vertex_[phi(a)]);
    std::map<Edge, ChainMap> e;
    for (const auto& c : phi.source().covers()) e.emplace(c, map(phi(c.first), phi(c.second)));
    return ComplexDiagram(phi.source_ptr(), std::move(v), std::move(e), period_);
  }

 private:
  void build_composites() {
    const auto& P = *shape_;
    for (std::size_t a = 0; a < P.size(); ++a) identity_.push_back(ChainMap::identity(vertex_[a]));
    for (std::size_t a : detail::top_down(P)) {
      for (const auto& [e, f] : edge_) {
        if (e.first != a) continue;
        for (std::size_t b = 0; b < P.size(); ++b) {
          if (!P.leq(e.second, b)) continue;
          ChainMap g = (b == e.second) ? f : percomplex::compose(composite_.at({e.second, b}), f);
          auto it = composite_.find({a, b});
          if (it == composite_.end())
            composite_.emplace(Edge{a, b}, std::move(g));
          else
            require(it->second.same_blocks(g), ErrorKind::not_a_functor,
                    "composites " + P.label(a).str() + " -> " + P.label(b).str() + " disagree");
        }
      }
    }
  }

  PosetPtr shape_;
  int period_ = 1;
  std::vector<ComplexPtr> vertex_;
  std::map<Edge, ChainMap> edge_;
  std::map<Edge, ChainMap> composite_;
  std::vector<ChainMap> identity_;
};

/// Functor from a finite poset to graded groups (degree-0 maps).
class ModuleDiagram {
 public:
  ModuleDiagram() = default;

  ModuleDiagram(PosetPtr shape, std::vector<GradedModule> vertices, std::map<Edge, GradedMap> edges)
      : shape_(std::move(shape)), vertex_(std::move(vertices)), edge_(std::move(edges)) {
    const auto& P = *shape_;
    require(vertex_.size() == P.size(), ErrorKind::shape_mismatch, "one module per element");
    const auto cov = P.covers();
    require(cov.size() == edge_.size(), ErrorKind::shape_mismatch, "edges must be exactly the covering relations");
    for (const auto& e : cov) {
      auto it = edge_.find(e);
      require(it != edge_.end(), ErrorKind::shape_mismatch, "missing module edge");
      require(it->second.shift == 0, ErrorKind::shape_mismatch, "module diagram edges must preserve slots");
    }
    for (std::size_t a : detail::top_down(P))
      for (const auto& [e, f] : edge_) {
        if (e.first != a) continue;
        for (std::size_t b = 0; b < P.size(); ++b) {
          if (!P.leq(e.second, b)) continue;
          GradedMap g = (b == e.second) ? f : percomplex::compose(composite_.at({e.second, b}), f);
          auto it = composite_.find({a, b});
          if (it == composite_.end()) {
            composite_.emplace(Edge{a, b}, std::move(g));
          } else {
            for (int n = 0; n < g.period; ++n)
              require(exactlin::lattice_contains(g.tgt_at(n).relations, g.components[n] - it->second.components[n]),
                      ErrorKind::not_a_functor, "module composites disagree");
          }
        }
      }
  }

  const FinitePoset& shape() const { return *shape_; }
  const PosetPtr& shape_ptr() const { return shape_; }
  int period() const { return vertex_.empty() ? 1 : vertex_[0].period(); }
  const GradedModule& vertex(std::size_t a) const { return vertex_[a]; }

  /// Component at slot q of the structure map a <= b, on canonical generators.
  exactlin::IntMatrix map(std::size_t a, std::size_t b, int q) const {
    require(shape_->leq(a, b), ErrorKind::shape_mismatch, "no map between incomparable elements");
    if (a == b) return exactlin::IntMatrix::identity(vertex_[a].group(q).num_generators());
    return composite_.at({a, b}).component(q);
  }

 private:
  PosetPtr shape_;
  std::vector<GradedModule> vertex_;
  std::map<Edge, GradedMap> edge_;
  std::map<Edge, GradedMap> composite_;
};

}  // namespace franke::diagramkit
