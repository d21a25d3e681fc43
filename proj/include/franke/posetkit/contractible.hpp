#pragma once

#include "franke/exactlin.hpp"
#include "franke/posetkit/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace franke::posetkit {

/// Witness that P is conically contractible: f monotone with c <= f(c) >= c0.
struct ConicalCertificate {
  std::size_t c0 = 0;
  std::vector<std::size_t> f;
};

inline bool check_conical(const FinitePoset& p, const ConicalCertificate& w) {
  if (p.size() == 0 || w.f.size() != p.size() || w.c0 >= p.size()) return false;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (w.f[c] >= p.size() || !p.leq(c, w.f[c]) || !p.leq(w.c0, w.f[c])) return false;
    for (std::size_t e = 0; e < p.size(); ++e)
      if (p.leq(c, e) && !p.leq(w.f[c], w.f[e])) return false;
  }
  return true;
}

/// Exhaustive backtracking search; node_budget bounds the work.
inline std::optional<ConicalCertificate> find_conical(const FinitePoset& p, std::size_t node_budget = 2000000) {
  const std::size_t n = p.size();
  if (n == 0) return std::nullopt;
  std::size_t nodes = 0;
  for (std::size_t c0 = 0; c0 < n; ++c0) {
    std::vector<std::vector<std::size_t>> options(n);
    bool feasible = true;
    for (std::size_t c = 0; c < n && feasible; ++c) {
      for (std::size_t u = 0; u < n; ++u)
        if (p.leq(c, u) && p.leq(c0, u)) options[c].push_back(u);
      feasible = !options[c].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> f(n, n);
    std::function<bool(std::size_t)> assign = [&](std::size_t c) -> bool {
      if (c == n) return true;
      for (std::size_t u : options[c]) {
        if (++nodes > node_budget) return false;
        bool ok = true;
        for (std::size_t e = 0; e < c && ok; ++e) {
          if (p.leq(e, c) && !p.leq(f[e], u)) ok = false;
          if (p.leq(c, e) && !p.leq(u, f[e])) ok = false;
        }
        if (!ok) continue;
        f[c] = u;
        if (assign(c + 1)) return true;
      }
      f[c] = n;
      return false;
    };
    if (assign(0)) return ConicalCertificate{c0, f};
    if (nodes > node_budget) return std::nullopt;
  }
  return std::nullopt;
}

/// Removal order of beat points that dismantles P to a single element.
inline std::optional<std::vector<std::size_t>> dismantle(const FinitePoset& p) {
  std::vector<bool> live(p.size(), true);
  std::size_t remaining = p.size();
  std::vector<std::size_t> order;
  auto beat = [&](std::size_t x) {
    // up-beat: elements above x have a minimum; down-beat: elements below have a maximum
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<std::size_t> s;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (live[y] && (dir == 0 ? p.lt(x, y) : p.lt(y, x))) s.push_back(y);
      if (s.empty()) continue;
      for (std::size_t m : s) {
        bool extreme = true;
        for (std::size_t y : s)
          if (dir == 0 ? !p.leq(m, y) : !p.leq(y, m)) extreme = false;
        if (extreme) return true;
      }
    }
    return false;
  };
  while (remaining > 1) {
    bool removed = false;
    for (std::size_t x = 0; x < p.size() && !removed; ++x)
      if (live[x] && beat(x)) {
        live[x] = false;
        --remaining;
        order.push_back(x);
        removed = true;
      }
    if (!removed) return std::nullopt;
  }
  if (remaining == 0) return std::nullopt;
  return order;
}

/// Reduced integral homology of the order complex, degrees 0 .. height.
inline std::vector<exactlin::FgAbelianGroup> nerve_reduced_homology(const FinitePoset& p) {
  using exactlin::IntMatrix;
  const int h = p.height();
  std::vector<std::vector<Chain>> ch;
  for (int k = 0; k <= h; ++k) ch.push_back(p.chains(static_cast<std::size_t>(k)));
  // boundary from k-chains to (k-1)-chains; k = 0 maps to the augmentation Z
  auto boundary = [&](int k) {
    if (k == 0) {
      IntMatrix m(1, ch[0].size());
      for (std::size_t j = 0; j < ch[0].size(); ++j) m(0, j) = 1;
      return m;
    }
    std::map<Chain, std::size_t> pos;
    for (std::size_t i = 0; i < ch[k - 1].size(); ++i) pos[ch[k - 1][i]] = i;
    IntMatrix m(ch[k - 1].size(), ch[k].size());
    for (std::size_t j = 0; j < ch[k].size(); ++j)
      for (int t = 0; t <= k; ++t) {
        Chain face = ch[k][j];
        face.erase(face.begin() + t);
        m(pos.at(face), j) += exactlin::parity_sign(t);
      }
    return m;
  };
  std::vector<exactlin::FgAbelianGroup> out;
  if (h < 0) return {exactlin::FgAbelianGroup::free(0)};
  for (int k = 0; k <= h; ++k) {
    IntMatrix dk = boundary(k);
    IntMatrix ker = exactlin::kernel_basis(dk);
    IntMatrix img = k < h ? exactlin::image_basis(boundary(k + 1)) : IntMatrix(ch[k].size(), 0);
    out.push_back(exactlin::subquotient(ker, img));
  }
  return out;
}

enum class Contractibility { conical, dismantlable, not_contractible, undecided };

inline const char* contractibility_name(Contractibility c) {
  switch (c) {
    case Contractibility::conical: return "conical";
    case Contractibility::dismantlable: return "dismantlable";
    case Contractibility::not_contractible: return "not_contractible";
    case Contractibility::undecided: return "undecided";
  }
  return "?";
}

struct ContractibilityVerdict {
  Contractibility kind = Contractibility::undecided;
  std::optional<ConicalCertificate> conical;
  std::optional<std::vector<std::size_t>> dismantling;
  std::vector<exactlin::FgAbelianGroup> reduced_homology;
  bool contractible() const {
    return kind == Contractibility::conical || kind == Contractibility::dismantlable;
  }
};

/// Tries a conical certificate, then dismantling; nonzero reduced homology (or
/// emptiness) proves non-contractibility.
inline ContractibilityVerdict classify_contractibility(const FinitePoset& p) {
  ContractibilityVerdict v;
  if (p.size() == 0) {
    v.kind = Contractibility::not_contractible;
    return v;
  }
  v.conical = find_conical(p);
  if (v.conical && check_conical(p, *v.conical)) {
    v.kind = Contractibility::conical;
    return v;
  }
  v.dismantling = dismantle(p);
  if (v.dismantling) {
    v.kind = Contractibility::dismantlable;
    return v;
  }
  v.reduced_homology = nerve_reduced_homology(p);
  for (const auto& g : v.reduced_homology)
    if (!g.is_zero()) {
      v.kind = Contractibility::not_contractible;
      return v;
    }
  return v;
}

struct FinalityReport {
  bool final = true;     // every coslice certified contractible
  bool refuted = false;  // some coslice certified non-contractible
  std::vector<ContractibilityVerdict> coslices;  // indexed by target element
  std::string summary;
};

/// f is homotopy final when each coslice d/f is contractible.
inline FinalityReport is_homotopy_final(const MonotoneMap& f) {
  FinalityReport r;
  for (std::size_t d = 0; d < f.target().size(); ++d) {
    const SubPoset s = slice_under(f, d);
    r.coslices.push_back(classify_contractibility(s.poset));
    const auto& v = r.coslices.back();
    if (!v.contractible()) {
      r.final = false;
      if (v.kind == Contractibility::not_contractible) r.refuted = true;
      r.summary += f.target().label(d).str() + "/f is " + contractibility_name(v.kind) + "; ";
    }
  }
  return r;
}

}  // namespace franke::posetkit
