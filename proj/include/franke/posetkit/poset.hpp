#pragma once

#include "franke/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace franke::posetkit {

enum class Kind { point, beta, gamma, zeta };

struct Atom {
  Kind kind = Kind::point;
  int index = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Structured element name; products concatenate parts.
struct Label {
  std::vector<Atom> parts;

  Label() = default;
  Label(Kind k, int i) : parts{Atom{k, i}} {}
  explicit Label(std::vector<Atom> p) : parts(std::move(p)) {}

  static Label pair(const Label& a, const Label& b) {
    std::vector<Atom> p = a.parts;
    p.insert(p.end(), b.parts.begin(), b.parts.end());
    return Label(std::move(p));
  }

  std::string str() const {
    auto atom = [](const Atom& a) {
      switch (a.kind) {
        case Kind::beta: return "b" + std::to_string(a.index);
        case Kind::gamma: return "g" + std::to_string(a.index);
        case Kind::zeta: return "z" + std::to_string(a.index);
        case Kind::point: break;
      }
      return std::to_string(a.index);
    };
    if (parts.size() == 1) return atom(parts[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + atom(parts[i]);
    return s + ")";
  }

  friend auto operator<=>(const Label&, const Label&) = default;
};

using Chain = std::vector<std::size_t>;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Order generated by the given strict relations (a, b) meaning a < b.
  FinitePoset(std::vector<Label> labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
      : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
    for (auto [a, b] : relations) {
      require(a < n && b < n, ErrorKind::shape_mismatch, "relation refers to a missing element");
      leq_[a * n + b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        require(!(leq_[i * n + j] && leq_[j * n + i]), ErrorKind::shape_mismatch, "relations contain a cycle");
    index_labels();
  }

  /// Full order given as a predicate.
  static FinitePoset from_predicate(std::vector<Label> labels, const std::function<bool(std::size_t, std::size_t)>& le) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (i != j && le(i, j)) rel.emplace_back(i, j);
    FinitePoset p(std::move(labels), rel);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        require(p.leq(i, j) == (i == j || le(i, j)), ErrorKind::shape_mismatch, "predicate is not transitive");
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool lt(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  const Label& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<std::size_t> find(const Label& l) const {
    auto it = by_label_.find(l);
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index(const Label& l) const {
    auto i = find(l);
    require(i.has_value(), ErrorKind::shape_mismatch, "no element labelled " + l.str());
    return *i;
  }
  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (labels_[i].str() == name) return i;
    fail(ErrorKind::shape_mismatch, "no element named " + name);
  }

  /// Covering relations a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (!lt(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < size() && direct; ++c)
          if (lt(a, c) && lt(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  std::vector<std::size_t> upper_covers(std::size_t a) const {
    std::vector<std::size_t> out;
    for (auto [x, y] : covers())
      if (x == a) out.push_back(y);
    return out;
  }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
      bool top = true;
      for (std::size_t b = 0; b < size() && top; ++b)
        if (lt(a, b)) top = false;
      if (top) out.push_back(a);
    }
    return out;
  }

  /// Strictly increasing chains with p + 1 elements, in lexicographic order of indices.
  std::vector<Chain> chains(std::size_t p) const {
    std::vector<Chain> out;
    Chain cur;
    std::function<void()> grow = [&] {
      if (cur.size() == p + 1) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b < size(); ++b)
        if (cur.empty() || lt(cur.back(), b)) {
          cur.push_back(b);
          grow();
          cur.pop_back();
        }
    };
    grow();
    return out;
  }

  /// Length of the longest chain (number of elements minus one); -1 when empty.
  int height() const {
    if (size() == 0) return -1;
    std::vector<int> h(size(), 0);
    // process in an order compatible with the relation: by number of elements below
    std::vector<std::size_t> order(size());
    for (std::size_t i = 0; i < size(); ++i) order[i] = i;
    auto below = [&](std::size_t a) {
      std::size_t c = 0;
      for (std::size_t b = 0; b < size(); ++b) c += lt(b, a);
      return c;
    };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below(a) < below(b); });
    int best = 0;
    for (std::size_t a : order) {
      for (std::size_t b = 0; b < size(); ++b)
        if (lt(b, a)) h[a] = std::max(h[a], h[b] + 1);
      best = std::max(best, h[a]);
    }
    return best;
  }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  void index_labels() {
    by_label_.clear();
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, fresh] = by_label_.emplace(labels_[i], i);
      require(fresh, ErrorKind::shape_mismatch, "duplicate label " + labels_[i].str());
    }
  }

  std::vector<Label> labels_;
  std::vector<char> leq_;
  std::map<Label, std::size_t> by_label_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

inline PosetPtr share(FinitePoset p) { return std::make_shared<const FinitePoset>(std::move(p)); }

/// Element (a, b) sits at index a * |Q| + b.
inline FinitePoset product(const FinitePoset& p, const FinitePoset& q) {
  std::vector<Label> labels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) labels.push_back(Label::pair(p.label(a), q.label(b)));
  const std::size_t m = q.size();
  return FinitePoset::from_predicate(std::move(labels), [&](std::size_t x, std::size_t y) {
    return p.leq(x / m, y / m) && q.leq(x % m, y % m);
  });
}

/// Full subposet on the listed elements, with its embedding.
struct SubPoset {
  FinitePoset poset;
  std::vector<std::size_t> embed;
};

inline SubPoset full_subposet(const FinitePoset& p, std::vector<std::size_t> elems) {
  std::sort(elems.begin(), elems.end());
  std::vector<Label> labels;
  for (auto e : elems) labels.push_back(p.label(e));
  SubPoset s;
  s.embed = elems;
  s.poset = FinitePoset::from_predicate(std::move(labels), [&](std::size_t a, std::size_t b) {
    return p.leq(elems[a], elems[b]);
  });
  return s;
}

class MonotoneMap {
 public:
  MonotoneMap() = default;
  MonotoneMap(PosetPtr source, PosetPtr target, std::vector<std::size_t> image)
      : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    require(image_.size() == source_->size(), ErrorKind::shape_mismatch, "map needs one image per element");
    for (auto t : image_) require(t < target_->size(), ErrorKind::shape_mismatch, "image outside the target");
    for (std::size_t a = 0; a < source_->size(); ++a)
      for (std::size_t b = 0; b < source_->size(); ++b)
        if (source_->leq(a, b))
          require(target_->leq(image_[a], image_[b]), ErrorKind::not_monotone,
                  source_->label(a).str() + " <= " + source_->label(b).str() + " is not preserved");
  }

  const FinitePoset& source() const { return *source_; }
  const FinitePoset& target() const { return *target_; }
  const PosetPtr& source_ptr() const { return source_; }
  const PosetPtr& target_ptr() const { return target_; }
  std::size_t operator()(std::size_t a) const { return image_[a]; }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  PosetPtr source_, target_;
  std::vector<std::size_t> image_;
};

inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  require(f.target() == g.source(), ErrorKind::shape_mismatch, "composing poset maps with mismatched ends");
  std::vector<std::size_t> img;
  for (std::size_t a = 0; a < f.source().size(); ++a) img.push_back(g(f(a)));
  return MonotoneMap(f.source_ptr(), g.target_ptr(), std::move(img));
}

inline MonotoneMap inclusion(const SubPoset& s, PosetPtr ambient) {
  return MonotoneMap(share(s.poset), std::move(ambient), s.embed);
}

/// f/d = { c : f(c) <= d }.
inline SubPoset slice_over(const MonotoneMap& f, std::size_t d) {
  std::vector<std::size_t> e;
  for (std::size_t c = 0; c < f.source().size(); ++c)
    if (f.target().leq(f(c), d)) e.push_back(c);
  return full_subposet(f.source(), e);
}

/// d/f = { c : d <= f(c) }.
inline SubPoset slice_under(const MonotoneMap& f, std::size_t d) {
  std::vector<std::size_t> e;
  for (std::size_t c = 0; c < f.source().size(); ++c)
    if (f.target().leq(d, f(c))) e.push_back(c);
  return full_subposet(f.source(), e);
}

}  // namespace franke::posetkit
