#pragma once

#include "franke/verify/generators.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace franke::verify {

using json = nlohmann::ordered_json;
using percomplex::GradedModule;

inline constexpr int format_version = 1;

/// Collected non-fatal diagnostics, such as a version mismatch.
using Warnings = std::vector<std::string>;

namespace io {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
inline json integer(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

[[noreturn]] inline void schema(const std::string& path, const std::string& why) {
  fail(ErrorKind::parse_error, "at " + (path.empty() ? std::string("<root>") : path) + ": " + why);
}

inline const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) schema(path, "not an integer: \"" + s + "\"");
    return Integer(s);
  }
  schema(path, "expected an integer");
}

inline long long read_small(const json& j, const std::string& path, long long lo, long long hi) {
  if (!j.is_number_integer()) schema(path, "expected a small integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) schema(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

inline std::uint64_t read_seed(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const auto s = j.get<std::string>();
      const auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  schema(path, "expected an unsigned 64-bit seed");
}

inline const json& array(const json& j, const std::string& path, std::size_t expected_size) {
  if (!j.is_array()) schema(path, "expected an array");
  if (j.size() != expected_size)
    schema(path, "expected " + std::to_string(expected_size) + " entries, found " + std::to_string(j.size()));
  return j;
}

inline json flat(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) a.push_back(integer(m(i, k)));
  return a;
}

inline IntMatrix read_flat(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  array(j, path, rows * cols);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = read_integer(j[i * cols + k], path + "[" + std::to_string(i * cols + k) + "]");
  return m;
}

inline json matrix(const IntMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", flat(m)}};
}

inline IntMatrix read_matrix(const json& j, const std::string& path) {
  const auto r = static_cast<std::size_t>(read_small(field(j, path, "rows"), path + ".rows", 0, 1 << 20));
  const auto c = static_cast<std::size_t>(read_small(field(j, path, "cols"), path + ".cols", 0, 1 << 20));
  return read_flat(field(j, path, "entries"), path + ".entries", r, c);
}

inline void check_header(const json& j, const std::string& path, const char* kind, Warnings* w) {
  const json& k = field(j, path, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    schema(path + ".kind", std::string("expected \"") + kind + "\", found " + k.dump());
  if (auto it = j.find("format_version"); it != j.end()) {
    if (!it->is_number_integer()) schema(path + ".format_version", "expected an integer");
    if (it->get<int>() != format_version && w)
      w->push_back(path + ".format_version is " + std::to_string(it->get<int>()) + ", reader expects " +
                   std::to_string(format_version));
  } else if (w && path.empty()) {
    w->push_back("format_version missing, assuming " + std::to_string(format_version));
  }
}

}  // namespace io

inline json to_json(const PeriodicComplex& c) {
  json diff = json::array();
  for (int n = 0; n < c.period(); ++n) diff.push_back(io::flat(c.d(n).to_dense()));
  return json{{"format_version", format_version}, {"kind", "periodic_complex"}, {"period", c.period()},
              {"ranks", c.ranks()}, {"diff", diff}};
}

inline PeriodicComplex complex_from_json(const json& j, Warnings* w = nullptr, const std::string& path = "") {
  io::check_header(j, path, "periodic_complex", w);
  const int N = static_cast<int>(io::read_small(io::field(j, path, "period"), path + ".period", 1, 1 << 16));
  const json& rj = io::array(io::field(j, path, "ranks"), path + ".ranks", N);
  std::vector<std::size_t> ranks;
  for (int n = 0; n < N; ++n)
    ranks.push_back(static_cast<std::size_t>(io::read_small(rj[n], path + ".ranks[" + std::to_string(n) + "]", 0, 1 << 20)));
  const json& dj = io::array(io::field(j, path, "diff"), path + ".diff", N);
  std::vector<IntMatrix> d;
  for (int n = 0; n < N; ++n)
    d.push_back(io::read_flat(dj[n], path + ".diff[" + std::to_string(n) + "]", ranks[slot_mod(n - 1, N)], ranks[n]));
  try {
    return PeriodicComplex::from_dense(N, ranks, d);
  } catch (const Error& e) {
    io::schema(path, e.what());
  }
}

inline json to_json(const GradedModule& m) {
  json groups = json::array();
  for (const auto& g : m.groups()) {
    json t = json::array();
    for (const auto& x : g.torsion()) t.push_back(io::integer(x));
    groups.push_back(json{{"free", g.free_rank()}, {"torsion", t}});
  }
  return json{{"format_version", format_version}, {"kind", "graded_module"}, {"period", m.period()}, {"groups", groups}};
}

inline GradedModule module_from_json(const json& j, Warnings* w = nullptr, const std::string& path = "") {
  io::check_header(j, path, "graded_module", w);
  const int N = static_cast<int>(io::read_small(io::field(j, path, "period"), path + ".period", 1, 1 << 16));
  const json& gj = io::array(io::field(j, path, "groups"), path + ".groups", N);
  std::vector<exactlin::FgAbelianGroup> g;
  for (int n = 0; n < N; ++n) {
    const std::string p = path + ".groups[" + std::to_string(n) + "]";
    const auto fr = static_cast<std::size_t>(io::read_small(io::field(gj[n], p, "free"), p + ".free", 0, 1 << 20));
    const json& tj = io::field(gj[n], p, "torsion");
    if (!tj.is_array()) io::schema(p + ".torsion", "expected an array");
    std::vector<Integer> t;
    for (std::size_t k = 0; k < tj.size(); ++k) t.push_back(io::read_integer(tj[k], p + ".torsion[" + std::to_string(k) + "]"));
    try {
      g.emplace_back(fr, std::move(t));
    } catch (const Error& e) {
      io::schema(p, e.what());
    }
  }
  return GradedModule(N, std::move(g));
}

/// Vertices and edges keyed by element labels such as "b0", "z1" and "(b0,z1)".
inline json to_json(const CrownedDiagram& X) {
  const auto& D = X.diagram();
  const auto& P = D.shape();
  json verts = json::object(), edges = json::object();
  for (std::size_t a = 0; a < P.size(); ++a) {
    json c = to_json(D.vertex(a));
    c.erase("format_version");
    verts[P.label(a).str()] = std::move(c);
  }
  for (const auto& [e, f] : D.edges()) {
    json blocks = json::array();
    for (int n = 0; n < D.period(); ++n) blocks.push_back(io::flat(f.block(n).to_dense()));
    edges["(" + P.label(e.first).str() + "," + P.label(e.second).str() + ")"] = json{{"blocks", blocks}};
  }
  return json{{"format_version", format_version}, {"kind", "crowned_diagram"}, {"period", X.period()},
              {"vertices", verts}, {"edges", edges}};
}

inline CrownedDiagram crowned_from_json(const json& j, Warnings* w = nullptr, const std::string& path = "") {
  io::check_header(j, path, "crowned_diagram", w);
  const int N = static_cast<int>(io::read_small(io::field(j, path, "period"), path + ".period", 2, 1 << 16));
  const posetkit::CrownIndex ci{N};
  const auto shape = posetkit::crown(N);
  const json& vj = io::field(j, path, "vertices");
  const json& ej = io::field(j, path, "edges");
  std::vector<ComplexPtr> b(N), z(N);
  auto vertex = [&](std::size_t a) {
    const std::string key = shape.label(a).str();
    const std::string p = path + ".vertices." + key;
    const json& c = io::field(vj, path + ".vertices", key.c_str());
    auto cx = complex_from_json(c, nullptr, p);
    if (cx.period() != N) io::schema(p + ".period", "vertex period differs from diagram period");
    return percomplex::share(std::move(cx));
  };
  for (int i = 0; i < N; ++i) {
    b[i] = vertex(ci.beta(i));
    z[i] = vertex(ci.zeta(i));
  }
  auto edge = [&](long long from, long long to, const ComplexPtr& s, const ComplexPtr& t) {
    const std::string key = "(" + shape.label(from).str() + "," + shape.label(to).str() + ")";
    const std::string p = path + ".edges." + key;
    const json& bj = io::array(io::field(io::field(ej, path + ".edges", key.c_str()), p, "blocks"), p + ".blocks", N);
    std::vector<SparseMatrix> blocks;
    for (int n = 0; n < N; ++n)
      blocks.push_back(SparseMatrix::from_dense(io::read_flat(bj[n], p + ".blocks[" + std::to_string(n) + "]", t->rank(n), s->rank(n))));
    try {
      return ChainMap(s, t, std::move(blocks));
    } catch (const Error& e) {
      io::schema(p, e.what());
    }
  };
  std::vector<ChainMap> ls, ks;
  for (int i = 0; i < N; ++i) {
    ls.push_back(edge(ci.beta(i), ci.zeta(i), b[i], z[i]));
    ks.push_back(edge(ci.beta(i - 1), ci.zeta(i), b[slot_mod(i - 1, N)], z[i]));
  }
  try {
    return realization::make_crowned(N, b, z, ls, ks);
  } catch (const Error& e) {
    io::schema(path, e.what());
  }
}

inline json to_json(const CrownedRecipe& r) {
  json lam = json::array(), disks = json::array();
  for (const auto& l : r.lambda) lam.push_back(io::matrix(l));
  for (const auto& d : r.disks) disks.push_back(d);
  return json{{"format_version", format_version}, {"kind", "crowned_recipe"}, {"period", r.period},
              {"lambda", lam}, {"disks", disks}, {"seed", std::to_string(r.seed)}, {"max_entry", r.max_entry},
              {"homotopies", r.homotopies}, {"basis_change", r.basis_change}};
}

inline CrownedRecipe recipe_from_json(const json& j, Warnings* w = nullptr, const std::string& path = "") {
  io::check_header(j, path, "crowned_recipe", w);
  CrownedRecipe r;
  r.period = static_cast<int>(io::read_small(io::field(j, path, "period"), path + ".period", 2, 1 << 16));
  const json& lj = io::array(io::field(j, path, "lambda"), path + ".lambda", r.period);
  for (int i = 0; i < r.period; ++i) r.lambda.push_back(io::read_matrix(lj[i], path + ".lambda[" + std::to_string(i) + "]"));
  const json& dj = io::array(io::field(j, path, "disks"), path + ".disks", 2 * static_cast<std::size_t>(r.period));
  for (std::size_t v = 0; v < dj.size(); ++v) {
    const std::string p = path + ".disks[" + std::to_string(v) + "]";
    if (!dj[v].is_array()) io::schema(p, "expected an array");
    std::vector<int> tops;
    for (std::size_t k = 0; k < dj[v].size(); ++k)
      tops.push_back(static_cast<int>(io::read_small(dj[v][k], p + "[" + std::to_string(k) + "]", 0, r.period - 1)));
    r.disks.push_back(std::move(tops));
  }
  r.seed = io::read_seed(io::field(j, path, "seed"), path + ".seed");
  r.max_entry = static_cast<int>(io::read_small(io::field(j, path, "max_entry"), path + ".max_entry", 0, 1 << 20));
  const json& h = io::field(j, path, "homotopies");
  const json& bc = io::field(j, path, "basis_change");
  if (!h.is_boolean()) io::schema(path + ".homotopies", "expected a boolean");
  if (!bc.is_boolean()) io::schema(path + ".basis_change", "expected a boolean");
  r.homotopies = h.get<bool>();
  r.basis_change = bc.get<bool>();
  return r;
}

/// Chain maps are written with both ends so that they replay on their own.
inline json to_json(const ChainMap& f) {
  json blocks = json::array();
  for (int n = 0; n < f.period(); ++n) blocks.push_back(io::flat(f.block(n).to_dense()));
  json s = to_json(f.source()), t = to_json(f.target());
  s.erase("format_version");
  t.erase("format_version");
  return json{{"format_version", format_version}, {"kind", "chain_map"}, {"source", s}, {"target", t}, {"blocks", blocks}};
}

inline ChainMap chain_map_from_json(const json& j, Warnings* w = nullptr, const std::string& path = "") {
  io::check_header(j, path, "chain_map", w);
  const ComplexPtr s = percomplex::share(complex_from_json(io::field(j, path, "source"), nullptr, path + ".source"));
  const ComplexPtr t = percomplex::share(complex_from_json(io::field(j, path, "target"), nullptr, path + ".target"));
  if (s->period() != t->period()) io::schema(path, "source and target periods differ");
  const int N = s->period();
  const json& bj = io::array(io::field(j, path, "blocks"), path + ".blocks", N);
  std::vector<SparseMatrix> blocks;
  for (int n = 0; n < N; ++n)
    blocks.push_back(SparseMatrix::from_dense(io::read_flat(bj[n], path + ".blocks[" + std::to_string(n) + "]", t->rank(n), s->rank(n))));
  try {
    return ChainMap(s, t, std::move(blocks));
  } catch (const Error& e) {
    io::schema(path, e.what());
  }
}

/// Parses text, turning syntax errors into ParseError with the line and column.
inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::parse_error, e.what());
  }
}

}  // namespace franke::verify
