#include "binomeul/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace binomeul {

Vertex Vertex::base(int i) {
  if (i < 1) throw DomainError("vertex index must be positive");
  Vertex v;
  v.kind_ = Kind::base;
  v.index_ = i;
  return v;
}

Vertex Vertex::antipode(int i) {
  if (i < 1) throw DomainError("vertex index must be positive");
  Vertex v;
  v.kind_ = Kind::antipode;
  v.index_ = i;
  return v;
}

Vertex Vertex::chain(std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  if (subset.empty()) throw DomainError("chain vertex needs a nonempty subset");
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end() || subset.front() < 1)
    throw DomainError("chain vertex needs a subset of positive integers");
  Vertex v;
  v.kind_ = Kind::chain;
  v.subset_ = std::move(subset);
  return v;
}

Vertex Vertex::mult(std::vector<Vertex> support, std::vector<int> counts) {
  if (support.size() != counts.size()) throw DomainError("mult vertex: support and counts differ in length");
  std::vector<std::pair<Vertex, int>> pairs;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (counts[k] < 0) throw DomainError("mult vertex: negative multiplicity");
    if (counts[k] > 0) pairs.emplace_back(std::move(support[k]), counts[k]);
  }
  if (pairs.empty()) throw DomainError("mult vertex needs a positive multiplicity");
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Vertex v;
  v.kind_ = Kind::mult;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k > 0 && pairs[k].first == pairs[k - 1].first) throw DomainError("mult vertex: repeated support vertex");
    v.parts_.push_back(std::move(pairs[k].first));
    v.counts_.push_back(pairs[k].second);
  }
  return v;
}

std::vector<int> Vertex::carrier() const {
  switch (kind_) {
    case Kind::base:
    case Kind::antipode:
      return {index_};
    case Kind::chain:
      return subset_;
    case Kind::mult: {
      std::vector<int> out;
      for (const auto& p : parts_) {
        auto c = p.carrier();
        out.insert(out.end(), c.begin(), c.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

std::string Vertex::token() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::base:
      os << 'v' << index_;
      break;
    case Kind::antipode:
      os << 'u' << index_;
      break;
    case Kind::chain:
      os << '{';
      for (std::size_t k = 0; k < subset_.size(); ++k) os << (k ? "," : "") << subset_[k];
      os << '}';
      break;
    case Kind::mult:
      os << '[';
      for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k].token() << '^' << counts_[k];
      os << ']';
      break;
  }
  return os.str();
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  switch (a.kind_) {
    case Vertex::Kind::base:
    case Vertex::Kind::antipode:
      return a.index_ <=> b.index_;
    case Vertex::Kind::chain:
      if (a.subset_.size() != b.subset_.size()) return a.subset_.size() <=> b.subset_.size();
      return a.subset_ <=> b.subset_;
    case Vertex::Kind::mult: {
      // Lexicographic on the dense multiplicity vector over the parent order.
      std::size_t i = 0, j = 0;
      while (i < a.parts_.size() && j < b.parts_.size()) {
        auto c = a.parts_[i] <=> b.parts_[j];
        if (c == 0) {
          if (a.counts_[i] != b.counts_[j]) return a.counts_[i] <=> b.counts_[j];
          ++i, ++j;
        } else if (c < 0) {
          return std::strong_ordering::greater;  // b has multiplicity 0 there
        } else {
          return std::strong_ordering::less;
        }
      }
      if (i < a.parts_.size()) return std::strong_ordering::greater;
      if (j < b.parts_.size()) return std::strong_ordering::less;
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

bool is_subset(const Face& small, const Face& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::stable_sort(sets.begin(), sets.end(), [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> kept;
  for (auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.size() > s.size() && is_subset(s, k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void require_base(const SimplicialComplex& c, const char* what) {
  if (!c.base()) throw DomainError(std::string(what) + " needs a triangulation of a simplex");
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(const std::vector<std::vector<Vertex>>& generators,
                                                     std::optional<std::vector<int>> base) {
  SimplicialComplex c;
  for (const auto& g : generators) c.vertices_.insert(c.vertices_.end(), g.begin(), g.end());
  std::sort(c.vertices_.begin(), c.vertices_.end());
  c.vertices_.erase(std::unique(c.vertices_.begin(), c.vertices_.end()), c.vertices_.end());
  std::vector<Face> faces;
  faces.reserve(generators.size());
  for (const auto& g : generators) {
    Face f;
    for (const auto& v : g) f.push_back(c.index_of(v));
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw DomainError("face lists a vertex twice");
    faces.push_back(std::move(f));
  }
  c.facets_ = maximal_sets(std::move(faces));
  if (base) std::sort(base->begin(), base->end());
  c.base_ = std::move(base);
  return c;
}

int SimplicialComplex::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains_face(const Face& f) const {
  Face s = f;
  std::sort(s.begin(), s.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(s, g); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<Face> all;
  for (const auto& f : facets_) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Face s;
      for (std::size_t j = 0; j < k; ++j)
        if (mask >> j & 1U) s.push_back(f[j]);
      all.insert(std::move(s));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<std::vector<Vertex>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& f : facets_) {
    std::vector<Vertex> labels;
    for (int i : f) labels.push_back(vertices_[i]);
    out.push_back(std::move(labels));
  }
  return out;
}

SimplicialComplex simplex(int n) {
  if (n < 0) throw DomainError("simplex needs n >= 0");
  std::vector<Vertex> f;
  for (int i = 1; i <= n; ++i) f.push_back(Vertex::base(i));
  return SimplicialComplex::from_generators({f}, iota_vec(n));
}

SimplicialComplex barycentric_subdivision(int n) {
  if (n < 0) throw DomainError("barycentric subdivision needs n >= 0");
  std::vector<int> perm = iota_vec(n);
  std::vector<std::vector<Vertex>> facets;
  do {
    std::vector<Vertex> f;
    std::vector<int> prefix;
    for (int x : perm) {
      prefix.push_back(x);
      f.push_back(Vertex::chain(prefix));
    }
    facets.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SimplicialComplex::from_generators(facets, iota_vec(n));
}

namespace {

void weak_compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    weak_compositions(total - k, parts, cur, out);
    cur.pop_back();
  }
}

/// Bron-Kerbosch with pivoting over a dense adjacency matrix.
void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& clique, std::vector<int> cand,
                     std::vector<int> excl, std::vector<std::vector<int>>& out) {
  if (cand.empty() && excl.empty()) {
    out.push_back(clique);
    return;
  }
  int pivot = !cand.empty() ? cand.front() : excl.front();
  std::size_t best = 0;
  for (const auto* pool : {&cand, &excl}) {
    for (int u : *pool) {
      std::size_t deg = 0;
      for (int v : cand) deg += adj[u][v] ? 1 : 0;
      if (deg >= best) best = deg, pivot = u;
    }
  }
  std::vector<int> todo;
  for (int v : cand)
    if (!adj[pivot][v]) todo.push_back(v);
  for (int v : todo) {
    std::vector<int> nc, ne;
    for (int u : cand)
      if (adj[v][u]) nc.push_back(u);
    for (int u : excl)
      if (adj[v][u]) ne.push_back(u);
    clique.push_back(v);
    maximal_cliques(adj, clique, std::move(nc), std::move(ne), out);
    clique.pop_back();
    cand.erase(std::find(cand.begin(), cand.end(), v));
    excl.push_back(v);
  }
}

std::vector<std::vector<int>> all_maximal_cliques(const std::vector<std::vector<char>>& adj) {
  std::vector<int> cand(adj.size());
  std::iota(cand.begin(), cand.end(), 0);
  std::vector<int> clique;
  std::vector<std::vector<int>> out;
  maximal_cliques(adj, clique, std::move(cand), {}, out);
  return out;
}

}  // namespace

SimplicialComplex edgewise_subdivision(const SimplicialComplex& complex, int r) {
  if (r < 1) throw DomainError("edgewise subdivision needs r >= 1");
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : complex.facets()) {
    const int d = static_cast<int>(f.size());
    if (d == 0) {
      facets.emplace_back();
      continue;
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    weak_compositions(r, d, cur, comps);
    // iota(x)_j = x_1 + ... + x_j
    std::vector<std::vector<int>> iota(comps.size());
    for (std::size_t k = 0; k < comps.size(); ++k) std::partial_sum(comps[k].begin(), comps[k].end(), std::back_inserter(iota[k]));
    std::vector<std::vector<char>> adj(comps.size(), std::vector<char>(comps.size(), 0));
    for (std::size_t a = 0; a < comps.size(); ++a) {
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        bool up = true, down = true;
        for (int j = 0; j < d; ++j) {
          const int diff = iota[a][j] - iota[b][j];
          up = up && (diff == 0 || diff == 1);
          down = down && (diff == 0 || diff == -1);
        }
        adj[a][b] = adj[b][a] = (up || down) ? 1 : 0;
      }
    }
    std::vector<Vertex> parents;
    for (int i : f) parents.push_back(complex.vertices()[i]);
    for (const auto& clique : all_maximal_cliques(adj)) {
      if (static_cast<int>(clique.size()) != d) throw IdentityError("edgewise subdivision produced a non-pure cell");
      std::vector<Vertex> facet;
      for (int k : clique) facet.push_back(Vertex::mult(parents, comps[k]));
      facets.push_back(std::move(facet));
    }
  }
  return SimplicialComplex::from_generators(facets, complex.base());
}

SimplicialComplex gamma_nr(int n, int r) { return edgewise_subdivision(barycentric_subdivision(n), r); }

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const std::vector<int>& vertex_indices) {
  std::vector<char> keep(complex.vertices().size(), 0);
  for (int i : vertex_indices) keep.at(static_cast<std::size_t>(i)) = 1;
  std::vector<std::vector<Vertex>> gens;
  for (const auto& f : complex.facets()) {
    std::vector<Vertex> g;
    for (int i : f)
      if (keep[i]) g.push_back(complex.vertices()[i]);
    gens.push_back(std::move(g));
  }
  if (gens.empty()) gens.emplace_back();
  return SimplicialComplex::from_generators(gens);
}

SimplicialComplex restriction(const SimplicialComplex& complex, const std::vector<int>& face) {
  require_base(complex, "restriction");
  std::vector<int> f = face;
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (!std::includes(complex.base()->begin(), complex.base()->end(), f.begin(), f.end()))
    throw DomainError("restriction face is not a face of the base simplex");
  std::vector<int> keep;
  for (std::size_t i = 0; i < complex.vertices().size(); ++i) {
    auto c = complex.vertices()[i].carrier();
    if (std::includes(f.begin(), f.end(), c.begin(), c.end())) keep.push_back(static_cast<int>(i));
  }
  auto sub = induced_subcomplex(complex, keep);
  return SimplicialComplex::from_generators(sub.facet_labels(), f);
}

SimplicialComplex delta_of(const SimplicialComplex& complex) {
  require_base(complex, "Delta(Gamma)");
  const auto& base = *complex.base();
  const std::size_t n = base.size();
  std::vector<std::vector<Vertex>> facets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Vertex> antipodes;
    std::vector<int> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1U)
        antipodes.push_back(Vertex::antipode(base[j]));
      else
        rest.push_back(base[j]);
    }
    for (auto g : restriction(complex, rest).facet_labels()) {
      g.insert(g.end(), antipodes.begin(), antipodes.end());
      facets.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_generators(facets);
}

std::vector<mpz_class> f_vector(const SimplicialComplex& complex) {
  std::vector<mpz_class> f(static_cast<std::size_t>(complex.dimension() + 2));
  if (complex.facets().empty()) return {};
  for (const auto& face : complex.faces()) f[face.size()] += 1;
  return f;
}

IntPolynomial h_polynomial(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw DomainError("h-polynomial needs a pure complex");
  const auto f = f_vector(complex);
  const int n = complex.dimension() + 1;
  // h(t) = sum_i f_{i-1} t^i (1 - t)^{n-i}
  IntPolynomial h;
  for (int i = 0; i <= n; ++i) {
    std::vector<mpz_class> term;
    for (int k = 0; k <= n - i; ++k) term.push_back(binomial(n - i, k) * ((k % 2) ? -1 : 1) * f[i]);
    h += IntPolynomial(std::move(term)).shifted(static_cast<std::size_t>(i));
  }
  return h;
}

IntPolynomial local_h(const SimplicialComplex& complex) {
  require_base(complex, "local h-polynomial");
  const auto& base = *complex.base();
  const std::size_t n = base.size();
  IntPolynomial out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> face;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1U) face.push_back(base[j]);
    auto h = h_polynomial(restriction(complex, face));
    if ((n - face.size()) % 2) h = -h;
    out += h;
  }
  return out;
}

bool is_flag(const SimplicialComplex& complex) {
  const std::size_t nv = complex.vertices().size();
  std::vector<std::vector<char>> adj(nv, std::vector<char>(nv, 0));
  for (const auto& f : complex.facets())
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b) adj[f[a]][f[b]] = adj[f[b]][f[a]] = 1;
  for (auto clique : all_maximal_cliques(adj)) {
    std::sort(clique.begin(), clique.end());
    if (!complex.contains_face(clique)) return false;
  }
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& complex) {
  if (!complex.is_pure() || complex.facets().empty()) return false;
  std::map<Face, int> ridges;
  for (const auto& f : complex.facets()) {
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      Face r;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != skip) r.push_back(f[j]);
      ++ridges[r];
    }
  }
  return std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
}

mpz_class reduced_euler_characteristic(const SimplicialComplex& complex) {
  mpz_class chi = 0;
  const auto f = f_vector(complex);
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0) ? -f[k] : f[k];  // f[k] = f_{k-1}
  return chi;
}

Vertex relabel(const Vertex& v, const std::vector<int>& mapping) {
  auto map_index = [&](int i) {
    if (i < 1 || static_cast<std::size_t>(i) > mapping.size()) throw DomainError("relabel map does not cover index");
    return mapping[static_cast<std::size_t>(i) - 1];
  };
  switch (v.kind()) {
    case Vertex::Kind::base:
      return Vertex::base(map_index(v.index()));
    case Vertex::Kind::antipode:
      return Vertex::antipode(map_index(v.index()));
    case Vertex::Kind::chain: {
      std::vector<int> s;
      for (int i : v.subset()) s.push_back(map_index(i));
      return Vertex::chain(std::move(s));
    }
    case Vertex::Kind::mult: {
      std::vector<Vertex> parts;
      for (const auto& p : v.support()) parts.push_back(relabel(p, mapping));
      return Vertex::mult(std::move(parts), v.counts());
    }
  }
  return v;
}

SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& mapping) {
  std::vector<std::vector<Vertex>> facets;
  for (const auto& f : complex.facet_labels()) {
    std::vector<Vertex> g;
    for (const auto& v : f) g.push_back(relabel(v, mapping));
    facets.push_back(std::move(g));
  }
  std::optional<std::vector<int>> base;
  if (complex.base()) {
    base.emplace();
    for (int i : *complex.base()) base->push_back(mapping.at(static_cast<std::size_t>(i) - 1));
  }
  if (facets.empty()) return SimplicialComplex::from_generators({}, base);
  return SimplicialComplex::from_generators(facets, base);
}

VertexAction act(const std::vector<int>& w, const SimplicialComplex& complex) {
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != iota_vec(static_cast<int>(w.size()))) throw DomainError("action needs a permutation in one-line notation");
  VertexAction a{w, {}};
  for (const auto& v : complex.vertices()) {
    const int j = complex.index_of(relabel(v, w));
    if (j < 0) throw DomainError("permutation does not act on the vertex set");
    a.map.push_back(j);
  }
  std::set<Face> facets(complex.facets().begin(), complex.facets().end());
  for (const auto& f : complex.facets()) {
    Face g;
    for (int i : f) g.push_back(a.map[i]);
    std::sort(g.begin(), g.end());
    if (!facets.count(g)) throw DomainError("permutation does not act on the facets");
  }
  return a;
}

SimplicialComplex fixed_subcomplex(const SimplicialComplex& complex, const VertexAction& action) {
  for (const auto& face : complex.faces()) {
    Face image;
    for (int i : face) image.push_back(action.map[i]);
    std::sort(image.begin(), image.end());
    if (image != face) continue;
    for (int i : face)
      if (!action.fixes(i)) throw DomainError("action is not proper: a fixed face is not fixed pointwise");
  }
  std::vector<int> fixed;
  for (std::size_t i = 0; i < complex.vertices().size(); ++i)
    if (action.fixes(static_cast<int>(i))) fixed.push_back(static_cast<int>(i));
  return induced_subcomplex(complex, fixed);
}

}  // namespace binomeul
