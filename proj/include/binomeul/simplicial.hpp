#pragma once

// Abstract simplicial complexes over canonically labeled, totally ordered
// vertices. The built-in families (simplex, barycentric subdivision, r-fold
// edgewise subdivision, the sphere Delta(Gamma)) label their vertices so that
// each label determines its carrier face of the underlying simplex; restriction
// to a face of the simplex is the subcomplex induced by carriers.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "binomeul/polyring.hpp"

namespace binomeul {

class Vertex {
 public:
  enum class Kind { base, antipode, chain, mult };

  /// v_i, vertex i of the simplex.
  static Vertex base(int i);
  /// u_i, vertex i of the antipodal simplex in Delta(Gamma).
  static Vertex antipode(int i);
  /// Barycenter of the face S (nonempty subset of [n]).
  static Vertex chain(std::vector<int> subset);
  /// Edgewise-subdivision vertex: multiplicities over parent vertices.
  static Vertex mult(std::vector<Vertex> support, std::vector<int> counts);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  const std::vector<int>& subset() const { return subset_; }
  const std::vector<Vertex>& support() const { return parts_; }
  const std::vector<int>& counts() const { return counts_; }

  /// Smallest face of the base simplex containing this point (sorted).
  std::vector<int> carrier() const;
  std::string token() const;

  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b);
  friend bool operator==(const Vertex& a, const Vertex& b) { return (a <=> b) == 0; }

 private:
  Kind kind_ = Kind::base;
  int index_ = 0;
  std::vector<int> subset_;
  std::vector<Vertex> parts_;
  std::vector<int> counts_;
};

/// Sorted vertex indices into SimplicialComplex::vertices().
using Face = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the complex generated by the given vertex sets; only the
  /// inclusion-maximal ones are kept as facets. `base` is the vertex set of
  /// the simplex this complex triangulates, when it is one.
  static SimplicialComplex from_generators(const std::vector<std::vector<Vertex>>& generators,
                                           std::optional<std::vector<int>> base = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::optional<std::vector<int>>& base() const { return base_; }

  /// -1 when absent.
  int index_of(const Vertex& v) const;
  /// Largest facet size minus one; -1 for the complex {empty face}.
  int dimension() const;
  bool is_pure() const;
  bool contains_face(const Face& f) const;
  /// Every face including the empty face, sorted.
  std::vector<Face> faces() const;
  std::vector<std::vector<Vertex>> facet_labels() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
  std::optional<std::vector<int>> base_;
};

SimplicialComplex simplex(int n);
/// Gamma_n: chains of nonempty subsets of [n].
SimplicialComplex barycentric_subdivision(int n);
/// esd_r(Delta) with respect to the vertex order of Delta.
SimplicialComplex edgewise_subdivision(const SimplicialComplex& complex, int r);
/// Gamma_{n,r} = esd_r(Gamma_n).
SimplicialComplex gamma_nr(int n, int r);
/// The triangulation restricted to the face `face` of its base simplex.
SimplicialComplex restriction(const SimplicialComplex& complex, const std::vector<int>& face);
/// Delta(Gamma): faces E u G with E in the antipodal simplex on I and G in Gamma restricted to [n] \ I.
SimplicialComplex delta_of(const SimplicialComplex& complex);
/// Subcomplex induced on the given vertex indices.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const std::vector<int>& vertex_indices);

/// (f_{-1}, f_0, ..., f_{d-1})
std::vector<mpz_class> f_vector(const SimplicialComplex& complex);
/// h-polynomial relative to n = dim + 1; requires a pure complex.
IntPolynomial h_polynomial(const SimplicialComplex& complex);
/// Local h-polynomial with respect to the base simplex.
IntPolynomial local_h(const SimplicialComplex& complex);
bool is_flag(const SimplicialComplex& complex);
/// Every codimension-one face lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& complex);
/// sum_{i >= -1} (-1)^i f_i
mpz_class reduced_euler_characteristic(const SimplicialComplex& complex);

/// Relabels base indices i -> mapping[i-1] throughout a vertex label.
Vertex relabel(const Vertex& v, const std::vector<int>& mapping);
SimplicialComplex relabel(const SimplicialComplex& complex, const std::vector<int>& mapping);

/// A permutation w of [n] acting on a complex through its vertex labels.
struct VertexAction {
  std::vector<int> w;
  /// map[i] = index of w . vertices()[i]
  std::vector<int> map;

  bool fixes(int vertex) const { return map[vertex] == vertex; }
};

/// Throws DomainError when w does not map the complex to itself.
VertexAction act(const std::vector<int>& w, const SimplicialComplex& complex);
/// Faces fixed by the action; throws DomainError when some fixed face is not fixed pointwise.
SimplicialComplex fixed_subcomplex(const SimplicialComplex& complex, const VertexAction& action);

}  // namespace binomeul
