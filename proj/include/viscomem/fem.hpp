#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "viscomem/types.hpp"

namespace viscomem {

/// Uniform mesh of (0,1) or (0,1)^2 with M subdivisions per axis and
/// homogeneous Dirichlet boundary. Unknowns live on interior nodes only;
/// interior node (i, j), 1 <= i, j <= M-1, has index (j-1)(M-1) + (i-1).
class Mesh {
 public:
  Mesh(int dim, int subdivisions);

  int dim() const { return dim_; }
  int subdivisions() const { return m_; }
  double h() const { return 1.0 / m_; }
  std::size_t n_interior() const;

  std::size_t index(int i, int j = 1) const;
  double coordinate(int i) const { return i * h(); }

  friend bool operator==(const Mesh&, const Mesh&) = default;

 private:
  int dim_;
  int m_;
};

/// Consistent (exact element integrals) or lumped (row sums on the diagonal) mass.
enum class MassMatrix { consistent, lumped };

const char* to_string(MassMatrix kind);
MassMatrix mass_matrix_from_string(const std::string& name);

/// Mass and stiffness matrices of linear (1D) / bilinear (2D) elements,
/// restricted to interior nodes.
struct DiscreteOperators {
  SparseMatrix mass;
  SparseMatrix stiffness;
};

DiscreteOperators assemble(const Mesh& mesh, MassMatrix mass = MassMatrix::consistent);

/// v^T M v, i.e. the squared L2 norm of the finite-element function.
double mass_norm_sq(const DiscreteOperators& ops, const Vector& v);
/// v^T A v, i.e. the squared L2 norm of its gradient.
double stiffness_norm_sq(const DiscreteOperators& ops, const Vector& v);

Vector interpolate(const Mesh& mesh, const SpaceField& g);

/// Entries (f(., t), psi) per interior basis function, by 3-point (per axis)
/// Gauss quadrature on each cell.
Vector load_vector(const Mesh& mesh, const SpaceTimeField& f, double t);

/// Backward-difference gradient sample at interior node (i, j), with zero
/// boundary values: 1D (U_i - U_{i-1}) / h; 2D the Euclidean norm of the
/// backward differences in x and y. Throws std::out_of_range for bad indices.
double gradient_sample(const Mesh& mesh, const Vector& u, int i, int j = 1);

/// All gradient samples in interior index order.
std::vector<double> gradient_samples(const Mesh& mesh, const Vector& u);

}  // namespace viscomem
