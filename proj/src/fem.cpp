#include "viscomem/fem.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace viscomem {

namespace {

constexpr std::array<double, 3> kGaussPoints = {0.1127016653792583114820734600217600,  // (1 - sqrt(3/5)) / 2
                                                0.5, 0.8872983346207416885179265399782400};
constexpr std::array<double, 3> kGaussWeights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

// 1D interior operators: entries from the element integrals of linear hats.
SparseMatrix tridiagonal(int m, double diag, double off) {
  const int n = m - 1;
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(3 * n);
  for (int r = 0; r < n; ++r) {
    entries.emplace_back(r, r, diag);
    if (r > 0) entries.emplace_back(r, r - 1, off);
    if (r + 1 < n) entries.emplace_back(r, r + 1, off);
  }
  SparseMatrix out(n, n);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

// outer acts on the slow (y) index, inner on the fast (x) index.
SparseMatrix kron(const SparseMatrix& outer, const SparseMatrix& inner) {
  const Eigen::Index n = inner.rows();
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(outer.nonZeros() * inner.nonZeros());
  for (int oc = 0; oc < outer.outerSize(); ++oc) {
    for (SparseMatrix::InnerIterator o(outer, oc); o; ++o) {
      for (int ic = 0; ic < inner.outerSize(); ++ic) {
        for (SparseMatrix::InnerIterator in(inner, ic); in; ++in) {
          entries.emplace_back(o.row() * n + in.row(), o.col() * n + in.col(),
                               o.value() * in.value());
        }
      }
    }
  }
  SparseMatrix out(outer.rows() * n, outer.cols() * n);
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

}  // namespace

Mesh::Mesh(int dim, int subdivisions) : dim_(dim), m_(subdivisions) {
  if (dim != 1 && dim != 2) {
    std::ostringstream msg;
    msg << "mesh dimension must be 1 or 2, got " << dim;
    throw std::invalid_argument(msg.str());
  }
  if (subdivisions < 2) {
    std::ostringstream msg;
    msg << "mesh needs at least 2 subdivisions, got " << subdivisions;
    throw std::invalid_argument(msg.str());
  }
}

std::size_t Mesh::n_interior() const {
  const auto n = static_cast<std::size_t>(m_ - 1);
  return dim_ == 1 ? n : n * n;
}

std::size_t Mesh::index(int i, int j) const {
  const bool ok = i >= 1 && i <= m_ - 1 && (dim_ == 1 ? j == 1 : (j >= 1 && j <= m_ - 1));
  if (!ok) {
    std::ostringstream msg;
    msg << "node (" << i << ", " << j << ") is not an interior node of a " << dim_
        << "D mesh with M = " << m_;
    throw std::out_of_range(msg.str());
  }
  return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(m_ - 1) +
         static_cast<std::size_t>(i - 1);
}

const char* to_string(MassMatrix kind) {
  return kind == MassMatrix::consistent ? "consistent" : "lumped";
}

MassMatrix mass_matrix_from_string(const std::string& name) {
  if (name == "consistent") return MassMatrix::consistent;
  if (name == "lumped") return MassMatrix::lumped;
  throw std::invalid_argument("unknown mass matrix '" + name + "' (expected consistent or lumped)");
}

DiscreteOperators assemble(const Mesh& mesh, MassMatrix mass) {
  const int m = mesh.subdivisions();
  const double h = mesh.h();
  SparseMatrix mass1 = mass == MassMatrix::consistent ? tridiagonal(m, 4.0 * h / 6.0, h / 6.0)
                                                      : tridiagonal(m, h, 0.0);
  SparseMatrix stiff1 = tridiagonal(m, 2.0 / h, -1.0 / h);
  if (mesh.dim() == 1) return {std::move(mass1), std::move(stiff1)};

  // Bilinear elements are tensor products of the 1D hats.
  SparseMatrix mass2 = kron(mass1, mass1);
  SparseMatrix stiff2 = kron(stiff1, mass1);
  stiff2 += kron(mass1, stiff1);
  return {std::move(mass2), std::move(stiff2)};
}

double mass_norm_sq(const DiscreteOperators& ops, const Vector& v) { return v.dot(ops.mass * v); }

double stiffness_norm_sq(const DiscreteOperators& ops, const Vector& v) {
  return v.dot(ops.stiffness * v);
}

Vector interpolate(const Mesh& mesh, const SpaceField& g) {
  const int m = mesh.subdivisions();
  Vector out(mesh.n_interior());
  if (mesh.dim() == 1) {
    for (int i = 1; i < m; ++i) out[mesh.index(i)] = g(mesh.coordinate(i), 0.0);
    return out;
  }
  for (int j = 1; j < m; ++j)
    for (int i = 1; i < m; ++i) out[mesh.index(i, j)] = g(mesh.coordinate(i), mesh.coordinate(j));
  return out;
}

Vector load_vector(const Mesh& mesh, const SpaceTimeField& f, double t) {
  const int m = mesh.subdivisions();
  const double h = mesh.h();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(mesh.n_interior()));

  if (mesh.dim() == 1) {
    for (int c = 0; c < m; ++c) {
      double left = 0.0;
      double right = 0.0;
      for (std::size_t q = 0; q < kGaussPoints.size(); ++q) {
        const double xi = kGaussPoints[q];
        const double fv = f(h * (c + xi), 0.0, t) * kGaussWeights[q] * h;
        left += fv * (1.0 - xi);
        right += fv * xi;
      }
      if (c >= 1) out[mesh.index(c)] += left;
      if (c + 1 <= m - 1) out[mesh.index(c + 1)] += right;
    }
    return out;
  }

  for (int cy = 0; cy < m; ++cy) {
    for (int cx = 0; cx < m; ++cx) {
      // Local corner order: (cx, cy), (cx+1, cy), (cx, cy+1), (cx+1, cy+1).
      std::array<double, 4> local{};
      for (std::size_t qy = 0; qy < kGaussPoints.size(); ++qy) {
        const double eta = kGaussPoints[qy];
        for (std::size_t qx = 0; qx < kGaussPoints.size(); ++qx) {
          const double xi = kGaussPoints[qx];
          const double fv =
              f(h * (cx + xi), h * (cy + eta), t) * kGaussWeights[qx] * kGaussWeights[qy] * h * h;
          local[0] += fv * (1.0 - xi) * (1.0 - eta);
          local[1] += fv * xi * (1.0 - eta);
          local[2] += fv * (1.0 - xi) * eta;
          local[3] += fv * xi * eta;
        }
      }
      for (int corner = 0; corner < 4; ++corner) {
        const int i = cx + (corner & 1);
        const int j = cy + (corner >> 1);
        if (i >= 1 && i <= m - 1 && j >= 1 && j <= m - 1) out[mesh.index(i, j)] += local[corner];
      }
    }
  }
  return out;
}

double gradient_sample(const Mesh& mesh, const Vector& u, int i, int j) {
  if (static_cast<std::size_t>(u.size()) != mesh.n_interior())
    throw std::invalid_argument("gradient_sample: vector size does not match mesh");
  const std::size_t self = mesh.index(i, j);
  const double h = mesh.h();
  if (mesh.dim() == 1) {
    const double prev = i > 1 ? u[mesh.index(i - 1)] : 0.0;
    return (u[self] - prev) / h;
  }
  const double west = i > 1 ? u[mesh.index(i - 1, j)] : 0.0;
  const double south = j > 1 ? u[mesh.index(i, j - 1)] : 0.0;
  const double dx = (u[self] - west) / h;
  const double dy = (u[self] - south) / h;
  return std::sqrt(dx * dx + dy * dy);
}

std::vector<double> gradient_samples(const Mesh& mesh, const Vector& u) {
  std::vector<double> out;
  out.reserve(mesh.n_interior());
  const int m = mesh.subdivisions();
  if (mesh.dim() == 1) {
    for (int i = 1; i < m; ++i) out.push_back(gradient_sample(mesh, u, i));
    return out;
  }
  for (int j = 1; j < m; ++j)
    for (int i = 1; i < m; ++i) out.push_back(gradient_sample(mesh, u, i, j));
  return out;
}

}  // namespace viscomem
