#pragma once

// Linear P1 triangular finite elements for 2D plane-strain elasticity:
// stiffness/load assembly, symmetric Dirichlet elimination, boundary traces
// and per-element stress recovery. Dof layout is interleaved (2*node+comp).

#include "wcontact/common.hpp"
#include "wcontact/model.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

namespace wcontact {

struct DofMap {
  int n_nodes = 0;
  std::vector<int> free_index;  // size 2*n_nodes, reduced index or -1 if constrained (to zero)
  std::vector<int> free_dofs;   // reduced index -> full dof id

  int n_full() const { return 2 * n_nodes; }
  int n_free() const { return int(free_dofs.size()); }
  int dof(int node, int comp) const { return 2 * node + comp; }

  static DofMap build(const BodyMesh& mesh) {
    DofMap m;
    m.n_nodes = int(mesh.nodes.size());
    std::vector<bool> constrained(size_t(m.n_full()), false);
    for (const auto& be : mesh.boundary_edges) {
      if (be.kind == EdgeKind::dirichlet_full) {
        for (int node : {be.a, be.b})
          for (int c = 0; c < 2; ++c) constrained[size_t(2 * node + c)] = true;
      } else if (be.kind == EdgeKind::dirichlet_normal) {
        const Vec2 d = mesh.nodes[size_t(be.b)] - mesh.nodes[size_t(be.a)];
        int comp;
        if (std::abs(d.x()) <= 1e-12 * d.norm()) comp = 0;       // vertical edge -> clamp u1
        else if (std::abs(d.y()) <= 1e-12 * d.norm()) comp = 1;  // horizontal edge -> clamp u2
        else
          throw ConfigError("dirichlet_normal edge must be axis-aligned");
        constrained[size_t(2 * be.a + comp)] = true;
        constrained[size_t(2 * be.b + comp)] = true;
      }
    }
    m.free_index.assign(size_t(m.n_full()), -1);
    for (int i = 0; i < m.n_full(); ++i)
      if (!constrained[size_t(i)]) {
        m.free_index[size_t(i)] = int(m.free_dofs.size());
        m.free_dofs.push_back(i);
      }
    return m;
  }
};

struct SparseSystem {
  SpMat matrix;
  Vec rhs;
};

namespace detail {

/// Geometry of one P1 triangle: area and the constant strain-displacement
/// matrix B (3x6) mapping nodal displacements to (ε11, ε22, γ12).
struct ElementGeometry {
  double area;
  Eigen::Matrix<double, 3, 6> b;
};

inline ElementGeometry element_geometry(const BodyMesh& mesh, int e) {
  const auto& t = mesh.triangles[size_t(e)];
  const Vec2 p0 = mesh.nodes[size_t(t[0])];
  const Vec2 p1 = mesh.nodes[size_t(t[1])];
  const Vec2 p2 = mesh.nodes[size_t(t[2])];
  const double two_a = (p1.x() - p0.x()) * (p2.y() - p0.y()) -
                       (p1.y() - p0.y()) * (p2.x() - p0.x());
  const double area = 0.5 * two_a;
  double bc[3] = {p1.y() - p2.y(), p2.y() - p0.y(), p0.y() - p1.y()};
  double cc[3] = {p2.x() - p1.x(), p0.x() - p2.x(), p1.x() - p0.x()};
  ElementGeometry g;
  g.area = area;
  g.b.setZero();
  for (int i = 0; i < 3; ++i) {
    g.b(0, 2 * i) = bc[i] / two_a;
    g.b(1, 2 * i + 1) = cc[i] / two_a;
    g.b(2, 2 * i) = cc[i] / two_a;
    g.b(2, 2 * i + 1) = bc[i] / two_a;
  }
  return g;
}

}  // namespace detail

/// Full-dof stiffness matrix, symmetric PSD before constraints; each element
/// contributes area·BᵀDB. The matrix provider permits per-element material
/// overrides; only isotropic plane strain is exercised by the scenarios.
inline SpMat assemble_stiffness(const BodyMesh& mesh,
                                const std::function<Mat3(int)>& material_matrix,
                                const DofMap& dofs) {
  if (dofs.n_nodes != int(mesh.nodes.size()))
    throw ConfigError("assemble_stiffness: dof map does not match mesh");
  std::vector<Triplet> trips;
  trips.reserve(mesh.triangles.size() * 36);
  double mesh_scale = 0.0;
  for (const auto& p : mesh.nodes) mesh_scale = std::max(mesh_scale, p.cwiseAbs().maxCoeff());
  for (size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto g = detail::element_geometry(mesh, int(e));
    if (!(g.area > 1e-14 * std::max(1.0, mesh_scale * mesh_scale)))
      throw ConfigError(strfmt("assemble_stiffness: degenerate triangle %zu (area %g)",
                               e, g.area));
    const Mat3 d = material_matrix(int(e));
    const Eigen::Matrix<double, 6, 6> ke = g.area * g.b.transpose() * d * g.b;
    const auto& t = mesh.triangles[e];
    for (int i = 0; i < 3; ++i)
      for (int ci = 0; ci < 2; ++ci)
        for (int j = 0; j < 3; ++j)
          for (int cj = 0; cj < 2; ++cj)
            trips.emplace_back(dofs.dof(t[size_t(i)], ci), dofs.dof(t[size_t(j)], cj),
                               ke(2 * i + ci, 2 * j + cj));
  }
  SpMat k(dofs.n_full(), dofs.n_full());
  k.setFromTriplets(trips.begin(), trips.end());
  k.makeCompressed();
  return k;
}

inline SpMat assemble_stiffness(const BodyMesh& mesh, const IsotropicMaterial& mat,
                                const DofMap& dofs) {
  const Mat3 d = plane_strain_matrix(mat);
  return assemble_stiffness(mesh, [&d](int) { return d; }, dofs);
}

/// Full-dof load vector: one-point quadrature for the body force, trapezoid
/// rule for edge tractions.
inline Vec assemble_load(const BodyMesh& mesh, const LoadSpec& loads, const DofMap& dofs) {
  loads.validate(mesh);
  Vec l = Vec::Zero(dofs.n_full());
  if (loads.body_force) {
    for (size_t e = 0; e < mesh.triangles.size(); ++e) {
      const auto& t = mesh.triangles[e];
      const Vec2 centroid = (mesh.nodes[size_t(t[0])] + mesh.nodes[size_t(t[1])] +
                             mesh.nodes[size_t(t[2])]) / 3.0;
      const Vec2 f = loads.body_force(centroid);
      const double w = detail::element_geometry(mesh, int(e)).area / 3.0;
      for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 2; ++c) l[dofs.dof(t[size_t(i)], c)] += w * f[c];
    }
  }
  for (const auto& [edge, p] : loads.tractions) {
    const auto& be = mesh.boundary_edges[size_t(edge)];
    const double len = (mesh.nodes[size_t(be.b)] - mesh.nodes[size_t(be.a)]).norm();
    for (int node : {be.a, be.b})
      for (int c = 0; c < 2; ++c) l[dofs.dof(node, c)] += 0.5 * len * p[c];
  }
  return l;
}

inline Vec reduce_vector(const DofMap& dofs, const Vec& full) {
  Vec r(dofs.n_free());
  for (int i = 0; i < dofs.n_free(); ++i) r[i] = full[dofs.free_dofs[size_t(i)]];
  return r;
}

inline Vec expand_vector(const DofMap& dofs, const Vec& reduced) {
  Vec full = Vec::Zero(dofs.n_full());
  for (int i = 0; i < dofs.n_free(); ++i) full[dofs.free_dofs[size_t(i)]] = reduced[i];
  return full;
}

inline SpMat reduce_matrix(const DofMap& dofs, const SpMat& full) {
  std::vector<Triplet> trips;
  trips.reserve(size_t(full.nonZeros()));
  for (int k = 0; k < full.outerSize(); ++k)
    for (SpMat::InnerIterator it(full, k); it; ++it) {
      const int i = dofs.free_index[size_t(it.row())];
      const int j = dofs.free_index[size_t(it.col())];
      if (i >= 0 && j >= 0) trips.emplace_back(i, j, it.value());
    }
  SpMat r(dofs.n_free(), dofs.n_free());
  r.setFromTriplets(trips.begin(), trips.end());
  r.makeCompressed();
  return r;
}

/// Symmetric elimination of the constrained dofs (all prescribed zero).
inline SparseSystem apply_dirichlet(const SparseSystem& sys, const DofMap& dofs) {
  if (dofs.n_free() == dofs.n_full())
    throw ConfigError("apply_dirichlet: empty constraint set (need a nonempty Dirichlet part)");
  require_symmetric(sys.matrix);
  if (sys.matrix.rows() != dofs.n_full() || sys.rhs.size() != dofs.n_full())
    throw ConfigError("apply_dirichlet: system does not match dof map");
  return SparseSystem{reduce_matrix(dofs, sys.matrix), reduce_vector(dofs, sys.rhs)};
}

/// A straight, axis-aligned tagged contact segment with its constant outward
/// normal, nodes sorted along the segment and trapezoid tributary lengths.
struct ContactSegment {
  std::vector<int> nodes;
  std::vector<double> coord;      // running coordinate (x1 on horizontal segments)
  std::vector<double> tributary;  // cm, sums to the segment length
  Vec2 normal;                    // outward unit normal, axis-aligned
};

inline ContactSegment extract_contact_segment(const BodyMesh& mesh, int pair_id) {
  std::vector<const BoundaryEdge*> edges;
  for (const auto& be : mesh.boundary_edges)
    if (be.kind == EdgeKind::contact && be.pair_id == pair_id) edges.push_back(&be);
  if (edges.empty())
    throw ConfigError(strfmt("no contact edges tagged with pair %d", pair_id));

  std::set<int> node_set;
  for (const auto* be : edges) {
    node_set.insert(be->a);
    node_set.insert(be->b);
  }
  std::vector<int> nodes(node_set.begin(), node_set.end());

  // straight and axis-aligned: all nodes share x2 (horizontal) or x1 (vertical)
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (int n : nodes) {
    const Vec2& p = mesh.nodes[size_t(n)];
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }
  const double tol = 1e-12 * std::max({1.0, max_x - min_x, max_y - min_y});
  bool horizontal;
  if (max_y - min_y <= tol) horizontal = true;
  else if (max_x - min_x <= tol) horizontal = false;
  else
    throw ConfigError("contact segment is not straight and axis-aligned");

  ContactSegment seg;
  seg.nodes = std::move(nodes);
  std::sort(seg.nodes.begin(), seg.nodes.end(), [&](int a, int b) {
    const Vec2& pa = mesh.nodes[size_t(a)];
    const Vec2& pb = mesh.nodes[size_t(b)];
    return horizontal ? pa.x() < pb.x() : pa.y() < pb.y();
  });
  for (int n : seg.nodes) {
    const Vec2& p = mesh.nodes[size_t(n)];
    seg.coord.push_back(horizontal ? p.x() : p.y());
  }

  // consecutive sorted nodes must be joined by tagged edges (contiguous chain)
  std::set<std::pair<int, int>> edge_set;
  for (const auto* be : edges) edge_set.insert(std::minmax(be->a, be->b));
  for (size_t i = 0; i + 1 < seg.nodes.size(); ++i)
    if (!edge_set.count(std::minmax(seg.nodes[i], seg.nodes[i + 1])))
      throw ConfigError("contact segment edges do not form a contiguous chain");

  // outward normal from the owning triangle of the first edge, constant across edges
  std::map<std::pair<int, int>, std::pair<int, int>> owner;  // edge -> (triangle, third node)
  for (size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto& t = mesh.triangles[e];
    for (int k = 0; k < 3; ++k) {
      const auto key = std::minmax(t[size_t(k)], t[size_t((k + 1) % 3)]);
      owner[key] = {int(e), t[size_t((k + 2) % 3)]};
    }
  }
  bool have_normal = false;
  for (const auto* be : edges) {
    const auto it = owner.find(std::minmax(be->a, be->b));
    if (it == owner.end())
      throw ConfigError("contact edge is not an edge of any triangle");
    const Vec2 pa = mesh.nodes[size_t(be->a)];
    const Vec2 pb = mesh.nodes[size_t(be->b)];
    const Vec2 pc = mesh.nodes[size_t(it->second.second)];
    Vec2 t = (pb - pa).normalized();
    Vec2 n(t.y(), -t.x());
    if (n.dot(pc - pa) > 0.0) n = -n;  // outward points away from the interior
    if (!have_normal) {
      seg.normal = n;
      have_normal = true;
    } else if ((seg.normal - n).norm() > 1e-12) {
      throw ConfigError("contact segment has a non-constant normal");
    }
  }

  seg.tributary.assign(seg.nodes.size(), 0.0);
  for (size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
    const double len = std::abs(seg.coord[i + 1] - seg.coord[i]);
    seg.tributary[i] += 0.5 * len;
    seg.tributary[i + 1] += 0.5 * len;
  }
  return seg;
}

/// Per-node normal displacement u_n = n·u on the tagged contact segment,
/// ordered like the segment's sorted node list.
inline Vec normal_trace(const BodyMesh& mesh, const Vec& u_full, int pair_id) {
  const ContactSegment seg = extract_contact_segment(mesh, pair_id);
  Vec trace(seg.nodes.size());
  for (size_t i = 0; i < seg.nodes.size(); ++i) {
    const int n = seg.nodes[i];
    trace[Eigen::Index(i)] =
        seg.normal.x() * u_full[2 * n] + seg.normal.y() * u_full[2 * n + 1];
  }
  return trace;
}

/// Per-element constant stress triple (σ11, σ22, σ12) = D·B·uᵉ.
inline std::vector<std::array<double, 3>> recover_stresses(const BodyMesh& mesh,
                                                           const IsotropicMaterial& mat,
                                                           const Vec& u_full) {
  if (u_full.size() != Eigen::Index(2 * mesh.nodes.size()))
    throw ConfigError("recover_stresses: field does not match mesh");
  const Mat3 d = plane_strain_matrix(mat);
  std::vector<std::array<double, 3>> out(mesh.triangles.size());
  for (size_t e = 0; e < mesh.triangles.size(); ++e) {
    const auto g = detail::element_geometry(mesh, int(e));
    const auto& t = mesh.triangles[e];
    Eigen::Matrix<double, 6, 1> ue;
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < 2; ++c) ue[2 * i + c] = u_full[2 * t[size_t(i)] + c];
    const Eigen::Vector3d sigma = d * (g.b * ue);
    out[e] = {sigma[0], sigma[1], sigma[2]};
  }
  return out;
}

}  // namespace wcontact
