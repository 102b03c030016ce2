#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kreweras {

using HalfEdge = std::uint32_t;
using VertexId = std::uint32_t;

/// An edge is named by the smaller of its two half-edge ids.
using EdgeId = std::uint32_t;

/// Rotation system of a rooted planar map, possibly carrying legs.
///
/// Half-edges are numbered 0..H-1. sigma gives the counterclockwise successor
/// around the incident vertex; alpha pairs the two half-edges of a complete
/// edge and leaves legs unpaired (-1). Vertices are the sigma-cycles, numbered
/// by their smallest half-edge.
///
/// Construction validates the whole structure: sigma a permutation, alpha an
/// involution without fixed points on its domain, connectivity under
/// <sigma, alpha>, and for closed maps Euler's relation V - E + F = 2 (only
/// genus-0 systems are accepted). A map with legs must declare a head; the
/// head must itself be a leg and every leg must lie on the head-face. Maps are
/// immutable once built.
class PlanarMap {
public:
  static PlanarMap make(std::vector<HalfEdge> sigma, std::vector<std::int32_t> alpha,
                        HalfEdge root, std::optional<HalfEdge> head = std::nullopt);

  /// Assembles a map from parts the caller guarantees to be mutually
  /// consistent and to satisfy every invariant make() checks. Construction
  /// sites that build the rotation system invariant-by-invariant use this to
  /// skip re-validation and the derived-data recomputation: vertex_of must
  /// label the sigma-cycles in order of their smallest half-edge, degree must
  /// hold the cycle lengths in that order, and face_count must equal the
  /// number of face-tour orbits.
  static PlanarMap make_unchecked(std::vector<HalfEdge> sigma,
                                  std::vector<std::int32_t> alpha, HalfEdge root,
                                  std::optional<HalfEdge> head,
                                  std::vector<VertexId> vertex_of,
                                  std::vector<std::uint32_t> degree,
                                  std::uint32_t leg_count, std::uint32_t face_count);

  std::uint32_t half_edge_count() const { return static_cast<std::uint32_t>(sigma_.size()); }
  HalfEdge sigma(HalfEdge h) const { return sigma_[h]; }
  std::int32_t alpha(HalfEdge h) const { return alpha_[h]; }
  bool is_leg(HalfEdge h) const { return alpha_[h] < 0; }
  HalfEdge partner(HalfEdge h) const { return static_cast<HalfEdge>(alpha_[h]); }
  HalfEdge root() const { return root_; }
  std::optional<HalfEdge> head() const { return head_; }

  VertexId vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  VertexId root_vertex() const { return vertex_of_[root_]; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(degree_.size()); }
  std::uint32_t edge_count() const { return edge_count_; }
  std::uint32_t leg_count() const { return leg_count_; }
  std::uint32_t face_count() const { return face_count_; }
  bool closed() const { return leg_count_ == 0; }
  std::uint32_t degree(VertexId v) const { return degree_[v]; }

  /// Face-tour successor: sigma(alpha(h)) for a paired half-edge,
  /// sigma(h) for a leg.
  HalfEdge face_next(HalfEdge h) const { return is_leg(h) ? sigma_[h] : sigma_[alpha_[h]]; }

  EdgeId edge_of(HalfEdge h) const;  // pre: h is paired
  std::vector<EdgeId> edges() const;
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::vector<HalfEdge> legs() const;

private:
  PlanarMap() = default;

  std::vector<HalfEdge> sigma_;
  std::vector<std::int32_t> alpha_;
  HalfEdge root_ = 0;
  std::optional<HalfEdge> head_;
  std::vector<VertexId> vertex_of_;
  std::vector<std::uint32_t> degree_;
  std::uint32_t edge_count_ = 0;
  std::uint32_t leg_count_ = 0;
  std::uint32_t face_count_ = 0;
};

struct MapStats {
  std::uint32_t vertex_count = 0;
  std::uint32_t edge_count = 0;
  std::uint32_t face_count = 0;
  std::uint32_t leg_count = 0;
  std::vector<std::uint32_t> degrees;  // ascending multiset

  /// (n, k) when the map is closed and k-near-cubic: the root-vertex has
  /// degree k, every other vertex degree 3, and both E = 3n + 2k - 3 and
  /// V = 2n + k - 1 hold.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> near_cubic_size;
};

MapStats stats(const PlanarMap& m);

/// Legs met on the tour of the head-face starting from the head, in tour
/// order, the head itself excluded. Throws when the map has no head.
std::vector<HalfEdge> head_face_legs(const PlanarMap& m);

/// True when deleting e disconnects the underlying multigraph.
bool is_bridge(const PlanarMap& m, EdgeId e);
std::vector<EdgeId> bridges(const PlanarMap& m);

/// True when the edge set admits no split into two nonempty parts meeting in
/// a single vertex. Equivalently, for two or more edges: no loop and no cut
/// vertex; maps with at most one edge are non-separable.
bool is_non_separable(const PlanarMap& m);

}  // namespace kreweras
