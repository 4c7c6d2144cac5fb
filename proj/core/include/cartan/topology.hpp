#pragma once

// Finite topological spaces over a handful of abstract points, with the
// point-set operators (limit points, interior, closure, boundary),
// connectedness and continuity tests. Subsets are bit masks over the
// carrier, so carriers are limited to 64 points; everything is computed by
// exhaustive enumeration.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

/// Bit i set <=> carrier point i is in the subset.
using PointSet = std::uint64_t;

class FiniteTopology {
 public:
  /// `d_map[i]` is the exterior-derivative image of point i. The open sets
  /// are generated from `basis` by arbitrary unions, plus ∅ and the carrier.
  FiniteTopology(std::vector<std::string> labels, std::vector<PointSet> basis,
                 std::vector<PointSet> d_map);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<PointSet>& basis() const noexcept { return basis_; }
  /// Sorted ascending by mask value.
  const std::vector<PointSet>& opens() const noexcept { return opens_; }
  /// Complements of the opens, sorted ascending.
  std::vector<PointSet> closeds() const;
  PointSet d_map(std::size_t point) const { return d_map_.at(point); }
  /// Union of d_map over the points of `s`.
  PointSet d_image(PointSet s) const;

  PointSet carrier() const noexcept { return carrier_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(carrier_ & ~s); }

  /// Mask for the named points, or for a "A∪F" / "A,F" / "∅" / "X" string.
  PointSet set_of(std::span<const std::string_view> names) const;
  PointSet parse_set(std::string_view text) const;
  /// "∅", "X" for the whole carrier (when `use_x`), else labels joined by ∪.
  std::string format(PointSet s, bool use_x = true) const;

 private:
  std::vector<std::string> labels_;
  std::vector<PointSet> basis_;
  std::vector<PointSet> d_map_;
  std::vector<PointSet> opens_;
  PointSet carrier_;
};

/// Points p such that every open set containing p meets `s` in a point
/// other than p.
PointSet limit_points(const FiniteTopology& t, PointSet s);

struct TopoOperators {
  PointSet interior;
  PointSet boundary;
  PointSet closure;
};

/// interior = largest open subset of s; closure = s ∪ limit_points(s);
/// boundary = closure \ interior.
TopoOperators topo_operators(const FiniteTopology& t, PointSet s);

/// True iff limit_points(s) equals the d_map image of s for every subset s.
bool verify_d_is_limit_operator(const FiniteTopology& t);

/// True iff no proper nonempty subset is both open and closed.
bool is_connected(const FiniteTopology& t);

/// `f[i]` is the image (a dst point index) of src point i. True iff
/// f[closure(s)] ⊆ closure(f[s]) for every subset s of the src carrier.
bool map_continuous(const FiniteTopology& src, const FiniteTopology& dst,
                    std::span<const std::size_t> f);

/// Whether the open sets happen to be closed under pairwise intersection.
/// Not a topology axiom checked at construction; reported for inspection.
bool opens_closed_under_intersection(const FiniteTopology& t);

/// The generated topology on the first `count` points of the ladder
/// A, F, H, K, E5, E6, ...: basis {A, A∪F, H, H∪K, ...}, d: A↦F, H↦K, ...
FiniteTopology cartan_topology(std::size_t count);

/// Ladder label for element k (0-based): A, F, H, K, then E5, E6, ...
std::string ladder_label(std::size_t k);

}  // namespace cartan
