#include "cartan/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cartan/error.hpp"

namespace cartan {

namespace {

bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }

PointSet image(std::span<const std::size_t> f, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (s & (PointSet{1} << i)) out |= PointSet{1} << f[i];
  }
  return out;
}

}  // namespace

FiniteTopology::FiniteTopology(std::vector<std::string> labels,
                               std::vector<PointSet> basis,
                               std::vector<PointSet> d_map)
    : labels_(std::move(labels)),
      basis_(std::move(basis)),
      d_map_(std::move(d_map)) {
  if (labels_.empty()) throw ContextError("FiniteTopology: empty carrier");
  if (labels_.size() > 64) {
    throw ContextError("FiniteTopology: at most 64 carrier points");
  }
  if (d_map_.size() != labels_.size()) {
    throw ContextError("FiniteTopology: d_map needs one entry per point");
  }
  carrier_ = labels_.size() == 64 ? ~PointSet{0}
                                  : (PointSet{1} << labels_.size()) - 1;
  for (const PointSet b : basis_) {
    if (!subset_of(b, carrier_)) {
      throw ContextError("FiniteTopology: basis element outside the carrier");
    }
  }
  for (const PointSet d : d_map_) {
    if (!subset_of(d, carrier_)) {
      throw ContextError("FiniteTopology: d_map image outside the carrier");
    }
  }
  std::set<PointSet> opens{PointSet{0}, carrier_};
  opens.insert(basis_.begin(), basis_.end());
  // Arbitrary unions of a finite family reduce to closing under pairwise
  // union.
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointSet> current(opens.begin(), opens.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        grew |= opens.insert(current[i] | current[j]).second;
      }
    }
  }
  opens_.assign(opens.begin(), opens.end());
}

std::vector<PointSet> FiniteTopology::closeds() const {
  std::vector<PointSet> out;
  out.reserve(opens_.size());
  for (const PointSet o : opens_) out.push_back(carrier_ & ~o);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet FiniteTopology::d_image(PointSet s) const {
  PointSet out = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s & (PointSet{1} << i)) out |= d_map_[i];
  }
  return out;
}

bool FiniteTopology::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

PointSet FiniteTopology::set_of(std::span<const std::string_view> names) const {
  PointSet out = 0;
  for (const std::string_view name : names) {
    const auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) {
      throw ContextError("unknown carrier point '" + std::string(name) + "'");
    }
    out |= PointSet{1} << static_cast<std::size_t>(it - labels_.begin());
  }
  return out;
}

PointSet FiniteTopology::parse_set(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "∅") return 0;
  if (text == "X") return carrier_;
  std::vector<std::string_view> names;
  while (!text.empty()) {
    std::size_t cut = text.find("∪");
    std::size_t skip = std::string_view("∪").size();
    const std::size_t comma = text.find(',');
    if (comma < cut) {
      cut = comma;
      skip = 1;
    }
    names.push_back(trim(text.substr(0, cut)));
    if (cut == std::string_view::npos) break;
    text = text.substr(cut + skip);
  }
  return set_of(names);
}

std::string FiniteTopology::format(PointSet s, bool use_x) const {
  if (s == 0) return "∅";
  if (use_x && s == carrier_) return "X";
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s & (PointSet{1} << i)) {
      if (!out.empty()) out += "∪";
      out += labels_[i];
    }
  }
  return out;
}

PointSet limit_points(const FiniteTopology& t, PointSet s) {
  PointSet out = 0;
  for (std::size_t p = 0; p < t.size(); ++p) {
    const PointSet bit = PointSet{1} << p;
    const PointSet others = s & ~bit;
    bool limit = true;
    for (const PointSet o : t.opens()) {
      if ((o & bit) && (o & others) == 0) {
        limit = false;
        break;
      }
    }
    if (limit) out |= bit;
  }
  return out;
}

TopoOperators topo_operators(const FiniteTopology& t, PointSet s) {
  TopoOperators ops{0, 0, 0};
  for (const PointSet o : t.opens()) {
    if (subset_of(o, s)) ops.interior |= o;
  }
  ops.closure = s | limit_points(t, s);
  ops.boundary = ops.closure & ~ops.interior;
  return ops;
}

bool verify_d_is_limit_operator(const FiniteTopology& t) {
  for (PointSet s = 0;; ++s) {
    if (limit_points(t, s) != t.d_image(s)) return false;
    if (s == t.carrier()) return true;
  }
}

bool is_connected(const FiniteTopology& t) {
  for (const PointSet o : t.opens()) {
    if (o != 0 && o != t.carrier() && t.is_closed(o)) return false;
  }
  return true;
}

bool map_continuous(const FiniteTopology& src, const FiniteTopology& dst,
                    std::span<const std::size_t> f) {
  if (f.size() != src.size()) {
    throw ContextError("map_continuous: map needs one image per src point");
  }
  for (const std::size_t target : f) {
    if (target >= dst.size()) {
      throw ContextError("map_continuous: image outside the dst carrier");
    }
  }
  for (PointSet s = 0;; ++s) {
    const PointSet lhs = image(f, topo_operators(src, s).closure);
    const PointSet rhs = topo_operators(dst, image(f, s)).closure;
    if (!subset_of(lhs, rhs)) return false;
    if (s == src.carrier()) return true;
  }
}

bool opens_closed_under_intersection(const FiniteTopology& t) {
  for (const PointSet a : t.opens()) {
    for (const PointSet b : t.opens()) {
      if (!t.is_open(a & b)) return false;
    }
  }
  return true;
}

std::string ladder_label(std::size_t k) {
  static constexpr const char* kNames[] = {"A", "F", "H", "K"};
  if (k < 4) return kNames[k];
  return "E" + std::to_string(k + 1);
}

FiniteTopology cartan_topology(std::size_t count) {
  if (count == 0) throw ContextError("cartan_topology: empty carrier");
  std::vector<std::string> labels;
  std::vector<PointSet> basis;
  std::vector<PointSet> d_map(count, 0);
  for (std::size_t k = 0; k < count; ++k) labels.push_back(ladder_label(k));
  for (std::size_t k = 0; k < count; k += 2) {
    const PointSet self = PointSet{1} << k;
    basis.push_back(self);
    if (k + 1 < count) {
      const PointSet next = PointSet{1} << (k + 1);
      basis.push_back(self | next);
      d_map[k] = next;
    }
  }
  return FiniteTopology(std::move(labels), std::move(basis), std::move(d_map));
}

}  // namespace cartan
