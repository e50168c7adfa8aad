#pragma once

// Attention/working-memory substrate: a periodic lattice of cells holding
// stored items, a pointer that random-walks over it, and outward search
// regions measured in torus city blocks.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "loq/error.hpp"

namespace loq {

enum class Tone { L, H };
enum class Annotation { None, L, H };

inline char tone_char(Tone t) { return t == Tone::L ? 'L' : 'H'; }

inline Annotation to_annotation(Tone t) { return t == Tone::L ? Annotation::L : Annotation::H; }

struct Lattice {
  int dims = 2;
  int extent = 22;

  void validate() const {
    if (dims < 2 || dims > 3) throw ConfigError("lattice dims must be 2 or 3, got " + std::to_string(dims));
    if (extent < 1) throw ConfigError("lattice extent must be >= 1, got " + std::to_string(extent));
  }

  std::size_t cell_count() const {
    std::size_t n = 1;
    for (int i = 0; i < dims; ++i) n *= static_cast<std::size_t>(extent);
    return n;
  }

  // Largest torus city-block distance between two cells.
  int diameter() const { return dims * (extent / 2); }
};

struct Coordinates {
  std::vector<int> axes;

  Coordinates() = default;
  Coordinates(std::initializer_list<int> a) : axes(a) {}
  explicit Coordinates(std::vector<int> a) : axes(std::move(a)) {}

  std::size_t size() const { return axes.size(); }
  int operator[](std::size_t i) const { return axes[i]; }

  friend bool operator==(const Coordinates&, const Coordinates&) = default;
  friend auto operator<=>(const Coordinates&, const Coordinates&) = default;
};

inline int wrap_axis(long long v, int extent) {
  long long r = v % extent;
  return static_cast<int>(r < 0 ? r + extent : r);
}

inline Coordinates wrap(Coordinates c, int extent) {
  for (auto& a : c.axes) a = wrap_axis(a, extent);
  return c;
}

inline std::string to_string(const Coordinates& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

inline int torus_distance(const Coordinates& a, const Coordinates& b, int extent) {
  if (a.size() != b.size())
    throw ConfigError("coordinate dimension mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  if (extent < 1) throw ConfigError("extent must be >= 1");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int diff = std::abs(wrap_axis(a[i], extent) - wrap_axis(b[i], extent));
    d += std::min(diff, extent - diff);
  }
  return d;
}

// Row-major with axis 0 most significant, so increasing index is
// lexicographic order on coordinates.
inline std::size_t linear_index(const Coordinates& c, const Lattice& lat) {
  std::size_t idx = 0;
  for (int a : c.axes) idx = idx * static_cast<std::size_t>(lat.extent) + static_cast<std::size_t>(a);
  return idx;
}

struct SearchRegion {
  Coordinates center;
  int radius = 0;
  // shells[d] holds every cell at distance d, lexicographically sorted.
  std::vector<std::vector<Coordinates>> shells;

  std::size_t cell_count() const {
    std::size_t n = 0;
    for (const auto& s : shells) n += s.size();
    return n;
  }
};

namespace detail {

inline void collect_shell(const Coordinates& center, const Lattice& lat, std::size_t axis, int budget,
                          std::vector<int>& partial, std::vector<Coordinates>& out) {
  const int half = lat.extent / 2;
  const auto dims = static_cast<std::size_t>(lat.dims);
  if (axis == dims) {
    if (budget == 0) out.emplace_back(partial);
    return;
  }
  // Remaining axes can absorb at most half each.
  const int rest = static_cast<int>(dims - axis - 1) * half;
  for (int delta = std::max(0, budget - rest); delta <= std::min(budget, half); ++delta) {
    const int up = wrap_axis(static_cast<long long>(center[axis]) + delta, lat.extent);
    const int down = wrap_axis(static_cast<long long>(center[axis]) - delta, lat.extent);
    partial[axis] = up;
    collect_shell(center, lat, axis + 1, budget - delta, partial, out);
    if (down != up) {
      partial[axis] = down;
      collect_shell(center, lat, axis + 1, budget - delta, partial, out);
    }
  }
}

}  // namespace detail

// Builds each shell from per-axis displacement splits of the distance
// budget; radii past the lattice diameter leave trailing shells empty.
inline SearchRegion enumerate_region(const Coordinates& center, int radius, const Lattice& lat) {
  if (radius < 0) throw ConfigError("search radius must be >= 0");
  if (center.size() != static_cast<std::size_t>(lat.dims)) throw ConfigError("center has wrong dimension");
  SearchRegion region;
  region.center = wrap(center, lat.extent);
  region.radius = radius;
  region.shells.resize(static_cast<std::size_t>(radius) + 1);
  std::vector<int> partial(static_cast<std::size_t>(lat.dims), 0);
  const int last = std::min(radius, lat.diameter());
  for (int d = 0; d <= last; ++d) {
    auto& shell = region.shells[static_cast<std::size_t>(d)];
    detail::collect_shell(region.center, lat, 0, d, partial, shell);
    std::sort(shell.begin(), shell.end());
  }
  return region;
}

struct WalkOptions {
  int rate = 1;
  // Chance that a single step leaves the pointer in place.
  double stay_probability = 0.0;
};

struct Pointer {
  Coordinates position;
  std::mt19937_64 rng;

  Pointer() = default;
  Pointer(Coordinates start, std::uint64_t seed) : position(std::move(start)), rng(seed) {}
};

inline Pointer make_pointer(const Lattice& lat, std::uint64_t seed) {
  return Pointer(Coordinates(std::vector<int>(static_cast<std::size_t>(lat.dims), 0)), seed);
}

namespace detail {
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace detail

// Each step moves one city block along one axis, drawn uniformly from the
// 2*dims neighbours.
inline Pointer step_pointer(Pointer p, const WalkOptions& walk, const Lattice& lat) {
  if (walk.rate < 0) throw ConfigError("walk rate must be >= 0");
  const auto moves = static_cast<std::uint64_t>(2 * lat.dims);
  for (int s = 0; s < walk.rate; ++s) {
    if (walk.stay_probability > 0.0 && detail::unit_draw(p.rng) < walk.stay_probability) continue;
    const auto move = p.rng() % moves;
    const auto axis = static_cast<std::size_t>(move / 2);
    const int dir = (move % 2 == 0) ? 1 : -1;
    p.position.axes[axis] = wrap_axis(static_cast<long long>(p.position.axes[axis]) + dir, lat.extent);
  }
  return p;
}

inline Pointer step_pointer(Pointer p, int walk_rate, const Lattice& lat) {
  return step_pointer(std::move(p), WalkOptions{walk_rate, 0.0}, lat);
}

using ItemId = std::size_t;

template <class Payload>
struct StoredItem {
  Payload payload;
  Annotation annotation = Annotation::None;
  std::size_t stored_at_step = 0;
  Coordinates position;
};

// Cells only grow: there is no removal and no overwrite.
template <class Payload>
class MemorySpace {
 public:
  explicit MemorySpace(Lattice lat) : lattice_(lat) {
    lattice_.validate();
    cells_.resize(lattice_.cell_count());
  }

  const Lattice& lattice() const { return lattice_; }
  std::size_t size() const { return items_.size(); }

  ItemId store(const Coordinates& at, Payload payload, Annotation initial, std::size_t step) {
    Coordinates pos = wrap(at, lattice_.extent);
    const ItemId id = items_.size();
    cells_[linear_index(pos, lattice_)].push_back(id);
    items_.push_back(StoredItem<Payload>{std::move(payload), initial, step, std::move(pos)});
    return id;
  }

  std::span<const ItemId> cell(const Coordinates& at) const {
    return cells_[linear_index(wrap(at, lattice_.extent), lattice_)];
  }

  const StoredItem<Payload>& item(ItemId id) const { return items_.at(id); }
  const std::vector<StoredItem<Payload>>& items() const { return items_; }

  void annotate(ItemId id, Annotation a) { items_.at(id).annotation = a; }

 private:
  Lattice lattice_;
  std::vector<std::vector<ItemId>> cells_;
  std::vector<StoredItem<Payload>> items_;
};

template <class Payload>
void store(MemorySpace<Payload>& space, const Pointer& p, Payload payload, Annotation initial, std::size_t step) {
  space.store(p.position, std::move(payload), initial, step);
}

struct RegionEntry {
  ItemId item;
  Annotation annotation;

  friend bool operator==(const RegionEntry&, const RegionEntry&) = default;
};

// Items in shell order, then lexicographic cell order, then storage order.
template <class Payload, class Filter>
std::vector<RegionEntry> snapshot_region(const MemorySpace<Payload>& space, const SearchRegion& region,
                                         Filter&& keep) {
  std::vector<RegionEntry> out;
  for (const auto& shell : region.shells)
    for (const auto& c : shell)
      for (ItemId id : space.cell(c)) {
        const auto& it = space.item(id);
        if (keep(it.payload)) out.push_back({id, it.annotation});
      }
  return out;
}

template <class Payload>
std::vector<RegionEntry> snapshot_region(const MemorySpace<Payload>& space, const SearchRegion& region) {
  return snapshot_region(space, region, [](const Payload&) { return true; });
}

}  // namespace loq
