#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"

using namespace loq;

namespace {

int brute_distance(const Coordinates& a, const Coordinates& b, int extent) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int best = extent;
    // smallest k with a+k == b (mod extent), in either direction
    for (int k = -extent; k <= extent; ++k)
      if (((a[i] + k) % extent + extent) % extent == b[i]) best = std::min(best, std::abs(k));
    d += best;
  }
  return d;
}

}  // namespace

TEST(Torus, DistanceExamples) {
  EXPECT_EQ(torus_distance({0, 0}, {3, 0}, 4), 1);
  EXPECT_EQ(torus_distance({1, 1}, {3, 2}, 4), 3);
  EXPECT_EQ(torus_distance({0, 0}, {0, 0}, 22), 0);
  EXPECT_EQ(torus_distance({0, 0}, {11, 11}, 22), 22);
}

TEST(Torus, MatchesBruteForce) {
  for (int extent : {1, 2, 3, 5, 8})
    for (int a0 = 0; a0 < extent; ++a0)
      for (int a1 = 0; a1 < extent; ++a1)
        for (int b0 = 0; b0 < extent; ++b0)
          for (int b1 = 0; b1 < extent; ++b1) {
            Coordinates a{a0, a1}, b{b0, b1};
            ASSERT_EQ(torus_distance(a, b, extent), brute_distance(a, b, extent));
            ASSERT_EQ(torus_distance(a, b, extent), torus_distance(b, a, extent));
          }
}

TEST(Torus, DimensionMismatchThrows) {
  EXPECT_THROW(torus_distance({0, 0}, {0, 0, 0}, 4), ConfigError);
}

TEST(Lattice, Validation) {
  EXPECT_NO_THROW((Lattice{2, 22}.validate()));
  EXPECT_NO_THROW((Lattice{3, 1}.validate()));
  EXPECT_THROW((Lattice{1, 22}.validate()), ConfigError);
  EXPECT_THROW((Lattice{4, 22}.validate()), ConfigError);
  EXPECT_THROW((Lattice{2, 0}.validate()), ConfigError);
}

TEST(Region, ShellOne) {
  const Lattice lat{2, 22};
  const auto r = enumerate_region({5, 5}, 1, lat);
  ASSERT_EQ(r.shells.size(), 2u);
  EXPECT_EQ(r.shells[0], (std::vector<Coordinates>{{5, 5}}));
  EXPECT_EQ(r.shells[1], (std::vector<Coordinates>{{4, 5}, {5, 4}, {5, 6}, {6, 5}}));
}

TEST(Region, WrapsAtEdges) {
  const auto r = enumerate_region({0, 0}, 1, Lattice{2, 22});
  EXPECT_EQ(r.shells[1], (std::vector<Coordinates>{{0, 1}, {0, 21}, {1, 0}, {21, 0}}));
}

TEST(Region, SaturatesOnSmallLattice) {
  const Lattice lat{2, 4};
  const auto r = enumerate_region({1, 2}, 10, lat);
  EXPECT_EQ(r.cell_count(), 16u);
  std::set<Coordinates> all;
  for (const auto& s : r.shells)
    for (const auto& c : s) EXPECT_TRUE(all.insert(c).second);
  for (std::size_t d = 5; d < r.shells.size(); ++d) EXPECT_TRUE(r.shells[d].empty());
}

TEST(Region, ShellsAreSortedAndAtTheirDistance) {
  const Lattice lat{3, 5};
  const auto r = enumerate_region({4, 0, 2}, 6, lat);
  for (std::size_t d = 0; d < r.shells.size(); ++d) {
    EXPECT_TRUE(std::is_sorted(r.shells[d].begin(), r.shells[d].end()));
    for (const auto& c : r.shells[d]) EXPECT_EQ(torus_distance(c, r.center, 5), static_cast<int>(d));
  }
}

TEST(Region, RadiusZeroIsCenter) {
  const auto r = enumerate_region({3, 3}, 0, Lattice{2, 22});
  EXPECT_EQ(r.cell_count(), 1u);
  EXPECT_THROW(enumerate_region({3, 3}, -1, Lattice{2, 22}), ConfigError);
}

TEST(Walk, DeterministicForSeed) {
  const Lattice lat{2, 22};
  Pointer a = make_pointer(lat, 42), b = make_pointer(lat, 42);
  for (int i = 0; i < 200; ++i) {
    a = step_pointer(std::move(a), 1, lat);
    b = step_pointer(std::move(b), 1, lat);
    ASSERT_EQ(a.position, b.position);
  }
}

TEST(Walk, MovesOneBlockAlongOneAxis) {
  for (int dims : {2, 3}) {
    const Lattice lat{dims, 7};
    Pointer p = make_pointer(lat, 9);
    for (int i = 0; i < 500; ++i) {
      const Coordinates before = p.position;
      p = step_pointer(std::move(p), 1, lat);
      ASSERT_EQ(torus_distance(before, p.position, lat.extent), 1);
    }
  }
}

TEST(Walk, RateZeroStaysAndStayProbabilityHolds) {
  const Lattice lat{2, 22};
  Pointer p = make_pointer(lat, 3);
  p = step_pointer(std::move(p), 0, lat);
  EXPECT_EQ(p.position, (Coordinates{0, 0}));
  int stays = 0;
  for (int i = 0; i < 2000; ++i) {
    const Coordinates before = p.position;
    p = step_pointer(std::move(p), WalkOptions{1, 0.5}, lat);
    stays += before == p.position ? 1 : 0;
  }
  EXPECT_NEAR(stays / 2000.0, 0.5, 0.05);
}

TEST(Memory, StoreAndSnapshotInCanonicalOrder) {
  const Lattice lat{2, 6};
  MemorySpace<int> space(lat);
  const auto far = space.store({2, 0}, 10, Annotation::H, 0);
  const auto center1 = space.store({0, 0}, 11, Annotation::L, 1);
  const auto near = space.store({5, 0}, 12, Annotation::H, 2);
  const auto center2 = space.store({6, 6}, 13, Annotation::H, 3);  // wraps to origin
  EXPECT_EQ(space.size(), 4u);
  EXPECT_EQ(space.item(center2).position, (Coordinates{0, 0}));

  const auto snap = snapshot_region(space, enumerate_region({0, 0}, 2, lat));
  ASSERT_EQ(snap.size(), 4u);
  EXPECT_EQ(snap[0].item, center1);
  EXPECT_EQ(snap[1].item, center2);
  EXPECT_EQ(snap[2].item, near);
  EXPECT_EQ(snap[3].item, far);

  const auto one = snapshot_region(space, enumerate_region({0, 0}, 1, lat));
  EXPECT_EQ(one.size(), 3u);
  space.annotate(near, Annotation::L);
  EXPECT_EQ(space.item(near).annotation, Annotation::L);
}
