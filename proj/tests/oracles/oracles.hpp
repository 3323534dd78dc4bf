#pragma once

#include "tsurf/intmat.hpp"
#include "tsurf/net.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/surface.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

// Random connected origami with at most max_n squares.
tsurf::Origami random_origami(std::mt19937_64 &rng, int min_n, int max_n);
// torus, L, Wollmilchsau and `count` random origamis with n <= max_n, all from one seed.
std::vector<tsurf::Origami> corpus(int count, int max_n, std::uint64_t seed);

// Cone excess of every vertex, found by walking around square corners.
std::vector<int> corner_walk_kappa(const tsurf::Origami &o);
int euler_genus(const tsurf::Origami &o);

// Farey fractions in (0, 1) with denominator at most n.
std::vector<tsurf::Rational> farey_interior(long n);

// Direct reading of the window inequalities.
bool window_inequality(const tsurf::Rational &t0, const tsurf::Rational &s0, const tsurf::Rational &t_start,
                       const tsurf::Rational &min_saddle);

struct ScanHit {
  std::int64_t dx_num = 0; // horizontal displacement per cylinder crossing is dx_num / dx_den
  std::int64_t dx_den = 1;
  std::int64_t start = 0;  // bottom coordinate of the first cylinder, times `scale`
  std::int64_t scale = 1;
  std::vector<int> route;
};
// Integer brute force over closed straight trajectories in a Case-4A net with equal heights:
// displacements p / q per crossing with q <= denominator and |p / q| <= reach, start points at
// odd multiples of 1 / (2 lcm(q, data denominators)) on the bottom of the four-saddle cylinder.
std::optional<ScanHit> scan_case4a(const tsurf::FlatSurfaceNet &net, long denominator, long reach);

// Every product of two elements lies in the set.
std::set<tsurf::IntMat> naive_closure(const std::vector<tsurf::IntMat> &gens, std::size_t cap);
bool symplectic(const tsurf::IntMat &m, const tsurf::IntMat &omega);

} // namespace oracle
