#pragma once

#include "tsurf/cylinders.hpp"
#include "tsurf/interval_map.hpp"
#include "tsurf/net.hpp"
#include "tsurf/rational.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace tsurf {

enum class TransverseCase { Case1, Case2, Case4A, Case4B };
std::string to_string(TransverseCase c);

// A straight trajectory with horizontal displacement `lambda` per unit height, started at
// bottom coordinate `start` of a cylinder and followed until it first returns to that bottom.
struct TraceStep {
  int cylinder = 0;
  Rational entry, exit; // bottom and top coordinates in this cylinder
  int exit_saddle = -1;
  long winding = 0;
};
struct Trace {
  std::vector<TraceStep> steps;
  Rational start, lambda;
  bool closed = false;   // returned to the start point
  bool singular = false; // hit a cone point
};
Trace trace_trajectory(const FlatSurfaceNet &net, int cylinder, const Rational &start, const Rational &lambda,
                       int max_steps = 64);
// Open interval of start points whose trajectories cross the same saddle connections in the same order.
Interval trace_band(const FlatSurfaceNet &net, const Trace &t);

struct TransverseWitness {
  Rational lambda;
  Rational dx, dy;             // holonomy of the core curve
  std::vector<int> route;      // cylinders crossed, in order
  std::vector<int> saddles;    // saddle connection crossed on leaving each route cylinder
  Interval band;               // start points on the bottom of route.front()
  std::string construction;
};
std::string to_string(const TransverseWitness &w);

// Re-traces the band midpoint and checks closure and that every route cylinder is crossed exactly once.
bool verify_witness(const FlatSurfaceNet &net, const TransverseWitness &w);

// Closed trajectories crossing the listed cylinders once each in this order, with |lambda| <= lambda_bound.
std::vector<TransverseWitness> route_search(const FlatSurfaceNet &net, const std::vector<int> &route,
                                            const Rational &lambda_bound);
Rational default_lambda_bound(const FlatSurfaceNet &net);

// Frame of the 4A construction: the larger middle cylinder is a rectangle of width s at [0, s),
// and f takes the bottom of the first cylinder to the top of the last in frame coordinates.
struct Case4AFrame {
  int first = 0, middle = 0, other_middle = 0, last = 0;
  Rational s, shear; // shear: displacement per unit height that makes the middle cylinder untwisted
  IntervalMap f;
  Rational bottom_shift; // bottom coordinate = frame coordinate + bottom_shift (mod w)
};
Case4AFrame case4a_frame(const FlatSurfaceNet &net);

std::optional<TransverseWitness> find_crossing_cylinder(const FlatSurfaceNet &net, TransverseCase c);

struct WindowConstraint {
  Rational t0, s0, t_start;
  Rational min_saddle;
};
struct WindowFeasibility {
  bool feasible = false;
  bool boundary = false; // feasible with zero slack and t_start = 0
  Rational slack;        // 1 - 2 t0 - 2 s0 - t_start
  std::vector<std::string> violated;
};
WindowFeasibility window_feasible(const WindowConstraint &c);
// Reads (t0, s0, t_start) off a two-cylinder net with homologous cores, circumference normalized to 1.
WindowConstraint measure_window(const FlatSurfaceNet &net);

// Random Case-4A net: all lengths multiples of 1/denominator with unit circumference, equal heights.
// With half set the larger middle cylinder has circumference exactly 1/2.
FlatSurfaceNet sample_case4a_net(std::mt19937_64 &rng, long denominator = 20, bool half = false);

} // namespace tsurf
