#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mlq {

// Ordered event times of a counting process on [0, horizon]. Events are strictly
// increasing and lie in (0, horizon]; N(t) = #{events <= t} is right-continuous.
struct CountingPath {
  double horizon = 0.0;
  std::vector<double> events;

  // number of events up to and including t
  std::size_t count_at(double t) const;
  void validate() const;
};

// Nondecreasing path sampled on the uniform grid t_i = i * grid_step,
// values[i] = Y(t_i).
struct SubordinatorPath {
  double grid_step = 0.0;
  std::vector<double> values;

  void validate() const;
};

enum class Mark : std::uint8_t {
  Arrival,
  Departure,
  UnusedDeparture,  // departure attempt at an empty queue; level stays 0
};

char mark_letter(Mark m);
Mark mark_from_letter(char c);

// Piecewise-constant queue-length trajectory. Jump times are nondecreasing;
// simultaneous events are ordered arrival-first. Consecutive levels differ by
// exactly +-1 except UnusedDeparture entries, which keep the level at 0.
struct QueuePath {
  struct Jump {
    double time;
    int level;  // level immediately after the event
    Mark mark;

    bool operator==(const Jump&) const = default;
  };

  double horizon = 0.0;
  int initial_level = 0;
  std::vector<Jump> jumps;

  int level_at(double t) const;
  int terminal_level() const;
  // true if the path is at level zero at some instant in (t_lo, t_hi]
  bool touches_zero_in(double t_lo, double t_hi) const;
  void validate() const;

  bool operator==(const QueuePath&) const = default;
};

}  // namespace mlq
