#include "mlq/paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlq {

std::size_t CountingPath::count_at(double t) const {
  return std::upper_bound(events.begin(), events.end(), t) - events.begin();
}

void CountingPath::validate() const {
  if (horizon < 0.0 || std::isnan(horizon)) throw std::invalid_argument("CountingPath: bad horizon");
  double prev = 0.0;
  for (double e : events) {
    if (!(e > prev)) throw std::invalid_argument("CountingPath: events must be strictly increasing and positive");
    if (e > horizon) throw std::invalid_argument("CountingPath: event beyond horizon");
    prev = e;
  }
}

void SubordinatorPath::validate() const {
  if (!(grid_step > 0.0)) throw std::invalid_argument("SubordinatorPath: grid_step must be positive");
  double prev = -1.0;
  for (double v : values) {
    if (v < prev || v < 0.0) throw std::invalid_argument("SubordinatorPath: values must be nonnegative and nondecreasing");
    prev = v;
  }
}

char mark_letter(Mark m) {
  switch (m) {
    case Mark::Arrival: return 'A';
    case Mark::Departure: return 'D';
    case Mark::UnusedDeparture: return 'U';
  }
  return '?';
}

Mark mark_from_letter(char c) {
  switch (c) {
    case 'A': return Mark::Arrival;
    case 'D': return Mark::Departure;
    case 'U': return Mark::UnusedDeparture;
  }
  throw std::invalid_argument("unknown queue mark letter");
}

int QueuePath::level_at(double t) const {
  int level = initial_level;
  for (const Jump& j : jumps) {
    if (j.time > t) break;
    level = j.level;
  }
  return level;
}

int QueuePath::terminal_level() const {
  return jumps.empty() ? initial_level : jumps.back().level;
}

bool QueuePath::touches_zero_in(double t_lo, double t_hi) const {
  if (!(t_hi > t_lo)) return false;
  if (level_at(t_lo) == 0) return true;  // right-continuity: level 0 persists into (t_lo, ...)
  for (const Jump& j : jumps) {
    if (j.time > t_hi) break;
    if (j.time > t_lo && j.level == 0) return true;
  }
  return false;
}

void QueuePath::validate() const {
  if (horizon < 0.0 || std::isnan(horizon)) throw std::invalid_argument("QueuePath: bad horizon");
  if (initial_level < 0) throw std::invalid_argument("QueuePath: negative initial level");
  int level = initial_level;
  double prev_time = 0.0;
  for (const Jump& j : jumps) {
    if (j.time < prev_time || j.time > horizon || !(j.time > 0.0))
      throw std::invalid_argument("QueuePath: jump times must be nondecreasing within (0, horizon]");
    if (j.level < 0) throw std::invalid_argument("QueuePath: negative level");
    const int delta = j.level - level;
    if (j.mark == Mark::UnusedDeparture) {
      if (level != 0 || delta != 0)
        throw std::invalid_argument("QueuePath: unused departure must keep the level at 0");
    } else if (delta != (j.mark == Mark::Arrival ? 1 : -1)) {
      throw std::invalid_argument("QueuePath: level step inconsistent with mark");
    }
    level = j.level;
    prev_time = j.time;
  }
}

}  // namespace mlq
