#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzpath/cartan.hpp"
#include "lzpath/rational.hpp"

namespace lzpath {

struct Segment {
  ClassicalWeight dir;
  Rational dur;
};

// A piecewise-linear classical path: a reduced list of (direction, duration)
// segments with durations summing to 1.  Elements of B(lambda)_cl.  Values
// are immutable after construction; all operations are pure.
class ClPath {
public:
  // Normalizes to the unique reduced expression (merging equal adjacent
  // directions, dropping zero durations) and validates the invariants.
  ClPath(const AffineCartanDatum& d, std::vector<Segment> segments);

  static ClPath straight(const AffineCartanDatum& d, const ClassicalWeight& mu);

  const std::vector<Segment>& segments() const { return segs_; }
  const ClassicalWeight& initial_direction() const { return segs_.front().dir; }
  const ClassicalWeight& final_direction() const { return segs_.back().dir; }

  ClassicalWeight weight() const;  // eta(1), integral by the path invariants
  std::vector<Rational> evaluate(const Rational& t) const;

  // Exact minimum of H_j(t) = eta(t)(h_j) together with the raising cut
  // points: t1 = first attainment of the minimum, t0 = last time in [0,t1]
  // at value m+1.  Cut points are present iff m <= -1.
  struct HProfile {
    long long min = 0;
    bool has_cut = false;
    Rational t0, t1;
  };
  HProfile h_profile(int j) const;

  long long epsilon(int j) const;  // -m_j
  long long phi(int j) const;      // H_j(1) - m_j

  std::optional<ClPath> raise(const AffineCartanDatum& d, int j) const;
  std::optional<ClPath> lower(const AffineCartanDatum& d, int j) const;

  // canonical serialization "[(p0,p1,...)@num/den,...]"; equality/hash key
  std::string to_string() const;
  bool operator==(const ClPath& o) const;
  bool operator!=(const ClPath& o) const { return !(*this == o); }

private:
  // corner times T_0=0<...<T_s=1 and corner values of H_j; extrema of the
  // piecewise-affine H_j sit at corners, and local minima must be integers
  struct Corners {
    std::vector<Rational> time;
    std::vector<Rational> value;
  };
  Corners corners(int j) const;
  static void check_local_minima(const Corners& c, int j);
  ClPath fold(const AffineCartanDatum& d, int j, const Rational& t0, const Rational& t1) const;

  std::vector<Segment> segs_;
};

}  // namespace lzpath

template <>
struct std::hash<lzpath::ClPath> {
  std::size_t operator()(const lzpath::ClPath& p) const noexcept {
    return std::hash<std::string>{}(p.to_string());
  }
};
