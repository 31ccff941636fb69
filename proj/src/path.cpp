#include "lzpath/path.hpp"

#include <algorithm>
#include <stdexcept>

#include "lzpath/errors.hpp"

namespace lzpath {

ClPath::ClPath(const AffineCartanDatum& d, std::vector<Segment> segments) {
  for (auto& s : segments) {
    if (s.dur < Rational(0)) throw std::invalid_argument("negative segment duration");
    if (s.dur.is_zero()) continue;
    if (!d.is_level_zero(s.dir))
      throw std::invalid_argument("path direction " + s.dir.to_string() + " is not level zero");
    if (!segs_.empty() && segs_.back().dir == s.dir)
      segs_.back().dur += s.dur;
    else
      segs_.push_back(std::move(s));
  }
  if (segs_.empty()) throw std::invalid_argument("empty path");
  Rational total;
  for (const auto& s : segs_) total += s.dur;
  if (total != Rational(1))
    throw std::invalid_argument("path durations sum to " + total.to_string() + ", expected 1/1");
  // endpoint must land in P_cl
  for (std::size_t j = 0; j < segs_.front().dir.size(); ++j) {
    Rational v;
    for (const auto& s : segs_) v += s.dur * Rational(s.dir(static_cast<int>(j)));
    if (!v.is_integer())
      throw std::invalid_argument("path endpoint pairing " + v.to_string() + " is not integral");
  }
}

ClPath ClPath::straight(const AffineCartanDatum& d, const ClassicalWeight& mu) {
  return ClPath(d, {Segment{mu, Rational(1)}});
}

ClassicalWeight ClPath::weight() const {
  ClassicalWeight w = ClassicalWeight::zero(segs_.front().dir.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    Rational v;
    for (const auto& s : segs_) v += s.dur * Rational(s.dir(static_cast<int>(j)));
    w.pairings[j] = v.as_integer();
  }
  return w;
}

std::vector<Rational> ClPath::evaluate(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw std::invalid_argument("evaluation time " + t.to_string() + " outside [0,1]");
  std::vector<Rational> v(segs_.front().dir.size());
  Rational done;
  for (const auto& s : segs_) {
    Rational step = std::min(s.dur, t - done);
    if (step < Rational(0)) break;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] += step * Rational(s.dir(static_cast<int>(j)));
    done += s.dur;
    if (done >= t) break;
  }
  return v;
}

ClPath::Corners ClPath::corners(int j) const {
  Corners c;
  c.time.reserve(segs_.size() + 1);
  c.value.reserve(segs_.size() + 1);
  c.time.push_back(Rational(0));
  c.value.push_back(Rational(0));
  for (const auto& s : segs_) {
    c.time.push_back(c.time.back() + s.dur);
    c.value.push_back(c.value.back() + s.dur * Rational(s.dir(j)));
  }
  return c;
}

void ClPath::check_local_minima(const Corners& c, int j) {
  // runs of equal corner values flanked by larger values are local minima
  std::size_t s = c.value.size();
  std::size_t u = 0;
  while (u < s) {
    std::size_t v = u;
    while (v + 1 < s && c.value[v + 1] == c.value[u]) ++v;
    bool left_up = (u == 0) || (c.value[u - 1] > c.value[u]);
    bool right_up = (v == s - 1) || (c.value[v + 1] > c.value[u]);
    if (left_up && right_up && !c.value[u].is_integer())
      throw ConsistencyError("local minimum of H_" + std::to_string(j) + " is " +
                             c.value[u].to_string() + ", not an integer");
    u = v + 1;
  }
}

ClPath::HProfile ClPath::h_profile(int j) const {
  Corners c = corners(j);
  check_local_minima(c, j);
  Rational m = c.value[0];
  for (const auto& v : c.value) m = std::min(m, v);
  HProfile hp;
  hp.min = m.as_integer();  // integral: the global minimum is a local one
  if (hp.min > 0) throw ConsistencyError("H minimum positive although H(0) = 0");
  if (hp.min <= -1) {
    hp.has_cut = true;
    // t1: first corner attaining the minimum
    std::size_t u1 = 0;
    while (c.value[u1] != m) ++u1;
    hp.t1 = c.time[u1];
    // t0: last time in [0,t1] at value m+1, scanning segments right to left
    Rational target = m + Rational(1);
    bool found = false;
    for (std::size_t u = u1; u-- > 0;) {
      const Rational &va = c.value[u], &vb = c.value[u + 1];
      if ((va < target && target < vb) || (vb < target && target < va)) {
        hp.t0 = c.time[u] + (target - va) / (vb - va) * (c.time[u + 1] - c.time[u]);
        found = true;
        break;
      }
      if (va == target) {
        hp.t0 = c.time[u];
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("no t0 cut although m <= -1");
  }
  return hp;
}

long long ClPath::epsilon(int j) const { return -h_profile(j).min; }

long long ClPath::phi(int j) const { return weight()(j) + epsilon(j); }

ClPath ClPath::fold(const AffineCartanDatum& d, int j, const Rational& t0,
                    const Rational& t1) const {
  std::vector<Segment> out;
  Rational a;
  for (const auto& s : segs_) {
    Rational b = a + s.dur;
    Rational head = std::min(b, t0) - a;
    if (head > Rational(0)) out.push_back(Segment{s.dir, head});
    Rational mid = std::min(b, t1) - std::max(a, t0);
    if (mid > Rational(0)) out.push_back(Segment{d.reflect(j, s.dir), mid});
    Rational tail = b - std::max(a, t1);
    if (tail > Rational(0)) out.push_back(Segment{s.dir, tail});
    a = b;
  }
  return ClPath(d, std::move(out));
}

std::optional<ClPath> ClPath::raise(const AffineCartanDatum& d, int j) const {
  HProfile hp = h_profile(j);
  if (!hp.has_cut) return std::nullopt;
  return fold(d, j, hp.t0, hp.t1);
}

std::optional<ClPath> ClPath::lower(const AffineCartanDatum& d, int j) const {
  Corners c = corners(j);
  check_local_minima(c, j);
  Rational m = c.value[0];
  for (const auto& v : c.value) m = std::min(m, v);
  if (c.value.back() == m) return std::nullopt;  // phi_j = 0
  // t0: last corner attaining the minimum
  std::size_t u0 = c.value.size();
  while (c.value[--u0] != m) {}
  Rational t0 = c.time[u0];
  // t1: first time in [t0,1] at value m+1, scanning forward
  Rational target = m + Rational(1);
  Rational t1;
  bool found = false;
  for (std::size_t u = u0; u + 1 < c.value.size(); ++u) {
    const Rational &va = c.value[u], &vb = c.value[u + 1];
    if ((va < target && target < vb) || (vb < target && target < va)) {
      t1 = c.time[u] + (target - va) / (vb - va) * (c.time[u + 1] - c.time[u]);
      found = true;
      break;
    }
    if (vb == target) {
      t1 = c.time[u + 1];
      found = true;
      break;
    }
  }
  if (!found) throw ConsistencyError("no t1 cut although phi_j >= 1");
  return fold(d, j, t0, t1);
}

std::string ClPath::to_string() const {
  std::string s = "[";
  for (std::size_t u = 0; u < segs_.size(); ++u) {
    if (u) s += ",";
    s += segs_[u].dir.to_string() + "@" + segs_[u].dur.to_string();
  }
  return s + "]";
}

bool ClPath::operator==(const ClPath& o) const {
  if (segs_.size() != o.segs_.size()) return false;
  for (std::size_t u = 0; u < segs_.size(); ++u)
    if (segs_[u].dur != o.segs_[u].dur || segs_[u].dir != o.segs_[u].dir) return false;
  return true;
}

}  // namespace lzpath
