#include "lzpath/crystal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "lzpath/errors.hpp"

namespace lzpath {

namespace {

// fold (eps, phi) of b1 (x) ... (x) bk left to right
std::pair<long long, long long> eps_phi(const std::vector<ClPath>& factors, int j) {
  long long eps = factors.front().epsilon(j);
  long long phi = factors.front().phi(j);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    long long e2 = factors[k].epsilon(j), p2 = factors[k].phi(j);
    long long neweps = eps + std::max(0LL, e2 - phi);
    phi = p2 + std::max(0LL, phi - e2);
    eps = neweps;
  }
  return {eps, phi};
}

std::pair<long long, long long> prefix_eps_phi(const std::vector<ClPath>& factors,
                                               std::size_t len, int j) {
  std::vector<ClPath> pre(factors.begin(), factors.begin() + len);
  return eps_phi(pre, j);
}

}  // namespace

ClassicalWeight CrystalElement::weight() const {
  ClassicalWeight w = factors.front().weight();
  for (std::size_t k = 1; k < factors.size(); ++k) w = w + factors[k].weight();
  return w;
}

long long CrystalElement::epsilon(int j) const { return eps_phi(factors, j).first; }

long long CrystalElement::phi(int j) const { return eps_phi(factors, j).second; }

std::optional<CrystalElement> CrystalElement::raise(const AffineCartanDatum& d, int j) const {
  std::vector<ClPath> out = factors;
  std::size_t len = factors.size();
  // walk down the left-associated splits until the acting factor is found
  while (len > 1) {
    auto [pe, pp] = prefix_eps_phi(out, len - 1, j);
    (void)pe;
    if (pp >= out[len - 1].epsilon(j)) {
      --len;  // acts inside the prefix
    } else {
      auto r = out[len - 1].raise(d, j);
      if (!r) throw ConsistencyError("tensor rule routed e_j to a factor with eps = 0");
      out[len - 1] = std::move(*r);
      return CrystalElement{std::move(out)};
    }
  }
  auto r = out[0].raise(d, j);
  if (!r) return std::nullopt;
  out[0] = std::move(*r);
  return CrystalElement{std::move(out)};
}

std::optional<CrystalElement> CrystalElement::lower(const AffineCartanDatum& d, int j) const {
  std::vector<ClPath> out = factors;
  std::size_t len = factors.size();
  while (len > 1) {
    auto [pe, pp] = prefix_eps_phi(out, len - 1, j);
    (void)pe;
    if (pp > out[len - 1].epsilon(j)) {
      --len;
    } else {
      auto r = out[len - 1].lower(d, j);
      if (!r) return std::nullopt;
      out[len - 1] = std::move(*r);
      return CrystalElement{std::move(out)};
    }
  }
  auto r = out[0].lower(d, j);
  if (!r) return std::nullopt;
  out[0] = std::move(*r);
  return CrystalElement{std::move(out)};
}

std::string CrystalElement::to_string() const {
  std::string s;
  for (const auto& f : factors) s += f.to_string();
  return s;
}

LevelZeroDominantWeight CrystalGraph::total_shape() const {
  LevelZeroDominantWeight t = factor_shapes_.front();
  for (std::size_t k = 1; k < factor_shapes_.size(); ++k) t = t + factor_shapes_[k];
  return t;
}

CrystalGraph CrystalGraph::generate(const AffineCartanDatum& d,
                                    std::vector<LevelZeroDominantWeight> factor_shapes,
                                    std::size_t cap) {
  if (factor_shapes.empty()) throw std::invalid_argument("no tensor factors");
  CrystalGraph g;
  g.datum_ = d;
  g.factor_shapes_ = std::move(factor_shapes);

  CrystalElement src;
  for (const auto& s : g.factor_shapes_) {
    if (s.total() <= 0)
      throw std::invalid_argument("factor shape " + s.key() + " has no positive multiplicity");
    src.factors.push_back(ClPath::straight(d, s.cl(d)));
  }

  std::map<std::string, CrystalElement> seen;
  std::deque<const CrystalElement*> frontier;
  auto visit = [&](CrystalElement el) {
    std::string k = el.to_string();
    auto [it, fresh] = seen.emplace(std::move(k), std::move(el));
    if (fresh) {
      if (seen.size() > cap)
        throw ResourceError("crystal closure exceeded cap of " + std::to_string(cap) +
                            " elements (frontier " + std::to_string(frontier.size()) + ")");
      frontier.push_back(&it->second);
    }
  };
  visit(src);
  while (!frontier.empty()) {
    const CrystalElement* b = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < d.num_nodes(); ++j) {
      if (auto r = b->raise(d, j)) visit(std::move(*r));
      if (auto f = b->lower(d, j)) visit(std::move(*f));
    }
  }

  // std::map iteration fixes the canonical element order
  for (auto& [k, el] : seen) {
    g.index_.emplace(k, static_cast<int>(g.elements_.size()));
    g.keys_.push_back(k);
    g.weights_.push_back(el.weight());
    g.elements_.push_back(std::move(el));
  }
  g.source_ = g.index_.at(src.to_string());

  int n = g.size();
  g.e_edges_.assign(d.num_nodes(), std::vector<int>(n, -1));
  g.f_edges_.assign(d.num_nodes(), std::vector<int>(n, -1));
  for (int idx = 0; idx < n; ++idx) {
    for (int j = 0; j < d.num_nodes(); ++j) {
      if (auto r = g.elements_[idx].raise(d, j)) {
        int t = g.index_of(r->to_string());
        if (t < 0) throw ConsistencyError("raise image escaped the generated closure");
        g.e_edges_[j][idx] = t;
      }
      if (auto f = g.elements_[idx].lower(d, j)) {
        int t = g.index_of(f->to_string());
        if (t < 0) throw ConsistencyError("lower image escaped the generated closure");
        g.f_edges_[j][idx] = t;
      }
    }
  }
  g.validate();
  return g;
}

int CrystalGraph::index_of(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

long long CrystalGraph::epsilon(int j, int idx) const {
  long long n = 0;
  for (int cur = e_edges_[j][idx]; cur >= 0; cur = e_edges_[j][cur]) ++n;
  return n;
}

long long CrystalGraph::phi(int j, int idx) const {
  long long n = 0;
  for (int cur = f_edges_[j][idx]; cur >= 0; cur = f_edges_[j][cur]) ++n;
  return n;
}

int CrystalGraph::raise_max(int j, int idx) const {
  int cur = idx;
  while (e_edges_[j][cur] >= 0) cur = e_edges_[j][cur];
  return cur;
}

int CrystalGraph::weyl_s(int j, int idx) const {
  long long l = weight(idx)(j);
  int cur = idx;
  for (; l > 0; --l) {
    cur = f_edges_[j][cur];
    if (cur < 0) throw ConsistencyError("missing f-edge along an S_j string");
  }
  for (; l < 0; ++l) {
    cur = e_edges_[j][cur];
    if (cur < 0) throw ConsistencyError("missing e-edge along an S_j string");
  }
  return cur;
}

int CrystalGraph::weyl_w(const std::vector<int>& word, int idx) const {
  // S_w = S_{j_1} S_{j_2} ... S_{j_p} applied to b, rightmost factor first
  int cur = idx;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = weyl_s(*it, cur);
  return cur;
}

std::vector<int> CrystalGraph::s_closure(int idx) const {
  std::set<int> seen{idx};
  std::deque<int> frontier{idx};
  while (!frontier.empty()) {
    int b = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < datum_.num_nodes(); ++j) {
      int t = weyl_s(j, b);
      if (seen.insert(t).second) frontier.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

bool CrystalGraph::is_extremal(int idx) const {
  for (int b : s_closure(idx))
    for (int j = 0; j < datum_.num_nodes(); ++j)
      if (e_edges_[j][b] >= 0 && f_edges_[j][b] >= 0) return false;
  return true;
}

Rational CrystalGraph::norm_squared(int idx) const {
  return datum_.cl_form(weight(idx), weight(idx));
}

SimpleReport CrystalGraph::check_simple() const {
  try {
    return check_simple_impl();
  } catch (const ConsistencyError& e) {
    return {false, e.what()};
  }
}

SimpleReport CrystalGraph::check_simple_impl() const {
  for (int idx = 0; idx < size(); ++idx)
    if (!datum_.is_level_zero(weight(idx)))
      return {false, "weight of " + key(idx) + " is not level zero"};

  std::set<int> extremal;
  for (int idx = 0; idx < size(); ++idx)
    if (is_extremal(idx)) extremal.insert(idx);
  if (extremal.empty()) return {false, "no extremal elements"};

  auto orbit = datum_.finite_orbit(total_shape().cl(datum_));
  std::set<ClassicalWeight> orbit_set(orbit.begin(), orbit.end());

  std::set<ClassicalWeight> extremal_weights;
  for (int idx : extremal) {
    if (!extremal_weights.insert(weight(idx)).second)
      return {false, "two extremal elements of weight " + weight(idx).to_string()};
  }
  if (extremal_weights != orbit_set)
    return {false, "extremal weights differ from the orbit of cl(lambda)"};

  // the extremal elements form a single W-orbit under the S_w action
  std::vector<int> closure = s_closure(*extremal.begin());
  if (std::set<int>(closure.begin(), closure.end()) != extremal)
    return {false, "extremal set is not a single S_w-orbit"};

  for (const auto& mu : orbit) {
    int count = 0, last = -1;
    for (int idx = 0; idx < size(); ++idx)
      if (weight(idx) == mu) {
        ++count;
        last = idx;
      }
    if (count != 1)
      return {false, "weight " + mu.to_string() + " has multiplicity " + std::to_string(count)};
    if (!extremal.count(last))
      return {false, "unique element of orbit weight " + mu.to_string() + " is not extremal"};
  }

  // in a path crystal every extremal element is a straight line
  if (factor_shapes_.size() == 1) {
    for (int idx : extremal)
      if (element(idx).factors[0].segments().size() != 1)
        return {false, "extremal element " + key(idx) + " is not a straight line"};
  }
  return {true, ""};
}

void CrystalGraph::validate() const {
  for (int j = 0; j < datum_.num_nodes(); ++j) {
    for (int idx = 0; idx < size(); ++idx) {
      int e = e_edges_[j][idx];
      if (e >= 0 && f_edges_[j][e] != idx)
        throw ConsistencyError("e_j and f_j are not mutually inverse");
      int f = f_edges_[j][idx];
      if (f >= 0) {
        if (e_edges_[j][f] != idx) throw ConsistencyError("f_j and e_j are not mutually inverse");
        if (weight(f) != weight(idx) - datum_.alpha_cl(j))
          throw ConsistencyError("weight does not drop by cl(alpha_j) along f_j");
      }
      if (epsilon(j, idx) != elements_[idx].epsilon(j))
        throw ConsistencyError("graph e-ray length disagrees with eps_j from the H profile");
      if (phi(j, idx) != elements_[idx].phi(j))
        throw ConsistencyError("graph f-ray length disagrees with phi_j from the H profile");
    }
  }
  // connectivity from the source
  std::set<int> seen{source_};
  std::deque<int> frontier{source_};
  while (!frontier.empty()) {
    int b = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < datum_.num_nodes(); ++j)
      for (int t : {e_edges_[j][b], f_edges_[j][b]})
        if (t >= 0 && seen.insert(t).second) frontier.push_back(t);
  }
  if (static_cast<int>(seen.size()) != size())
    throw ConsistencyError("generated graph is not connected from the source");
}

std::map<ClassicalWeight, long long> CrystalGraph::weight_multiplicities() const {
  std::map<ClassicalWeight, long long> m;
  for (int idx = 0; idx < size(); ++idx) ++m[weight(idx)];
  return m;
}

CrystalGraph CrystalGraph::with_element_removed(int idx) const {
  CrystalGraph g;
  g.datum_ = datum_;
  g.factor_shapes_ = factor_shapes_;
  std::vector<int> remap(size(), -1);
  for (int i = 0; i < size(); ++i) {
    if (i == idx) continue;
    remap[i] = static_cast<int>(g.elements_.size());
    g.elements_.push_back(elements_[i]);
    g.keys_.push_back(keys_[i]);
    g.weights_.push_back(weights_[i]);
    g.index_.emplace(keys_[i], remap[i]);
  }
  auto remap_edges = [&](const std::vector<std::vector<int>>& in) {
    std::vector<std::vector<int>> out(in.size());
    for (std::size_t j = 0; j < in.size(); ++j) {
      for (int i = 0; i < size(); ++i) {
        if (i == idx) continue;
        int t = in[j][i];
        out[j].push_back(t < 0 ? -1 : remap[t]);
      }
    }
    return out;
  };
  g.e_edges_ = remap_edges(e_edges_);
  g.f_edges_ = remap_edges(f_edges_);
  g.source_ = source_ == idx ? 0 : remap[source_];
  return g;
}

std::vector<int> anchored_isomorphism(const CrystalGraph& src, const CrystalGraph& dst,
                                      int src_anchor, int dst_anchor) {
  if (src.size() != dst.size())
    throw ConsistencyError("not isomorphic: sizes " + std::to_string(src.size()) + " vs " +
                           std::to_string(dst.size()));
  int n = src.size();
  std::vector<int> fwd(n, -1), back(n, -1);
  fwd[src_anchor] = dst_anchor;
  back[dst_anchor] = src_anchor;
  std::deque<int> frontier{src_anchor};
  int nodes = src.datum().num_nodes();
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    int y = fwd[x];
    if (src.weight(x) != dst.weight(y))
      throw ConsistencyError("not isomorphic: weight mismatch at " + src.key(x));
    for (int j = 0; j < nodes; ++j) {
      for (bool up : {true, false}) {
        int xn = up ? src.raise_edge(j, x) : src.lower_edge(j, x);
        int yn = up ? dst.raise_edge(j, y) : dst.lower_edge(j, y);
        if ((xn < 0) != (yn < 0))
          throw ConsistencyError("not isomorphic: " + std::string(up ? "e_" : "f_") +
                                 std::to_string(j) + " defined on only one side at " + src.key(x));
        if (xn < 0) continue;
        if (fwd[xn] < 0 && back[yn] < 0) {
          fwd[xn] = yn;
          back[yn] = xn;
          frontier.push_back(xn);
        } else if (fwd[xn] != yn) {
          throw ConsistencyError("not isomorphic: transport conflict along " +
                                 std::string(up ? "e_" : "f_") + std::to_string(j) + " at " +
                                 src.key(x));
        }
      }
    }
  }
  for (int x = 0; x < n; ++x)
    if (fwd[x] < 0) throw ConsistencyError("not isomorphic: transport did not reach " + src.key(x));
  return fwd;
}

std::vector<int> psi_map(const CrystalGraph& path_graph, const CrystalGraph& tensor_graph) {
  return anchored_isomorphism(path_graph, tensor_graph, path_graph.source(),
                              tensor_graph.source());
}

std::vector<int> r_matrix_map(const CrystalGraph& forward, const CrystalGraph& reverse) {
  return anchored_isomorphism(forward, reverse, forward.source(), reverse.source());
}

ClPath concatenate(const AffineCartanDatum& d, const ClPath& a, const ClPath& b) {
  std::vector<Segment> out;
  Rational half(1, 2);
  for (const auto& s : a.segments()) out.push_back(Segment{s.dir * 2, s.dur * half});
  for (const auto& s : b.segments()) out.push_back(Segment{s.dir * 2, s.dur * half});
  return ClPath(d, std::move(out));
}

CheckReport check_regular_crystal_lemmas(const CrystalGraph& g) {
  CheckReport rep("regular crystal lemmas");
  int nodes = g.datum().num_nodes();
  Rational max_norm;
  for (int x = 0; x < g.size(); ++x) max_norm = std::max(max_norm, g.norm_squared(x));
  for (int x = 0; x < g.size(); ++x) {
    Rational nx = g.norm_squared(x);
    for (int j = 0; j < nodes; ++j) {
      rep.count();
      Rational nt = g.norm_squared(g.raise_max(j, x));
      if (nt < nx) rep.fail("norm drops along e_" + std::to_string(j) + "^max at " + g.key(x));
      bool boundary = g.raise_edge(j, x) < 0 || g.lower_edge(j, x) < 0;
      if ((nt == nx) != boundary)
        rep.fail("norm equality criterion at " + g.key(x) + " j=" + std::to_string(j));
      if (g.weyl_s(j, g.weyl_s(j, x)) != x) rep.fail("S_" + std::to_string(j) + " not involutive");
      if (g.weight(g.weyl_s(j, x)) != g.datum().reflect(j, g.weight(x)))
        rep.fail("wt(S_j b) != r_j wt(b) at " + g.key(x));
    }
    if (nx == max_norm && !g.is_extremal(x)) rep.fail("maximal-norm non-extremal " + g.key(x));
    // braid relations of the S-action; m(i,j) = 2,3,4,6 by a_ij a_ji = 0,1,2,3
    for (int i = 0; i < nodes; ++i) {
      for (int j = i + 1; j < nodes; ++j) {
        int prod = g.datum().cartan()[i][j] * g.datum().cartan()[j][i];
        int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : prod == 3 ? 6 : 0;
        if (m == 0) continue;  // infinite order, no relation
        rep.count();
        int a = x, b = x;
        for (int step = 0; step < m; ++step) {
          a = g.weyl_s(step % 2 == 0 ? i : j, a);
          b = g.weyl_s(step % 2 == 0 ? j : i, b);
        }
        if (a != b)
          rep.fail("braid relation (" + std::to_string(i) + "," + std::to_string(j) + ") at " +
                   g.key(x));
      }
    }
  }
  return rep;
}

CheckReport check_path_lemmas(const CrystalGraph& g) {
  CheckReport rep("path direction lemmas");
  if (g.factor_shapes().size() != 1)
    throw std::invalid_argument("path lemmas need a one-factor crystal");
  int nodes = g.datum().num_nodes();
  for (int x = 0; x < g.size(); ++x) {
    const ClPath& eta = g.element(x).factors[0];
    for (int j = 0; j < nodes; ++j) {
      rep.count();
      long long init = eta.initial_direction()(j);
      if (init < 0 && g.raise_edge(j, x) < 0)
        rep.fail("iota(h_" + std::to_string(j) + ") < 0 without e-edge at " + g.key(x));
      if (eta.final_direction()(j) > 0 && g.lower_edge(j, x) < 0)
        rep.fail("kappa(h_" + std::to_string(j) + ") > 0 without f-edge at " + g.key(x));
      int cur = x;
      while (g.raise_edge(j, cur) >= 0) {
        if (g.element(cur).factors[0].initial_direction() != eta.initial_direction())
          rep.fail("iota changed below e_" + std::to_string(j) + "^max at " + g.key(x));
        cur = g.raise_edge(j, cur);
      }
      if (init <= 0 &&
          g.element(cur).factors[0].initial_direction() !=
              g.datum().reflect(j, eta.initial_direction()))
        rep.fail("iota(e_" + std::to_string(j) + "^max) != r_j(iota) at " + g.key(x));
    }
    // two-step chains: iota(e_{j2}^max e_{j1}^max eta) = r_{j2} r_{j1} (iota(eta))
    // whenever the reflected directions stay nonpositive along the chain
    for (int j1 = 0; j1 < nodes; ++j1) {
      if (eta.initial_direction()(j1) > 0) continue;
      ClassicalWeight mu1 = g.datum().reflect(j1, eta.initial_direction());
      int top1 = g.raise_max(j1, x);
      for (int j2 = 0; j2 < nodes; ++j2) {
        if (mu1(j2) > 0) continue;
        rep.count();
        int top2 = g.raise_max(j2, top1);
        if (g.element(top2).factors[0].initial_direction() != g.datum().reflect(j2, mu1))
          rep.fail("two-step iota chain (" + std::to_string(j1) + "," + std::to_string(j2) +
                   ") at " + g.key(x));
      }
    }
  }
  return rep;
}

CheckReport check_tensor_lemmas(const CrystalGraph& g) {
  CheckReport rep("tensor product lemmas");
  if (g.factor_shapes().size() < 2)
    throw std::invalid_argument("tensor lemmas need at least two factors");
  const AffineCartanDatum& d = g.datum();
  for (int x = 0; x < g.size(); ++x) {
    const CrystalElement& b = g.element(x);
    CrystalElement b1{{b.factors[0]}};
    CrystalElement b2{std::vector<ClPath>(b.factors.begin() + 1, b.factors.end())};
    for (int j = 0; j < d.num_nodes(); ++j) {
      rep.count();
      long long L = g.epsilon(j, x);
      long long e1 = b1.epsilon(j);
      if (L < e1) rep.fail("eps(b1 (x) b2) < eps(b1) at " + g.key(x));
      auto raise_pow = [&](CrystalElement t, long long times) -> std::optional<CrystalElement> {
        for (long long s = 0; s < times; ++s) {
          auto r = t.raise(d, j);
          if (!r) return std::nullopt;
          t = std::move(*r);
        }
        return t;
      };
      int cur = x;
      for (long long l = 0; l <= L; ++l) {
        std::optional<CrystalElement> lo, hi;
        if (l <= L - e1)
          lo = raise_pow(b2, l);
        else
          lo = raise_pow(b2, L - e1);
        hi = raise_pow(b1, std::max(0LL, l - (L - e1)));
        if (!lo || !hi) {
          rep.fail("staged e_" + std::to_string(j) + "^" + std::to_string(l) +
                   " vanished early at " + g.key(x));
          break;
        }
        CrystalElement expect{hi->factors};
        expect.factors.insert(expect.factors.end(), lo->factors.begin(), lo->factors.end());
        if (g.key(cur) != expect.to_string()) {
          rep.fail("staged e_" + std::to_string(j) + "^" + std::to_string(l) + " at " + g.key(x));
          break;
        }
        if (l < L) cur = g.raise_edge(j, cur);
      }
    }
  }
  return rep;
}

}  // namespace lzpath
