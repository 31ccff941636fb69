#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lzpath/cartan.hpp"
#include "lzpath/path.hpp"
#include "lzpath/report.hpp"

namespace lzpath {

// An element of B(lambda_1)_cl x ... x B(lambda_n)_cl; one factor is a plain
// path crystal element.  The Kashiwara tensor rule is evaluated with the
// left-associated convention
//   e_j(b1 (x) b2) = e_j b1 (x) b2  if phi_j(b1) >= eps_j(b2), else b1 (x) e_j b2
//   f_j(b1 (x) b2) = f_j b1 (x) b2  if phi_j(b1) >  eps_j(b2), else b1 (x) f_j b2
// where b1 is the product of all factors but the last.
struct CrystalElement {
  std::vector<ClPath> factors;

  ClassicalWeight weight() const;
  long long epsilon(int j) const;
  long long phi(int j) const;
  std::optional<CrystalElement> raise(const AffineCartanDatum& d, int j) const;
  std::optional<CrystalElement> lower(const AffineCartanDatum& d, int j) const;

  std::string to_string() const;  // concatenation of factor serializations
  bool operator==(const CrystalElement& o) const { return factors == o.factors; }
};

struct SimpleReport {
  bool ok = true;
  std::string detail;  // first counterexample on failure
};

// A finite P_cl-crystal, generated by operator closure and frozen afterwards.
// Elements are ordered by canonical serialization; two generations of the
// same crystal are bit-identical.
class CrystalGraph {
public:
  // closure of straight(cl(shape_1)) (x) ... (x) straight(cl(shape_n)) under
  // e_j, f_j for all j in I; the source is that element
  static CrystalGraph generate(const AffineCartanDatum& d,
                               std::vector<LevelZeroDominantWeight> factor_shapes,
                               std::size_t cap = 200000);

  const AffineCartanDatum& datum() const { return datum_; }
  const std::vector<LevelZeroDominantWeight>& factor_shapes() const { return factor_shapes_; }
  LevelZeroDominantWeight total_shape() const;

  int size() const { return static_cast<int>(elements_.size()); }
  const CrystalElement& element(int idx) const { return elements_.at(idx); }
  const std::string& key(int idx) const { return keys_.at(idx); }
  const ClassicalWeight& weight(int idx) const { return weights_.at(idx); }
  int index_of(const std::string& key) const;  // -1 when absent
  int source() const { return source_; }

  int raise_edge(int j, int idx) const { return e_edges_.at(j).at(idx); }  // -1 when none
  int lower_edge(int j, int idx) const { return f_edges_.at(j).at(idx); }
  long long epsilon(int j, int idx) const;  // e-ray length in the graph
  long long phi(int j, int idx) const;
  int raise_max(int j, int idx) const;

  int weyl_s(int j, int idx) const;
  int weyl_w(const std::vector<int>& word, int idx) const;
  std::vector<int> s_closure(int idx) const;  // sorted
  bool is_extremal(int idx) const;

  Rational norm_squared(int idx) const;  // ||b||^2 = (wt b, wt b)_cl

  SimpleReport check_simple() const;
  void validate() const;  // asserts the graph invariants; called by generate

  std::map<ClassicalWeight, long long> weight_multiplicities() const;

  // Fault injection for the test suite: drops one element together with its
  // incident edges and skips validation.
  CrystalGraph with_element_removed(int idx) const;

private:
  SimpleReport check_simple_impl() const;

  AffineCartanDatum datum_{};
  std::vector<LevelZeroDominantWeight> factor_shapes_;
  std::vector<CrystalElement> elements_;
  std::vector<std::string> keys_;
  std::vector<ClassicalWeight> weights_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> e_edges_, f_edges_;  // [j][idx]
  int source_ = -1;
};

// The unique isomorphism between two simple crystals, materialized by edge
// transport from the anchors.  Every edge is re-checked, so the result is
// over-determined; any conflict throws ConsistencyError.
std::vector<int> anchored_isomorphism(const CrystalGraph& src, const CrystalGraph& dst,
                                      int src_anchor, int dst_anchor);

// Psi_i : B(lambda)_cl -> B_i with lambda the sum of the tensor factors;
// anchors are the dominant straight line and the all-dominant tensor.
std::vector<int> psi_map(const CrystalGraph& path_graph, const CrystalGraph& tensor_graph);

// R_{lambda,lambda'} : B(lambda)(x)B(lambda') -> B(lambda')(x)B(lambda).
std::vector<int> r_matrix_map(const CrystalGraph& forward, const CrystalGraph& reverse);

// eta_1 * eta_2: half-speed eta_1 followed by translated half-speed eta_2.
ClPath concatenate(const AffineCartanDatum& d, const ClPath& a, const ClPath& b);

// Norm growth along e_j^max with its equality case, extremality of
// maximal-norm elements, S_j involutivity, and the Coxeter braid relations
// of the S_w action (word independence).
CheckReport check_regular_crystal_lemmas(const CrystalGraph& g);
// Initial/final direction facts for path crystals: iota(h_j) < 0 forces an
// e_j edge, iota is constant below e_j^max and reflects at the top, and
// kappa(h_j) > 0 forces an f_j edge.
CheckReport check_path_lemmas(const CrystalGraph& g);
// Tensor facts under the split first factor | rest: eps monotonicity and the
// staged formula for e_j^l of a two-fold tensor.
CheckReport check_tensor_lemmas(const CrystalGraph& g);

}  // namespace lzpath
