#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lzpath/crystal.hpp"
#include "lzpath/report.hpp"

namespace lzpath {

// Owns every crystal, R-matrix, local-energy table and degree table built for
// one Cartan datum.  Construction is lazy; freeze() turns the set read-only,
// after which lookups are safe from concurrent threads.
class TableSet {
public:
  explicit TableSet(AffineCartanDatum d, std::size_t cap = 200000);

  const AffineCartanDatum& datum() const { return datum_; }

  const CrystalGraph& crystal(const std::vector<LevelZeroDominantWeight>& shapes);
  const CrystalGraph& path_crystal(const LevelZeroDominantWeight& shape);
  const CrystalGraph& fundamental(int i);
  const CrystalGraph& tensor_crystal(const std::vector<int>& seq);  // B_i

  // R-matrix and local energy for an ordered shape pair (lambda, lambda').
  struct PairTables {
    const CrystalGraph* forward = nullptr;  // B(lambda) (x) B(lambda')
    const CrystalGraph* reverse = nullptr;  // B(lambda') (x) B(lambda)
    std::vector<int> rmap;                  // forward idx -> reverse idx
    std::vector<long long> energy;          // H_{lambda,lambda'} per forward idx
  };
  const PairTables& pair(const LevelZeroDominantWeight& a, const LevelZeroDominantWeight& b);

  // Deg_lambda per path-crystal index, defined by the edge recursion with
  // Deg(straight(cl(lambda))) = 0; construction re-checks every edge.
  const std::vector<long long>& degree(const LevelZeroDominantWeight& shape);

  // Psi_i : B(lambda)_cl -> B_i as path idx -> tensor idx.
  const std::vector<int>& psi(const std::vector<int>& seq);
  // Psi_{lambda,lambda'} : B(lambda+lambda')_cl -> B(lambda)(x)B(lambda').
  const std::vector<int>& psi_pair(const LevelZeroDominantWeight& a,
                                   const LevelZeroDominantWeight& b);

  // canonical eta-flat: the anti-dominant straight line in B(varpi_i)_cl
  ClPath eta_flat(int i);
  // every element with f_j = 0 for all j in I_0 (candidates for eta-flat)
  std::vector<ClPath> flat_elements(int i);

  // eta_l^{(k)}: first factor of the image of eta_k (x) ... (x) eta_l under
  // the cascade R_{i_k,i_l} o ... o R_{i_{l-1},i_l}; 1-based, k <= l.
  ClPath eta_shifted(const std::vector<int>& seq, const CrystalElement& b, int k, int l);

  long long pair_energy(const LevelZeroDominantWeight& a, const LevelZeroDominantWeight& b,
                        const ClPath& p, const ClPath& q);

  long long energy_D(const std::vector<int>& seq, const CrystalElement& b);
  long long energy_D_ext(const std::vector<int>& seq);
  // same with an explicit eta-flat choice per tensor position
  long long energy_D(const std::vector<int>& seq, const CrystalElement& b,
                     const std::vector<ClPath>& flats);
  long long energy_D_ext(const std::vector<int>& seq, const std::vector<ClPath>& flats);

  // D_{lambda,lambda'} = H + Deg_lambda(eta_1) + Deg_lambda'(~eta_2)
  long long pairwise_D(const LevelZeroDominantWeight& a, const LevelZeroDominantWeight& b,
                       int forward_idx);

  // builds everything the identity suite for seq touches, then freezes
  void prepare(const std::vector<int>& seq);
  void freeze() { frozen_ = true; }

private:
  const PairTables& build_pair(const std::string& key, const LevelZeroDominantWeight& a,
                               const LevelZeroDominantWeight& b);
  void ensure_unfrozen(const std::string& what) const;

  AffineCartanDatum datum_;
  std::size_t cap_;
  bool frozen_ = false;
  std::map<std::string, std::unique_ptr<CrystalGraph>> graphs_;
  std::map<std::string, PairTables> pairs_;
  std::map<std::string, std::vector<long long>> degrees_;
  std::map<std::string, std::vector<int>> psis_;
};

// --- identity checks -------------------------------------------------------
// Each runs a total sweep over the relevant crystal and reports exact
// pass/fail with counterexample keys.

// (H1) on every e_j edge and (H2) at the anchor, re-derived from scratch.
CheckReport check_energy_tables(TableSet& ts, const LevelZeroDominantWeight& a,
                                const LevelZeroDominantWeight& b);
// degree recursion on every edge, all values nonpositive, anchor zero
CheckReport check_degree_table(TableSet& ts, const LevelZeroDominantWeight& shape);
// closed form for Deg(e_j^max eta) when iota(eta)(h_j) <= 0
CheckReport check_deg_max(TableSet& ts, const LevelZeroDominantWeight& shape);
// Deg_lambda(eta) = D_i(Psi_i(eta)) - D_i^ext for every eta
CheckReport check_main_theorem(TableSet& ts, const std::vector<int>& seq);
// Deg_lambda(eta) = sum H(eta_k (x) eta_l^{(k+1)}) + sum Deg(eta_k^{(1)})
CheckReport check_step1(TableSet& ts, const std::vector<int>& seq);
// Deg_{varpi_i}(eta) = H(flat (x) eta) - H(flat (x) dominant), any flat choice
CheckReport check_step2(TableSet& ts, int i);
// Deg_{lambda+lambda'} = D_{lambda,lambda'} o Psi_{lambda,lambda'}
CheckReport check_prop_eng(TableSet& ts, const LevelZeroDominantWeight& a,
                           const LevelZeroDominantWeight& b);
// D_{lambda,lambda'} invariant under e_j^max for j in I_0
CheckReport check_pairwise_invariance(TableSet& ts, const LevelZeroDominantWeight& a,
                                      const LevelZeroDominantWeight& b);
// D_i - D_i^ext does not depend on the eta-flat choices
CheckReport check_flat_choice_invariance(TableSet& ts, const std::vector<int>& seq);

// The concatenation eta_1 * eta_2 of two elements of B(varpi_i)_cl, asserted
// equal to Psi_{(i,i)}^{-1}(eta_1 (x) eta_2); throws on membership violation
// or disagreement.
ClPath concat_check(TableSet& ts, int i, const ClPath& eta1, const ClPath& eta2);
// the concatenation cross-check over every pair of B(varpi_i)_cl
CheckReport check_concatenation(TableSet& ts, int i);

}  // namespace lzpath
