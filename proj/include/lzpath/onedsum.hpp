#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzpath/energy.hpp"
#include "lzpath/laurent.hpp"
#include "lzpath/report.hpp"

namespace lzpath {

struct Partition {
  std::vector<long long> parts;  // weakly decreasing, positive

  explicit Partition(std::vector<long long> p = {});
  long long size() const;
  Partition conjugate() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  std::string to_string() const;  // "(2,1)"
};

// indices of elements killed by every classical raising operator
std::vector<int> restricted_highest(const CrystalGraph& g);

// X(B_i, mu; q) = sum of q^{D_i(b)} over restricted highest b of weight mu
LaurentPolynomial one_dim_sum(TableSet& ts, const std::vector<int>& seq,
                              const ClassicalWeight& mu);

// sum of q^{Deg_lambda(eta)} over restricted highest eta of weight mu
LaurentPolynomial path_degree_sum(TableSet& ts, const LevelZeroDominantWeight& shape,
                                  const ClassicalWeight& mu);

// dominant weights carrying at least one restricted highest element of B_i
std::vector<ClassicalWeight> restricted_weights(TableSet& ts, const std::vector<int>& seq);

// type A: mu as a partition with exactly `boxes` cells, padding with height-l
// columns; none when no nonnegative padding exists
std::optional<Partition> weight_to_partition(const AffineCartanDatum& d, const ClassicalWeight& mu,
                                             long long boxes);

// K_{mu^t, lambda-dagger}(q) from paths: sum of q^{-Deg} over restricted
// highest elements of weight mu; requires type A and weakly decreasing seq
LaurentPolynomial kostka_foulkes_paths(TableSet& ts, const std::vector<int>& seq,
                                       const ClassicalWeight& mu);

// independent oracle: sum of q^{charge(T)} over semistandard tableaux of the
// given shape and content (Lascoux-Schutzenberger charge)
LaurentPolynomial charge_oracle(const Partition& shape, const Partition& content);

long long charge_of_word(const std::vector<int>& word, int max_letter);

// path_degree_sum == q^{-D_ext} X for every restricted weight of the sequence
CheckReport check_onedsum_identity(TableSet& ts, const std::vector<int>& seq);
// kostka_foulkes_paths == charge_oracle for every restricted weight
CheckReport check_kostka_oracle(TableSet& ts, const std::vector<int>& seq);

}  // namespace lzpath
