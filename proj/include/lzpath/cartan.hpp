#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lzpath/rational.hpp"

namespace lzpath {

enum class Family { A, C, D };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// A weight in P_cl, stored as the vector of pairings with every simple
// coroot h_j, j in I (the distinguished node 0 first).  This representation
// is faithful since P_cl = Hom(P_cl^v, Z).
struct ClassicalWeight {
  std::vector<long long> pairings;

  long long operator()(int j) const { return pairings.at(j); }
  std::size_t size() const { return pairings.size(); }

  bool operator==(const ClassicalWeight& o) const { return pairings == o.pairings; }
  bool operator!=(const ClassicalWeight& o) const { return !(*this == o); }
  bool operator<(const ClassicalWeight& o) const { return pairings < o.pairings; }

  ClassicalWeight operator+(const ClassicalWeight& o) const;
  ClassicalWeight operator-(const ClassicalWeight& o) const;
  ClassicalWeight operator*(long long c) const;

  static ClassicalWeight zero(std::size_t n) { return ClassicalWeight{std::vector<long long>(n, 0)}; }
  bool is_zero() const;

  std::string to_string() const;  // "(p0,p1,...)"
};

// Affine Cartan data for one of the supported untwisted families, with the
// node numbering of the standard affine tables (node 0 distinguished).  The
// tables are literal constants validated at load by the kernel identities.
class AffineCartanDatum {
public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string label() const;

  int num_nodes() const { return static_cast<int>(cartan_.size()); }  // |I|
  int rank0() const { return num_nodes() - 1; }                       // |I_0|

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  const std::vector<std::vector<int>>& root_form() const { return root_form_; }
  int a0() const { return marks_[0]; }

  long long level(const ClassicalWeight& mu) const;
  bool is_level_zero(const ClassicalWeight& mu) const { return level(mu) == 0; }
  // mu(h_j) >= 0 for all j in I_0
  bool is_dominant(const ClassicalWeight& mu) const;
  bool is_anti_dominant(const ClassicalWeight& mu) const;

  ClassicalWeight fundamental_cl(int i) const;  // cl(varpi_i), i in I_0
  ClassicalWeight alpha_cl(int j) const;        // cl(alpha_j), any j in I
  ClassicalWeight reflect(int j, const ClassicalWeight& mu) const;

  // Orbit of a level-zero weight under the finite Weyl group, sorted.
  std::vector<ClassicalWeight> finite_orbit(const ClassicalWeight& mu,
                                            std::size_t cap = 1000000) const;
  ClassicalWeight anti_dominant(const ClassicalWeight& mu) const;
  ClassicalWeight dominant_representative(const ClassicalWeight& mu) const;

  // Classical bilinear form on level-zero weights, exact.
  Rational cl_form(const ClassicalWeight& mu, const ClassicalWeight& nu) const;

private:
  friend AffineCartanDatum datum_for(Family, int);

  void build_tables();
  void validate() const;

  Family family_ = Family::A;
  int rank_ = 0;  // A: rank l means A_{l-1}^(1); C/D: the subscript n
  std::vector<std::vector<int>> cartan_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  std::vector<std::vector<int>> root_form_;
  std::vector<std::vector<Rational>> finite_inverse_;  // inverse of the I_0 x I_0 block
};

// Supported: A with rank l >= 2 (type A_{l-1}^(1)), C with n >= 2, D with n >= 4.
AffineCartanDatum datum_for(Family family, int rank);

// lambda = sum over I_0 of mult[i-1] * varpi_i, all multiplicities >= 0.
struct LevelZeroDominantWeight {
  std::vector<long long> mult;

  ClassicalWeight cl(const AffineCartanDatum& d) const;
  long long total() const;
  LevelZeroDominantWeight operator+(const LevelZeroDominantWeight& o) const;
  bool operator==(const LevelZeroDominantWeight& o) const { return mult == o.mult; }
  std::string key() const;  // "m1,m2,..."

  static LevelZeroDominantWeight fundamental(const AffineCartanDatum& d, int i);
  static LevelZeroDominantWeight from_sequence(const AffineCartanDatum& d,
                                               const std::vector<int>& seq);
};

}  // namespace lzpath
