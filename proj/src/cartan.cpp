#include "lzpath/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "lzpath/errors.hpp"

namespace lzpath {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown type family '" + s + "'; supported: A, C, D");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

ClassicalWeight ClassicalWeight::operator+(const ClassicalWeight& o) const {
  ClassicalWeight r = *this;
  for (std::size_t j = 0; j < pairings.size(); ++j) r.pairings[j] += o.pairings.at(j);
  return r;
}

ClassicalWeight ClassicalWeight::operator-(const ClassicalWeight& o) const {
  ClassicalWeight r = *this;
  for (std::size_t j = 0; j < pairings.size(); ++j) r.pairings[j] -= o.pairings.at(j);
  return r;
}

ClassicalWeight ClassicalWeight::operator*(long long c) const {
  ClassicalWeight r = *this;
  for (auto& p : r.pairings) p *= c;
  return r;
}

bool ClassicalWeight::is_zero() const {
  return std::all_of(pairings.begin(), pairings.end(), [](long long p) { return p == 0; });
}

std::string ClassicalWeight::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < pairings.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(pairings[j]);
  }
  return s + ")";
}

std::string AffineCartanDatum::label() const {
  int sub = family_ == Family::A ? rank_ - 1 : rank_;
  return family_to_string(family_) + std::to_string(sub) + "(1)";
}

void AffineCartanDatum::build_tables() {
  int n;  // |I| = n + 1
  switch (family_) {
    case Family::A: {
      if (rank_ < 2)
        throw std::invalid_argument("type A needs rank l >= 2 (got " + std::to_string(rank_) +
                                    "); supported: A (l >= 2), C (n >= 2), D (n >= 4)");
      n = rank_ - 1;
      cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
      if (n == 1) {
        cartan_ = {{2, -2}, {-2, 2}};
      } else {
        for (int i = 0; i <= n; ++i) {
          cartan_[i][i] = 2;
          cartan_[i][(i + 1) % (n + 1)] = -1;
          cartan_[i][(i + n) % (n + 1)] = -1;
        }
      }
      marks_.assign(n + 1, 1);
      comarks_.assign(n + 1, 1);
      root_form_ = cartan_;
      break;
    }
    case Family::C: {
      if (rank_ < 2)
        throw std::invalid_argument("type C needs rank n >= 2 (got " + std::to_string(rank_) +
                                    "); supported: A (l >= 2), C (n >= 2), D (n >= 4)");
      n = rank_;
      cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
      for (int i = 0; i <= n; ++i) cartan_[i][i] = 2;
      cartan_[0][1] = -1;
      cartan_[1][0] = -2;
      for (int i = 1; i < n; ++i) {
        cartan_[i][i + 1] = (i == n - 1) ? -2 : -1;
        cartan_[i + 1][i] = -1;
      }
      marks_.assign(n + 1, 2);
      marks_[0] = marks_[n] = 1;
      comarks_.assign(n + 1, 1);
      // alpha_0 and alpha_n long (square length 4), inner nodes short
      std::vector<int> d(n + 1, 1);
      d[0] = d[n] = 2;
      root_form_.assign(n + 1, std::vector<int>(n + 1, 0));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) root_form_[i][j] = d[i] * cartan_[i][j];
      break;
    }
    case Family::D: {
      if (rank_ < 4)
        throw std::invalid_argument("type D needs rank n >= 4 (got " + std::to_string(rank_) +
                                    "); supported: A (l >= 2), C (n >= 2), D (n >= 4)");
      n = rank_;
      cartan_.assign(n + 1, std::vector<int>(n + 1, 0));
      for (int i = 0; i <= n; ++i) cartan_[i][i] = 2;
      auto link = [&](int a, int b) { cartan_[a][b] = cartan_[b][a] = -1; };
      link(0, 2);
      link(1, 2);
      for (int i = 2; i < n - 2; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      marks_.assign(n + 1, 2);
      marks_[0] = marks_[1] = marks_[n - 1] = marks_[n] = 1;
      comarks_ = marks_;
      root_form_ = cartan_;
      break;
    }
    default:
      throw std::invalid_argument("unsupported family");
  }

  // invert the finite Cartan block over the rationals (Gauss-Jordan)
  int m = rank0();
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(2 * m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug[i][j] = Rational(cartan_[i + 1][j + 1]);
    aug[i][m + i] = Rational(1);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (!aug[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw ConsistencyError("finite Cartan block is singular");
    std::swap(aug[col], aug[piv]);
    Rational inv = Rational(1) / aug[col][col];
    for (int j = 0; j < 2 * m; ++j) aug[col][j] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Rational f = aug[r][col];
      for (int j = 0; j < 2 * m; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  finite_inverse_.assign(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) finite_inverse_[i][j] = aug[i][m + j];
}

void AffineCartanDatum::validate() const {
  int n = num_nodes();
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw ConsistencyError("cartan diagonal != 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan_[i][j] > 0) throw ConsistencyError("positive off-diagonal entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw ConsistencyError("cartan zero pattern not symmetric");
    }
  }
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long long>(cartan_[i][j]) * marks_[j];
    if (s != 0) throw ConsistencyError("marks not in right kernel of cartan matrix");
  }
  for (int j = 0; j < n; ++j) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long long>(comarks_[i]) * cartan_[i][j];
    if (s != 0) throw ConsistencyError("comarks not in left kernel of cartan matrix");
  }
  for (int i = 0; i < n; ++i) {
    if (root_form_[i][i] <= 0) throw ConsistencyError("root form diagonal not positive");
    for (int j = 0; j < n; ++j) {
      if (root_form_[i][j] != root_form_[j][i]) throw ConsistencyError("root form not symmetric");
      if (2 * root_form_[i][j] != cartan_[j][i] * root_form_[j][j])
        throw ConsistencyError("root form inconsistent with cartan matrix");
    }
  }
  if (marks_[0] != 1) throw ConsistencyError("a_0 != 1 for untwisted type");
}

AffineCartanDatum datum_for(Family family, int rank) {
  AffineCartanDatum d;
  d.family_ = family;
  d.rank_ = rank;
  d.build_tables();
  d.validate();
  return d;
}

long long AffineCartanDatum::level(const ClassicalWeight& mu) const {
  if (static_cast<int>(mu.size()) != num_nodes())
    throw std::invalid_argument("weight size mismatch for " + label());
  long long s = 0;
  for (int j = 0; j < num_nodes(); ++j) s += static_cast<long long>(comarks_[j]) * mu(j);
  return s;
}

bool AffineCartanDatum::is_dominant(const ClassicalWeight& mu) const {
  for (int j = 1; j < num_nodes(); ++j)
    if (mu(j) < 0) return false;
  return true;
}

bool AffineCartanDatum::is_anti_dominant(const ClassicalWeight& mu) const {
  for (int j = 1; j < num_nodes(); ++j)
    if (mu(j) > 0) return false;
  return true;
}

ClassicalWeight AffineCartanDatum::fundamental_cl(int i) const {
  if (i < 1 || i > rank0())
    throw std::invalid_argument("fundamental index " + std::to_string(i) + " not in I_0 of " +
                                label());
  ClassicalWeight mu = ClassicalWeight::zero(num_nodes());
  mu.pairings[i] = 1;
  mu.pairings[0] = -comarks_[i];
  return mu;
}

ClassicalWeight AffineCartanDatum::alpha_cl(int j) const {
  if (j < 0 || j >= num_nodes()) throw std::invalid_argument("node index out of range");
  ClassicalWeight mu = ClassicalWeight::zero(num_nodes());
  for (int i = 0; i < num_nodes(); ++i) mu.pairings[i] = cartan_[i][j];
  return mu;
}

ClassicalWeight AffineCartanDatum::reflect(int j, const ClassicalWeight& mu) const {
  if (j < 0 || j >= num_nodes()) throw std::invalid_argument("node index out of range");
  long long c = mu(j);
  ClassicalWeight r = mu;
  for (int i = 0; i < num_nodes(); ++i) r.pairings[i] -= c * cartan_[i][j];
  return r;
}

std::vector<ClassicalWeight> AffineCartanDatum::finite_orbit(const ClassicalWeight& mu,
                                                             std::size_t cap) const {
  if (!is_level_zero(mu))
    throw std::invalid_argument("finite_orbit needs a level-zero weight, got level " +
                                std::to_string(level(mu)));
  std::set<std::vector<long long>> seen{mu.pairings};
  std::deque<ClassicalWeight> frontier{mu};
  while (!frontier.empty()) {
    ClassicalWeight w = frontier.front();
    frontier.pop_front();
    for (int j = 1; j < num_nodes(); ++j) {
      ClassicalWeight r = reflect(j, w);
      if (seen.insert(r.pairings).second) {
        if (seen.size() > cap)
          throw ResourceError("finite_orbit exceeded cap of " + std::to_string(cap) +
                              " weights; input is not level zero or is corrupt");
        frontier.push_back(r);
      }
    }
  }
  std::vector<ClassicalWeight> out;
  out.reserve(seen.size());
  for (const auto& p : seen) out.push_back(ClassicalWeight{p});
  return out;
}

ClassicalWeight AffineCartanDatum::anti_dominant(const ClassicalWeight& mu) const {
  ClassicalWeight found;
  bool have = false;
  for (const auto& w : finite_orbit(mu)) {
    if (is_anti_dominant(w)) {
      if (have) throw ConsistencyError("orbit has two anti-dominant elements");
      found = w;
      have = true;
    }
  }
  if (!have) throw ConsistencyError("orbit has no anti-dominant element");
  return found;
}

ClassicalWeight AffineCartanDatum::dominant_representative(const ClassicalWeight& mu) const {
  ClassicalWeight found;
  bool have = false;
  for (const auto& w : finite_orbit(mu)) {
    if (is_dominant(w)) {
      if (have) throw ConsistencyError("orbit has two dominant elements");
      found = w;
      have = true;
    }
  }
  if (!have) throw ConsistencyError("orbit has no dominant element");
  return found;
}

Rational AffineCartanDatum::cl_form(const ClassicalWeight& mu, const ClassicalWeight& nu) const {
  if (!is_level_zero(mu) || !is_level_zero(nu))
    throw std::invalid_argument("cl_form needs level-zero weights");
  int m = rank0();
  // expand both arguments in the basis cl(alpha_j), j in I_0
  auto expand = [&](const ClassicalWeight& w) {
    std::vector<Rational> c(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) c[i] += finite_inverse_[i][j] * Rational(w(j + 1));
    return c;
  };
  std::vector<Rational> c = expand(mu), e = expand(nu);
  Rational s;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += c[i] * e[j] * Rational(root_form_[i + 1][j + 1]);
  return s;
}

ClassicalWeight LevelZeroDominantWeight::cl(const AffineCartanDatum& d) const {
  if (static_cast<int>(mult.size()) != d.rank0())
    throw std::invalid_argument("weight multiplicities have wrong length for " + d.label());
  ClassicalWeight w = ClassicalWeight::zero(d.num_nodes());
  for (int i = 1; i <= d.rank0(); ++i) {
    if (mult[i - 1] < 0) throw std::invalid_argument("negative fundamental multiplicity");
    if (mult[i - 1] != 0) w = w + d.fundamental_cl(i) * mult[i - 1];
  }
  return w;
}

long long LevelZeroDominantWeight::total() const {
  long long t = 0;
  for (long long m : mult) t += m;
  return t;
}

LevelZeroDominantWeight LevelZeroDominantWeight::operator+(
    const LevelZeroDominantWeight& o) const {
  if (mult.size() != o.mult.size()) throw std::invalid_argument("shape rank mismatch");
  LevelZeroDominantWeight r = *this;
  for (std::size_t i = 0; i < mult.size(); ++i) r.mult[i] += o.mult[i];
  return r;
}

std::string LevelZeroDominantWeight::key() const {
  std::string s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mult[i]);
  }
  return s;
}

LevelZeroDominantWeight LevelZeroDominantWeight::fundamental(const AffineCartanDatum& d, int i) {
  if (i < 1 || i > d.rank0()) throw std::invalid_argument("fundamental index not in I_0");
  LevelZeroDominantWeight w{std::vector<long long>(d.rank0(), 0)};
  w.mult[i - 1] = 1;
  return w;
}

LevelZeroDominantWeight LevelZeroDominantWeight::from_sequence(const AffineCartanDatum& d,
                                                               const std::vector<int>& seq) {
  LevelZeroDominantWeight w{std::vector<long long>(d.rank0(), 0)};
  for (int i : seq) {
    if (i < 1 || i > d.rank0())
      throw std::invalid_argument("sequence entry " + std::to_string(i) + " not in I_0 of " +
                                  d.label());
    ++w.mult[i - 1];
  }
  return w;
}

}  // namespace lzpath
