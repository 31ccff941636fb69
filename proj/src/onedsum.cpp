#include "lzpath/onedsum.hpp"

#include <algorithm>
#include <stdexcept>

#include "lzpath/errors.hpp"

namespace lzpath {

Partition::Partition(std::vector<long long> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw std::invalid_argument("not weakly decreasing positive parts");
  }
}

long long Partition::size() const {
  long long s = 0;
  for (long long p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<long long> c;
  if (parts.empty()) return Partition{};
  c.assign(parts[0], 0);
  for (long long p : parts)
    for (long long r = 0; r < p; ++r) ++c[r];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<int> restricted_highest(const CrystalGraph& g) {
  std::vector<int> out;
  for (int idx = 0; idx < g.size(); ++idx) {
    bool highest = true;
    for (int j = 1; j < g.datum().num_nodes() && highest; ++j)
      if (g.raise_edge(j, idx) >= 0) highest = false;
    if (highest) out.push_back(idx);
  }
  return out;
}

LaurentPolynomial one_dim_sum(TableSet& ts, const std::vector<int>& seq,
                              const ClassicalWeight& mu) {
  if (!ts.datum().is_level_zero(mu)) throw std::invalid_argument("mu must be level zero");
  const CrystalGraph& tg = ts.tensor_crystal(seq);
  LaurentPolynomial x;
  for (int idx : restricted_highest(tg))
    if (tg.weight(idx) == mu) x += LaurentPolynomial::q_power(ts.energy_D(seq, tg.element(idx)));
  return x;
}

LaurentPolynomial path_degree_sum(TableSet& ts, const LevelZeroDominantWeight& shape,
                                  const ClassicalWeight& mu) {
  const CrystalGraph& pg = ts.path_crystal(shape);
  const std::vector<long long>& deg = ts.degree(shape);
  LaurentPolynomial x;
  for (int idx : restricted_highest(pg))
    if (pg.weight(idx) == mu) x += LaurentPolynomial::q_power(deg[idx]);
  return x;
}

std::vector<ClassicalWeight> restricted_weights(TableSet& ts, const std::vector<int>& seq) {
  const CrystalGraph& tg = ts.tensor_crystal(seq);
  std::vector<ClassicalWeight> out;
  for (int idx : restricted_highest(tg)) {
    const ClassicalWeight& w = tg.weight(idx);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Partition> weight_to_partition(const AffineCartanDatum& d, const ClassicalWeight& mu,
                                             long long boxes) {
  if (d.family() != Family::A) throw std::invalid_argument("partitions need type A");
  if (!d.is_level_zero(mu) || !d.is_dominant(mu))
    throw std::invalid_argument("mu must be level-zero dominant");
  int l = d.rank();  // mu = sum mu^(i) cl(varpi_i) with mu^(i) = mu(h_i)
  std::vector<long long> parts(l, 0);
  for (int r = l - 1; r >= 1; --r) parts[r - 1] = parts[r] + mu(r);
  long long sz = 0;
  for (long long p : parts) sz += p;
  long long rem = boxes - sz;
  if (rem < 0 || rem % l != 0) return std::nullopt;
  long long pad = rem / l;  // full columns of height l carry no weight
  for (auto& p : parts) p += pad;
  return Partition(std::move(parts));
}

LaurentPolynomial kostka_foulkes_paths(TableSet& ts, const std::vector<int>& seq,
                                       const ClassicalWeight& mu) {
  if (ts.datum().family() != Family::A)
    throw std::invalid_argument("Kostka-Foulkes specialization needs type A");
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (seq[k] > seq[k - 1]) throw std::invalid_argument("sequence must be weakly decreasing");
  LevelZeroDominantWeight lambda = LevelZeroDominantWeight::from_sequence(ts.datum(), seq);
  LaurentPolynomial k = path_degree_sum(ts, lambda, mu).inverted();
  for (const auto& [e, c] : k.coefficients()) {
    (void)c;
    if (e < 0) throw ConsistencyError("negative exponent in a Kostka-Foulkes polynomial");
  }
  return k;
}

long long charge_of_word(const std::vector<int>& wordin, int max_letter) {
  std::vector<int> word = wordin;
  long long total = 0;
  while (!word.empty()) {
    int m = max_letter;
    while (m > 0) {
      bool present = std::find(word.begin(), word.end(), m) != word.end();
      if (present) break;
      --m;
    }
    if (m == 0) throw std::invalid_argument("charge word has non-partition content");
    // select one standard subword: the rightmost 1, then each next letter
    // scanning leftwards cyclically
    std::vector<int> pos(m + 1, -1);
    int n = static_cast<int>(word.size());
    for (int p = n - 1; p >= 0; --p)
      if (word[p] == 1) {
        pos[1] = p;
        break;
      }
    if (pos[1] < 0) throw std::invalid_argument("charge word has non-partition content");
    for (int r = 2; r <= m; ++r) {
      int start = pos[r - 1];
      for (int step = 1; step < n; ++step) {
        int p = (start - step % n + n) % n;
        if (word[p] == r) {
          pos[r] = p;
          break;
        }
      }
      if (pos[r] < 0) throw std::invalid_argument("charge word has non-partition content");
    }
    long long index = 0;
    for (int r = 2; r <= m; ++r) {
      if (pos[r] > pos[r - 1]) ++index;
      total += index;
    }
    std::vector<bool> drop(n, false);
    for (int r = 1; r <= m; ++r) drop[pos[r]] = true;
    std::vector<int> rest;
    rest.reserve(n - m);
    for (int p = 0; p < n; ++p)
      if (!drop[p]) rest.push_back(word[p]);
    word = std::move(rest);
  }
  return total;
}

namespace {

// backtracking enumeration of semistandard tableaux of the given shape and
// content; cells filled in row-major order
void enumerate_ssyt(const std::vector<long long>& shape, std::vector<long long>& remaining,
                    std::vector<std::vector<int>>& rows, std::size_t r, std::size_t c,
                    LaurentPolynomial& acc) {
  if (r == shape.size()) {
    std::vector<int> word;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
      word.insert(word.end(), it->begin(), it->end());
    acc += LaurentPolynomial::q_power(
        charge_of_word(word, static_cast<int>(remaining.size())));
    return;
  }
  if (c == static_cast<std::size_t>(shape[r])) {
    enumerate_ssyt(shape, remaining, rows, r + 1, 0, acc);
    return;
  }
  int lo = c > 0 ? rows[r][c - 1] : 1;                                        // weak rows
  int above = (r > 0 && c < rows[r - 1].size()) ? rows[r - 1][c] + 1 : 1;     // strict columns
  lo = std::max(lo, above);
  for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    rows[r].push_back(v);
    enumerate_ssyt(shape, remaining, rows, r, c + 1, acc);
    rows[r].pop_back();
    ++remaining[v - 1];
  }
}

}  // namespace

LaurentPolynomial charge_oracle(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw std::invalid_argument("shape has " + std::to_string(shape.size()) + " boxes, content " +
                                std::to_string(content.size()));
  if (shape.parts.empty()) return LaurentPolynomial::constant(1);  // empty tableau
  std::vector<long long> remaining = content.parts;
  std::vector<std::vector<int>> rows(shape.parts.size());
  LaurentPolynomial acc;
  enumerate_ssyt(shape.parts, remaining, rows, 0, 0, acc);
  return acc;
}

CheckReport check_onedsum_identity(TableSet& ts, const std::vector<int>& seq) {
  CheckReport rep{"1d-sum identity for seq"};
  LevelZeroDominantWeight lambda = LevelZeroDominantWeight::from_sequence(ts.datum(), seq);
  long long dext = ts.energy_D_ext(seq);
  // union of the restricted weights seen on either side
  std::vector<ClassicalWeight> mus = restricted_weights(ts, seq);
  const CrystalGraph& pg = ts.path_crystal(lambda);
  for (int idx : restricted_highest(pg)) {
    const ClassicalWeight& w = pg.weight(idx);
    if (std::find(mus.begin(), mus.end(), w) == mus.end()) mus.push_back(w);
  }
  for (const ClassicalWeight& mu : mus) {
    rep.count();
    if (path_degree_sum(ts, lambda, mu) != one_dim_sum(ts, seq, mu).shifted(-dext))
      rep.fail("mu = " + mu.to_string());
  }
  // zero weight sanity: an absent weight gives the zero polynomial on both sides
  ClassicalWeight absent = lambda.cl(ts.datum()) + ts.datum().alpha_cl(1);
  rep.count();
  if (!one_dim_sum(ts, seq, absent).is_zero() ||
      !path_degree_sum(ts, lambda, absent).is_zero())
    rep.fail("absent mu = " + absent.to_string());
  return rep;
}

CheckReport check_kostka_oracle(TableSet& ts, const std::vector<int>& seq) {
  CheckReport rep{"Kostka-Foulkes oracle equivalence for seq"};
  std::vector<int> sorted = seq;
  std::sort(sorted.rbegin(), sorted.rend());
  LevelZeroDominantWeight lambda = LevelZeroDominantWeight::from_sequence(ts.datum(), sorted);
  long long boxes = 0;
  for (int i : sorted) boxes += i;
  Partition lam_dagger(std::vector<long long>(sorted.begin(), sorted.end()));
  const CrystalGraph& pg = ts.path_crystal(lambda);
  std::vector<ClassicalWeight> mus;
  for (int idx : restricted_highest(pg)) {
    const ClassicalWeight& w = pg.weight(idx);
    if (std::find(mus.begin(), mus.end(), w) == mus.end()) mus.push_back(w);
  }
  for (const ClassicalWeight& mu : mus) {
    rep.count();
    auto part = weight_to_partition(ts.datum(), mu, boxes);
    if (!part) {
      rep.fail("mu = " + mu.to_string() + " has no partition with " + std::to_string(boxes) +
               " boxes");
      continue;
    }
    if (kostka_foulkes_paths(ts, sorted, mu) != charge_oracle(part->conjugate(), lam_dagger))
      rep.fail("mu = " + mu.to_string() + " ~ " + part->to_string());
  }
  return rep;
}

}  // namespace lzpath
