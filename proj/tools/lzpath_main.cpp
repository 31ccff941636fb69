// Command-line surface over the path-crystal library: build crystals, print
// energy/degree tables, evaluate 1d-sums and Kostka-Foulkes polynomials, and
// run the identity verification suite.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "lzpath/energy.hpp"
#include "lzpath/errors.hpp"
#include "lzpath/export.hpp"
#include "lzpath/onedsum.hpp"

using nlohmann::json;
using namespace lzpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string type = "A";
  int rank = 0;
  std::vector<long long> weights;
  std::vector<int> seq;
  std::vector<long long> mu;
  bool json_out = false;
  unsigned jobs = 1;
  std::size_t cap = 200000;
  std::string golden;
};

void add_common(CLI::App* cmd, Options& o, bool with_jobs = true) {
  cmd->add_option("--type", o.type, "type family (A, C, D)");
  cmd->add_option("--rank", o.rank, "rank: l for A_{l-1}(1), n for C_n(1)/D_n(1)")->required();
  cmd->add_flag("--json", o.json_out, "machine-readable JSON output");
  cmd->add_option("--cap", o.cap, "element cap per crystal");
  if (with_jobs) cmd->add_option("--jobs", o.jobs, "worker threads for independent checks");
}

ClassicalWeight mu_from_mults(const AffineCartanDatum& d, const std::vector<long long>& mults) {
  if (static_cast<int>(mults.size()) != d.rank0())
    throw std::invalid_argument("--mu needs " + std::to_string(d.rank0()) +
                                " comma-separated multiplicities for " + d.label());
  LevelZeroDominantWeight w{mults};
  return w.cl(d);
}

int run_crystal(const Options& o) {
  AffineCartanDatum d = datum_for(family_from_string(o.type), o.rank);
  if (static_cast<int>(o.weights.size()) != d.rank0())
    throw std::invalid_argument("--weights needs " + std::to_string(d.rank0()) +
                                " comma-separated multiplicities for " + d.label());
  LevelZeroDominantWeight lambda{o.weights};
  if (lambda.total() <= 0) throw std::invalid_argument("--weights needs a positive multiplicity");
  CrystalGraph g = CrystalGraph::generate(d, {lambda}, o.cap);
  SimpleReport simple = g.check_simple();
  if (o.json_out) {
    json out = graph_to_json(g);
    out["type"] = d.label();
    out["lambda"] = lambda.key();
    out["size"] = g.size();
    out["simple"] = simple.ok;
    if (!simple.ok) out["simple_detail"] = simple.detail;
    json mults = json::object();
    for (const auto& [w, m] : g.weight_multiplicities()) mults[w.to_string()] = m;
    out["weight_multiplicities"] = std::move(mults);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "crystal B(lambda)_cl  type=" << d.label() << "  lambda=[" << lambda.key()
              << "]\n";
    std::cout << "elements: " << g.size() << "\n";
    std::cout << "weight multiplicities:\n";
    for (const auto& [w, m] : g.weight_multiplicities())
      std::cout << "  " << w.to_string() << "  " << m << "\n";
    std::cout << "simple: " << (simple.ok ? "yes" : "NO - " + simple.detail) << "\n";
  }
  return simple.ok ? kExitOk : kExitVerify;
}

std::vector<std::pair<int, int>> distinct_pairs(const std::vector<int>& seq) {
  std::vector<int> distinct = seq;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::pair<int, int>> pairs;
  for (int a : distinct)
    for (int b : distinct) pairs.emplace_back(a, b);
  return pairs;
}

int run_energy(const Options& o) {
  AffineCartanDatum d = datum_for(family_from_string(o.type), o.rank);
  if (o.seq.empty()) throw std::invalid_argument("--seq is required");
  TableSet ts(d, o.cap);
  ts.prepare(o.seq);
  LevelZeroDominantWeight lambda = LevelZeroDominantWeight::from_sequence(d, o.seq);
  const CrystalGraph& tg = ts.tensor_crystal(o.seq);

  bool ok = true;
  std::vector<CheckReport> reports;
  for (auto [a, b] : distinct_pairs(o.seq))
    reports.push_back(check_energy_tables(ts, LevelZeroDominantWeight::fundamental(d, a),
                                          LevelZeroDominantWeight::fundamental(d, b)));
  reports.push_back(check_degree_table(ts, lambda));
  for (const auto& r : reports) ok = ok && r.ok;

  if (o.json_out) {
    json out;
    out["type"] = d.label();
    out["seq"] = o.seq;
    out["D_ext"] = ts.energy_D_ext(o.seq);
    json tables = json::array();
    for (auto [a, b] : distinct_pairs(o.seq))
      tables.push_back(energy_table_to_json(ts, LevelZeroDominantWeight::fundamental(d, a),
                                            LevelZeroDominantWeight::fundamental(d, b)));
    out["H_tables"] = std::move(tables);
    out["Deg"] = degree_table_to_json(ts, lambda);
    json dvals = json::object();
    for (int x = 0; x < tg.size(); ++x) dvals[tg.key(x)] = ts.energy_D(o.seq, tg.element(x));
    out["D"] = std::move(dvals);
    out["consistent"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "type=" << d.label() << " seq=[";
    for (std::size_t k = 0; k < o.seq.size(); ++k) std::cout << (k ? "," : "") << o.seq[k];
    std::cout << "]  D_ext=" << ts.energy_D_ext(o.seq) << "\n";
    for (auto [a, b] : distinct_pairs(o.seq)) {
      auto fa = LevelZeroDominantWeight::fundamental(d, a);
      auto fb = LevelZeroDominantWeight::fundamental(d, b);
      const auto& pt = ts.pair(fa, fb);
      std::cout << "H table for (varpi_" << a << ", varpi_" << b << "):\n";
      for (int x = 0; x < pt.forward->size(); ++x)
        std::cout << "  " << pt.forward->key(x) << "  " << pt.energy[x] << "\n";
    }
    std::cout << "Deg table for lambda=[" << lambda.key() << "]:\n";
    const auto& pg = ts.path_crystal(lambda);
    const auto& deg = ts.degree(lambda);
    for (int x = 0; x < pg.size(); ++x) std::cout << "  " << pg.key(x) << "  " << deg[x] << "\n";
    std::cout << "D values on B_i:\n";
    for (int x = 0; x < tg.size(); ++x)
      std::cout << "  " << tg.key(x) << "  " << ts.energy_D(o.seq, tg.element(x)) << "\n";
    std::cout << "consistency: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

int run_onedsum(const Options& o, bool kostka) {
  AffineCartanDatum d = datum_for(family_from_string(o.type), o.rank);
  if (o.seq.empty()) throw std::invalid_argument("--seq is required");
  TableSet ts(d, o.cap);
  std::vector<ClassicalWeight> mus;
  if (!o.mu.empty())
    mus.push_back(mu_from_mults(d, o.mu));
  else
    mus = restricted_weights(ts, o.seq);

  CheckReport consistency =
      kostka ? check_kostka_oracle(ts, o.seq) : check_onedsum_identity(ts, o.seq);
  json polys = json::object();
  for (const ClassicalWeight& mu : mus) {
    LaurentPolynomial p =
        kostka ? kostka_foulkes_paths(ts, o.seq, mu) : one_dim_sum(ts, o.seq, mu);
    if (o.json_out)
      polys[mu.to_string()] = poly_to_json(p);
    else if (mus.size() == 1 && !o.mu.empty())
      std::cout << p.to_string() << "\n";
    else
      std::cout << mu.to_string() << "  " << p.to_string() << "\n";
  }
  if (o.json_out) {
    json out;
    out["type"] = d.label();
    out["seq"] = o.seq;
    out[kostka ? "K" : "X"] = std::move(polys);
    out["consistent"] = consistency.ok;
    std::cout << out.dump(2) << "\n";
  } else if (!consistency.ok) {
    std::cout << "consistency: FAILED (" << consistency.name << ")\n";
  }
  return consistency.ok ? kExitOk : kExitVerify;
}

std::vector<CheckReport> run_check_suite(TableSet& ts, const std::vector<int>& seq,
                                         unsigned jobs) {
  const AffineCartanDatum& d = ts.datum();
  LevelZeroDominantWeight lambda = LevelZeroDominantWeight::from_sequence(d, seq);
  ts.prepare(seq);
  ts.freeze();

  std::vector<int> distinct = seq;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::function<CheckReport()>> tasks;
  tasks.push_back([&ts, lambda, seq] {
    CheckReport r("simplicity of B(lambda)_cl and B_i");
    SimpleReport s1 = ts.path_crystal(lambda).check_simple();
    SimpleReport s2 = ts.tensor_crystal(seq).check_simple();
    r.checked = 2;
    if (!s1.ok) r.fail(s1.detail);
    if (!s2.ok) r.fail(s2.detail);
    return r;
  });
  for (auto [a, b] : distinct_pairs(seq))
    tasks.push_back([&ts, &d, a, b] {
      return check_energy_tables(ts, LevelZeroDominantWeight::fundamental(d, a),
                                 LevelZeroDominantWeight::fundamental(d, b));
    });
  tasks.push_back([&ts, lambda] { return check_degree_table(ts, lambda); });
  for (int i : distinct)
    tasks.push_back(
        [&ts, &d, i] { return check_degree_table(ts, LevelZeroDominantWeight::fundamental(d, i)); });
  tasks.push_back([&ts, lambda] { return check_deg_max(ts, lambda); });
  tasks.push_back([&ts, seq] { return check_main_theorem(ts, seq); });
  tasks.push_back([&ts, seq] { return check_step1(ts, seq); });
  for (int i : distinct) tasks.push_back([&ts, i] { return check_step2(ts, i); });
  for (int a : distinct)
    for (int b : distinct) {
      if (a > b) continue;
      tasks.push_back([&ts, &d, a, b] {
        return check_prop_eng(ts, LevelZeroDominantWeight::fundamental(d, a),
                              LevelZeroDominantWeight::fundamental(d, b));
      });
      tasks.push_back([&ts, &d, a, b] {
        return check_pairwise_invariance(ts, LevelZeroDominantWeight::fundamental(d, a),
                                         LevelZeroDominantWeight::fundamental(d, b));
      });
    }
  for (int i : distinct) tasks.push_back([&ts, i] { return check_concatenation(ts, i); });
  tasks.push_back([&ts, seq] { return check_flat_choice_invariance(ts, seq); });
  tasks.push_back([&ts, seq] { return check_onedsum_identity(ts, seq); });
  if (d.family() == Family::A) {
    std::vector<int> sorted = seq;
    std::sort(sorted.rbegin(), sorted.rend());
    tasks.push_back([&ts, sorted] { return check_kostka_oracle(ts, sorted); });
  }
  tasks.push_back(
      [&ts, lambda] { return check_regular_crystal_lemmas(ts.path_crystal(lambda)); });
  tasks.push_back([&ts, lambda] { return check_path_lemmas(ts.path_crystal(lambda)); });
  if (seq.size() > 1)
    tasks.push_back([&ts, seq] { return check_tensor_lemmas(ts.tensor_crystal(seq)); });

  std::vector<CheckReport> reports(tasks.size());
  auto run_one = [&](std::size_t t) {
    try {
      reports[t] = tasks[t]();
    } catch (const std::exception& e) {
      CheckReport r("check aborted");
      r.fail(e.what());
      reports[t] = std::move(r);
    }
  };
  if (jobs <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        run_one(t);
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min<std::size_t>(jobs, tasks.size()); ++w)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return reports;
}

int run_verify(const Options& o) {
  AffineCartanDatum d = datum_for(family_from_string(o.type), o.rank);
  if (o.seq.empty()) throw std::invalid_argument("--seq is required");
  TableSet ts(d, o.cap);
  std::vector<CheckReport> reports = run_check_suite(ts, o.seq, o.jobs);

  bool ok = true;
  json jreports = json::array();
  for (const CheckReport& r : reports) {
    ok = ok && r.ok;
    jreports.push_back(report_to_json(r));
  }
  json out{{"type", d.label()}, {"seq", o.seq}, {"ok", ok}, {"checks", std::move(jreports)}};

  if (!o.golden.empty()) {
    std::ifstream in(o.golden);
    if (!in) throw std::invalid_argument("cannot open golden file " + o.golden);
    json expect = json::parse(in, nullptr, false);
    if (expect.is_discarded() || expect != out) {
      std::cout << "FAIL golden mismatch against " << o.golden << "\n";
      return kExitVerify;
    }
    std::cout << "PASS golden match " << o.golden << "\n";
    return ok ? kExitOk : kExitVerify;
  }

  if (o.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CheckReport& r : reports) {
      std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
      for (const auto& c : r.counterexamples) std::cout << "    counterexample: " << c << "\n";
    }
    std::cout << (ok ? "OK" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-zero path crystals, energy functions and 1d-sums"};
  app.require_subcommand(1);

  Options o;
  CLI::App* crystal = app.add_subcommand("crystal", "generate B(lambda)_cl and report on it");
  add_common(crystal, o, false);
  crystal->add_option("--weights", o.weights, "fundamental multiplicities of lambda")
      ->delimiter(',')
      ->required();

  CLI::App* energy = app.add_subcommand("energy", "H, Deg and D tables for a tensor sequence");
  add_common(energy, o);
  energy->add_option("--seq", o.seq, "tensor sequence over I_0")->delimiter(',')->required();

  CLI::App* onedsum = app.add_subcommand("onedsum", "classically restricted 1d-sums X");
  add_common(onedsum, o);
  onedsum->add_option("--seq", o.seq, "tensor sequence over I_0")->delimiter(',')->required();
  onedsum->add_option("--mu", o.mu, "target weight as I_0 multiplicities")->delimiter(',');

  CLI::App* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomials from paths");
  add_common(kostka, o);
  kostka->add_option("--seq", o.seq, "weakly decreasing sequence over I_0")
      ->delimiter(',')
      ->required();
  kostka->add_option("--mu", o.mu, "target weight as I_0 multiplicities")->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "run the full identity suite");
  add_common(verify, o);
  verify->add_option("--seq", o.seq, "tensor sequence over I_0")->delimiter(',')->required();
  verify->add_option("--golden", o.golden, "compare the JSON report against this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (crystal->parsed()) return run_crystal(o);
    if (energy->parsed()) return run_energy(o);
    if (onedsum->parsed()) return run_onedsum(o, false);
    if (kostka->parsed()) return run_onedsum(o, true);
    if (verify->parsed()) return run_verify(o);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
