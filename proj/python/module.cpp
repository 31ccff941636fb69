// Python bindings for the main operations: Cartan data, crystal generation,
// energy/degree tables, 1d-sums and Kostka-Foulkes polynomials.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lzpath/energy.hpp"
#include "lzpath/onedsum.hpp"

namespace py = pybind11;
using namespace lzpath;

namespace {

ClassicalWeight weight_from(const AffineCartanDatum& d, const std::vector<long long>& pairings) {
  if (static_cast<int>(pairings.size()) != d.num_nodes())
    throw std::invalid_argument("weight needs " + std::to_string(d.num_nodes()) + " pairings");
  return ClassicalWeight{pairings};
}

std::map<long long, long long> poly_dict(const LaurentPolynomial& p) {
  return {p.coefficients().begin(), p.coefficients().end()};
}

// one session per datum; caches crystals and tables across calls
struct Session {
  explicit Session(const std::string& family, int rank)
      : datum(datum_for(family_from_string(family), rank)), tables(datum) {}

  AffineCartanDatum datum;
  TableSet tables;

  std::string label() const { return datum.label(); }
  int rank0() const { return datum.rank0(); }
  std::vector<std::vector<int>> cartan() const {
    std::vector<std::vector<int>> m;
    for (const auto& row : datum.cartan()) m.emplace_back(row.begin(), row.end());
    return m;
  }
  std::vector<long long> fundamental(int i) const { return datum.fundamental_cl(i).pairings; }
  long long level(const std::vector<long long>& mu) const {
    return datum.level(weight_from(datum, mu));
  }
  std::vector<long long> reflect(int j, const std::vector<long long>& mu) const {
    return datum.reflect(j, weight_from(datum, mu)).pairings;
  }
  std::vector<std::vector<long long>> orbit(const std::vector<long long>& mu) const {
    std::vector<std::vector<long long>> out;
    for (const auto& w : datum.finite_orbit(weight_from(datum, mu))) out.push_back(w.pairings);
    return out;
  }

  py::dict crystal(const std::vector<long long>& mults) {
    LevelZeroDominantWeight lambda{mults};
    const CrystalGraph& g = tables.path_crystal(lambda);
    py::dict out;
    out["size"] = g.size();
    std::vector<std::string> keys;
    for (int x = 0; x < g.size(); ++x) keys.push_back(g.key(x));
    out["elements"] = keys;
    out["source"] = g.source();
    out["simple"] = g.check_simple().ok;
    py::dict mult;
    for (const auto& [w, m] : g.weight_multiplicities()) mult[py::str(w.to_string())] = m;
    out["weight_multiplicities"] = mult;
    return out;
  }

  py::dict degree_table(const std::vector<long long>& mults) {
    LevelZeroDominantWeight lambda{mults};
    const CrystalGraph& g = tables.path_crystal(lambda);
    const auto& deg = tables.degree(lambda);
    py::dict out;
    for (int x = 0; x < g.size(); ++x) out[py::str(g.key(x))] = deg[x];
    return out;
  }

  std::map<long long, long long> one_dim_sum_py(const std::vector<int>& seq,
                                                const std::vector<long long>& mu_mults) {
    return poly_dict(one_dim_sum(tables, seq, LevelZeroDominantWeight{mu_mults}.cl(datum)));
  }
  std::map<long long, long long> kostka(const std::vector<int>& seq,
                                        const std::vector<long long>& mu_mults) {
    return poly_dict(
        kostka_foulkes_paths(tables, seq, LevelZeroDominantWeight{mu_mults}.cl(datum)));
  }
  long long d_ext(const std::vector<int>& seq) { return tables.energy_D_ext(seq); }

  py::dict verify(const std::vector<int>& seq) {
    tables.prepare(seq);
    std::vector<CheckReport> reports;
    reports.push_back(check_main_theorem(tables, seq));
    reports.push_back(check_step1(tables, seq));
    reports.push_back(check_onedsum_identity(tables, seq));
    if (datum.family() == Family::A) {
      std::vector<int> sorted = seq;
      std::sort(sorted.rbegin(), sorted.rend());
      reports.push_back(check_kostka_oracle(tables, sorted));
    }
    bool ok = true;
    py::list checks;
    for (const auto& r : reports) {
      ok = ok && r.ok;
      py::dict c;
      c["name"] = r.name;
      c["ok"] = r.ok;
      c["checked"] = r.checked;
      c["counterexamples"] = r.counterexamples;
      checks.append(c);
    }
    py::dict out;
    out["ok"] = ok;
    out["checks"] = checks;
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(pylzpath, m) {
  m.doc() = "level-zero path crystals, energy functions and one-dimensional sums";

  py::class_<Session>(m, "Session", "crystals and tables for one affine type")
      .def(py::init<const std::string&, int>(), py::arg("family"), py::arg("rank"))
      .def_property_readonly("label", &Session::label)
      .def_property_readonly("rank0", &Session::rank0)
      .def("cartan", &Session::cartan)
      .def("fundamental", &Session::fundamental, py::arg("i"),
           "pairings of the level-zero fundamental weight varpi_i")
      .def("level", &Session::level, py::arg("mu"))
      .def("reflect", &Session::reflect, py::arg("j"), py::arg("mu"))
      .def("orbit", &Session::orbit, py::arg("mu"))
      .def("crystal", &Session::crystal, py::arg("weights"),
           "generate B(lambda)_cl for lambda given by fundamental multiplicities")
      .def("degree_table", &Session::degree_table, py::arg("weights"))
      .def("one_dim_sum", &Session::one_dim_sum_py, py::arg("seq"), py::arg("mu"),
           "X(B_i, mu; q) as {exponent: coefficient}")
      .def("kostka", &Session::kostka, py::arg("seq"), py::arg("mu"))
      .def("d_ext", &Session::d_ext, py::arg("seq"))
      .def("verify", &Session::verify, py::arg("seq"),
           "run the main identity suite for the sequence");

  m.def(
      "charge_kostka",
      [](const std::vector<long long>& shape, const std::vector<long long>& content) {
        return poly_dict(charge_oracle(Partition(shape), Partition(content)));
      },
      py::arg("shape"), py::arg("content"),
      "Kostka-Foulkes polynomial from the charge statistic over tableaux");
}
