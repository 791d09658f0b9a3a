#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kmcrystal/cli.hpp"
#include "kmcrystal/io.hpp"

namespace py = pybind11;
using namespace kmcrystal;

namespace {

WeightVector weight(const CartanData& cd, const std::vector<std::int64_t>& coords, std::int64_t delta) {
  if (static_cast<int>(coords.size()) != cd.rank()) {
    throw Error(ErrorKind::InvalidArgument, "weight has " + std::to_string(coords.size()) + " coordinates, rank is " +
                                                std::to_string(cd.rank()));
  }
  return WeightVector::from_ints(coords, delta);
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::int64_t> coords(const WeightVector& w) {
  std::vector<std::int64_t> out;
  for (const auto& c : w.lambda) out.push_back(c.numerator());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crystal bases of Kac-Moody algebras: tensor products, filtrations and multiplicities";

  static py::exception<Error> error(m, "KmcrystalError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(error_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "cartan",
      [](const std::string& type) {
        const auto cd = parse_cartan(type);
        py::dict d;
        d["name"] = cd.name;
        d["matrix"] = cd.matrix;
        d["kind"] = to_string(cd.kind);
        d["symmetrizer"] = cd.symmetrizer;
        d["dual_marks"] = cd.dual_marks;
        return d;
      },
      py::arg("type"), "Validated Cartan data for a named type or a JSON matrix.");

  m.def(
      "crystal",
      [](const std::string& type, const std::vector<std::int64_t>& w, std::int64_t delta, std::optional<int> depth) {
        const auto cd = parse_cartan(type);
        const auto origin = weight(cd, w, delta);
        const bool low = !is_dominant(cd, origin) && is_antidominant(cd, origin);
        const auto g = low ? generate_lowest(cd, origin, depth) : generate_highest(cd, origin, depth);
        return to_py(crystal_to_json(g));
      },
      py::arg("type"), py::arg("weight"), py::arg("delta") = 0, py::arg("depth") = py::none(),
      "B(lambda) for dominant weights, B(-mu) for antidominant ones, as a JSON-shaped dict.");

  m.def(
      "min_words",
      [](const std::string& type, const std::vector<std::int64_t>& w, const std::string& order) {
        const auto cd = parse_cartan(type);
        const auto g = generate_highest(cd, weight(cd, w, 0));
        std::vector<std::string> out;
        for (int v : descending(g, make_order(g, order_mode_from_string(order)))) out.push_back(format_word(cd, min_word(g, v)));
        return out;
      },
      py::arg("type"), py::arg("weight"), py::arg("order") = "minword",
      "Min words of B(lambda), largest element first.");

  m.def(
      "composition_series",
      [](const std::string& type, const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu,
         const std::string& order) {
        const auto cd = parse_cartan(type);
        const auto mode = order_mode_from_string(order);
        return to_py(series_report(cd, filtration(cd, weight(cd, lambda, 0), weight(cd, mu, 0), mode), mode));
      },
      py::arg("type"), py::arg("lambda_"), py::arg("mu"), py::arg("order") = "minword");

  m.def(
      "lr_decompose",
      [](const std::string& type, const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu) {
        const auto cd = parse_cartan(type);
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& w : lr_decompose(cd, weight(cd, lambda, 0), weight(cd, mu, 0))) out.push_back(coords(w));
        return out;
      },
      py::arg("type"), py::arg("lambda_"), py::arg("mu"));

  m.def(
      "weyl_dimension",
      [](const std::string& type, const std::vector<std::int64_t>& lambda) {
        const auto cd = parse_cartan(type);
        return py::int_(py::str(weyl_dimension(cd, weight(cd, lambda, 0)).str()));
      },
      py::arg("type"), py::arg("lambda_"));

  m.def(
      "verify_multiplicity",
      [](const std::string& type, const std::vector<std::int64_t>& mu, std::int64_t mu_delta,
         const std::vector<std::int64_t>& lambda, int depth) {
        const auto cd = parse_cartan(type);
        const auto l = weight(cd, lambda, 0);
        const auto u = weight(cd, mu, mu_delta);
        return to_py(verify_report(cd, l, u, verify_multiplicity(cd, u, l, depth)));
      },
      py::arg("type"), py::arg("mu"), py::arg("mu_delta"), py::arg("lambda_"), py::arg("depth"));

  m.def(
      "classify",
      [](const std::string& type, const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu) {
        const auto cd = parse_cartan(type);
        const auto l = weight(cd, lambda, 0);
        const auto u = weight(cd, mu, 0);
        return to_py(classify_report(cd, l, u, classify_affine(cd, l, u)));
      },
      py::arg("type"), py::arg("lambda_"), py::arg("mu"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"kmcrystal"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in process: (exit code, stdout, stderr).");
}
