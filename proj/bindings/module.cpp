#include "wildbraid/braidvariety.hpp"
#include "wildbraid/stokes.hpp"
#include "wildbraid/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wildbraid;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

char type_char(const std::string& t) {
  if (t.size() != 1) throw ConfigError("type label must be a single letter A-G");
  return t[0];
}

py::object report_to_py(const report::Report& rep) { return json_to_py(rep.to_json()); }

}  // namespace

PYBIND11_MODULE(_wildbraid, m) {
  m.doc() = "exact Steinberg-section, braid-variety and Stokes-diagram computations";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<ResourceError>(m, "ResourceError");
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput");

  m.def("root_system_info", [](const std::string& type, int rank) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    nlohmann::json j = rootdata::root_system_to_json(rs);
    j["cartan"] = rs.cartan;
    j["positive_roots"] = rs.positive_roots;
    auto center = rootdata::center_group(rs);
    j["center_cyclic_orders"] = center.cyclic_orders;
    j["center_exponent"] = center.exponent;
    return json_to_py(j);
  }, py::arg("type"), py::arg("rank"));

  m.def("coxeter_word", [](const std::string& type, int rank) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return rootdata::coxeter_element(rs).word;
  });

  m.def("longest_word", [](const std::string& type, int rank) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return rootdata::longest_element(rs).word;
  });

  m.def("is_elliptic", [](const std::string& type, int rank, const std::vector<int>& word) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return rootdata::is_elliptic(rs, rootdata::from_word(rs, word));
  });

  m.def("demazure_product", [](const std::string& type, int rank,
                               const std::vector<int>& letters) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return braid::demazure_product(rs, braid::BraidWord{letters}).word;
  });

  m.def("normal_form", [](const std::string& type, int rank, const std::vector<int>& letters) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return json_to_py(braid::normal_form_to_json(braid::normal_form(rs, braid::BraidWord{letters})));
  });

  m.def("braid_equal", [](const std::string& type, int rank, const std::vector<int>& a,
                          const std::vector<int>& b) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return braid::braid_equal(rs, braid::BraidWord{a}, braid::BraidWord{b});
  });

  m.def("cyclically_equivalent", [](const std::string& type, int rank,
                                    const std::vector<int>& a, const std::vector<int>& b) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return braid::cyclically_equivalent(rs, braid::BraidWord{a}, braid::BraidWord{b});
  });

  m.def("expected_dimension", [](const std::string& type, int rank,
                                 const std::vector<int>& letters) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return braidvariety::expected_dimension(rs, braid::BraidWord{letters});
  });

  m.def("center_table", [] { return report_to_py(verify::center_table()); });

  m.def("full_twist_holds", [](const std::string& type, int rank) {
    auto rs = rootdata::build_root_system(type_char(type), rank);
    return braid::braid_equal(rs,
                              braid::power(braid::kloosterman_braid(rs), rs.coxeter_number),
                              braid::full_twist(rs));
  });

  m.def("kloosterman", [](const std::string& family, int n, const std::string& cls, long q,
                          std::uint64_t seed) {
    verify::Options opt;
    opt.seed = seed;
    return report_to_py(verify::kloosterman(
        family, n, cls, q == 0 ? std::nullopt : std::optional<long>(q), opt));
  }, py::arg("family") = "SL", py::arg("n") = 2, py::arg("cls") = "",
     py::arg("q") = 0, py::arg("seed") = 20250808);

  m.def("airy", [](const std::string& type, int rank) {
    return report_to_py(verify::airy(type_char(type), rank));
  });

  m.def("stokes_braid", [](const std::string& type, int rank, const std::string& slope) {
    long m = 0;
    long d = stokes::parse_slope(slope, m);
    return report_to_py(verify::stokes_braid(type_char(type), rank, d, m));
  });

  m.def("count_points", [](const std::string& family, int n, long q,
                           const std::vector<int>& letters, const std::string& target,
                           const std::string& cls) {
    return report_to_py(verify::count_command(family, n, q, letters, target, cls));
  }, py::arg("family"), py::arg("n"), py::arg("q"), py::arg("letters"),
     py::arg("target") = "auto", py::arg("cls") = "");
}
