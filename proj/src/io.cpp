#include "logmaj/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace logmaj {

using nlohmann::json;

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re"))
    throw std::invalid_argument("matrix_from_json: expected {\"dim\", \"re\"[, \"im\"]}");
  const int m = j.at("dim").get<int>();
  ComplexMatrix a(m);
  const json& re = j.at("re");
  if (static_cast<int>(re.size()) != m)
    throw std::invalid_argument("matrix_from_json: re row count != dim");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(re.at(i).size()) != m)
      throw std::invalid_argument("matrix_from_json: re column count != dim");
    for (int k = 0; k < m; ++k) a(i, k) = Complex(re.at(i).at(k).get<double>(), 0.0);
  }
  if (j.contains("im")) {
    const json& im = j.at("im");
    if (static_cast<int>(im.size()) != m)
      throw std::invalid_argument("matrix_from_json: im row count != dim");
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(im.at(i).size()) != m)
        throw std::invalid_argument("matrix_from_json: im column count != dim");
      for (int k = 0; k < m; ++k)
        a(i, k) = Complex(a(i, k).real(), im.at(i).at(k).get<double>());
    }
  }
  if (!a.is_finite()) throw std::invalid_argument("matrix_from_json: non-finite entries");
  return a;
}

json matrix_to_json(const ComplexMatrix& a) {
  json re = json::array();
  json im = json::array();
  bool any_im = false;
  for (int i = 0; i < a.dim(); ++i) {
    json row_re = json::array();
    json row_im = json::array();
    for (int k = 0; k < a.dim(); ++k) {
      row_re.push_back(a(i, k).real());
      row_im.push_back(a(i, k).imag());
      if (a(i, k).imag() != 0.0) any_im = true;
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  json j{{"dim", a.dim()}, {"re", std::move(re)}};
  if (any_im) j["im"] = std::move(im);
  return j;
}

namespace {

std::string format_17g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::string dump_matrix_json(const ComplexMatrix& a) {
  std::ostringstream out;
  bool any_im = false;
  for (const Complex& v : a.entries())
    if (v.imag() != 0.0) any_im = true;

  auto dump_part = [&](bool imag) {
    out << "[";
    for (int i = 0; i < a.dim(); ++i) {
      out << (i ? ", [" : "[");
      for (int k = 0; k < a.dim(); ++k) {
        if (k) out << ", ";
        out << format_17g(imag ? a(i, k).imag() : a(i, k).real());
      }
      out << "]";
    }
    out << "]";
  };

  out << "{\"dim\": " << a.dim() << ", \"re\": ";
  dump_part(false);
  if (any_im) {
    out << ", \"im\": ";
    dump_part(true);
  }
  out << "}";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

ComplexMatrix read_matrix(const std::string& path) {
  return matrix_from_json(json::parse(read_text_file(path)));
}

void write_matrix(const std::string& path, const ComplexMatrix& a) {
  write_text_file(path, dump_matrix_json(a) + "\n");
}

json to_json(const MajorizationReport& rep) {
  json margins = json::array();
  for (double m : rep.margins) {
    if (std::isinf(m))
      margins.push_back(m > 0 ? "+inf" : "-inf");
    else
      margins.push_back(m);
  }
  return json{{"kind", rep.kind == MajorizationKind::log ? "log" : "weak"},
              {"margins", std::move(margins)},
              {"final_equality_gap",
               std::isinf(rep.final_equality_gap)
                   ? json(rep.final_equality_gap > 0 ? "+inf" : "-inf")
                   : json(rep.final_equality_gap)},
              {"holds", rep.holds},
              {"tol", rep.tol},
              {"zeros_a", rep.zeros_a},
              {"zeros_b", rep.zeros_b}};
}

json to_json(const Spectrum& s) { return json(s.values()); }

json to_json(const ArakiResult& res) {
  return json{{"lhs", to_json(res.lhs)}, {"rhs", to_json(res.rhs)}, {"report", to_json(res.report)}};
}

json to_json(const KarcherSolveResult& res) {
  return json{{"residual", res.residual},
              {"iterations", res.iterations},
              {"residual_history", res.residual_history}};
}

json to_json(const GtReport& rep) {
  json j{{"lhs", rep.lhs},
         {"rhs", rep.rhs},
         {"gap", rep.gap},
         {"r", rep.r},
         {"quadrature_eps", rep.quadrature_eps},
         {"quadrature_mass", rep.quadrature_mass}};
  if (rep.log_majorization) j["log_majorization"] = to_json(*rep.log_majorization);
  return j;
}

json to_json(const DivergenceValue& v) {
  const char* rel = v.support_relation == SupportRelation::contained
                        ? "contained"
                        : (v.support_relation == SupportRelation::overlap ? "overlap" : "orthogonal");
  return json{{"value", v.finite ? json(v.value) : json("+inf")},
              {"finite", v.finite},
              {"support_relation", rel}};
}

json to_json(const EqualityCaseReport& rep) {
  json probe = json::array();
  for (const auto& [t, f] : rep.e_probe) probe.push_back(json{{"t", t}, {"norm", f}});
  return json{{"a", rep.a},
              {"b", rep.b},
              {"c", rep.c},
              {"d", rep.d},
              {"a_value", rep.a_value},
              {"b_value", rep.b_value},
              {"c_value", rep.c_value},
              {"d_value", rep.d_value},
              {"e_probe", std::move(probe)},
              {"e_not_strictly_decreasing", rep.e_not_strictly_decreasing},
              {"e_max_increase", rep.e_max_increase},
              {"e_max_decrease", rep.e_max_decrease},
              {"tol", rep.tol}};
}

json to_json(const LieTrotterKatoResult& res) {
  json errors = json::array();
  for (const auto& [t, e] : res.errors) errors.push_back(json{{"t", t}, {"error", e}});
  return json{{"target", matrix_to_json(res.target.matrix())}, {"errors", std::move(errors)}};
}

}  // namespace logmaj
