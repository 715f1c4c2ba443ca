#include "bwgeom/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bwgeom {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw parse_error("malformed JSON in " + path);
  return j;
}

Index read_dim(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw parse_error(path + ": expected an object with integer field \"n\"");
  }
  const auto n = j["n"].get<long long>();
  if (n < 1) throw parse_error(path + ": \"n\" must be >= 1");
  return static_cast<Index>(n);
}

std::string read_field(const json& j, const std::string& path) {
  if (!j.contains("field") || !j["field"].is_string()) {
    throw parse_error(path + ": missing string field \"field\"");
  }
  const std::string field = j["field"].get<std::string>();
  if (field != "real" && field != "complex") {
    throw parse_error(path + ": \"field\" must be \"real\" or \"complex\"");
  }
  return field;
}

Complex read_entry(const json& e, bool complex_field, const std::string& path) {
  if (complex_field) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw parse_error(path + ": complex entries must be [re, im] pairs");
    }
    return {e[0].get<double>(), e[1].get<double>()};
  }
  if (!e.is_number()) throw parse_error(path + ": real entries must be numbers");
  return {e.get<double>(), 0.0};
}

// Kind invariants are part of the file contract: a file that declares "pd"
// or "density" must actually hold such a matrix.
void enforce_declared_kind(const MatrixFile& f, const std::string& path) {
  try {
    if (f.kind == "pd") {
      PDMatrix probe{HermitianMatrix(f.data)};
    } else if (f.kind == "density") {
      DensityMatrix probe{f.data};
    }
  } catch (const validation_error& e) {
    throw validation_error(path + ": " + e.what());
  }
}

}  // namespace

MatrixFile read_matrix_file(const std::string& path) {
  const json j = load_json(path);
  MatrixFile f;
  f.n = read_dim(j, path);
  f.field = read_field(j, path);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw parse_error(path + ": missing string field \"kind\"");
  }
  f.kind = j["kind"].get<std::string>();
  if (f.kind != "pd" && f.kind != "density" && f.kind != "general") {
    throw parse_error(path + ": \"kind\" must be \"pd\", \"density\" or \"general\"");
  }
  if (!j.contains("data") || !j["data"].is_array() ||
      static_cast<Index>(j["data"].size()) != f.n) {
    throw parse_error(path + ": \"data\" must be an array of n rows");
  }
  f.data.resize(f.n, f.n);
  const bool complex_field = f.field == "complex";
  for (Index i = 0; i < f.n; ++i) {
    const json& row = j["data"][static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != f.n) {
      throw parse_error(path + ": each row must have n entries");
    }
    for (Index k = 0; k < f.n; ++k) {
      f.data(i, k) = read_entry(row[static_cast<size_t>(k)], complex_field, path);
    }
  }
  enforce_declared_kind(f, path);
  return f;
}

VectorFile read_vector_file(const std::string& path) {
  const json j = load_json(path);
  VectorFile f;
  f.n = read_dim(j, path);
  f.field = read_field(j, path);
  if (!j.contains("data") || !j["data"].is_array() ||
      static_cast<Index>(j["data"].size()) != f.n) {
    throw parse_error(path + ": \"data\" must be an array of n entries");
  }
  f.data.resize(f.n);
  const bool complex_field = f.field == "complex";
  for (Index i = 0; i < f.n; ++i) {
    f.data(i) = read_entry(j["data"][static_cast<size_t>(i)], complex_field, path);
  }
  return f;
}

PDMatrix as_pd(const MatrixFile& f) { return PDMatrix(HermitianMatrix(f.data)); }

DensityMatrix as_density(const MatrixFile& f) { return DensityMatrix(f.data); }

HermitianMatrix as_hermitian(const MatrixFile& f) { return HermitianMatrix(f.data); }

namespace {

RVector real_part_checked(const CVector& v, const char* what) {
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i).imag()) > 1e-12 * scale) {
      throw validation_error(std::string(what) + ": entries must be real");
    }
  }
  return v.real();
}

}  // namespace

PositiveMeasure as_measure(const VectorFile& f) {
  return PositiveMeasure(real_part_checked(f.data, "measure"));
}

ProbVector as_prob(const VectorFile& f) {
  return ProbVector(real_part_checked(f.data, "probability vector"));
}

PureState as_pure_state(const VectorFile& f) { return PureState(f.data); }

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string matrix_to_json(const Matrix& m, const std::string& kind) {
  std::ostringstream out;
  out << "{\"n\": " << m.rows() << ", \"field\": \"complex\", \"kind\": \"" << kind
      << "\", \"data\": [";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out << ", ";
    out << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ", ";
      out << "[" << format_number(m(i, j).real()) << ", "
          << format_number(m(i, j).imag()) << "]";
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

}  // namespace bwgeom
