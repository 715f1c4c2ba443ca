#pragma once

#include <string>

#include "bwgeom/types.hpp"

namespace bwgeom {

/// Parsed matrix file. data carries the raw entries; the declared kind has
/// already been enforced by read_matrix_file.
struct MatrixFile {
  Index n = 0;
  std::string field;  // "real" | "complex"
  std::string kind;   // "pd" | "density" | "general"
  Matrix data;
};

struct VectorFile {
  Index n = 0;
  std::string field;
  CVector data;
};

/// Reads {"n":..., "field":..., "kind":..., "data":[...]}. Malformed JSON or
/// schema violations raise parse_error; data violating the declared kind's
/// invariants raises validation_error.
MatrixFile read_matrix_file(const std::string& path);

/// Reads {"n":..., "field":..., "data":[...]}.
VectorFile read_vector_file(const std::string& path);

PDMatrix as_pd(const MatrixFile& f);
DensityMatrix as_density(const MatrixFile& f);
HermitianMatrix as_hermitian(const MatrixFile& f);
PositiveMeasure as_measure(const VectorFile& f);
ProbVector as_prob(const VectorFile& f);
PureState as_pure_state(const VectorFile& f);

/// Formats with 15 significant digits; -0 is normalised to 0.
std::string format_number(double x);

/// Serialises a matrix as a matrix-file JSON object with complex entries.
std::string matrix_to_json(const Matrix& m, const std::string& kind);

}  // namespace bwgeom
