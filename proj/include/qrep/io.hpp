#ifndef QREP_IO_HPP
#define QREP_IO_HPP

#include <string>

#include "qrep/decompose.hpp"
#include "qrep/kronecker.hpp"

namespace qrep {

/// On-disk document for a presentation:
///   {"field": {"kind":"gf","p":5} | {"kind":"q"},
///    "dims": [d1,d2,d3,d4],
///    "alpha": [[..]], "beta": [[..]], "gamma": [[..]], "delta": [[..]]}
/// Prime-field entries are integers (reduced on read); rational entries are
/// integers or "a/b" strings. Zero-dimension matrices serialize as [].
std::string write_repfile(const Presentation& v);
Presentation read_repfile(const std::string& text);

std::string write_matrix_json(const Mat& m);
Mat read_matrix_json(const std::string& text, const FieldSpec& f);

/// {"type","n","variant","count"} plus {"poly","s","granularity"} for type 0.
std::string decomposition_json(const Decomposition& d);

std::string field_json(const FieldSpec& f);
FieldSpec parse_field(const std::string& text);          // "gf:5" or "q"
Poly parse_poly(const std::string& text, const FieldSpec& f);  // "1,1,1" low first

DType parse_dtype(const std::string& name);  // "0" "I" "II" "III" "III*" "IV" "IV*"
Variant parse_variant(const std::string& name);

}  // namespace qrep

#endif
