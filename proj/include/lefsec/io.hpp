// JSON forms of fibrations, certificates, twist tables and splitting
// problems.
//
//   fibration:   { "genus": g, "cycles": [ { "h1": [..], "sign": 1,
//                  "based_word": "a1", "twist_table": {..} } ],
//                  "claimed_monodromy": { "matrix": [[..]], "twist_table": {..} } }
//   twist table: { "images": ["word", ...], "inverse_images": ["word", ...] }
//   certificate: { "alpha": "word", "m": [..], "zetas": ["word", ...] }
//   splitting:   { "genus": g, "k": k, "twists": [table, ...],
//                  "images": [ { "fiber": "word", "base": "x1" } ],
//                  "attach_words": ["x1 x2 x1^-1 x2^-1"] }
//
// Optional fields are omitted on output when absent. Integers are JSON
// numbers, or decimal strings when they do not fit in 64 bits.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "lefsec/section_engine.hpp"

namespace lefsec::io {

using nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

Integer integer_from_json(const json& j, const std::string& where);
json to_json(const Integer& x);
IntVector vector_from_json(const json& j, const std::string& where);
json to_json(const IntVector& v);
IntMatrix matrix_from_json(const json& j, const std::string& where);
json to_json(const IntMatrix& m);

Word word_from_json(const json& j, const std::string& where);

Automorphism twist_table_from_json(const GroupCtx& ctx, const json& j, const std::string& where);
json to_json(const Automorphism& f);

FibrationSpec fibration_from_json(const json& j);
json to_json(const FibrationSpec& spec);

SectionCertificate certificate_from_json(const json& j);
json to_json(const SectionCertificate& cert);

struct SplittingProblem {
  unsigned genus = 1;
  std::size_t k = 0;
  std::vector<Automorphism> twists;
  std::vector<BouquetElement> images;
  std::vector<Word> attach_words;
};
SplittingProblem splitting_from_json(const json& j);

}  // namespace lefsec::io
