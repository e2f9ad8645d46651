#include "lefsec/io.hpp"

#include <fstream>
#include <limits>

namespace lefsec::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
  }
  throw SchemaError(where + ": expected an integer");
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

IntVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

json to_json(const IntVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

IntMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw SchemaError(where + ": ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

json to_json(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Word word_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where + ": expected a word string");
  try {
    return parse_word(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::vector<Word> words_from_json(const GroupCtx& ctx, const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an array of words");
  std::vector<Word> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    Word word = word_from_json(j[i], w);
    if (!ctx.valid(word)) throw SchemaError(w + ": generator out of range");
    out.push_back(std::move(word));
  }
  return out;
}

unsigned genus_from_json(const json& j) {
  const json& g = require(j, "genus", "fibration");
  if (!g.is_number_integer() || g.get<std::int64_t>() < 1 || g.get<std::int64_t>() > 64)
    throw SchemaError("genus: expected an integer between 1 and 64");
  return static_cast<unsigned>(g.get<std::int64_t>());
}

int sign_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.get<std::int64_t>() != 1 && j.get<std::int64_t>() != -1))
    throw SchemaError(where + ": sign must be 1 or -1");
  return static_cast<int>(j.get<std::int64_t>());
}

}  // namespace

Automorphism twist_table_from_json(const GroupCtx& ctx, const json& j, const std::string& where) {
  auto images = words_from_json(ctx, require(j, "images", where), where + ".images");
  auto inverse_images = words_from_json(ctx, require(j, "inverse_images", where), where + ".inverse_images");
  if (images.size() != ctx.num_generators() || inverse_images.size() != ctx.num_generators())
    throw SchemaError(where + ": tables need one word per generator (" + std::to_string(ctx.num_generators()) + ")");
  return Automorphism(ctx, std::move(images), std::move(inverse_images));
}

json to_json(const Automorphism& f) {
  json images = json::array(), inverse_images = json::array();
  for (const auto& w : f.images()) images.push_back(format_word(w));
  for (const auto& w : f.inverse_images()) inverse_images.push_back(format_word(w));
  return {{"images", images}, {"inverse_images", inverse_images}};
}

FibrationSpec fibration_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("fibration: expected an object");
  FibrationSpec spec;
  spec.genus = genus_from_json(j);
  const GroupCtx ctx = spec.surface();
  const json& cycles = require(j, "cycles", "fibration");
  if (!cycles.is_array()) throw SchemaError("cycles: expected an array");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const std::string where = "cycles[" + std::to_string(i) + "]";
    const json& c = cycles[i];
    VanishingCycle vc;
    vc.h1 = vector_from_json(require(c, "h1", where), where + ".h1");
    if (vc.h1.size() != spec.dimension())
      throw SchemaError(where + ".h1: expected length " + std::to_string(spec.dimension()));
    vc.sign = c.contains("sign") ? sign_from_json(c.at("sign"), where + ".sign") : 1;
    if (c.contains("based_word")) {
      vc.based_word = word_from_json(c.at("based_word"), where + ".based_word");
      if (!ctx.valid(*vc.based_word)) throw SchemaError(where + ".based_word: generator out of range");
    }
    if (c.contains("twist_table")) vc.twist_table = twist_table_from_json(ctx, c.at("twist_table"), where + ".twist_table");
    spec.cycles.push_back(std::move(vc));
  }
  if (j.contains("claimed_monodromy")) {
    const json& cm = j.at("claimed_monodromy");
    if (!cm.is_object()) throw SchemaError("claimed_monodromy: expected an object");
    if (cm.contains("matrix")) {
      spec.claimed_matrix = matrix_from_json(cm.at("matrix"), "claimed_monodromy.matrix");
      if (spec.claimed_matrix->rows() != spec.dimension() || spec.claimed_matrix->cols() != spec.dimension())
        throw SchemaError("claimed_monodromy.matrix: expected a 2g x 2g matrix");
    }
    if (cm.contains("twist_table"))
      spec.claimed_table = twist_table_from_json(ctx, cm.at("twist_table"), "claimed_monodromy.twist_table");
  }
  return spec;
}

json to_json(const FibrationSpec& spec) {
  json cycles = json::array();
  for (const auto& c : spec.cycles) {
    json jc{{"h1", to_json(c.h1)}, {"sign", c.sign}};
    if (c.based_word) jc["based_word"] = format_word(*c.based_word);
    if (c.twist_table) jc["twist_table"] = to_json(*c.twist_table);
    cycles.push_back(std::move(jc));
  }
  json j{{"genus", spec.genus}, {"cycles", cycles}};
  if (spec.claimed_matrix || spec.claimed_table) {
    json cm = json::object();
    if (spec.claimed_matrix) cm["matrix"] = to_json(*spec.claimed_matrix);
    if (spec.claimed_table) cm["twist_table"] = to_json(*spec.claimed_table);
    j["claimed_monodromy"] = cm;
  }
  return j;
}

SectionCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("certificate: expected an object");
  SectionCertificate cert;
  cert.alpha = word_from_json(require(j, "alpha", "certificate"), "alpha");
  const json& m = require(j, "m", "certificate");
  if (!m.is_array()) throw SchemaError("m: expected an array of integers");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_number_integer()) throw SchemaError("m[" + std::to_string(i) + "]: expected an integer");
    cert.m.push_back(m[i].get<long long>());
  }
  const json& zetas = require(j, "zetas", "certificate");
  if (!zetas.is_array()) throw SchemaError("zetas: expected an array of words");
  for (std::size_t i = 0; i < zetas.size(); ++i)
    cert.zetas.push_back(word_from_json(zetas[i], "zetas[" + std::to_string(i) + "]"));
  return cert;
}

json to_json(const SectionCertificate& cert) {
  json zetas = json::array();
  for (const auto& z : cert.zetas) zetas.push_back(format_word(z));
  return {{"alpha", format_word(cert.alpha)}, {"m", cert.m}, {"zetas", zetas}};
}

SplittingProblem splitting_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("splitting: expected an object");
  SplittingProblem p;
  p.genus = genus_from_json(j);
  const GroupCtx ctx = GroupCtx::surface(p.genus);
  const json& k = require(j, "k", "splitting");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 0) throw SchemaError("k: expected a non-negative integer");
  p.k = static_cast<std::size_t>(k.get<std::int64_t>());
  const GroupCtx base = GroupCtx::free(static_cast<unsigned>(p.k));
  const json& twists = require(j, "twists", "splitting");
  if (!twists.is_array()) throw SchemaError("twists: expected an array");
  for (std::size_t i = 0; i < twists.size(); ++i)
    p.twists.push_back(twist_table_from_json(ctx, twists[i], "twists[" + std::to_string(i) + "]"));
  const json& images = require(j, "images", "splitting");
  if (!images.is_array()) throw SchemaError("images: expected an array");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string where = "images[" + std::to_string(i) + "]";
    BouquetElement e{word_from_json(require(images[i], "fiber", where), where + ".fiber"),
                     word_from_json(require(images[i], "base", where), where + ".base")};
    if (!ctx.valid(e.fiber)) throw SchemaError(where + ".fiber: generator out of range");
    if (!base.valid(e.base)) throw SchemaError(where + ".base: expected a word in x1..x" + std::to_string(p.k));
    p.images.push_back(std::move(e));
  }
  if (j.contains("attach_words")) p.attach_words = words_from_json(base, j.at("attach_words"), "attach_words");
  if (p.twists.size() != p.k || p.images.size() != p.k)
    throw SchemaError("splitting: need exactly k twists and k images");
  return p;
}

}  // namespace lefsec::io
