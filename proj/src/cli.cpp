#include "lefsec/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "lefsec/io.hpp"

namespace lefsec::cli {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::refuted: return "refuted";
    case Status::unknown: return "unknown";
    case Status::error: return "error";
  }
  return "?";
}

int exit_code(const CommandResult& r) { return r.status == Status::error ? 2 : 0; }

namespace {

CommandResult error_result(const std::string& what) {
  CommandResult r;
  r.status = Status::error;
  r.diagnostics.push_back(what);
  return r;
}

FibrationSpec load_fibration(const std::string& path) {
  FibrationSpec spec = io::fibration_from_json(io::load_json_file(path));
  if (Check c = validate(spec); !c) throw io::SchemaError("invalid fibration: " + c.diagnostic);
  return spec;
}

// Input problems become an error status; anything else propagates.
template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const io::SchemaError& e) {
    return error_result(std::string("schema: ") + e.what());
  } catch (const ParseError& e) {
    return error_result(std::string("parse: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return error_result(std::string("input: ") + e.what());
  } catch (const std::out_of_range& e) {
    return error_result(std::string("input: ") + e.what());
  }
}

json verdict_json(const Verdict& v) {
  json j{{"extendable", v.extendable}, {"tier", to_string(v.tier)}};
  j["smoothable"] = v.smoothable ? json(*v.smoothable) : json(nullptr);
  if (v.certificate) j["certificate"] = io::to_json(*v.certificate);
  if (v.h1_witness) {
    json zetas = json::array();
    for (const auto& z : v.h1_witness->zetas) zetas.push_back(io::to_json(z));
    j["h1_witness"] = {{"zetas", zetas}, {"m", io::to_json(v.h1_witness->m)}};
  }
  return j;
}

}  // namespace

IntVector parse_int_vector(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(cleaned);
  IntVector v;
  std::string tok;
  while (in >> tok) {
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (tok.size() <= start || tok.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("malformed integer '" + tok + "' in vector");
    v.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  return v;
}

CommandResult cmd_check_cert(const std::string& fibration_file, const std::string& cert_file) {
  return guarded([&] {
    const FibrationSpec spec = load_fibration(fibration_file);
    const SectionCertificate cert = io::certificate_from_json(io::load_json_file(cert_file));
    const Verdict v = verify_certificate(spec, cert);
    CommandResult r;
    r.payload = verdict_json(v);
    if (v.tier == Tier::pi1_certified) {
      r.status = Status::ok;
    } else if (v.tier == Tier::h1_refuted) {
      r.status = Status::refuted;
      r.diagnostics.push_back("certificate rejected; alpha fails the homology criterion, so no section extends");
    } else {
      r.status = Status::unknown;
      r.diagnostics.push_back("certificate rejected; the homology criterion holds, so extendability is undecided");
    }
    return r;
  });
}

CommandResult cmd_h1(const std::string& fibration_file, const std::string& alpha_vector) {
  return guarded([&] {
    const FibrationSpec spec = load_fibration(fibration_file);
    const IntVector alpha = parse_int_vector(alpha_vector);
    if (alpha.size() != spec.dimension())
      throw std::invalid_argument("alpha vector has length " + std::to_string(alpha.size()) + ", expected " +
                                  std::to_string(spec.dimension()));
    const Verdict v = h1_extendable(spec, alpha);
    CommandResult r;
    r.payload = verdict_json(v);
    if (v.tier == Tier::h1_refuted) {
      r.status = Status::refuted;
      r.diagnostics.push_back("no section extends: the abelianized condition has no integer solution");
    } else {
      r.diagnostics.push_back("necessary condition only; pi_1 extendability is not implied");
    }
    return r;
  });
}

CommandResult cmd_double(const std::string& fibration_file, long long m_bound) {
  return guarded([&] {
    const FibrationSpec spec = load_fibration(fibration_file);
    if (m_bound < 1) throw std::invalid_argument("--m-bound must be >= 1");
    const auto w = distinct_sections_criterion(spec, m_bound);
    const CokernelPresentation ck = boundary_cokernel(spec);
    CommandResult r;
    r.payload["cokernel"] = {{"rank", ck.rank}, {"torsion", io::to_json(IntVector(ck.torsion))}};
    if (!w) {
      r.status = Status::unknown;
      r.payload["witness"] = nullptr;
      r.diagnostics.push_back("criterion inconclusive within bound " + std::to_string(m_bound));
      return r;
    }
    std::vector<long long> m(spec.size(), 0);
    m[w->cycle] = w->multiple;
    r.payload["witness"] = {{"j", w->cycle + 1}, {"m", w->multiple}};
    r.payload["delta_zero"] = io::to_json(double_delta(spec, std::vector<long long>(spec.size(), 0)));
    r.payload["delta_witness"] = io::to_json(double_delta(spec, m));
    r.diagnostics.push_back("the double admits at least two homologically distinct sections");
    return r;
  });
}

CommandResult cmd_hurwitz(const std::string& fibration_file, const std::optional<std::string>& moves,
                          const std::optional<unsigned>& orbit_depth) {
  return guarded([&] {
    if (moves.has_value() == orbit_depth.has_value())
      throw std::invalid_argument("give exactly one of --moves and --orbit-depth");
    const FibrationSpec spec = load_fibration(fibration_file);
    const IntMatrix tau = monodromy(spec);
    CommandResult r;
    if (orbit_depth) {
      const auto orbit = hurwitz_orbit(spec, *orbit_depth);
      bool invariant = true;
      for (const auto& s : orbit) invariant = invariant && monodromy(s) == tau;
      r.payload = {{"orbit_size", orbit.size()}, {"depth", *orbit_depth}, {"monodromy_invariant", invariant}};
      return r;
    }
    FibrationSpec cur = spec;
    std::string list = *moves;
    for (char& c : list)
      if (c == ',') c = ' ';
    std::istringstream in(list);
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R') ||
          tok.find_first_not_of("0123456789", 1) != std::string::npos)
        throw ParseError("malformed move '" + tok + "' (expected L<i> or R<i>)");
      const unsigned long pos = std::stoul(tok.substr(1));
      if (pos == 0) throw std::out_of_range("move positions are 1-based");
      cur = hurwitz_move(cur, pos - 1, tok[0] == 'L' ? HurwitzDirection::left : HurwitzDirection::right);
    }
    r.payload = {{"spec", io::to_json(cur)}, {"monodromy_invariant", monodromy(cur) == tau}};
    return r;
  });
}

CommandResult cmd_torus_h1(const std::string& fibration_file) {
  return guarded([&] {
    const FibrationSpec spec = load_fibration(fibration_file);
    const CokernelPresentation ck = boundary_cokernel(spec);
    CommandResult r;
    r.payload = {{"rank", ck.rank},
                 {"torsion", io::to_json(IntVector(ck.torsion))},
                 {"monodromy", io::to_json(monodromy(spec))}};
    return r;
  });
}

CommandResult cmd_verify_splitting(const std::string& splitting_file) {
  return guarded([&] {
    const io::SplittingProblem p = io::splitting_from_json(io::load_json_file(splitting_file));
    const Check c = verify_splitting(p.k, p.twists, p.images, p.attach_words);
    CommandResult r;
    r.payload = {{"splits", c.ok}};
    if (!c.ok) {
      r.status = Status::refuted;
      r.diagnostics.push_back(c.diagnostic);
    }
    return r;
  });
}

CommandResult cmd_search_cert(const std::string& fibration_file, const std::string& alpha_word, SearchBounds bounds) {
  return guarded([&] {
    const FibrationSpec spec = load_fibration(fibration_file);
    const Word alpha = parse_word(alpha_word);
    spec.surface().require_valid(alpha);
    CommandResult r;
    const Verdict h1 = h1_extendable(spec, abelianize(spec.surface(), alpha));
    if (h1.tier == Tier::h1_refuted) {
      r.status = Status::refuted;
      r.payload = verdict_json(h1);
      r.diagnostics.push_back("alpha fails the homology criterion; no section extends");
      return r;
    }
    const auto cert = search_certificate(spec, alpha, bounds);
    if (!cert) {
      r.status = Status::unknown;
      r.payload = {{"certificate", nullptr}};
      r.diagnostics.push_back("no certificate within bounds; this is not a proof of non-extendability");
      return r;
    }
    r.payload = verdict_json(verify_certificate(spec, *cert));
    return r;
  });
}

void print_result(const std::string& command, const CommandResult& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json j{{"command", command}, {"status", to_string(r.status)}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
    out << j.dump(2) << '\n';
    return;
  }
  out << "status: " << to_string(r.status) << '\n';
  for (auto it = r.payload.begin(); it != r.payload.end(); ++it) out << it.key() << ": " << it.value().dump() << '\n';
  for (const auto& d : r.diagnostics) out << "note: " << d << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Section existence criteria for Lefschetz fibrations over the disk"};
  app.require_subcommand(1);
  std::string output = "json";
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string fib, cert, alpha, splitting;
  unsigned len_bound = 4;
  long long m_bound_search = 3;
  long long m_bound_double = 8;
  std::optional<std::string> moves;
  std::optional<unsigned> depth;

  auto* check = app.add_subcommand("check-cert", "verify a section certificate");
  check->add_option("fibration", fib)->required();
  check->add_option("certificate", cert)->required();

  auto* h1 = app.add_subcommand("h1-extendable", "decide the abelianized extension criterion");
  h1->add_option("fibration", fib)->required();
  h1->add_option("alpha", alpha, "integer vector of length 2g, e.g. 1,0,0,0")->required();

  auto* dbl = app.add_subcommand("double-distinct", "look for homologically distinct sections of the double");
  dbl->add_option("fibration", fib)->required();
  dbl->add_option("--m-bound", m_bound_double);

  auto* hur = app.add_subcommand("hurwitz", "apply Hurwitz moves or explore the orbit");
  hur->add_option("fibration", fib)->required();
  auto* moves_opt = hur->add_option("--moves", moves, "comma-separated moves such as L1,R3");
  auto* depth_opt = hur->add_option("--orbit-depth", depth);
  moves_opt->excludes(depth_opt);

  auto* torus = app.add_subcommand("mapping-torus-h1", "first homology of the boundary mapping torus");
  torus->add_option("fibration", fib)->required();

  auto* split = app.add_subcommand("verify-splitting", "check a splitting over a 2-complex");
  split->add_option("splitting", splitting)->required();

  auto* search = app.add_subcommand("search-cert", "bounded search for a section certificate");
  search->add_option("fibration", fib)->required();
  search->add_option("alpha", alpha, "word such as \"a1 b1^-1\"")->required();
  search->add_option("--len-bound", len_bound);
  search->add_option("--m-bound", m_bound_search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }
  if (*hur && !moves && !depth) {
    err << "hurwitz: give --moves or --orbit-depth\n";
    return 1;
  }

  CommandResult r;
  std::string name;
  if (*check) {
    name = "check-cert";
    r = cmd_check_cert(fib, cert);
  } else if (*h1) {
    name = "h1-extendable";
    r = cmd_h1(fib, alpha);
  } else if (*dbl) {
    name = "double-distinct";
    r = cmd_double(fib, m_bound_double);
  } else if (*hur) {
    name = "hurwitz";
    r = cmd_hurwitz(fib, moves, depth);
  } else if (*torus) {
    name = "mapping-torus-h1";
    r = cmd_torus_h1(fib);
  } else if (*split) {
    name = "verify-splitting";
    r = cmd_verify_splitting(splitting);
  } else {
    name = "search-cert";
    r = cmd_search_cert(fib, alpha, SearchBounds{len_bound, m_bound_search});
  }
  print_result(name, r, output == "json", out);
  return exit_code(r);
}

}  // namespace lefsec::cli
