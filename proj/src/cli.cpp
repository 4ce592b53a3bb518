#include "toric/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/builders.hpp"
#include "toric/classify.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/fan_io.hpp"
#include "toric/mori.hpp"

namespace toric::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw IoError("error writing '" + path + "'");
}

// Integers that fit a machine word stay JSON numbers; larger ones become
// decimal strings so nothing is rounded.
Json json_int(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json json_ints(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_int(x));
  return a;
}

Json json_cone(const Cone& c) {
  Json a = Json::array();
  for (std::size_t r : c.rays) a.push_back(r);
  return a;
}

Json json_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json_ints(m.row(i).coords()));
  return rows;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Line-oriented rendering of a flat report. Arrays of objects become one
// line per element: "key[i]: field=value field=value".
std::string render_text(const Json& report) {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out += key + ": " + std::to_string(value.size()) + "\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += key + "[" + std::to_string(i) + "]:";
        for (const auto& [field, x] : value[i].items()) out += " " + field + "=" + scalar_text(x);
        out += "\n";
      }
    } else if (value.is_array() && value.empty()) {
      out += key + ": 0\n";
    } else {
      out += key + ": " + scalar_text(value) + "\n";
    }
  }
  return out;
}

std::string render(const Json& report, bool as_json) { return as_json ? report.dump() + "\n" : render_text(report); }

std::vector<TDivisor> parse_degrees(const std::string& spec, std::size_t num_rays) {
  std::vector<TDivisor> out;
  std::stringstream summands(spec);
  std::string summand;
  while (std::getline(summands, summand, ';')) {
    TDivisor d;
    std::stringstream coeffs(summand);
    std::string c;
    while (std::getline(coeffs, c, ',')) {
      if (d.coeffs.emplace_back(), d.coeffs.back().set_str(c, 10) != 0)
        throw UsageError("--degrees: '" + c + "' is not an integer");
    }
    if (d.coeffs.size() != num_rays)
      throw UsageError("--degrees: each summand needs " + std::to_string(num_rays) + " coefficients, one per base ray");
    out.push_back(std::move(d));
  }
  return out;
}

Json analyze_report(const Fan& fan) {
  Json r;
  r["rank"] = fan.rank;
  r["rays"] = fan.rays.size();
  r["max_cones"] = fan.max_cones.size();
  const bool smooth = is_smooth(fan);
  const bool complete = is_complete(fan);
  r["smooth"] = smooth;
  r["complete"] = complete;
  if (!smooth || !complete) {
    r["projective"] = "n/a";
    return r;
  }
  r["projective"] = is_projective(fan);
  r["picard_rank"] = picard_rank(fan);
  const TDivisor k = canonical_divisor(fan);
  r["canonical_divisor"] = json_ints(k.coeffs);
  r["anticanonical_class"] = json_ints(class_of(fan, Integer(-1) * k).class_vector);
  return r;
}

Json mori_report(const Fan& fan) {
  Json r;
  Json ws = Json::array();
  for (const auto& w : walls(fan)) {
    const CurveClass c = curve_class(fan, w);
    Json j;
    j["tau"] = json_cone(w.tau);
    j["sigma"] = json_cone(fan.max_cones[w.sigma]);
    j["sigma_prime"] = json_cone(fan.max_cones[w.sigma_prime]);
    j["class"] = json_ints(c.pairing);
    j["degree"] = json_int(anticanonical_degree(c));
    ws.push_back(std::move(j));
  }
  r["walls"] = std::move(ws);

  Json gens = Json::array();
  for (const auto& g : mori_generators(fan)) {
    Json j;
    j["class"] = json_ints(g.pairing);
    j["degree"] = json_int(anticanonical_degree(g));
    gens.push_back(std::move(j));
  }
  r["generators"] = std::move(gens);

  Json rays = Json::array();
  for (const auto& e : extremal_rays(fan)) {
    const ContractionProfile p = contraction_profile(fan, e);
    Json j;
    j["class"] = json_ints(p.ray.pairing);
    j["length"] = json_int(p.length);
    j["type"] = to_string(p.type);
    j["pos_rays"] = p.pos_rays;
    j["neg_rays"] = p.neg_rays;
    j["zero_rays"] = p.zero_rays;
    j["fiber_dim"] = p.fiber_dim;
    j["locus_dim"] = p.locus_dim;
    rays.push_back(std::move(j));
  }
  r["extremal_rays"] = std::move(rays);
  return r;
}

Json classify_report(const ClassificationReport& report) {
  const auto& ev = report.evidence;
  auto tri = [](const std::optional<bool>& b) -> Json { return b ? Json(*b) : Json("skipped"); };
  Json r;
  r["dimension"] = ev.dimension;
  r["odd_dimension"] = ev.odd_dimension;
  if (ev.odd_dimension) {
    r["n"] = report.verdict.n;
    r["anticanonical_divisible"] = tri(ev.anticanonical_divisible);
    r["extremal_ray_lengths"] = json_ints(ev.extremal_lengths);
    r["length_dichotomy"] = ev.length_dichotomy;
    r["iso_projective_space"] = tri(ev.iso_projective_space);
    r["iso_projectivized_tangent"] = tri(ev.iso_projectivized_tangent);
    if (ev.witness) {
      r["reference"] = ev.reference;
      r["witness_matrix"] = json_matrix(ev.witness->matrix);
      Json perm = Json::array();
      for (std::size_t p : ev.witness->ray_permutation) perm.push_back(p);
      r["witness_ray_permutation"] = std::move(perm);
    }
  }
  r["verdict"] = verdict_line(report.verdict);
  return r;
}

int dispatch(CLI::App& app, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string output, file, base, degrees;
  std::size_t dim = 0, m = 0, a = 0;
  bool as_json = false, full_evidence = false;

  app.require_subcommand(1);
  auto* build = app.add_subcommand("build", "Write the fan of a reference variety");
  build->require_subcommand(1);
  auto* pn = build->add_subcommand("pn", "Projective space P^N");
  pn->add_option("--dim", dim, "dimension N")->required();
  auto* p1pow = build->add_subcommand("p1pow", "(P^1)^M");
  p1pow->add_option("--m", m, "number of factors")->required();
  auto* hirz = build->add_subcommand("hirzebruch", "Hirzebruch surface F_A");
  hirz->add_option("--a", a, "twist A")->required();
  auto* ptan = build->add_subcommand("ptangent", "P(T) over (P^1)^M");
  ptan->add_option("--m", m, "number of factors")->required();
  auto* pbundle = build->add_subcommand("pbundle", "P(O(D_0) + ... + O(D_r)) over a base fan");
  pbundle->add_option("--base", base, "base fan file")->required();
  pbundle->add_option("--degrees", degrees, "summand divisors, e.g. '0,0;2,0' (D_0 must be zero)")->required();
  for (auto* sub : {pn, p1pow, hirz, ptan, pbundle}) sub->add_option("-o,--output", output, "output file");

  auto* validate_cmd = app.add_subcommand("validate", "Check a fan file");
  auto* analyze_cmd = app.add_subcommand("analyze", "Smoothness, completeness, projectivity, Picard rank");
  auto* mori_cmd = app.add_subcommand("mori", "Walls, curve classes, extremal rays and contractions");
  auto* classify_cmd = app.add_subcommand("classify", "Decide whether the variety carries a contact structure");
  classify_cmd->add_flag("--full-evidence", full_evidence, "run both isomorphism tests even when -K is not divisible");
  for (auto* sub : {validate_cmd, analyze_cmd, mori_cmd, classify_cmd}) {
    sub->add_option("file", file, "fan file")->required();
    sub->add_flag("--json", as_json, "emit one JSON object instead of key: value lines");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  }

  if (build->parsed()) {
    Fan fan;
    if (pn->parsed())
      fan = fan_projective_space(dim);
    else if (p1pow->parsed())
      fan = fan_p1_power(m);
    else if (hirz->parsed())
      fan = fan_hirzebruch(a);
    else if (ptan->parsed())
      fan = fan_projectivized_tangent_p1_power(m);
    else {
      Fan base_fan = parse_fan(read_file(base));
      fan = fan_projectivized_split_bundle(base_fan, parse_degrees(degrees, base_fan.rays.size()));
    }
    write_output(output, serialize_fan(fan) + "\n", out);
    return ok;
  }

  if (validate_cmd->parsed()) {
    const Fan fan = parse_fan_unchecked(read_file(file));
    const auto report = validate(fan);
    Json r;
    r["valid"] = report.ok();
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(v);
    if (as_json) {
      r["violations"] = std::move(violations);
      out << r.dump() << "\n";
    } else {
      out << "valid: " << (report.ok() ? "true" : "false") << "\n";
      for (const auto& v : report.violations) out << "violation: " << v << "\n";
    }
    return report.ok() ? ok : semantic_error;
  }

  const Fan fan = parse_fan(read_file(file));
  if (analyze_cmd->parsed()) {
    out << render(analyze_report(fan), as_json);
  } else if (mori_cmd->parsed()) {
    out << render(mori_report(fan), as_json);
  } else {
    ClassifyOptions options;
    options.full_evidence = full_evidence;
    const Json r = classify_report(classify_contact(fan, options));
    if (as_json) {
      out << r.dump() << "\n";
    } else {
      Json body = r;
      body.erase("verdict");
      out << render_text(body) << r["verdict"].get<std::string>() << "\n";
    }
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric geometry: fans, Mori cones and contact classification", "toric"};
  try {
    return dispatch(app, args, out, err);
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return syntax_error;
  } catch (const FanError& e) {
    err << "invalid fan:\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return semantic_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return semantic_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return io_error;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return semantic_error;
  }
}

}  // namespace toric::cli
