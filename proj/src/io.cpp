#include "thurston/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thurston::io {

using nlohmann::json;

namespace {

double require_number(const json& doc, const std::string& where) {
  if (!doc.is_number()) throw ParseError(where + ": expected a number");
  return doc.get<double>();
}

}  // namespace

MarkedGroup group_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("group file: top level must be an object");
  if (!doc.contains("rank")) throw ParseError("group file: missing field \"rank\"");
  if (!doc["rank"].is_number_integer()) throw ParseError("\"rank\": expected an integer");
  MarkedGroup g;
  g.rank = doc["rank"].get<int>();

  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("group file: missing array field \"generators\"");
  }
  int gi = 0;
  for (const json& mat : doc["generators"]) {
    const std::string where = "\"generators\"[" + std::to_string(gi++) + "]";
    if (!mat.is_array() || mat.size() != 2 || !mat[0].is_array() || !mat[1].is_array() ||
        mat[0].size() != 2 || mat[1].size() != 2) {
      throw ParseError(where + ": expected a 2x2 matrix [[a,b],[c,d]]");
    }
    try {
      g.generators.push_back(MoebiusMap::from_entries(
          require_number(mat[0][0], where), require_number(mat[0][1], where),
          require_number(mat[1][0], where), require_number(mat[1][1], where)));
    } catch (const NonUnimodular& e) {
      throw ParseError(where + ": " + e.what());
    }
  }

  if (!doc.contains("peripherals") || !doc["peripherals"].is_array() ||
      doc["peripherals"].empty()) {
    throw ParseError("group file: missing nonempty array field \"peripherals\"");
  }
  int pi = 0;
  for (const json& wj : doc["peripherals"]) {
    const std::string where = "\"peripherals\"[" + std::to_string(pi++) + "]";
    if (!wj.is_array()) throw ParseError(where + ": expected an array of signed indices");
    std::vector<int> letters;
    for (const json& l : wj) {
      if (!l.is_number_integer()) throw ParseError(where + ": letters must be integers");
      letters.push_back(l.get<int>());
    }
    g.peripherals.push_back(Word(std::move(letters)));
  }

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\": expected a string");
    g.label = doc["label"].get<std::string>();
  }
  return g;
}

MarkedGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  MarkedGroup raw = group_from_json(doc);
  MarkedGroup out = normalize(raw);
  validate(out);
  return out;
}

json group_to_json(const MarkedGroup& g) {
  json doc;
  doc["rank"] = g.rank;
  json gens = json::array();
  for (const MoebiusMap& m : g.generators) {
    gens.push_back(json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}));
  }
  doc["generators"] = std::move(gens);
  json peri = json::array();
  for (const Word& w : g.peripherals) peri.push_back(w.letters());
  doc["peripherals"] = std::move(peri);
  doc["label"] = g.label;
  return doc;
}

void save_group(const MarkedGroup& g, const std::string& path) {
  write_text_file(path, group_to_json(g).dump(2) + "\n");
}

bool is_builtin_spec(const std::string& spec) { return spec.rfind("builtin:", 0) == 0; }

MarkedGroup load_group_or_builtin(const std::string& spec) {
  if (!is_builtin_spec(spec)) return load_group(spec);
  const std::string rest = spec.substr(8);
  if (rest == "tps") return thrice_punctured_sphere();
  if (rest.rfind("torus:", 0) == 0) {
    const std::string args = rest.substr(6);
    std::istringstream in(args);
    std::string xs, ys, root;
    if (!std::getline(in, xs, ',') || !std::getline(in, ys, ',') || !std::getline(in, root)) {
      throw ParseError("expected builtin:torus:x,y,plus|minus, got " + spec);
    }
    double x, y;
    try {
      x = std::stod(xs);
      y = std::stod(ys);
    } catch (const std::exception&) {
      throw ParseError("bad trace coordinates in " + spec);
    }
    if (root == "plus") return punctured_torus(x, y, RootChoice::Plus);
    if (root == "minus") return punctured_torus(x, y, RootChoice::Minus);
    throw ParseError("root must be plus or minus, got " + root);
  }
  throw ParseError("unknown builtin " + spec + "; available: builtin:tps, builtin:torus:x,y,root");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

json estimate_to_json(const ExponentEstimate& e) {
  json doc;
  doc["kind"] = to_string(e.kind);
  doc["value"] = e.value;
  doc["witness"] = e.witness.letters();
  doc["cutoff"] = e.cutoff;
  json trace = json::array();
  for (const TracePoint& p : e.trace) trace.push_back(json::array({p.cutoff, p.value}));
  doc["trace"] = std::move(trace);
  if (e.kind == ExponentKind::Rho) {
    json ub = json::array();
    for (const auto& [word, bound] : e.upper_constraints) {
      ub.push_back(json{{"word", word}, {"upper_bound", bound}});
    }
    doc["upper_constraints"] = std::move(ub);
    doc["skipped_unit_translation"] = e.skipped_unit_translation;
  }
  return doc;
}

json distance_report_to_json(const DistanceReport& r) {
  json doc;
  doc["schema"] = 1;
  doc["d_L_forward"] = r.d_L_forward;
  doc["d_L_backward"] = r.d_L_backward;
  doc["d_ls"] = r.d_ls;
  doc["method"] = to_string(r.method);
  doc["cutoff"] = r.cutoff;
  doc["depth"] = r.depth;
  doc["gap"] = r.gap;
  doc["delta_forward"] = estimate_to_json(r.delta_forward);
  doc["delta_backward"] = estimate_to_json(r.delta_backward);
  doc["rho_forward"] = estimate_to_json(r.rho_forward);
  doc["rho_backward"] = estimate_to_json(r.rho_backward);
  return doc;
}

json holder_fit_to_json(const HolderFit& f) {
  json doc;
  doc["anchor_x"] = f.anchor_x.is_infinity() ? json("inf") : json(f.anchor_x.value());
  doc["anchor_y"] = f.anchor_y.is_infinity() ? json("inf") : json(f.anchor_y.value());
  doc["window"] = f.window;
  doc["slope"] = f.slope;
  doc["alpha"] = f.alpha;
  doc["inv_alpha"] = f.inv_alpha;
  doc["C"] = f.constant_C;
  doc["residual"] = f.residual;
  doc["n_used"] = f.n_used;
  return doc;
}

json norm_estimate_to_json(const NormEstimate& n) {
  json doc;
  doc["cr_norm_lb"] = n.cr_norm_lb;
  doc["ls_norm_lb"] = n.ls_norm_lb;
  doc["tuples_evaluated"] = n.tuples_evaluated;
  doc["words_evaluated"] = n.words_evaluated;
  doc["seed"] = n.seed;
  return doc;
}

json compatibility_report_to_json(const CompatibilityReport& r) {
  json doc;
  doc["pairs_checked"] = r.pairs_checked;
  json v = json::array();
  for (const CompatibilityViolation& viol : r.violations) {
    v.push_back(json{{"w1", viol.w1.letters()},
                     {"w2", viol.w2.letters()},
                     {"source_meets", viol.source_meets},
                     {"target_meets", viol.target_meets}});
  }
  doc["violations"] = std::move(v);
  return doc;
}

namespace {

json class_to_json(const IsometryClass& c) {
  json doc;
  doc["kind"] = to_string(c.kind);
  if (c.kind == MapKind::Hyperbolic) {
    doc["lambda"] = c.lambda;
    doc["attracting"] = c.attracting.is_infinity() ? json("inf") : json(c.attracting.value());
    doc["repelling"] = c.repelling.is_infinity() ? json("inf") : json(c.repelling.value());
  } else if (c.kind == MapKind::Parabolic) {
    doc["omega"] = c.omega;
    doc["fixed"] = c.fixed.is_infinity() ? json("inf") : json(c.fixed.value());
  }
  return doc;
}

}  // namespace

json classify_group_to_json(const MarkedGroup& g) {
  json doc;
  doc["schema"] = 1;
  doc["label"] = g.label;
  doc["rank"] = g.rank;
  json gens = json::array();
  for (int i = 0; i < g.rank; ++i) {
    json entry = class_to_json(classify(g.generators[static_cast<std::size_t>(i)]));
    entry["generator"] = i + 1;
    gens.push_back(std::move(entry));
  }
  doc["generators"] = std::move(gens);
  json peri = json::array();
  for (const Word& w : g.peripherals) {
    json entry = class_to_json(classify(evaluate(g, w)));
    entry["word"] = w.letters();
    peri.push_back(std::move(entry));
  }
  doc["peripherals"] = std::move(peri);
  return doc;
}

std::string trace_csv(const ExponentEstimate& e) {
  std::string out = "cutoff,value,witness\n";
  for (const TracePoint& p : e.trace) {
    out += std::to_string(p.cutoff);
    out += ',';
    out += format_double(p.value);
    out += ',';
    out += p.witness.str();
    out += '\n';
  }
  return out;
}

std::string samples_csv(const std::vector<BoundarySample>& samples) {
  std::string out = "word,x,y,kind\n";
  for (const BoundarySample& s : samples) {
    out += s.word.str();
    out += ',';
    out += s.x.is_infinity() ? "inf" : format_double(s.x.value());
    out += ',';
    out += s.y.is_infinity() ? "inf" : format_double(s.y.value());
    out += ',';
    out += to_string(s.kind);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace thurston::io
