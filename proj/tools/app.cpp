#include "app.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>

#include "selftest.hpp"
#include "tsurf/enumerate.hpp"

namespace tsurf::app {

using io::ConfigError;
using io::json;

namespace {

const std::vector<std::string> kCommands = {"validate", "shear",     "standard",  "flip",    "graph",
                                            "check-connected", "algebra", "enumerate", "selftest"};

// Violation of a proven identity or of an internal cross-check.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int positive(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer() || j.at(key).get<int>() <= 0)
    throw ConfigError(std::string("limit '") + key + "' must be a positive integer");
  return j.at(key).get<int>();
}

struct Context {
  SurfaceModel s;
  PartialTaggedTriangulation r;
};

SurfaceModel load_surface(const JobConfig& c) {
  if (c.surface.is_null()) throw ConfigError("missing field 'surface'");
  return io::surface_from_json(c.surface);
}

std::vector<TaggedArc> load_arcs(const SurfaceModel& s, const json& j, const char* what) {
  if (j.is_null()) throw ConfigError(std::string("missing field '") + what + "'");
  if (j == "base") {
    std::vector<TaggedArc> arcs;
    for (int e = 0; e < s.rank(); ++e) arcs.push_back(edge_arc(s, e));
    return arcs;
  }
  return io::arcs_from_json(s, j);
}

PartialTaggedTriangulation load_partial(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  std::set<TaggedArc> distinct(arcs.begin(), arcs.end());
  if (distinct.size() != arcs.size()) throw ConfigError("repeated arc in the list");
  try {
    return make_partial(s, arcs);
  } catch (const TriangulationError& e) {
    throw ConfigError(std::string("arcs do not form a partial triangulation: ") + e.what());
  } catch (const ArcError& e) {
    throw ConfigError(std::string("arcs do not form a partial triangulation: ") + e.what());
  }
}

Context load_context(const JobConfig& c) {
  Context ctx{load_surface(c), {}};
  ctx.r = load_partial(ctx.s, load_arcs(ctx.s, c.R, "R"));
  return ctx;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + (std::filesystem::path(dir) / name).string());
  f << content;
}

// Main artifact in each format plus the files written to the output directory.
struct Output {
  json data;
  std::string text;
  std::string dot;
  std::map<std::string, std::string> files;
  json summary = json::object();
};

json kappa_json(const SurfaceModel& s, const std::map<int, int>& kappa) {
  json k = json::object();
  for (auto [p, v] : kappa) k[s.vertexLabel(p)] = v;
  return k;
}

std::string arc_list_text(const SurfaceModel& s, const std::vector<TaggedArc>& arcs) {
  std::string out;
  for (const auto& a : arcs) out += (out.empty() ? "" : ", ") + arc_label(s, a);
  return "{" + out + "}";
}

Output cmd_validate(const JobConfig& c) {
  Context ctx = load_context(c);
  const SurfaceModel& s = ctx.s;
  bool admissible = is_admissible(s, ctx.r.ideal);
  bool boundary = connects_to_boundary(s, ctx.r.arcs);
  Output o;
  o.data = {{"surface", io::surface_to_json(s)},
            {"R", io::arcs_to_json(s, ctx.r.arcs)},
            {"contextId", io::set_id(s, ctx.r.arcs)},
            {"kappa", kappa_json(s, ctx.r.kappa)},
            {"selfFolded", ctx.r.ideal.selfFolded.size()},
            {"admissible", admissible},
            {"connectsToBoundary", boundary}};
  o.text = "rank " + std::to_string(s.rank()) + "\nR " + arc_list_text(s, ctx.r.arcs) + "\nadmissible " +
           (admissible ? "yes" : "no") + "\nconnects to boundary " + (boundary ? "yes" : "no") + "\n";
  o.files["surface.json"] = dump(io::surface_to_json(s));
  o.files["validate.json"] = dump(o.data);
  o.summary = {{"rank", s.rank()}, {"arcs", ctx.r.size()}, {"admissible", admissible}, {"connectsToBoundary", boundary}};
  return o;
}

Laminate laminate_of(const SurfaceModel& s, const TaggedArc& a, const std::string& kind) {
  return kind == "eop" ? co_elementary_laminate(s, a) : elementary_laminate(s, a);
}

Output cmd_shear(const JobConfig& c) {
  Context ctx = load_context(c);
  const SurfaceModel& s = ctx.s;
  if (c.arc.is_null()) throw ConfigError("missing field 'arc'");
  TaggedArc a = io::arc_from_json(s, c.arc);
  Laminate l = laminate_of(s, a, c.laminate);
  bool sh = shears(s, l, ctx.r);
  Output o;
  o.data = {{"arc", io::arc_to_json(s, a)}, {"laminate", c.laminate}, {"shears", sh}};
  o.text = "shears " + std::string(sh ? "yes" : "no") + "\n";
  if (sh) {
    std::vector<int> v = shear_vector(s, l, ctx.r);
    o.data["shear"] = io::shear_to_json(s, ctx.r, v);
    for (int i = 0; i < ctx.r.size(); ++i) o.text += arc_label(s, ctx.r.arcs[i]) + " " + std::to_string(v[i]) + "\n";
  } else {
    o.data["shear"] = nullptr;
  }
  o.files["shear.json"] = dump(o.data);
  o.summary = {{"shears", sh}};
  return o;
}

Output cmd_standard(const JobConfig& c) {
  Context ctx = load_context(c);
  const SurfaceModel& s = ctx.s;
  if (c.arc.is_null()) throw ConfigError("missing field 'arc'");
  TaggedArc a = io::arc_from_json(s, c.arc);
  bool byShear = is_standard(s, a, ctx.r);
  bool geometric = is_standard_geometric(s, a, ctx.r);
  PartialTaggedTriangulation t = good_completion(s, ctx.r, c.limits.maxBound);
  bool byCompletion = is_standard_by_completion(s, a, ctx.r, t);
  bool co = is_costandard(s, a, ctx.r);
  bool coGeometric = is_costandard_geometric(s, a, ctx.r);
  if (byShear != geometric || byShear != byCompletion || co != coGeometric)
    throw InvariantError("standardness tests disagree on " + arc_label(s, a));
  Output o;
  o.data = {{"arc", io::arc_to_json(s, a)},
            {"standard", byShear},
            {"costandard", co},
            {"completion", io::arcs_to_json(s, t.arcs)}};
  o.data["index"] = byShear ? io::shear_to_json(s, ctx.r, index_vector(s, a, ctx.r)) : json(nullptr);
  o.data["coIndex"] = co ? io::shear_to_json(s, ctx.r, co_index_vector(s, a, ctx.r)) : json(nullptr);
  o.text = "standard " + std::string(byShear ? "yes" : "no") + "\ncostandard " + (co ? "yes" : "no") + "\n";
  o.files["standard.json"] = dump(o.data);
  o.summary = {{"standard", byShear}, {"costandard", co}};
  return o;
}

int flip_index(const SurfaceModel& s, const PartialTaggedTriangulation& u, const json& j) {
  if (j.is_null()) throw ConfigError("missing field 'arc'");
  if (j.is_number_integer()) {
    int i = j.get<int>();
    if (i < 0 || i >= u.size()) throw ConfigError("flip index out of range");
    return i;
  }
  int i = u.indexOf(io::arc_from_json(s, j));
  if (i < 0) throw ConfigError("the arc to flip is not in U");
  return i;
}

Output cmd_flip(const JobConfig& c) {
  Context ctx = load_context(c);
  const SurfaceModel& s = ctx.s;
  PartialTaggedTriangulation u = c.U.is_null() ? ctx.r : load_partial(s, load_arcs(s, c.U, "U"));
  if (!is_dissection(s, u.arcs, ctx.r)) throw ConfigError("U is not a dissection of R");
  int l = flip_index(s, u, c.arc);
  FlipResult fr = flip(s, u, l, ctx.r);
  PartialTaggedTriangulation v = make_partial(s, fr.dissection, false);
  FlipResult back = flip(s, v, v.indexOf(fr.newArc), ctx.r);
  if (back.dissection != u.arcs || back.newArc != u.arcs[l] || back.sign != -fr.sign)
    throw InvariantError("flipping back does not return to U");
  Output o;
  o.data = {{"flipped", io::arc_to_json(s, u.arcs[l])},
            {"newArc", io::arc_to_json(s, fr.newArc)},
            {"dissection", io::arcs_to_json(s, fr.dissection)},
            {"sign", fr.sign},
            {"direction", fr.sign > 0 ? "right" : "left"},
            {"crossChecked", fr.crossChecked},
            {"involutive", true}};
  o.text = arc_label(s, u.arcs[l]) + " -> " + arc_label(s, fr.newArc) + " (" + (fr.sign > 0 ? "right" : "left") +
           ")\n" + arc_list_text(s, fr.dissection) + "\n";
  o.files["flip.json"] = dump(o.data);
  o.summary = {{"direction", fr.sign > 0 ? "right" : "left"}, {"crossChecked", fr.crossChecked}};
  return o;
}

std::string graph_text(const SurfaceModel& s, const ExchangeGraph& g) {
  std::string out;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    out += "v" + std::to_string(i) + " depth " + std::to_string(g.vertices[i].depth) + " " +
           arc_list_text(s, g.vertices[i].arcs) + "\n";
  for (const auto& f : g.flips)
    out += "v" + std::to_string(f.from) + " -> v" + std::to_string(f.to) + " at " +
           arc_label(s, g.vertices[f.from].arcs[f.arc]) + (f.sign > 0 ? " right" : " left") + "\n";
  return out;
}

json report_summary(const ConnectivityReport& rep) {
  return {{"vertices", rep.vertices},   {"edges", rep.edges},         {"regular", rep.regular ? json(rep.degree) : json(false)},
          {"connected", rep.connected}, {"complete", rep.complete},   {"symmetric", rep.symmetric}};
}

Output graph_output(const Context& ctx, const ExchangeGraph& g) {
  Output o;
  o.data = io::graph_to_json(ctx.s, g, ctx.r);
  o.dot = io::graph_to_dot(ctx.s, g, ctx.r);
  o.text = graph_text(ctx.s, g);
  o.files["graph.json"] = dump(o.data);
  o.files["graph.dot"] = o.dot;
  return o;
}

void check_connects(const Context& ctx) {
  if (!connects_to_boundary(ctx.s, ctx.r.arcs))
    throw ConfigError("R has a component without an arc ending at a marked point");
}

Output cmd_graph(const JobConfig& c) {
  Context ctx = load_context(c);
  check_connects(ctx);
  ExchangeGraph g = exchange_graph(ctx.s, ctx.r, {c.limits.maxVertices, c.limits.maxWordLength}, c.threads);
  Output o = graph_output(ctx, g);
  ConnectivityReport rep = check_connected(g);
  o.summary = report_summary(rep);
  if (!g.complete) o.summary["limitReason"] = g.limitReason;
  return o;
}

Output cmd_check_connected(const JobConfig& c) {
  Context ctx = load_context(c);
  check_connects(ctx);
  ExchangeGraph g = exchange_graph(ctx.s, ctx.r, {c.limits.maxVertices, c.limits.maxWordLength}, c.threads);
  Output o = graph_output(ctx, g);
  std::optional<int> oracle;
  if (g.complete) {
    DissectionEnumeration en = enumerate_dissections(ctx.s, ctx.r, c.limits.startBound, c.limits.boundStabilizationMargin,
                                                     c.limits.maxBound);
    oracle = static_cast<int>(en.dissections.size());
    o.summary["oracleBound"] = en.bound;
  }
  ConnectivityReport rep = check_connected(g, oracle);
  json r = io::report_to_json(rep);
  o.files["report.json"] = dump(r);
  o.summary.update(report_summary(rep));
  o.summary["oracleCount"] = r["oracleCount"];
  o.summary["oracleMatches"] = rep.oracleMatches;
  if (!g.complete) o.summary["limitReason"] = g.limitReason;
  return o;
}

Output cmd_algebra(const JobConfig& c) {
  Context ctx = load_context(c);
  if (c.mode != "tiling" && c.mode != "skew-tiling") throw ConfigError("mode must be tiling or skew-tiling");
  QuiverPresentation p = c.mode == "tiling" ? tiling_presentation(ctx.s, ctx.r.ideal)
                                            : skew_tiling_presentation(ctx.s, ctx.r.ideal);
  Output o;
  o.data = io::presentation_to_json(ctx.s, p);
  o.text = p.text();
  bool gentle = false;
  if (p.mode == QuiverPresentation::Mode::SkewTiling) {
    validate_skew_gentle(p);
    gentle = true;
  }
  o.files["presentation.json"] = dump(o.data);
  o.files["presentation.txt"] = o.text;
  o.summary = {{"vertices", p.vertices.size()},
               {"arrows", p.arrows.size()},
               {"specialLoops", p.specialLoops.size()},
               {"relations", p.relations.size()}};
  if (gentle) o.summary["skewGentle"] = true;
  return o;
}

Output cmd_enumerate(const JobConfig& c) {
  Context ctx = load_context(c);
  const SurfaceModel& s = ctx.s;
  DissectionEnumeration en = enumerate_dissections(s, ctx.r, c.limits.startBound, c.limits.boundStabilizationMargin,
                                                   c.limits.maxBound);
  std::sort(en.dissections.begin(), en.dissections.end());
  json ds = json::array();
  Output o;
  for (const auto& d : en.dissections) {
    ds.push_back(io::arcs_to_json(s, d));
    o.text += arc_list_text(s, d) + "\n";
  }
  o.data = {{"bound", en.bound}, {"standardArcs", io::arcs_to_json(s, en.standardArcs)}, {"dissections", ds}};
  o.files["enumeration.json"] = dump(o.data);
  o.summary = {{"standardArcs", en.standardArcs.size()}, {"dissections", en.dissections.size()}, {"bound", en.bound}};
  return o;
}

Output cmd_selftest(const JobConfig& c, std::ostream& out) {
  Output o;
  json results = json::array();
  bool all = true;
  selftest::run_all(c.threads, [&](const selftest::CriterionResult& r) {
    out << selftest::format_line(r) << std::flush;
    all &= r.pass;
    results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    o.text += selftest::format_line(r);
  });
  o.data = {{"criteria", results}, {"pass", all}};
  o.files["selftest.json"] = dump(o.data);
  o.summary = {{"criteria", results.size()}, {"passed", all}};
  if (!all) o.summary["failed"] = true;
  return o;
}

Output dispatch(const JobConfig& c, std::ostream& out) {
  const std::string& cmd = c.command;
  if (cmd == "validate") return cmd_validate(c);
  if (cmd == "shear") return cmd_shear(c);
  if (cmd == "standard") return cmd_standard(c);
  if (cmd == "flip") return cmd_flip(c);
  if (cmd == "graph") return cmd_graph(c);
  if (cmd == "check-connected") return cmd_check_connected(c);
  if (cmd == "algebra") return cmd_algebra(c);
  if (cmd == "enumerate") return cmd_enumerate(c);
  return cmd_selftest(c, out);
}

// A complete exchange graph is connected, regular and closed under flipping back.
bool graph_invariants_hold(const std::string& command, const json& summary) {
  if (command != "graph" && command != "check-connected") return true;
  bool ok = summary["connected"].get<bool>() && summary["symmetric"].get<bool>() && summary["regular"] != false;
  if (command == "check-connected") ok &= summary["oracleMatches"].get<bool>();
  return ok;
}

}  // namespace

bool is_command(const std::string& c) { return std::find(kCommands.begin(), kCommands.end(), c) != kCommands.end(); }

JobConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {"command", "surface", "R",      "U",      "arc",    "laminate",
                                              "mode",    "limits",  "format", "output", "out",    "threads"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw ConfigError("unknown field '" + it.key() + "'");
  JobConfig c;
  auto str = [&](const char* key, std::string& dst) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
    dst = j.at(key).get<std::string>();
  };
  str("command", c.command);
  str("laminate", c.laminate);
  str("mode", c.mode);
  str("format", c.format);
  str("out", c.out);
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (!o.is_object()) throw ConfigError("field 'output' must be an object");
    if (o.contains("dir")) c.out = o.at("dir").get<std::string>();
    if (o.contains("format")) c.format = o.at("format").get<std::string>();
  }
  if (j.contains("surface")) c.surface = j.at("surface");
  if (j.contains("R")) c.R = j.at("R");
  if (j.contains("U")) c.U = j.at("U");
  if (j.contains("arc")) c.arc = j.at("arc");
  if (j.contains("limits")) {
    const json& l = j.at("limits");
    if (!l.is_object()) throw ConfigError("field 'limits' must be an object");
    c.limits.maxVertices = positive(l, "maxVertices", c.limits.maxVertices);
    c.limits.maxWordLength = positive(l, "maxWordLength", c.limits.maxWordLength);
    c.limits.startBound = positive(l, "startBound", c.limits.startBound);
    c.limits.boundStabilizationMargin = positive(l, "boundStabilizationMargin", c.limits.boundStabilizationMargin);
    c.limits.maxBound = positive(l, "maxBound", c.limits.maxBound);
  }
  c.threads = positive(j, "threads", c.threads);
  return c;
}

void check_config(const JobConfig& c) {
  if (c.command.empty()) throw ConfigError("no command given");
  if (!is_command(c.command)) throw ConfigError("unknown command '" + c.command + "'");
  if (c.format != "json" && c.format != "dot" && c.format != "text")
    throw ConfigError("format must be json, dot or text");
  if (c.format == "dot" && c.command != "graph" && c.command != "check-connected")
    throw ConfigError("dot output is only available for graph and check-connected");
  if (c.laminate != "e" && c.laminate != "eop") throw ConfigError("laminate must be e or eop");
  if (c.threads <= 0) throw ConfigError("threads must be positive");
  if (c.command == "selftest") return;
  if (c.surface.is_null()) throw ConfigError("missing field 'surface'");
  if (c.R.is_null()) throw ConfigError("missing field 'R'");
  if ((c.command == "shear" || c.command == "standard" || c.command == "flip") && c.arc.is_null())
    throw ConfigError("missing field 'arc'");
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  Output o;
  try {
    check_config(config);
    o = dispatch(config, out);
    if (o.summary.contains("complete") && !o.summary["complete"].get<bool>()) {
      err << "limit exceeded: " << o.summary["limitReason"].get<std::string>() << "\n";
      code = kLimitExceeded;
    } else if (o.summary.contains("failed") || !graph_invariants_hold(config.command, o.summary)) {
      err << "invariant violated\n";
      code = kInvariantViolation;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const SurfaceError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ArcError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const TriangulationError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const AlgebraError& e) {
    err << (e.kind() == AlgebraError::Kind::AxiomViolation ? "invariant violated: " : "config error: ") << e.what()
        << "\n";
    return e.kind() == AlgebraError::Kind::AxiomViolation ? kInvariantViolation : kConfigError;
  } catch (const DissectionError& e) {
    bool limit = e.kind() == DissectionError::Kind::LimitExceeded;
    err << (limit ? "limit exceeded: " : "invariant violated: ") << e.what() << "\n";
    return limit ? kLimitExceeded : kInvariantViolation;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const ShearError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  }

  if (config.command != "selftest") {
    if (config.format == "json") out << dump(o.data);
    else if (config.format == "dot") out << o.dot;
    else out << o.text;
  }
  if (!config.out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.out, ec);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json summary = {{"command", config.command}, {"exitCode", code}};
    summary.update(o.summary);
    summary["timings"] = {{"totalMs", ms}};
    try {
      for (const auto& [name, content] : o.files) write_file(config.out, name, content);
      write_file(config.out, "summary.json", dump(summary));
    } catch (const ConfigError& e) {
      err << "config error: " << e.what() << "\n";
      return kConfigError;
    }
  }
  return code;
}

}  // namespace tsurf::app
