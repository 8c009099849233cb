// ein3: construction, certification and mesh export for crooked surfaces.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ein3/certify.hpp"
#include "ein3/constructions.hpp"
#include "ein3/exact_surface.hpp"
#include "ein3/mesh.hpp"

using json = nlohmann::ordered_json;
using namespace ein;

namespace {

enum Exit { kOk = 0, kCertFailure = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rational rational_field(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

Vec3Q parse_vec3q(const std::string& s) {
  auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("expected a comma triple, got '" + s + "'");
  return {rational_field(parts[0]), rational_field(parts[1]), rational_field(parts[2])};
}

Vec3 parse_vec3(const std::string& s) { return parse_vec3q(s).cast<double>(); }

EinPoint parse_point(const std::string& s) {
  auto parts = split(s, ':');
  if (parts.size() != 5) throw UsageError("expected a:b:c:d:e, got '" + s + "'");
  Vec5 v;
  for (int i = 0; i < 5; ++i) v[i] = rational_field(parts[i]).get_d();
  try {
    return EinPoint::from(v);
  } catch (const GeometryError& e) {
    throw UsageError(std::string("point is not null: ") + e.what());
  }
}

Extension parse_extension(const std::string& s) {
  if (s == "positive" || s == "+") return Extension::Positive;
  if (s == "negative" || s == "-") return Extension::Negative;
  throw UsageError("extension must be positive or negative, got '" + s + "'");
}

// identity | rho | mu | boost:<ell> | translate:<x,y,z> | rho-translate:<x,y,z>
Iso32 parse_motion(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "identity") return Iso32::identity();
  if (head == "rho") return rho<double>();
  if (head == "mu") return mu_example().cast<double>();
  if (head == "boost") return lift_linear(boost13(rational_field(arg).get_d()));
  if (head == "translate") return lift_translation(parse_vec3(arg));
  if (head == "rho-translate") return rho_conjugate_translation(parse_vec3(arg));
  throw UsageError("unknown motion '" + s + "'");
}

Iso32Q parse_motion_exact(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "identity") return Iso32Q::identity();
  if (head == "rho") return rho<Rational>();
  if (head == "mu") return mu_example();
  if (head == "translate") return lift_translation(parse_vec3q(arg));
  if (head == "rho-translate") return rho<Rational>() * lift_translation(parse_vec3q(arg)) * rho<Rational>();
  throw UsageError("motion '" + s + "' has no exact form");
}

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }
json vec_json(const Vec5& v) { return json::array({v[0], v[1], v[2], v[3], v[4]}); }

json separation_json(const SeparationReport& r) {
  return {{"margin", r.margin},
          {"resolution", r.resolution},
          {"refinement_ratio", r.refinement_ratio},
          {"certified_disjoint", r.certified_disjoint},
          {"grid_diameter", r.grid_diameter},
          {"margin_fine", r.margin_fine}};
}

json topology_json(const TopologyReport& t) {
  return {{"vertices", t.vertices}, {"edges", t.edges},         {"faces", t.faces},
          {"euler", t.euler},       {"orientable", t.orientable}, {"nonmanifold_edges", t.nonmanifold_edges}};
}

void print_text(std::ostream& os, const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      print_text(os, *it, key);
    else
      os << key << ": " << it->dump() << "\n";
  }
}

void emit(const json& j, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    print_text(std::cout, j);
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

void write_mesh_file(const std::string& path, const SurfaceMesh& mesh) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot open '" + path + "' for writing");
  os << std::setprecision(17);
  if (ends_with(path, ".json"))
    write_mesh_json(os, mesh);
  else
    write_obj(os, mesh);
}

SurfaceMesh merge(const std::vector<SurfaceMesh>& parts) {
  SurfaceMesh out;
  for (const auto& m : parts) {
    int base = static_cast<int>(out.vertices.size());
    out.vertices.insert(out.vertices.end(), m.vertices.begin(), m.vertices.end());
    for (auto f : m.faces) out.faces.push_back({f[0] + base, f[1] + base, f[2] + base});
    out.labels.insert(out.labels.end(), m.labels.begin(), m.labels.end());
  }
  return out;
}

bool mesh_has_point(const SurfaceMesh& m, const EinPoint& p) {
  for (const auto& v : m.vertices)
    if (round_distance(v, p) < 1e-9) return true;
  return false;
}

struct Common {
  bool json = false;
};

struct SurfaceArgs {
  std::string vertex = "0,0,0", director = "1,0,0", ext = "positive", motion = "identity";

  void add(CLI::App* app, const std::string& suffix) {
    app->add_option("--vertex" + suffix, vertex, "affine vertex x,y,z")->capture_default_str();
    app->add_option("--director" + suffix, director, "spacelike director x,y,z")->capture_default_str();
    app->add_option("--ext" + suffix, ext, "positive or negative")->capture_default_str();
    app->add_option("--motion" + suffix, motion,
                    "identity | rho | mu | boost:L | translate:x,y,z | rho-translate:x,y,z")
        ->capture_default_str();
  }
  CrookedSurface surface() const {
    return CrookedSurface(parse_motion(motion), parse_vec3(vertex), parse_vec3(director), parse_extension(ext));
  }
  ExactSurfaceSpec exact() const {
    return {parse_motion_exact(motion), parse_vec3q(vertex), parse_vec3q(director), parse_extension(ext)};
  }
};

int run_basic_example(const Common& c, int resolution, const std::string& out) {
  CrookedSurface s = compactify({{0, 0, 0}, {1, 0, 0}, Extension::Positive});
  SurfaceMesh mesh = sample_surface(s, resolution);
  TopologyReport topo = mesh_topology_check(mesh);
  if (!out.empty()) write_mesh_file(out, mesh);
  json j = {{"command", "basic-example"},
            {"resolution", resolution},
            {"topology", topology_json(topo)},
            {"max_edge", mesh.max_edge()},
            {"contains_p0", mesh_has_point(mesh, p_zero())},
            {"contains_pinf", mesh_has_point(mesh, p_infinity())}};
  if (!out.empty()) j["out"] = out;
  emit(j, c.json);
  return kOk;
}

int run_lightcone(const Common& c, const std::string& point, int resolution, const std::string& out) {
  EinPoint p = parse_point(point);
  SurfaceMesh mesh = sample_lightcone(p, resolution);
  int off = 0;
  for (const auto& v : mesh.vertices)
    if (!lightcone_contains(v, p, 1e-9)) ++off;
  if (!out.empty()) write_mesh_file(out, mesh);
  json j = {{"command", "lightcone"},
            {"point", vec_json(p.rep)},
            {"vertices", mesh.vertices.size()},
            {"faces", mesh.faces.size()},
            {"off_cone_vertices", off}};
  if (!out.empty()) j["out"] = out;
  emit(j, c.json);
  return off == 0 ? kOk : kCertFailure;
}

int run_two_cones(const Common& c, const std::string& ps, const std::string& qs, int resolution,
                  const std::string& out) {
  EinPoint p = parse_point(ps), q = parse_point(qs);
  if (incident(p, q)) throw UsageError("the two points are incident; their lightcones share a photon");
  bool spacelike = spacelike_circle_check(p, q, 256);
  SpacelikeCircle circle = lightcone_intersection(p, q);
  double worst = 0;
  for (int k = 0; k < 64; ++k) {
    Vec5 x = circle.lift(2 * M_PI * k / 64);
    worst = std::max({worst, std::fabs(form32(x, p.rep)), std::fabs(form32(x, q.rep))});
  }
  if (!out.empty()) write_mesh_file(out, merge({sample_lightcone(p, resolution), sample_lightcone(q, resolution)}));
  json j = {{"command", "two-cones"},
            {"p", vec_json(p.rep)},
            {"q", vec_json(q.rep)},
            {"spacelike_circle", spacelike},
            {"circle_incidence_residual", worst}};
  if (!out.empty()) j["out"] = out;
  emit(j, c.json);
  return spacelike ? kOk : kCertFailure;
}

struct PairArgs {
  std::string u1, u2, z1, z2, z1p, z2p;

  void add(CLI::App* app) {
    app->add_option("--u1", u1, "director of the first surface");
    app->add_option("--u2", u2, "director of the second surface");
    app->add_option("--z1", z1, "inner displacement 1");
    app->add_option("--z2", z2, "inner displacement 2");
    app->add_option("--z1p", z1p, "outer displacement 1");
    app->add_option("--z2p", z2p, "outer displacement 2");
  }
  // Unset fields fall back to the reference pair.
  DisjointPairSpec spec() const {
    DisjointPairSpec s = reference_pair_spec();
    if (!u1.empty()) s.u1 = parse_vec3(u1);
    if (!u2.empty()) s.u2 = parse_vec3(u2);
    if (!u1.empty() || !u2.empty()) {
      auto f1 = null_frame(s.u1), f2 = null_frame(s.u2);
      s.inner = s.outer = {f1.x_minus - f1.x_plus, f2.x_minus - f2.x_plus};
    }
    if (!z1.empty()) s.inner.z1 = parse_vec3(z1);
    if (!z2.empty()) s.inner.z2 = parse_vec3(z2);
    if (!z1p.empty()) s.outer.z1 = parse_vec3(z1p);
    if (!z2p.empty()) s.outer.z2 = parse_vec3(z2p);
    return s;
  }
};

int run_disjoint_pair(const Common& c, const PairArgs& args, int resolution, const std::string& out) {
  DisjointPairSpec spec = args.spec();
  if (!consistently_oriented(spec.u1, spec.u2)) throw UsageError("directors are not consistently oriented");
  bool inner_ok = pair_admissible(spec.inner, spec.u1, spec.u2);
  bool outer_ok = pair_admissible(spec.outer, spec.u1, spec.u2);
  json j = {{"command", "disjoint-pair"},
            {"u1", vec_json(spec.u1)},
            {"u2", vec_json(spec.u2)},
            {"inner", {vec_json(spec.inner.z1), vec_json(spec.inner.z2)}},
            {"outer", {vec_json(spec.outer.z1), vec_json(spec.outer.z2)}},
            {"inner_admissible", inner_ok},
            {"outer_admissible", outer_ok}};
  if (!inner_ok || !outer_ok) {
    emit(j, c.json);
    return kCertFailure;
  }
  auto [s1, s2] = pull_apart(spec);
  SeparationReport rep = separation_margin(s1, s2, resolution);
  j["separation"] = separation_json(rep);
  j["shared_p0"] = in_crooked_surface(p_zero(), s1) && in_crooked_surface(p_zero(), s2);
  j["shared_pinf"] = in_crooked_surface(p_infinity(), s1) && in_crooked_surface(p_infinity(), s2);
  if (!out.empty()) {
    write_mesh_file(out, merge({sample_surface(s1, resolution), sample_surface(s2, resolution)}));
    j["out"] = out;
  }
  emit(j, c.json);
  return rep.certified_disjoint ? kOk : kCertFailure;
}

int run_schottky(const Common& c, double ell, double scale, std::size_t probes, int depth, int resolution) {
  DisjointPairSpec spec = cyclic_pair_spec(ell, scale);
  SchottkySystem sys = cyclic_schottky(boost13(ell), spec);
  SeparationReport sep =
      separation_margin(sys.minus[0].boundary(), sys.plus[0].boundary(), resolution);
  PingPongReport pp = pingpong_check(sys, probes);
  WordImageReport wi = word_images(sys, depth, 10);
  FundamentalDomainReport fd = fundamental_domain_report(sys, probes, std::min(depth, 4));
  bool decreasing = true;
  for (std::size_t k = 1; k < wi.max_leaf_diameter.size(); ++k)
    decreasing = decreasing && wi.max_leaf_diameter[k] < wi.max_leaf_diameter[k - 1];
  json viol = json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(pp.violations.size(), 20); ++k)
    viol.push_back({{"kind", to_string(pp.violations[k].kind)}, {"point", vec_json(pp.violations[k].point.rep)}});
  json j = {{"command", "schottky"},
            {"ell", ell},
            {"scale", scale},
            {"separation", separation_json(sep)},
            {"pingpong", {{"probes", pp.probes}, {"consistent_fraction", pp.consistent_fraction},
                          {"violations", pp.violations.size()}, {"first_violations", viol}}},
            {"word_images", {{"depth", depth}, {"max_leaf_diameter", wi.max_leaf_diameter},
                             {"strictly_decreasing", decreasing}}},
            {"fundamental_domain", {{"f_volume_fraction", fd.f_volume_fraction},
                                    {"translate_cover_fraction", fd.translate_cover_fraction},
                                    {"depth", fd.depth}}}};
  emit(j, c.json);
  return sep.certified_disjoint && pp.violations.empty() ? kOk : kCertFailure;
}

ReducedWord parse_word(const std::string& s) {
  ReducedWord w;
  for (char ch : s) {
    if (ch == ' ') continue;
    if (ch >= 'a' && ch <= 'z')
      w.push_back({ch - 'a', +1});
    else if (ch >= 'A' && ch <= 'Z')
      w.push_back({ch - 'A', -1});
    else
      throw UsageError(std::string("bad letter '") + ch + "' in word");
  }
  if (w.empty()) throw UsageError("empty word");
  return w;
}

int run_cartan(const Common& c, const std::string& source, double ell, int n, const std::string& word) {
  Iso32 g;
  if (source == "boost") {
    g = lift_linear(boost13(ell));
  } else if (source == "cyclic") {
    SchottkySystem sys = cyclic_schottky(boost13(ell), cyclic_pair_spec(ell));
    ReducedWord w = parse_word(word);
    for (const auto& l : w)
      if (l.gen != 0) throw UsageError("the cyclic system has a single generator 'a'");
    g = word_matrix(sys, w);
  } else {
    throw UsageError("source must be cyclic or boost");
  }
  if (n < 1) throw UsageError("--n must be positive");
  auto seq = cartan_power_sequence(g, n);
  json rows = json::array();
  for (int k = 0; k < n; ++k)
    rows.push_back({{"n", k + 1}, {"lambda", seq[k].lambda}, {"mu", seq[k].mu}, {"delta", seq[k].delta()}});
  json j = {{"command", "cartan"},
            {"source", source},
            {"ell", ell},
            {"sequence", rows},
            {"class", to_string(classify_distortion(seq))}};
  emit(j, c.json);
  return kOk;
}

json exact_json(const ExactDisjointReport& r) {
  json pairs = json::array();
  for (const auto& e : r.pairs)
    pairs.push_back({{"piece1", e.piece1}, {"piece2", e.piece2},
                     {"verdict", to_string(e.result.verdict)}, {"reason", e.result.reason}});
  return {{"disjoint", r.disjoint}, {"undecided", r.undecided}, {"pairs", pairs}};
}

int run_certify(const Common& c, const SurfaceArgs& a, const SurfaceArgs& b, int resolution, bool exact) {
  json j = {{"command", "certify"}};
  bool ok;
  if (exact) {
    ExactDisjointReport r = exact_disjoint(a.exact(), b.exact());
    j["exact"] = exact_json(r);
    ok = r.disjoint;
  } else {
    SeparationReport r = separation_margin(a.surface(), b.surface(), resolution);
    j["separation"] = separation_json(r);
    ok = r.certified_disjoint;
  }
  emit(j, c.json);
  return ok ? kOk : kCertFailure;
}

int run_negative_example(const Common& c, bool certify, int resolution) {
  ExactSurfaceSpec e1;
  ExactSurfaceSpec e2{mu_example(), {0, 0, 0}, {1, 0, 0}, Extension::Negative};
  json j = {{"command", "negative-example"},
            {"mu_preserves_form_exactly", mu_example().preserves_form_exactly()}};
  if (!certify) {
    emit(j, c.json);
    return kOk;
  }
  ExactDisjointReport ex = exact_disjoint(e1, e2);
  CrookedSurface s1 = compactify({{0, 0, 0}, {1, 0, 0}, Extension::Positive});
  CrookedSurface s2(mu_example().cast<double>(), {0, 0, 0}, {1, 0, 0}, Extension::Negative);
  SeparationReport num = separation_margin(s1, s2, resolution);
  j["exact"] = exact_json(ex);
  j["separation"] = separation_json(num);
  j["certified_disjoint"] = ex.disjoint;
  emit(j, c.json);
  return ex.disjoint ? kOk : kCertFailure;
}

int run_export_mesh(const Common& c, const SurfaceArgs& a, int resolution, const std::string& out) {
  CrookedSurface s = a.surface();
  SurfaceMesh mesh = sample_surface(s, resolution);
  write_mesh_file(out, mesh);
  json j = {{"command", "export-mesh"},
            {"resolution", resolution},
            {"vertices", mesh.vertices.size()},
            {"faces", mesh.faces.size()},
            {"out", out}};
  emit(j, c.json);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crooked surfaces in the Einstein universe"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file; sections name subcommands");
  Common common;
  app.add_flag("--json", common.json, "print a JSON report");

  int resolution = 64;
  std::string out;
  auto* basic = app.add_subcommand("basic-example", "mesh of the standard crooked surface");
  basic->add_option("--resolution", resolution)->capture_default_str();
  basic->add_option("--out", out, "OBJ or JSON mesh path");

  std::string point = "1:0:0:0:1", point2 = "-1:0:0:0:1";
  int cone_res = 32;
  auto* cone = app.add_subcommand("lightcone", "mesh of the lightcone of a point");
  cone->add_option("--point", point, "homogeneous point a:b:c:d:e")->capture_default_str();
  cone->add_option("--resolution", cone_res)->capture_default_str();
  cone->add_option("--out", out);

  auto* two = app.add_subcommand("two-cones", "two lightcones and their spacelike circle");
  two->add_option("--p", point)->capture_default_str();
  two->add_option("--q", point2)->capture_default_str();
  two->add_option("--resolution", cone_res)->capture_default_str();
  two->add_option("--out", out);

  PairArgs pair;
  auto* dp = app.add_subcommand("disjoint-pair", "pull two crooked surfaces apart at both points");
  pair.add(dp);
  dp->add_option("--resolution", resolution)->capture_default_str();
  dp->add_option("--out", out);

  double ell = 1.0, scale = 1.0;
  std::size_t probes = 10000;
  int depth = 6;
  auto* sch = app.add_subcommand("schottky", "cyclic crooked Schottky group");
  sch->add_option("--ell", ell, "boost parameter")->capture_default_str();
  sch->add_option("--scale", scale, "scale of the displacements")->capture_default_str();
  sch->add_option("--probes", probes)->capture_default_str();
  sch->add_option("--depth", depth)->capture_default_str()->check(CLI::Range(1, 12));
  sch->add_option("--resolution", resolution)->capture_default_str();

  std::string source = "cyclic", word = "a";
  int n = 20;
  auto* cart = app.add_subcommand("cartan", "Cartan projections of powers and distortion class");
  cart->add_option("--source", source, "cyclic or boost")->capture_default_str();
  cart->add_option("--ell", ell)->capture_default_str();
  cart->add_option("--n", n)->capture_default_str();
  cart->add_option("--word", word, "word in the cyclic generator, e.g. \"a a\"")->capture_default_str();

  SurfaceArgs sa, sb;
  bool exact = false;
  auto* cert = app.add_subcommand("certify", "separation margin between two surfaces");
  sa.add(cert, "1");
  sb.add(cert, "2");
  cert->add_option("--resolution", resolution)->capture_default_str();
  cert->add_flag("--exact", exact, "exact rational piece-pair analysis");

  bool do_certify = false;
  int neg_res = 128;
  auto* neg = app.add_subcommand("negative-example", "positive surface against mu of the negative one");
  neg->add_flag("--certify", do_certify);
  neg->add_option("--resolution", neg_res)->capture_default_str();

  SurfaceArgs se;
  auto* exp = app.add_subcommand("export-mesh", "mesh of an arbitrary crooked surface");
  se.add(exp, "");
  exp->add_option("--resolution", resolution)->capture_default_str();
  exp->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*basic) return run_basic_example(common, resolution, out);
    if (*cone) return run_lightcone(common, point, cone_res, out);
    if (*two) return run_two_cones(common, point, point2, cone_res, out);
    if (*dp) return run_disjoint_pair(common, pair, resolution, out);
    if (*sch) return run_schottky(common, ell, scale, probes, depth, resolution);
    if (*cart) return run_cartan(common, source, ell, n, word);
    if (*cert) return run_certify(common, sa, sb, resolution, exact);
    if (*neg) return run_negative_example(common, do_certify, neg_res);
    if (*exp) return run_export_mesh(common, se, resolution, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
