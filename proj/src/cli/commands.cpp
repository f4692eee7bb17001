#include "jumploci/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumploci/cdga/json_io.hpp"
#include "jumploci/cli/verify.hpp"
#include "jumploci/conn/flat.hpp"
#include "jumploci/conn/hom.hpp"
#include "jumploci/conn/section.hpp"
#include "jumploci/exactnum/parallel.hpp"
#include "jumploci/exactnum/sampler.hpp"
#include "jumploci/liealg/catalog.hpp"
#include "jumploci/liealg/json_io.hpp"
#include "jumploci/polyz/torus_bundle.hpp"
#include "jumploci/reson/resonance.hpp"
#include "jumploci/reson/twisted.hpp"

namespace jumploci {

namespace {

using Json = nlohmann::ordered_json;

// Malformed input: reported on stderr, exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lie, cdga, bundle, omega, rep = "2", jordan, format = "table", suite;
  int degree = -1;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  bool planes = false;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

LieAlgebra load_lie(const std::string& path) {
  LieAlgebra h;
  try {
    h = lie_algebra_from_json(read_json(path));
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  ValidationReport v = validate(h);
  if (!v.ok) throw InputError(path + ": " + v.message);
  return h;
}

CDGA load_algebra(const Options& o) {
  if (!o.lie.empty() == !o.cdga.empty()) throw InputError("exactly one of --lie or --cdga is required");
  if (!o.lie.empty()) return chevalley_eilenberg(load_lie(o.lie));
  CDGA a;
  try {
    a = cdga_from_json(read_json(o.cdga));
  } catch (const std::invalid_argument& e) {
    throw InputError(o.cdga + ": " + e.what());
  }
  std::string v = cdga_violation(a);
  if (!v.empty()) throw InputError(o.cdga + ": " + v);
  return a;
}

Sl2Rep parse_rep(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      long m = std::stol(item);
      if (m < 1) throw std::invalid_argument("");
      dims.push_back(static_cast<std::size_t>(m));
    } catch (const std::exception&) {
      throw InputError("--rep expects a comma-separated list of positive dimensions, got '" + text + "'");
    }
  }
  if (dims.empty()) throw InputError("--rep is empty");
  return sl2_rep(dims);
}

std::vector<JordanBlock> parse_jordan(const std::string& text) {
  std::vector<JordanBlock> blocks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--jordan expects lambda:size pairs, got '" + item + "'");
    try {
      blocks.push_back({parse_rational(item.substr(0, colon)), std::stoul(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw InputError("--jordan: cannot parse '" + item + "'");
    }
  }
  return blocks;
}

TorusBundleGroup load_bundle(const std::string& path) {
  nlohmann::json j = read_json(path);
  try {
    std::size_t n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("matrix");
    if (rows.size() != n) throw std::invalid_argument("matrix has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
    Matrix<Integer> a(n, n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw std::invalid_argument("matrix row " + std::to_string(i) + " has wrong length");
      for (std::size_t k = 0; k < n; ++k) a(i, k) = Integer(rows[i][k].get<long>());
    }
    return torus_bundle(a);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json rationals(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json quads(const std::vector<QuadScalar>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.to_string());
  return j;
}

Json matrix_json(const Matrix<Rational>& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(rationals(m.row(r)));
  return j;
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& table) {
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << table;
}

int cmd_betti(const Options& o, std::ostream& out) {
  auto b = betti(load_algebra(o));
  emit(out, o, Json{{"betti", b}}, join(b, " ") + "\n");
  return 0;
}

int cmd_resonance(const Options& o, std::ostream& out) {
  CDGA a = load_algebra(o);
  if (o.degree < 0 || o.degree > a.top_degree())
    throw InputError("--degree must lie in 0.." + std::to_string(a.top_degree()));
  Sl2Rep rep = parse_rep(o.rep);
  GermReport g = germ_report(a, rep, o.degree, o.seed, o.samples ? o.samples : 30);
  Json j = to_json(g);
  std::ostringstream t;
  t << "degree " << g.degree << ": " << to_string(g.kind) << "\n";
  t << "betti: " << join(g.betti, " ") << "\n";
  t << "h1: " << g.h1_dim << "\n";
  t << "det locus: " << g.det_locus << "\n";
  t << "rank-one resonance: " << to_string(g.resonance.verdict) << "\n";
  if (g.kind == GermKind::Cone)
    t << "evidence: " << g.evidence.size() << " directions, " << g.exceptions << " exceptions (seed " << o.seed << ")\n";
  emit(out, o, j, t.str());
  return g.exceptions == 0 ? 0 : 1;
}

int cmd_mc_check(const Options& o, std::ostream& out) {
  CDGA a = load_algebra(o);
  if (o.omega.empty()) throw InputError("--omega FILE is required");
  GOneForm omega;
  try {
    omega = matrix_from_json(read_json(o.omega));
  } catch (const std::invalid_argument& e) {
    throw InputError(o.omega + ": " + e.what());
  }
  if (omega.rows() != a.dim(1) || omega.cols() != 3)
    throw InputError("omega must be " + std::to_string(a.dim(1)) + " x 3 (A^1 basis by H, Xp, Xm)");
  Matrix<Rational> defect = mc_defect(a, sl2(), omega);
  bool flat = defect.is_zero();
  Json j;
  j["flat"] = flat;
  j["rank"] = rank(omega);
  j["rank_one_locus"] = in_F1(a, omega);
  j["defect"] = matrix_json(defect);
  std::ostringstream t;
  t << "flat: " << (flat ? "yes" : "no") << "\nrank: " << rank(omega)
    << "\nrank-one locus: " << (in_F1(a, omega) ? "yes" : "no") << "\n";
  if (flat) {
    auto dims = twisted_dims(a, parse_rep(o.rep), omega);
    j["rep"] = o.rep;
    j["twisted_dims"] = dims;
    t << "twisted dims (rep " << o.rep << "): " << join(dims, " ") << "\n";
  }
  emit(out, o, j, t.str());
  return flat ? 0 : 1;
}

std::string classify(std::size_t image, const Matrix<Rational>* phi, const std::vector<JordanBlock>& blocks,
                     bool& outside) {
  if (image <= 1) return "rank-one";
  if (blocks.empty()) return "other";
  if (!phi) {
    outside = true;
    return "other (irrational)";
  }
  auto cls = classify_metabelian_hom(blocks, *phi);
  if (cls.in_family) return "metabelian-family";
  outside = true;
  return "other";
}

int cmd_rep_scan(const Options& o, std::ostream& out) {
  if (o.lie.empty()) throw InputError("--lie FILE is required");
  LieAlgebra h = load_lie(o.lie), k = sl2();
  std::vector<JordanBlock> blocks = o.jordan.empty() ? std::vector<JordanBlock>{} : parse_jordan(o.jordan);
  if (!blocks.empty() && !(metabelian(blocks) == h)) throw InputError("--jordan data does not match the algebra in " + o.lie);
  const std::size_t rows = h.dim();
  GOneForm zero(rows, 3, Rational(0));

  std::vector<AffineSection> sections;
  std::vector<std::string> labels;
  if (o.planes) {
    for (std::size_t i = 0; i < rows * 3; ++i)
      for (std::size_t j = i + 1; j < rows * 3; ++j) {
        GOneForm e1 = zero, e2 = zero;
        e1(i / 3, i % 3) = 1;
        e2(j / 3, j % 3) = 1;
        sections.push_back({zero, {e1, e2}});
        labels.push_back("plane " + hom_variable(h, i / 3, k, i % 3) + ", " + hom_variable(h, j / 3, k, j % 3));
      }
  } else {
    Sampler s(o.seed);
    std::size_t n = o.samples ? o.samples : 20;
    for (std::size_t l = 0; l < n; ++l) {
      GOneForm d = zero;
      while (d.is_zero())
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < 3; ++c) d(r, c) = s.rational();
      sections.push_back({zero, {d}});
      labels.push_back("line " + std::to_string(l));
    }
  }
  std::vector<SectionSolution> sols(sections.size());
  parallel_for(sections.size(), [&](std::size_t i) { sols[i] = rep_on_section(h, k, sections[i], o.seed + i); });

  bool outside = false;
  Json report = Json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& sec = sections[i];
    const auto& sol = sols[i];
    Json js;
    js["section"] = labels[i];
    js["directions"] = Json::array();
    for (const auto& d : sec.directions) js["directions"].push_back(matrix_json(d));
    js["whole_section"] = sol.whole_section;
    js["complete"] = sol.complete;
    if (sol.parameters == 2 && !sol.curve.is_constant()) js["curve"] = sol.curve.to_string();
    Json solutions = Json::array();
    std::vector<std::string> brief;
    auto record = [&](const Json& params, std::size_t image, const Matrix<Rational>* phi, const std::string& text) {
      std::string c = classify(image, phi, blocks, outside);
      solutions.push_back({{"parameters", params}, {"rank", image}, {"class", c}});
      brief.push_back(text + " " + c);
    };
    for (const auto& p : sol.points) {
      bool rational = std::all_of(p.begin(), p.end(), [](const QuadScalar& x) { return x.is_rational(); });
      Matrix<QuadScalar> phi = sec.base.map<QuadScalar>([](const Rational& x) { return QuadScalar(x); });
      for (std::size_t d = 0; d < sec.directions.size(); ++d)
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < 3; ++c) phi(r, c) += p[d] * QuadScalar(sec.directions[d](r, c));
      std::string text = "(";
      for (std::size_t d = 0; d < p.size(); ++d) text += (d ? ", " : "") + p[d].to_string();
      text += ")";
      if (rational) {
        std::vector<Rational> params;
        for (const auto& x : p) params.push_back(x.rational_part());
        GOneForm q = section_point(sec, params);
        record(quads(p), image_rank(q), &q, text);
      } else {
        record(quads(p), rank(phi), nullptr, text);
      }
    }
    for (const auto& st : sol.curve_samples) {
      GOneForm q = section_point(sec, st);
      std::string text = "(";
      for (std::size_t d = 0; d < st.size(); ++d) text += (d ? ", " : "") + to_string(st[d]);
      record(rationals(st), image_rank(q), &q, text + ") on curve");
    }
    js["solutions"] = solutions;
    if (!sol.unrepresented.empty()) js["unrepresented"] = sol.unrepresented;
    report.push_back(js);
    t << labels[i] << ": ";
    if (sol.whole_section) t << "entire section solves\n";
    else if (brief.empty()) t << "no solutions\n";
    else {
      for (std::size_t b = 0; b < brief.size(); ++b) t << (b ? "; " : "") << brief[b];
      t << (sol.complete ? "" : " (incomplete)") << "\n";
    }
  }
  emit(out, o, Json{{"seed", o.seed}, {"sections", report}}, t.str());
  return outside ? 1 : 0;
}

int cmd_pi_locus(const Options& o, std::ostream& out) {
  CDGA a = load_algebra(o);
  Sl2Rep rep = parse_rep(o.rep);
  auto b = betti(a);
  auto origin = twisted_dims(a, rep, GOneForm(a.dim(1), 3, Rational(0)));
  bool origin_ok = true;
  for (std::size_t i = 0; i < b.size(); ++i) origin_ok = origin_ok && (origin[i] >= 1) == (b[i] >= 1);

  Sampler s(o.seed);
  bool identically = det_theta(rep).is_zero();
  std::vector<GOneForm> omegas;
  for (std::size_t k = 0, n = o.samples ? o.samples : 50; k < n; ++k) {
    Vector<Rational> eta(a.dim(1), Rational(0));
    for (const auto& z : closed_one_forms(a)) {
      Rational c = s.rational();
      for (std::size_t r = 0; r < eta.size(); ++r) eta[r] += c * z[r];
    }
    Vector<Rational> g;
    if (identically) g = s.vector(3);
    else {
      Rational x = s.rational(), y = s.nonzero_rational();
      g = {x, y, Rational(-x * x / y)};
    }
    omegas.push_back(segre(eta, g));
  }
  std::vector<std::vector<std::size_t>> dims(omegas.size());
  parallel_for(omegas.size(), [&](std::size_t k) { dims[k] = twisted_dims(a, rep, omegas[k]); });
  std::size_t bad = 0;
  Json pts = Json::array();
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    bool ok = pi_membership(a, rep, omegas[k]);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] >= 1) ok = ok && dims[k][i] >= 1;
    bad += !ok;
    pts.push_back({{"omega", matrix_json(omegas[k])}, {"twisted_dims", dims[k]}, {"resonant", ok}});
  }
  Json j{{"seed", o.seed}, {"rep", o.rep}, {"betti", b}, {"origin_dims", origin},
         {"origin_consistent", origin_ok}, {"points", pts}, {"failures", bad}};
  std::ostringstream t;
  t << "betti: " << join(b, " ") << "\norigin twisted dims: " << join(origin, " ")
    << (origin_ok ? " (consistent)" : " (INCONSISTENT)") << "\n"
    << omegas.size() - bad << "/" << omegas.size() << " sampled Pi points resonant in every degree with betti >= 1\n";
  emit(out, o, j, t.str());
  return origin_ok && bad == 0 ? 0 : 1;
}

Json char_value_json(const CharValue& v) {
  if (v.rational) return {{"rational", v.value.get_str()}};
  return {{"poly", v.factor.to_string("x")}, {"roots", quads(v.explicit_values())}};
}

int cmd_charvar(const Options& o, std::ostream& out) {
  if (o.bundle.empty()) throw InputError("--bundle FILE is required");
  TorusBundleGroup g = load_bundle(o.bundle);
  int top = static_cast<int>(g.n) + 1;
  if (o.degree > top) throw DegreeOutOfRange("degree " + std::to_string(o.degree) + " out of range 0.." + std::to_string(top));
  std::vector<int> degrees;
  if (o.degree >= 0) degrees.push_back(o.degree);
  else
    for (int i = 0; i <= top; ++i) degrees.push_back(i);
  Json j;
  j["n"] = g.n;
  j["character_torus"] = character_torus(g).description();
  j["degrees"] = Json::array();
  std::ostringstream t;
  for (int i : degrees) {
    CharVariety cv = charvar(g, i);
    Json pts = Json::array();
    std::string text;
    for (const auto& p : cv.points) {
      pts.push_back({{"chi", "trivial"}, {"lambda", char_value_json(p.lambda)}, {"provenance", p.provenance}});
      text += (text.empty() ? "" : ", ") + (p.lambda.rational ? p.lambda.value.get_str() : "roots(" + p.lambda.factor.to_string("x") + ")");
    }
    j["degrees"].push_back({{"degree", i}, {"points", pts}});
    t << "V^" << i << " = {" << text << "}\n";
  }
  emit(out, o, j, t.str());
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
  CDGA a = load_algebra(o);
  std::vector<int> degrees;
  if (o.degree >= 0) {
    if (o.degree > a.top_degree()) throw InputError("--degree must lie in 0.." + std::to_string(a.top_degree()));
    degrees.push_back(o.degree);
  } else {
    for (int i = 0; i <= a.top_degree(); ++i) degrees.push_back(i);
  }
  Json j = Json::array();
  std::ostringstream t;
  for (int i : degrees) {
    ResonanceSet r = trivial_resonance(a, i, o.seed, o.samples ? o.samples : 50);
    j.push_back(to_json(r));
    t << "degree " << i << ": " << to_string(r.verdict) << " (h1 = " << r.h1_dim << ", " << r.points.size()
      << " resonant points found, " << r.lines_probed << " lines probed)\n";
  }
  emit(out, o, Json{{"seed", o.seed}, {"degrees", j}}, t.str());
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  Json j = Json::array();
  std::string t;
  bool ok = true;
  for (const auto& n : names) {
    SuiteReport r;
    try {
      r = run_suite(n, o.seed, o.samples);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    ok = ok && r.passed();
    j.push_back(to_json(r));
    t += to_table(r);
  }
  emit(out, o, names.size() == 1 ? j[0] : j, t);
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact jump loci of CDGAs, Lie algebras and torus-bundle groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool algebra) {
    if (algebra) {
      c->add_option("--lie", o.lie, "Lie algebra JSON (uses its Chevalley-Eilenberg algebra)");
      c->add_option("--cdga", o.cdga, "CDGA JSON");
    }
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto randomized = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Seed of the sampler");
    c->add_option("--samples", o.samples, "Sample count (0 keeps the default)");
  };

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of A");
  common(betti_cmd, true);

  auto* res = app.add_subcommand("resonance", "Germ of the sl2 resonance variety at 0");
  common(res, true);
  randomized(res);
  res->add_option("--rep", o.rep, "sl2 representation as irreducible dimensions, e.g. 2,2");
  res->add_option("--degree", o.degree, "Cohomological degree")->required();

  auto* mc = app.add_subcommand("mc-check", "Maurer-Cartan check of an sl2-valued 1-form");
  common(mc, true);
  mc->add_option("--omega", o.omega, "JSON matrix, rows = A^1 basis, columns = (H, Xp, Xm)");
  mc->add_option("--rep", o.rep, "Representation for twisted cohomology");

  auto* scan = app.add_subcommand("rep-scan", "Exact solutions of Hom(h, sl2) on lines or coordinate planes");
  common(scan, false);
  randomized(scan);
  scan->add_option("--lie", o.lie, "Lie algebra JSON")->required();
  scan->add_option("--jordan", o.jordan, "Metabelian Jordan data lambda:size,... for classification");
  scan->add_flag("--planes", o.planes, "Sweep every coordinate plane instead of random lines");

  auto* pi = app.add_subcommand("pi-locus", "Resonance of sampled rank-one nilpotent points");
  common(pi, true);
  randomized(pi);
  pi->add_option("--rep", o.rep, "sl2 representation");

  auto* cv = app.add_subcommand("charvar", "Rank-one characteristic varieties of a torus-bundle group");
  common(cv, false);
  cv->add_option("--bundle", o.bundle, "JSON {\"n\": n, \"matrix\": [[...]]}")->required();
  cv->add_option("--degree", o.degree, "Homological degree (all when omitted)");

  auto* cert = app.add_subcommand("certify", "Trivial-resonance verdict per degree");
  common(cert, true);
  randomized(cert);
  cert->add_option("--degree", o.degree, "Degree (all when omitted)");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  common(ver, false);
  randomized(ver);
  ver->add_option("suite", o.suite, "Suite name or 'all'")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*betti_cmd) return cmd_betti(o, out);
    if (*res) return cmd_resonance(o, out);
    if (*mc) return cmd_mc_check(o, out);
    if (*scan) return cmd_rep_scan(o, out);
    if (*pi) return cmd_pi_locus(o, out);
    if (*cv) return cmd_charvar(o, out);
    if (*cert) return cmd_certify(o, out);
    if (*ver) return cmd_verify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeOutOfRange& e) {
    err << "error: degree out of range (" << e.what() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace jumploci
