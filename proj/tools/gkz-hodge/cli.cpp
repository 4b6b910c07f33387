#include "cli.hpp"

#include <gkzhodge/bernstein.hpp>
#include <gkzhodge/gkz.hpp>
#include <gkzhodge/groebner.hpp>
#include <gkzhodge/homological.hpp>
#include <gkzhodge/toric.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace gkz::cli {

using nlohmann::json;

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised after a complete report was built but a verdict came out negative.
struct VerdictFailure {
  json report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntVec& v) {
  json out = json::array();
  for (auto& e : v) out.push_back(to_json(e));
  return out;
}

json to_json(const Rat& r) {
  if (r.get_den() == 1) return to_json(Int(r.get_num()));
  return r.get_str();
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

json to_json(const std::vector<WeylElement>& ops) {
  json out = json::array();
  for (auto& p : ops) out.push_back(to_string(p));
  return out;
}

json to_json(const std::vector<ShiftEntry>& ledger) {
  json out = json::array();
  for (auto& e : ledger) out.push_back({{"description", e.description}, {"shift", e.shift}, {"offset", e.offset}});
  return out;
}

json to_json(const CPrime& c) {
  json j1 = json::array(), j2 = json::array();
  for (auto i : c.J1) j1.push_back(i);
  for (auto i : c.J2) j2.push_back(i);
  return {{"J1", j1}, {"J2", j2}, {"cprime", to_json(c.cprime)}, {"representation", to_json(c.representation)}};
}

json presentation_json(const SystemPresentation& sys) {
  json j;
  j["flavor"] = flavor_name(sys.flavor);
  j["variables"] = sys.signature->vars();
  j["parameters"] = sys.signature->params();
  j["generators"] = to_json(sys.generators);
  j["euler_begin"] = sys.euler_begin;
  j["matrix"] = to_json(sys.matrix);
  j["beta"] = to_json(sys.beta);
  j["chart"] = sys.chart ? json(*sys.chart) : json(nullptr);
  j["shift_ledger"] = to_json(sys.shift_ledger);
  j["total_offset"] = sys.total_offset();
  return j;
}

IntVec parse_vector(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream in(s);
  IntVec out;
  std::string tok;
  while (in >> tok) {
    try {
      out.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("not an integer: " + tok);
    }
  }
  return out;
}

std::pair<long, long> parse_box(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("--box expects a:b");
  try {
    long lo = std::stol(text.substr(0, colon));
    long hi = std::stol(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("--box: empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--box expects integers a:b, got " + text);
  }
}

IntMatrix matrix_from_json(const json& j) {
  if (j.is_array()) return parse_matrix_json(json{{"entries", j}}.dump());
  return parse_matrix_json(j.dump());
}

std::vector<std::string> operator_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

struct Options {
  std::string command;
  std::string file;
  std::string flavor;
  std::optional<long> bound;
  std::optional<long> budget;
  std::optional<std::string> box;
  std::optional<std::string> beta;
  std::optional<std::size_t> chart;
  std::optional<std::string> json_path;
  std::string order = "weyl-std";
};

GroebnerOptions groebner_options(const Options& o) {
  GroebnerOptions g;
  if (o.budget) g.budget = *o.budget;
  return g;
}

struct Input {
  std::string bytes;
  json echo;
};

Input load(const Options& o) {
  Input in;
  in.bytes = read_file(o.file);
  in.echo = {{"file", o.file}, {"digest", digest(in.bytes)}};
  return in;
}

IntMatrix load_matrix(const Input& in) { return parse_matrix(in.bytes); }

// ---------------------------------------------------------------------------

json cmd_toric(const Options& o, const Input& in) {
  IntMatrix b = load_matrix(in);
  long bound = o.bound.value_or(20);
  SemigroupProfile p = semigroup_profile(b, bound);
  json j;
  json normals = json::array();
  for (auto& n : p.cone.facet_normals) normals.push_back(to_json(n));
  j["cone"] = {{"facet_normals", normals},
               {"group_part_rank", p.cone.group_part_rank},
               {"pointed", p.cone.pointed()}};
  j["saturation"] = {{"status", p.saturated.status_name()},
                     {"bound", p.saturated.bound},
                     {"approximate", p.saturated.approximate},
                     {"witness", to_json(p.saturated.witness)}};
  j["gorenstein_c"] = p.gorenstein_c ? to_json(*p.gorenstein_c) : json(nullptr);
  j["cprime"] = p.cprime ? to_json(*p.cprime) : json(nullptr);
  json alts = json::array();
  for (auto& c : p.cprime_alternatives) alts.push_back(to_json(c));
  j["cprime_alternatives"] = alts;
  j["rank"] = rank(b);
  if (p.saturated.status == SaturationVerdict::Status::refuted) throw VerdictFailure{j};
  return j;
}

json cmd_build(const Options& o, const Input& in) {
  IntMatrix m = load_matrix(in);
  IntVec beta = o.beta ? parse_vector(*o.beta) : IntVec(m.rows(), Int(0));
  auto need_chart = [&]() -> std::size_t {
    if (!o.chart) throw std::invalid_argument("build " + o.flavor + " needs --chart u");
    return *o.chart;
  };
  SystemPresentation sys;
  if (o.flavor == "gkz")
    sys = build_gkz(m, beta);
  else if (o.flavor == "fl")
    sys = build_fl_gkz(m, beta);
  else if (o.flavor == "graph")
    sys = build_graph_embedded(m, o.bound.value_or(20));
  else if (o.flavor == "chart")
    sys = build_chart_system(m, need_chart());
  else if (o.flavor == "kernel")
    sys = build_radon_kernel(m, need_chart());
  else if (o.flavor == "rees")
    sys = build_rees_gkz(m);
  else
    throw std::invalid_argument("unknown flavor " + o.flavor + " (gkz, fl, graph, chart, kernel, rees)");
  return presentation_json(sys);
}

json cmd_groebner(const Options& o, const Input& in) {
  if (o.order != "weyl-std") throw std::invalid_argument("unsupported order " + o.order + " (weyl-std)");
  auto lines = operator_lines(in.bytes);
  if (lines.empty()) throw std::invalid_argument("ideal file lists no operators");
  SigPtr sig = infer_signature(lines);
  std::vector<WeylElement> gens;
  for (auto& l : lines) gens.push_back(parse_operator(l, sig));
  GroebnerBasis gb = buchberger(gens, TermOrder::weyl_std(sig), groebner_options(o));
  json j;
  j["order"] = gb.order.name();
  j["variables"] = sig->vars();
  j["generators"] = to_json(gens);
  j["basis"] = to_json(gb.generators);
  j["steps"] = gb.steps;
  j["unit_ideal"] = gb.contains_unit();
  j["spair_criterion"] = satisfies_spair_criterion(gb);
  return j;
}

json bernstein_json(const BernsteinResult& r) {
  json b = json::array();
  for (auto& c : r.b) b.push_back(to_json(c));
  return {{"m", r.m},
          {"bound", r.bound},
          {"rank", r.r},
          {"b", b},
          {"roots_all_zero", r.roots_all_zero()},
          {"certified", r.certified},
          {"predecessor_fails", r.predecessor_fails},
          {"shifted_fail", r.shifted_fail},
          {"initial_basis_size", r.initial_basis_size},
          {"variables", r.ideal.signature->vars()},
          {"ideal", to_json(r.ideal.generators)}};
}

json cmd_bernstein(const Options& o, const Input& in) {
  BernsteinOptions bo;
  if (o.bound) bo.bound = *o.bound;
  bo.groebner = groebner_options(o);
  BernsteinResult r = bernstein_exponent(load_matrix(in), bo);
  json j = bernstein_json(r);
  if (!r.certified || !r.predecessor_fails || static_cast<std::size_t>(r.m) > r.r) throw VerdictFailure{j};
  return j;
}

json cmd_ishida(const Options& o, const Input& in) {
  std::optional<std::pair<long, long>> box;
  if (o.box) box = parse_box(*o.box);
  LocalCohomologyScan scan = local_cohomology_scan(load_matrix(in), box);
  const IshidaReport& r = scan.ishida;
  json j;
  j["as"] = to_json(r.as);
  j["d"] = r.d;
  j["box"] = {r.box_lo, r.box_hi};
  j["points"] = r.degrees.size();
  j["sigma"] = r.sigma;
  j["complementary"] = r.complementary;
  j["sigma_faces"] = r.sigma_faces.size();
  j["d_squared_zero"] = r.d_squared_zero;
  j["all_match"] = r.all_match;
  j["hyperplane_match"] = r.hyperplane_match;
  j["top_match"] = r.top_match;
  j["negative_degrees"] = r.negative_degrees;
  j["projection_ok"] = scan.projection_ok;
  json mism = json::array();
  for (auto& x : r.mismatches) mism.push_back(to_json(x));
  j["mismatches"] = mism;
  json nz = json::array();
  for (auto& deg : r.degrees) {
    bool any = false;
    for (auto h : deg.cohomology) any = any || h != 0;
    if (!any) continue;
    nz.push_back({{"x", to_json(deg.x)}, {"cohomology", deg.cohomology}, {"in_s_minus", deg.in_s_minus}});
  }
  j["nonzero"] = nz;
  json samples = json::array();
  for (auto& s : scan.samples)
    samples.push_back({{"x", to_json(s.x)},
                       {"y", to_json(s.y)},
                       {"pairing_equal", s.pairing_equal},
                       {"s_minus_agrees", s.s_minus_agrees}});
  j["projection_samples"] = samples;
  if (!r.all_match || !r.negative_degrees || !r.d_squared_zero) throw VerdictFailure{j};
  return j;
}

json strictness_json(const StrictnessReport& r) {
  json degs = json::array();
  for (auto& d : r.degrees) {
    if (d.target_cap_image == 0 && d.image_of_filtered == 0) continue;
    degs.push_back({{"degree", to_json(d.degree)},
                    {"level", d.level},
                    {"target_cap_image", d.target_cap_image},
                    {"image_of_filtered", d.image_of_filtered}});
  }
  return {{"well_defined", r.well_defined}, {"strict", r.strict}, {"bound", r.bound},
          {"checked", r.degrees.size()}, {"nonzero_pieces", degs}};
}

json cmd_strict(const Options& o, const Input& in) {
  json doc = json::parse(in.bytes);
  long bound = o.bound.value_or(3);
  GroebnerOptions g = groebner_options(o);
  json j;
  StrictnessReport rep;
  if (doc.contains("atilde")) {
    DualityData dd = duality_data(matrix_from_json(doc.at("atilde")));
    DualityMorphism phi = duality_morphism(dd);
    j["multiplier"] = to_string(phi.multiplier);
    j["shift"] = phi.order_shift;
    rep = strictness_check(phi, bound, g);
  } else {
    std::vector<std::string> texts;
    for (auto& s : doc.at("source")) texts.push_back(s.get<std::string>());
    for (auto& s : doc.at("target")) texts.push_back(s.get<std::string>());
    texts.push_back(doc.at("multiplier").get<std::string>());
    SigPtr sig = doc.contains("variables") ? make_signature(doc.at("variables").get<std::vector<std::string>>())
                                            : infer_signature(texts);
    FilteredMap map;
    for (auto& s : doc.at("source")) map.source.push_back(parse_operator(s.get<std::string>(), sig));
    for (auto& s : doc.at("target")) map.target.push_back(parse_operator(s.get<std::string>(), sig));
    map.multiplier = parse_operator(doc.at("multiplier").get<std::string>(), sig);
    map.grading = doc.contains("grading") ? matrix_from_json(doc.at("grading"))
                                           : IntMatrix(1, sig->nvars());
    if (!doc.contains("grading"))
      for (std::size_t i = 0; i < sig->nvars(); ++i) map.grading(0, i) = 1;
    map.shift = doc.value("shift", 0L);
    j["multiplier"] = to_string(map.multiplier);
    j["shift"] = map.shift;
    rep = strictness_check(map, bound, g);
  }
  j["report"] = strictness_json(rep);
  if (!rep.strict) throw VerdictFailure{j};
  return j;
}

json duality_json(const DualityData& dd, const DualityMorphism& phi) {
  json j;
  j["atilde"] = to_json(dd.atilde);
  j["c_tilde"] = to_json(dd.c_tilde);
  j["dual_parameter"] = to_json(dd.dual_parameter);
  j["hodge_shift"] = dd.hodge_shift;
  j["facet_certificate"] = dd.facet_certificate;
  j["morphism"] = {{"exponent", to_json(phi.exponent)},
                   {"multiplier", to_string(phi.multiplier)},
                   {"order_shift", phi.order_shift},
                   {"source_beta", to_json(phi.source.beta)},
                   {"target_beta", to_json(phi.target.beta)},
                   {"certified", phi.certified}};
  return j;
}

json cmd_duality(const Options& o, const Input& in) {
  IntMatrix at = load_matrix(in);
  DualityData dd = duality_data(at, std::nullopt, o.bound.value_or(20));
  std::optional<IntVec> beta;
  if (o.beta) beta = parse_vector(*o.beta);
  DualityMorphism phi = duality_morphism(dd, beta);
  json j = duality_json(dd, phi);
  if (!dd.facet_certificate || !phi.certified) throw VerdictFailure{j};
  return j;
}

json cmd_verify_hodge(const Options& o, const Input& in) {
  IntMatrix a = load_matrix(in);
  IntMatrix at = homogenize(a);
  GroebnerOptions g = groebner_options(o);
  const long strict_bound = o.bound.value_or(3);
  json j;
  bool ok = true;
  auto fail = [&](json& link, const std::string& why) {
    link["ok"] = false;
    link["reason"] = why;
    ok = false;
  };

  json toric;
  SemigroupProfile prof = semigroup_profile(at);
  toric["saturation"] = prof.saturated.status_name();
  toric["gorenstein_c"] = prof.gorenstein_c ? to_json(*prof.gorenstein_c) : json(nullptr);
  toric["ok"] = true;
  if (prof.saturated.status == SaturationVerdict::Status::refuted) fail(toric, "saturation refuted");
  if (!prof.gorenstein_c) fail(toric, "no Gorenstein vector");
  j["toric"] = toric;

  json bern, purity;
  try {
    BernsteinOptions bo;
    bo.groebner = g;
    BernsteinResult r = bernstein_exponent(at, bo);
    bern = {{"m", r.m}, {"rank", r.r}, {"certified", r.certified}, {"predecessor_fails", r.predecessor_fails},
            {"ok", r.certified && r.predecessor_fails && static_cast<std::size_t>(r.m) <= r.r}};
    if (!bern["ok"].get<bool>()) ok = false;
    const std::size_t t = r.ideal.signature->nvars() - 1;
    // Initial forms are pure along t; their basis must stay pure.
    GroebnerBasis in = v_initial_ideal(r.ideal.generators, t, g);
    bool basis_pure = all_pure(in.generators, t);
    purity = {{"initial_basis", in.generators.size()}, {"basis_pure", basis_pure}, {"ok", basis_pure}};
    if (!basis_pure) ok = false;
  } catch (const std::exception& e) {
    fail(bern, e.what());
    fail(purity, "no graph embedding");
  }
  j["bernstein"] = bern;
  j["purity"] = purity;

  json koszul;
  SymbolKoszulReport kr = euler_symbol_koszul(a, 0, 3, 2, g);
  koszul = {{"chart", 0}, {"bidegrees", kr.degrees.size()}, {"regular", kr.regular},
            {"h0_matches", kr.h0_matches}, {"ok", kr.regular && kr.h0_matches}};
  if (!koszul["ok"].get<bool>()) ok = false;
  j["koszul"] = koszul;

  DualityData dd = duality_data(at);
  DualityMorphism phi = duality_morphism(dd);
  StrictnessReport sr = strictness_check(phi, strict_bound, g);
  j["strictness"] = {{"bound", strict_bound}, {"strict", sr.strict}, {"morphism_certified", phi.certified},
                     {"ok", sr.strict && phi.certified}};
  if (!sr.strict || !phi.certified) ok = false;

  SystemPresentation m0 = build_gkz(at, IntVec(at.rows(), Int(0)));
  const long d = static_cast<long>(a.rows());
  const long n = static_cast<long>(a.cols());
  const long c0 = dd.c_tilde.at(0).get_si();
  json ledger;
  ledger["primal"] = {{"entries", to_json(m0.shift_ledger)},
                      {"total", m0.total_offset()},
                      {"expected", d},
                      {"matches", m0.total_offset() == d}};
  ledger["dual"] = {{"c0", c0}, {"n", n}, {"total", dd.hodge_shift}, {"expected", c0 + n},
                    {"matches", dd.hodge_shift == c0 + n}};
  if (m0.total_offset() != d || dd.hodge_shift != c0 + n) ok = false;
  j["shift_ledger"] = ledger;
  j["c_tilde"] = to_json(dd.c_tilde);
  j["ok"] = ok;
  if (!ok) throw VerdictFailure{j};
  return j;
}

json failure_body(const std::string& kind, const std::string& message) {
  return {{"status", "failed"}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

std::string digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric systems and their Hodge filtration checks", "gkz-hodge"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("file", o.file, what)->required();
    sub->add_option("--json", o.json_path, "Also write the report to this path");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Reduction-step budget (default from GKZ_HODGE_BUDGET)");
  };

  auto* toric = app.add_subcommand("toric", "Cone, saturation and Gorenstein data of a matrix");
  add_common(toric, "Matrix file");
  toric->add_option("--bound", o.bound, "Degree bound for the semigroup checks");

  auto* build = app.add_subcommand("build", "Build a system presentation");
  build->add_option("flavor", o.flavor, "gkz, fl, graph, chart, kernel or rees")->required();
  add_common(build, "Matrix file");
  build->add_option("--beta", o.beta, "Parameter vector, comma separated");
  build->add_option("--chart", o.chart, "Chart index u");
  build->add_option("--bound", o.bound, "Degree bound used to find c'");

  auto* groebner = app.add_subcommand("groebner", "Groebner basis of a left ideal");
  add_common(groebner, "File with one operator per line");
  groebner->add_option("--order", o.order, "Term order");
  add_budget(groebner);

  auto* bernstein = app.add_subcommand("bernstein", "Bernstein exponent of the graph-embedded system");
  add_common(bernstein, "Matrix file");
  bernstein->add_option("--bound", o.bound, "Largest exponent tried");
  add_budget(bernstein);

  auto* ishida = app.add_subcommand("ishida", "Per-degree cohomology of the Ishida complex");
  add_common(ishida, "Matrix file (A, before the A^s construction)");
  ishida->add_option("--box", o.box, "Degree box a:b");

  auto* strict = app.add_subcommand("strict", "Strictness of a filtered morphism");
  add_common(strict, "Morphism file");
  strict->add_option("--bound", o.bound, "Degree and level bound");
  add_budget(strict);

  auto* duality = app.add_subcommand("duality", "Duality vector, morphism and Hodge shift");
  add_common(duality, "Matrix file (homogenized)");
  duality->add_option("--beta", o.beta, "Target parameter");
  duality->add_option("--bound", o.bound, "Degree bound for the Gorenstein search");

  auto* verify = app.add_subcommand("verify-hodge", "Full evidence chain and shift ledger");
  add_common(verify, "Matrix file (A)");
  verify->add_option("--bound", o.bound, "Strictness bound");
  add_budget(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  o.command = app.get_subcommands().front()->get_name();

  json echo = json::array();
  for (auto& a : args) echo.push_back(a);
  auto started = std::chrono::steady_clock::now();
  json report;
  int code = ok;
  try {
    Input in = load(o);
    json body;
    try {
      if (o.command == "toric") body = cmd_toric(o, in);
      else if (o.command == "build") body = cmd_build(o, in);
      else if (o.command == "groebner") body = cmd_groebner(o, in);
      else if (o.command == "bernstein") body = cmd_bernstein(o, in);
      else if (o.command == "ishida") body = cmd_ishida(o, in);
      else if (o.command == "strict") body = cmd_strict(o, in);
      else if (o.command == "duality") body = cmd_duality(o, in);
      else body = cmd_verify_hodge(o, in);
      body["status"] = "ok";
    } catch (VerdictFailure& f) {
      body = std::move(f.report);
      body["status"] = "verdict_failed";
      code = verdict_failure;
    } catch (const NotGorenstein& e) {
      body = failure_body("NotGorenstein", e.what());
      code = verdict_failure;
    } catch (const NotSaturated& e) {
      body = failure_body("NotSaturated", e.what());
      code = verdict_failure;
    } catch (const BoundExceeded& e) {
      body = failure_body("BoundExceeded", e.what());
      code = verdict_failure;
    } catch (const ResourceLimit& e) {
      body = failure_body("ResourceLimit", e.what());
      code = verdict_failure;
    } catch (const NoExponent& e) {
      body = failure_body("NoExponent", e.what());
      code = verdict_failure;
    } catch (const NotWellDefined& e) {
      body = failure_body("NotWellDefined", e.what());
      code = verdict_failure;
    } catch (const BoundTooSmall& e) {
      body = failure_body("BoundTooSmall", e.what());
      code = verdict_failure;
    } catch (const GenerationUncertified& e) {
      body = failure_body("GenerationUncertified", e.what());
      code = verdict_failure;
    } catch (const NoDecomposition& e) {
      body = failure_body("NoDecomposition", e.what());
      code = verdict_failure;
    }
    report = {{"command", o.command}, {"args", echo}, {"input", in.echo}, {"result", body}};
  } catch (const IoError& e) {
    err << "gkz-hodge: " << e.what() << "\n";
    return usage_error;
  } catch (const json::exception& e) {
    err << "gkz-hodge: malformed JSON input: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "gkz-hodge " << o.command << ": " << e.what() << "\n";
    return usage_error;
  }

  const std::string text = report.dump(2) + "\n";
  out << text;
  if (o.json_path) {
    std::ofstream f(*o.json_path, std::ios::binary);
    if (!f) {
      err << "gkz-hodge: cannot write " << *o.json_path << "\n";
      return usage_error;
    }
    f << text;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "gkz-hodge " << o.command << ": " << (code == ok ? "ok" : "verdict failed") << " in " << std::fixed
      << std::setprecision(3) << secs << " s\n";
  return code;
}

}  // namespace gkz::cli
