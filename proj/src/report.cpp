#include "biq/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace biq {

namespace {

long long to_ll(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw std::logic_error("integer too large for serialization");
  return v.convert_to<long long>();
}

Json image_json(const TorusImage& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back({m(r, 0), m(r, 1)});
  return rows;
}

TorusImage image_from_json(const Json& j) {
  TorusImage m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = j.at(r).at(c).get<int>();
  return m;
}

FactorType type_from_string(const std::string& s) {
  if (s == "Sp1") return FactorType::Sp1;
  if (s == "SO3") return FactorType::SO3;
  throw std::invalid_argument("unknown factor type: " + s);
}

std::string image_string(const TorusImage& m) {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    if (r) out += ", ";
    out += "(" + std::to_string(m(r, 0)) + "," + std::to_string(m(r, 1)) + ")";
  }
  return out;
}

// One term of a polynomial rendering; empty coefficient suppresses "1".
void append_term(std::string& out, const Int& coef, const char* mono) {
  if (coef == 0) return;
  Int a = coef;
  if (out.empty()) {
    if (a < 0) {
      out += "-";
      a = -a;
    }
  } else {
    out += a < 0 ? "-" : "+";
    if (a < 0) a = -a;
  }
  if (a != 1) out += a.str();
  out += mono;
}

}  // namespace

std::string rat_string(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::string double_string(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string poly2_string(const EvenPoly& p) {
  std::string out;
  append_term(out, p.z2, "z̄²");
  append_term(out, p.w2, "w̄²");
  return out.empty() ? "0" : out;
}

std::string poly4_string(const EvenPoly& p) {
  std::string out;
  append_term(out, p.z4, "z̄⁴");
  append_term(out, p.z2w2, "z̄²w̄²");
  append_term(out, p.w4, "w̄⁴");
  return out.empty() ? "0" : out;
}

Json spec_json(const BiquotientSpec& s) {
  Json j;
  j["name"] = s.name;
  j["left"] = image_json(s.left);
  j["right"] = image_json(s.right);
  j["z_type"] = to_string(s.left_type);
  j["w_type"] = to_string(s.right_type);
  return j;
}

BiquotientSpec spec_from_json(const Json& j) {
  BiquotientSpec s;
  s.name = j.at("name").get<std::string>();
  s.left = image_from_json(j.at("left"));
  s.right = image_from_json(j.at("right"));
  s.left_type = type_from_string(j.at("z_type").get<std::string>());
  s.right_type = type_from_string(j.at("w_type").get<std::string>());
  return s;
}

namespace {

Json rat_array(const std::array<Rat, 3>& a) {
  Json j = Json::array();
  for (const Rat& r : a) j.push_back(rat_string(r));
  return j;
}

std::array<Rat, 3> rat_array_from_json(const Json& j) {
  std::array<Rat, 3> a;
  for (int i = 0; i < 3; ++i) a[i] = rat_from_string(j.at(i).get<std::string>());
  return a;
}

}  // namespace

Json verdict_json(const FreenessVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  Json ws = Json::array();
  for (const Witness& w : v.witnesses) {
    Json wj;
    wj["point"] = Json::array({rat_string(w.point(0)), rat_string(w.point(1))});
    wj["left_eval"] = rat_array(w.left_eval);
    wj["right_eval"] = rat_array(w.right_eval);
    wj["pattern"] = w.pattern;
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

FreenessVerdict verdict_from_json(const Json& j) {
  FreenessVerdict v;
  const std::string s = j.at("status").get<std::string>();
  v.status = s == "Free"              ? FreenessStatus::Free
             : s == "EffectivelyFree" ? FreenessStatus::EffectivelyFree
                                      : FreenessStatus::NotFree;
  for (const Json& wj : j.at("witnesses")) {
    Witness w;
    w.point(0) = rat_from_string(wj.at("point").at(0).get<std::string>());
    w.point(1) = rat_from_string(wj.at("point").at(1).get<std::string>());
    w.left_eval = rat_array_from_json(wj.at("left_eval"));
    w.right_eval = rat_array_from_json(wj.at("right_eval"));
    w.pattern = wj.at("pattern").get<int>();
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

namespace {

Json even_poly_json(const EvenPoly& p) {
  Json j;
  j["z2"] = to_ll(p.z2);
  j["w2"] = to_ll(p.w2);
  j["z4"] = to_ll(p.z4);
  j["w4"] = to_ll(p.w4);
  j["z2w2"] = to_ll(p.z2w2);
  return j;
}

EvenPoly even_poly_from_json(const Json& j) {
  EvenPoly p;
  p.z2 = j.at("z2").get<long long>();
  p.w2 = j.at("w2").get<long long>();
  p.z4 = j.at("z4").get<long long>();
  p.w4 = j.at("w4").get<long long>();
  p.z2w2 = j.at("z2w2").get<long long>();
  return p;
}

}  // namespace

Json cohomology_json(const CohomologyReport& r) {
  Json j;
  j["name"] = r.name;
  j["eff_left"] = image_json(r.eff_left);
  j["eff_right"] = image_json(r.eff_right);
  j["dx3"] = even_poly_json(r.dx3);
  j["dx7"] = even_poly_json(r.dx7);
  j["alpha"] = to_ll(r.alpha);
  j["beta"] = to_ll(r.beta);
  Json rel = Json::array();
  for (int a = 0; a < 3; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 3; ++b) row.push_back(to_ll(r.relations(a, b)));
    rel.push_back(std::move(row));
  }
  j["relations"] = std::move(rel);
  j["h8_order"] = to_ll(r.h8_order);
  j["snf_diag"] = Json::array(
      {to_ll(r.snf_diag[0]), to_ll(r.snf_diag[1]), to_ll(r.snf_diag[2])});
  j["p1"] = to_ll(r.p1);
  j["pi2"] = r.pi2;
  return j;
}

CohomologyReport cohomology_from_json(const Json& j) {
  CohomologyReport r;
  r.name = j.at("name").get<std::string>();
  r.eff_left = image_from_json(j.at("eff_left"));
  r.eff_right = image_from_json(j.at("eff_right"));
  r.dx3 = even_poly_from_json(j.at("dx3"));
  r.dx7 = even_poly_from_json(j.at("dx7"));
  r.alpha = j.at("alpha").get<long long>();
  r.beta = j.at("beta").get<long long>();
  r.relations = IMat(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) r.relations(a, b) = j.at("relations").at(a).at(b).get<long long>();
  r.h8_order = j.at("h8_order").get<long long>();
  for (int i = 0; i < 3; ++i) r.snf_diag[i] = j.at("snf_diag").at(i).get<long long>();
  r.p1 = j.at("p1").get<long long>();
  r.pi2 = j.at("pi2").get<std::string>();
  return r;
}

Json scan_row_json(const ScanRow& r) {
  Json j;
  j["name"] = r.name;
  j["theta"] = r.theta;
  j["min_value"] = r.min_value;
  j["converged"] = r.converged;
  j["label"] = r.label;
  return j;
}

ScanRow scan_row_from_json(const Json& j) {
  ScanRow r;
  r.name = j.at("name").get<std::string>();
  r.theta = j.at("theta").get<double>();
  r.min_value = j.at("min_value").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.label = j.at("label").get<std::string>();
  return r;
}

Json config_json(const MetricConfig& c) {
  Json j;
  j["t"] = c.t;
  j["restarts"] = c.restarts;
  j["seed"] = c.seed;
  j["max_iters"] = c.max_iters;
  j["rel_tol"] = c.rel_tol;
  j["stop_below"] = c.stop_below;
  j["grad_h"] = c.grad_h;
  j["zero_threshold"] = c.zero_threshold;
  j["positive_threshold"] = c.positive_threshold;
  return j;
}

MetricConfig config_from_json(const Json& j) {
  MetricConfig c;
  c.t = j.at("t").get<double>();
  c.restarts = j.at("restarts").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.max_iters = j.at("max_iters").get<int>();
  c.rel_tol = j.at("rel_tol").get<double>();
  c.stop_below = j.at("stop_below").get<double>();
  c.grad_h = j.at("grad_h").get<double>();
  c.zero_threshold = j.at("zero_threshold").get<double>();
  c.positive_threshold = j.at("positive_threshold").get<double>();
  return c;
}

ReproduceData compute_all(const MetricConfig& cfg) {
  ReproduceData d;
  d.cfg = cfg;
  d.cls = classify_all(3);
  d.pairs = certify_sp1_pairs(3);
  d.coh = cohomology_catalog();
  for (int i = 1; i <= 8; ++i)
    d.curvature.push_back(scan_point("N" + std::to_string(i), 0.5, cfg));
  d.curvature.push_back(scan_point("N4", std::acos(-1.0) / 2.0, cfg));
  return d;
}

std::string embeddings_table() {
  std::ostringstream os;
  os << "# Effectively free isometric two-sided actions\n\n";
  os << "| Name | Left factor | Right factor | Left torus | Right torus | z | w | Homogeneous |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const CatalogEntry& e : catalog()) {
    os << "| " << e.name << " | " << e.left_desc << " | " << e.right_desc << " | "
       << e.left_torus << " | " << e.right_torus << " | " << to_string(e.spec.left_type)
       << " | " << to_string(e.spec.right_type) << " | " << (e.homogeneous ? "yes" : "no")
       << " |\n";
  }
  return os.str();
}

std::string torus_images_table() {
  std::ostringstream os;
  os << "# Exponent matrices of the catalog actions\n\n";
  os << "| Name | Left rows | Right rows |\n";
  os << "|---|---|---|\n";
  for (const CatalogEntry& e : catalog())
    os << "| " << e.name << " | " << image_string(e.spec.left) << " | "
       << image_string(e.spec.right) << " |\n";
  return os.str();
}

std::string sp1_homs_table(int hdim) {
  std::ostringstream os;
  os << "# Homomorphisms Sp(1) -> Sp(" << hdim << ") up to equivalence\n\n";
  // Torus exponents live on the rank-3 maximal torus, so the column only
  // exists in the quaternionic dimension this project studies.
  if (hdim == 3) {
    os << "| Representation | Torus exponents |\n";
    os << "|---|---|\n";
    for (const RepDecomposition& r : enumerate_sp1(hdim)) {
      TorusImage img = torus_image(r);
      os << "| " << r.name() << " | (" << img(0, 0) << ", " << img(1, 0) << ", "
         << img(2, 0) << ") |\n";
    }
  } else {
    os << "| Representation |\n";
    os << "|---|\n";
    for (const RepDecomposition& r : enumerate_sp1(hdim)) os << "| " << r.name() << " |\n";
  }
  return os.str();
}

std::string sp1xsp1_homs_table(int hdim) {
  std::ostringstream os;
  os << "# Homomorphisms Sp(1) x Sp(1) -> Sp(" << hdim << ") up to equivalence\n\n";
  if (hdim == 3) {
    os << "| Representation | Torus rows |\n";
    os << "|---|---|\n";
    for (const RepDecomposition& r : enumerate_sp1xsp1(hdim))
      os << "| " << r.name(true) << " | " << image_string(torus_image(r)) << " |\n";
  } else {
    os << "| Representation |\n";
    os << "|---|\n";
    for (const RepDecomposition& r : enumerate_sp1xsp1(hdim))
      os << "| " << r.name(true) << " |\n";
  }
  return os.str();
}

std::string sp1_pairs_table(const std::vector<Sp1Pair>& pairs) {
  std::ostringstream os;
  os << "# Two-sided Sp(1) actions from pairs of nontrivial homomorphisms\n\n";
  os << "| Left | Right | Status | Witness |\n";
  os << "|---|---|---|---|\n";
  for (const Sp1Pair& p : pairs) {
    os << "| " << p.left.name() << " | " << p.right.name() << " | "
       << to_string(p.verdict.status) << " | ";
    if (!p.verdict.witnesses.empty()) {
      const Witness& w = p.verdict.witnesses.front();
      os << "(" << rat_string(w.point(0)) << ", " << rat_string(w.point(1)) << ")";
    }
    os << " |\n";
  }
  return os.str();
}

std::string bf_h8_table(const std::vector<CohomologyReport>& reports) {
  std::ostringstream os;
  os << "# Differentials and degree-8 torsion\n\n";
  os << "| Name | d(x3) | d(x7) | order(H⁸) | SNF |\n";
  os << "|---|---|---|---|---|\n";
  for (const CohomologyReport& r : reports) {
    os << "| " << r.name << " | " << poly2_string(r.dx3) << " | " << poly4_string(r.dx7)
       << " | " << r.h8_order.str() << " | (" << r.snf_diag[0].str() << ", "
       << r.snf_diag[1].str() << ", " << r.snf_diag[2].str() << ") |\n";
  }
  return os.str();
}

std::string p1_table(const std::vector<CohomologyReport>& reports) {
  std::ostringstream os;
  os << "# First Pontryagin class and pi_2\n\n";
  os << "| Name | p1 | pi_2 |\n";
  os << "|---|---|---|\n";
  for (const CohomologyReport& r : reports)
    os << "| " << r.name << " | " << r.p1.str() << " | " << r.pi2 << " |\n";
  return os.str();
}

std::string curvature_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "name,theta,min_value,converged,label\n";
  for (const ScanRow& r : rows)
    os << r.name << "," << double_string(r.theta) << "," << double_string(r.min_value) << ","
       << (r.converged ? 1 : 0) << "," << r.label << "\n";
  return os.str();
}

Json curvature_summary_json(const std::vector<ScanRow>& rows, const MetricConfig& cfg) {
  Json j;
  j["schema"] = 1;
  j["config"] = config_json(cfg);
  Json rj = Json::array();
  for (const ScanRow& r : rows) rj.push_back(scan_row_json(r));
  j["rows"] = std::move(rj);
  return j;
}

Json bundle_json(const ReproduceData& d) {
  Json j;
  j["schema"] = 1;
  j["version"] = "1.0.0";
  Json meta;
  meta["seed"] = d.cfg.seed;
  meta["restarts"] = d.cfg.restarts;
  meta["zero_threshold"] = d.cfg.zero_threshold;
  meta["positive_threshold"] = d.cfg.positive_threshold;
  j["metadata"] = std::move(meta);

  Json cls;
  cls["free_count"] = d.cls.free_actions.size();
  int homogeneous = 0;
  Json free_list = Json::array();
  for (const ClassifiedAction& a : d.cls.free_actions) {
    Json e = spec_json(a.spec);
    bool homog = a.spec.left.isZero() || a.spec.right.isZero();
    e["homogeneous"] = homog;
    homogeneous += homog;
    free_list.push_back(std::move(e));
  }
  cls["homogeneous_count"] = homogeneous;
  cls["free"] = std::move(free_list);
  cls["nonfree_count"] = d.cls.nonfree_actions.size();
  Json nonfree_list = Json::array();
  for (const ClassifiedAction& a : d.cls.nonfree_actions) {
    Json e = spec_json(a.spec);
    e["verdict"] = verdict_json(a.verdict);
    nonfree_list.push_back(std::move(e));
  }
  cls["nonfree"] = std::move(nonfree_list);
  j["classification"] = std::move(cls);

  Json pairs = Json::array();
  for (const Sp1Pair& p : d.pairs) {
    Json e;
    e["left"] = p.left.name();
    e["right"] = p.right.name();
    e["verdict"] = verdict_json(p.verdict);
    pairs.push_back(std::move(e));
  }
  j["sp1_pairs"] = std::move(pairs);

  Json coh = Json::array();
  for (const CohomologyReport& r : d.coh) coh.push_back(cohomology_json(r));
  j["cohomology"] = std::move(coh);

  j["curvature"] = curvature_summary_json(d.curvature, d.cfg);
  return j;
}

std::vector<std::pair<std::string, std::string>> reproduce_files(const ReproduceData& d) {
  std::vector<std::pair<std::string, std::string>> files;
  files.emplace_back("embeddings.md", embeddings_table());
  files.emplace_back("torus_images.md", torus_images_table());
  files.emplace_back("sp1_homs.md", sp1_homs_table());
  files.emplace_back("sp1xsp1_homs.md", sp1xsp1_homs_table());
  files.emplace_back("sp1_pairs.md", sp1_pairs_table(d.pairs));
  files.emplace_back("bf_h8.md", bf_h8_table(d.coh));
  files.emplace_back("p1.md", p1_table(d.coh));
  files.emplace_back("curvature_summary.json",
                     curvature_summary_json(d.curvature, d.cfg).dump(2) + "\n");
  files.emplace_back("curvature_summary.csv", curvature_csv(d.curvature));
  files.emplace_back("bundle.json", bundle_json(d).dump(2) + "\n");
  return files;
}

std::vector<std::string> compare_golden(
    const std::string& golden_dir,
    const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::string> mismatched;
  for (const auto& [name, content] : files) {
    std::ifstream in(golden_dir + "/" + name, std::ios::binary);
    if (!in) {
      mismatched.push_back(name);
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != content) mismatched.push_back(name);
  }
  return mismatched;
}

}  // namespace biq
