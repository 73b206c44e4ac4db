// Command-line front end: enumeration, classification, invariants, curvature
// scans, and the full reproduction bundle with golden-file comparison.
//
// Exit codes: 0 success, 1 golden mismatch, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "biq/report.hpp"

namespace {

std::uint64_t resolve_seed(bool seed_set, std::uint64_t flag_value) {
  if (seed_set) return flag_value;
  if (const char* env = std::getenv("BIQ_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

int run_enumerate(const std::string& group, int hdim, bool json) {
  if (group != "sp1" && group != "sp1xsp1") {
    std::cerr << "unknown group: " << group << " (expected sp1 or sp1xsp1)\n";
    return 2;
  }
  bool two = group == "sp1xsp1";
  auto reps = two ? biq::enumerate_sp1xsp1(hdim) : biq::enumerate_sp1(hdim);
  if (json) {
    biq::Json j;
    j["schema"] = 1;
    j["group"] = group;
    j["hdim"] = hdim;
    biq::Json items = biq::Json::array();
    for (const auto& r : reps) {
      biq::Json e;
      e["name"] = r.name(two);
      if (hdim == 3) {  // torus exponents are defined on the rank-3 torus
        biq::Json rows = biq::Json::array();
        biq::TorusImage img = biq::torus_image(r);
        for (int i = 0; i < 3; ++i) rows.push_back({img(i, 0), img(i, 1)});
        e["image"] = std::move(rows);
      }
      items.push_back(std::move(e));
    }
    j["items"] = std::move(items);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (two ? biq::sp1xsp1_homs_table(hdim) : biq::sp1_homs_table(hdim));
  }
  return 0;
}

int run_classify(bool json, bool witnesses) {
  biq::Classification cls = biq::classify_all(3);
  if (json) {
    biq::Json j;
    j["schema"] = 1;
    j["free_count"] = cls.free_actions.size();
    j["nonfree_count"] = cls.nonfree_actions.size();
    biq::Json fl = biq::Json::array();
    for (const auto& a : cls.free_actions) fl.push_back(biq::spec_json(a.spec));
    j["free"] = std::move(fl);
    if (witnesses) {
      biq::Json nf = biq::Json::array();
      for (const auto& a : cls.nonfree_actions) {
        biq::Json e = biq::spec_json(a.spec);
        e["verdict"] = biq::verdict_json(a.verdict);
        nf.push_back(std::move(e));
      }
      j["nonfree"] = std::move(nf);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "free classes: " << cls.free_actions.size() << "\n";
  for (const auto& a : cls.free_actions) {
    bool homog = a.spec.left.isZero() || a.spec.right.isZero();
    std::cout << "  " << (a.spec.name.empty() ? std::string("(unnamed)") : a.spec.name)
              << (homog ? "  [homogeneous]" : "") << "\n";
  }
  std::cout << "non-free candidate classes: " << cls.nonfree_actions.size() << "\n";
  if (witnesses) {
    for (const auto& a : cls.nonfree_actions) {
      const auto& ws = a.verdict.witnesses;
      std::cout << "  rows L=";
      for (int r = 0; r < 3; ++r)
        std::cout << "(" << a.spec.left(r, 0) << "," << a.spec.left(r, 1) << ")";
      std::cout << " R=";
      for (int r = 0; r < 3; ++r)
        std::cout << "(" << a.spec.right(r, 0) << "," << a.spec.right(r, 1) << ")";
      if (!ws.empty())
        std::cout << "  witness (" << biq::rat_string(ws.front().point(0)) << ", "
                  << biq::rat_string(ws.front().point(1)) << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

void print_report(const biq::CohomologyReport& r) {
  std::cout << r.name << "\n"
            << "  d(x3) = " << biq::poly2_string(r.dx3) << "\n"
            << "  d(x7) = " << biq::poly4_string(r.dx7) << "\n"
            << "  order of H^8 = " << r.h8_order.str() << "\n"
            << "  SNF = (" << r.snf_diag[0].str() << ", " << r.snf_diag[1].str() << ", "
            << r.snf_diag[2].str() << ")\n"
            << "  p1 = " << r.p1.str() << "\n"
            << "  pi_2 = " << r.pi2 << "\n";
}

int run_invariants(const std::string& name, bool all, bool json) {
  if (all) {
    auto reports = biq::cohomology_catalog();
    if (json) {
      biq::Json j;
      j["schema"] = 1;
      biq::Json arr = biq::Json::array();
      for (const auto& r : reports) arr.push_back(biq::cohomology_json(r));
      j["cohomology"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print_report(r);
    }
    return 0;
  }
  const biq::CatalogEntry* e = biq::find_entry(name);
  if (!e) {
    std::cerr << "unknown quotient: " << name << "\n";
    return 2;
  }
  biq::CohomologyReport r = biq::cohomology(e->spec);
  if (json) {
    biq::Json j;
    j["schema"] = 1;
    j["report"] = biq::cohomology_json(r);
    std::cout << j.dump(2) << "\n";
  } else {
    print_report(r);
  }
  return 0;
}

int run_curvature(const std::string& name, std::vector<double> thetas,
                  const biq::MetricConfig& cfg, bool json, bool csv) {
  if (thetas.empty()) thetas = {0.5};
  std::vector<biq::ScanRow> rows;
  try {
    rows = biq::theta_scan(name, thetas, cfg);
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  }
  if (json) {
    std::cout << biq::curvature_summary_json(rows, cfg).dump(2) << "\n";
  } else if (csv) {
    std::cout << biq::curvature_csv(rows);
  } else {
    for (const auto& r : rows)
      std::cout << r.name << "  theta=" << biq::double_string(r.theta)
                << "  min=" << biq::double_string(r.min_value)
                << "  converged=" << (r.converged ? "yes" : "no") << "  " << r.label << "\n";
  }
  return 0;
}

int run_reproduce(const std::string& out_dir, const std::string& golden_dir,
                  const biq::MetricConfig& cfg) {
  if (out_dir.empty() && golden_dir.empty()) {
    std::cerr << "reproduce: need --out and/or --golden\n";
    return 2;
  }
  biq::ReproduceData data = biq::compute_all(cfg);
  auto files = biq::reproduce_files(data);
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
      return 3;
    }
    for (const auto& [name, content] : files) {
      std::ofstream f(out_dir + "/" + name, std::ios::binary);
      f << content;
      if (!f) {
        std::cerr << "cannot write " << out_dir << "/" << name << "\n";
        return 3;
      }
    }
    std::cout << "wrote " << files.size() << " files to " << out_dir << "\n";
  }
  if (!golden_dir.empty()) {
    auto mismatched = biq::compare_golden(golden_dir, files);
    if (!mismatched.empty()) {
      std::cerr << "golden mismatch:";
      for (const auto& m : mismatched) std::cerr << " " << m;
      std::cerr << "\n";
      return 1;
    }
    std::cout << "all " << files.size() << " files match " << golden_dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biquotient classification and invariants"};
  app.require_subcommand(1);

  std::string group = "sp1xsp1";
  int hdim = 3;
  bool as_json = false, witnesses = false, as_csv = false, all = false;
  std::string name, out_dir, golden_dir;
  std::vector<double> thetas;
  std::uint64_t seed_flag = 42;
  int restarts = -1;

  auto* enumerate = app.add_subcommand("enumerate", "list homomorphisms up to equivalence");
  enumerate->add_option("--group", group, "sp1 or sp1xsp1");
  enumerate->add_option("--hdim", hdim, "quaternionic dimension (default 3)");
  enumerate->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "classify the two-sided actions");
  classify->add_flag("--json", as_json);
  classify->add_flag("--witnesses", witnesses, "include non-free witnesses");

  auto* invariants = app.add_subcommand("invariants", "cohomological invariants");
  invariants->add_option("name", name, "catalog name, e.g. N6");
  invariants->add_flag("--all", all);
  invariants->add_flag("--json", as_json);

  auto* curvature = app.add_subcommand("curvature", "minimize the zero-plane defect");
  curvature->add_option("name", name, "catalog name, N1..N8")->required();
  curvature->add_option("--theta", thetas, "angles of the scan points")->delimiter(',');
  curvature->add_option("--restarts", restarts, "multistart count (default 64)");
  auto* seed_opt = curvature->add_option("--seed", seed_flag, "rng seed (overrides BIQ_SEED)");
  curvature->add_flag("--json", as_json);
  curvature->add_flag("--csv", as_csv);

  auto* reproduce = app.add_subcommand("reproduce", "write and/or check the full result bundle");
  reproduce->alias("reproduce-paper");
  reproduce->add_option("--out", out_dir, "directory to write the bundle into");
  reproduce->add_option("--golden", golden_dir, "directory with reference copies to compare");
  auto* seed_opt2 = reproduce->add_option("--seed", seed_flag, "rng seed (overrides BIQ_SEED)");
  reproduce->add_option("--restarts", restarts, "multistart count (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(group, hdim, as_json);
    if (classify->parsed()) return run_classify(as_json, witnesses);
    if (invariants->parsed()) {
      if (!all && name.empty()) {
        std::cerr << "invariants: need a name or --all\n";
        return 2;
      }
      return run_invariants(name, all, as_json);
    }
    if (curvature->parsed()) {
      biq::MetricConfig cfg;
      cfg.seed = resolve_seed(seed_opt->count() > 0, seed_flag);
      if (restarts > 0) cfg.restarts = restarts;
      return run_curvature(name, thetas, cfg, as_json, as_csv);
    }
    if (reproduce->parsed()) {
      biq::MetricConfig cfg;
      cfg.restarts = 16;
      cfg.seed = resolve_seed(seed_opt2->count() > 0, seed_flag);
      if (restarts > 0) cfg.restarts = restarts;
      return run_reproduce(out_dir, golden_dir, cfg);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  return 2;
}
