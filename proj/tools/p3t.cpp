#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "p3t/bounds.hpp"
#include "p3t/conflict.hpp"
#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/iso.hpp"
#include "p3t/verify.hpp"

using namespace p3t;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr const char* kVersion = "0.1.0";

struct Manifest {
  std::string command;
  ojson config = ojson::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const ojson& summary) const {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ojson m;
    m["command"] = command;
    m["config"] = config;
    m["version"] = kVersion;
    m["wall_time_s"] = wall;
    m["summary"] = summary;
    std::cerr << "manifest: " << m.dump() << "\n";
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Endian parse_endian(const std::string& s) {
  if (s == "little") return Endian::little;
  if (s == "big") return Endian::big;
  throw CLI::ValidationError("--endian", "expected little or big");
}

HullMode parse_mode(const std::string& s) {
  if (s == "triangular") return HullMode::triangular;
  if (s == "unconstrained") return HullMode::unconstrained;
  throw CLI::ValidationError("--mode", "expected triangular or unconstrained");
}

// Layout for render without a point set: apex at the centroid of its face.
EmbedWitness barycentric_layout(const TriTree& g) {
  std::vector<std::array<long double, 2>> pos(g.size());
  const long double s = 1 << 20;
  pos[0] = {0, 0};
  pos[1] = {s, 0};
  pos[2] = {s / 2, s * 0.8660254037844386L};
  for (const StackStep& step : g.program()) {
    auto& p = pos[step.vertex];
    p = {0, 0};
    for (VertexId v : step.parent) {
      p[0] += pos[v][0] / 3;
      p[1] += pos[v][1] / 3;
    }
  }
  EmbedWitness w;
  for (const auto& p : pos) {
    w.position.push_back({static_cast<std::int64_t>(std::llround(p[0])),
                          static_cast<std::int64_t>(std::llround(s - p[1]))});
  }
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar 3-tree universal point set toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::string catalog_path = default_catalog_path();
  app.add_option("--catalog", catalog_path, "Gadget catalog file")->capture_default_str();

  Manifest manifest;
  int exit_code = kExitOk;

  // params
  auto* params = app.add_subcommand("params", "Family parameters for n");
  int params_n = 0;
  params->add_option("--n", params_n, "Vertex count")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::string check;
  VerifyOptions vopt;
  std::string endian = "little";
  bool exhaustive = false;
  verify->add_option("check", check, "lemma7 | lemma8 | embedder | apex | degrees | catalog")
      ->required()
      ->check(CLI::IsMember({"lemma7", "lemma8", "embedder", "apex", "degrees", "catalog"}));
  auto* trials_opt = verify->add_option("--trials", vopt.trials, "Random trials")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Seed")->capture_default_str();
  verify->add_option("--extent", vopt.extent, "Coordinate extent M")->capture_default_str();
  verify->add_option("--otypes", vopt.otypes, "Binary order-type file");
  verify->add_option("--width", vopt.otypes_width, "Order-type coordinate width (8 or 16)")
      ->capture_default_str();
  verify->add_option("--endian", endian, "Byte order of 16-bit files")->capture_default_str();
  verify->add_flag("--exhaustive", exhaustive, "Only the order-type records, no random trials");
  verify->add_option("--max-size", vopt.max_size, "embedder: largest program")->capture_default_str();
  verify->add_option("--sets", vopt.sets, "embedder: point sets per program")->capture_default_str();
  verify->add_option("--n", vopt.n, "degrees: family parameter")->capture_default_str();
  verify->add_option("--max-interior", vopt.max_interior, "apex: largest candidate count")
      ->capture_default_str();

  // conflict
  auto* conflict = app.add_subcommand("conflict", "Simultaneous embeddability on random point sets");
  ConflictConfig cconf;
  std::string cmode = "triangular";
  conflict->add_option("--n", cconf.n)->capture_default_str();
  conflict->add_option("--trials", cconf.trials)->capture_default_str();
  conflict->add_option("--seed", cconf.seed)->capture_default_str();
  conflict->add_option("--extent", cconf.extent)->capture_default_str();
  conflict->add_option("--mode", cmode)->capture_default_str();
  conflict->add_option("--cap", cconf.cap, "Enumeration cap")->capture_default_str();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Exact bound arithmetic");
  int bounds_n = 0, bounds_from = 0, bounds_to = 0;
  bool bounds_csv = false;
  auto* bn = bounds->add_option("--n", bounds_n);
  auto* bfrom = bounds->add_option("--from", bounds_from);
  auto* bto = bounds->add_option("--to", bounds_to);
  bn->excludes(bfrom)->excludes(bto);
  bfrom->needs(bto);
  bto->needs(bfrom);
  bounds->add_flag("--csv", bounds_csv, "CSV rows instead of JSON");

  // corollary
  auto* corollary = app.add_subcommand("corollary", "Solve for the growth ratio");
  double tol = 1e-9;
  corollary->add_option("--tol", tol)->capture_default_str();
  long long dc_n = 0;
  corollary->add_option("--double-count", dc_n, "Also report the smallest m for this n (>= 238)");

  // iso
  auto* iso = app.add_subcommand("iso", "Isomorphism classes of the family");
  int iso_n = 22;
  bool iso_classes = false;
  std::uint64_t iso_cap = FamilyEnumerator::kDefaultCap;
  iso->add_option("--n", iso_n)->capture_default_str();
  iso->add_option("--cap", iso_cap)->capture_default_str();
  iso->add_flag("--classes", iso_classes, "One row per class instead of the size distribution");

  // render
  auto* render = app.add_subcommand("render", "SVG drawing of a graph");
  std::string program_path, points_path, out_path;
  int render_n = 0;
  std::string render_index = "0";
  int canvas = 600;
  render->add_option("--program", program_path, "Stacking program file");
  render->add_option("--n", render_n, "Family member: vertex count");
  render->add_option("--index", render_index, "Family member: index")->capture_default_str();
  render->add_option("--points", points_path, "Point set JSON; omitted: barycentric layout");
  render->add_option("--out", out_path, "Output SVG (default stdout)");
  render->add_option("--canvas", canvas)->capture_default_str();

  // export
  auto* exporter = app.add_subcommand("export", "Stacking program of a family member");
  int export_n = 22;
  std::string export_index = "0";
  exporter->add_option("--n", export_n)->capture_default_str();
  exporter->add_option("--index", export_index)->capture_default_str();
  exporter->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  auto member_tree = [&](int n, const std::string& index) {
    const GadgetCatalog catalog = load_catalog(catalog_path);
    return graph_at(family_parameters(n), catalog, BigInt(index.c_str()));
  };

  try {
    if (*params) {
      manifest.command = "params";
      manifest.config["n"] = params_n;
      const FamilySpec spec = family_parameters(params_n);
      std::cout << family_spec_json(spec) << "\n";
      manifest.emit({{"F1", spec.F1}, {"F2", spec.F2}});
      std::cerr << "n=" << params_n << " k=(" << spec.k1 << "," << spec.k2 << "," << spec.k3
                << ") F=" << spec.F << " F1=" << spec.F1 << " F2=" << spec.F2 << "\n";
    } else if (*verify) {
      manifest.command = "verify " + check;
      vopt.otypes_endian = parse_endian(endian);
      if (exhaustive) {
        if (vopt.otypes) {
          if (trials_opt->count() == 0) vopt.trials = 0;
        } else {
          std::cerr << "warning: --exhaustive without --otypes; falling back to sampling\n";
        }
      }
      manifest.config = {{"trials", vopt.trials}, {"seed", vopt.seed},   {"extent", vopt.extent},
                         {"otypes", vopt.otypes ? *vopt.otypes : ""},    {"width", vopt.otypes_width},
                         {"endian", endian},         {"max_size", vopt.max_size},
                         {"sets", vopt.sets},        {"n", vopt.n},      {"max_interior", vopt.max_interior}};
      VerifyReport r;
      if (check == "embedder") {
        r = verify_embedder(vopt);
      } else if (check == "apex") {
        r = verify_apex(vopt);
      } else {
        const GadgetCatalog catalog = load_catalog(catalog_path);
        if (check == "lemma7") r = verify_gadget_lemma(catalog, GadgetFamily::three, vopt);
        else if (check == "lemma8") r = verify_gadget_lemma(catalog, GadgetFamily::seven, vopt);
        else if (check == "degrees") r = verify_degrees(catalog, vopt);
        else r = verify_catalog(catalog);
      }
      std::cout << r.to_json() << "\n";
      manifest.emit({{"trials", r.trials}, {"violations", r.violations},
                     {"invalid_records", r.invalid_records}});
      std::cerr << r.check << ": " << r.trials << " trials, " << r.skipped << " skipped, "
                << r.violations << " violations";
      if (r.invalid_records) std::cerr << ", " << r.invalid_records << " invalid records";
      if (r.details.contains("agreement")) {
        std::cerr << ", agreement " << r.details["agreement"].get<double>() * 100 << "%";
      }
      if (r.details.contains("records_processed") && vopt.otypes) {
        std::cerr << ", " << r.details["records_processed"].get<long>() << " records processed";
      }
      std::cerr << "\n";
      exit_code = r.ok() ? kExitOk : kExitViolations;
    } else if (*conflict) {
      manifest.command = "conflict";
      cconf.mode = parse_mode(cmode);
      manifest.config = {{"n", cconf.n},       {"trials", cconf.trials}, {"seed", cconf.seed},
                         {"extent", cconf.extent}, {"mode", cmode},     {"cap", cconf.cap}};
      const GadgetCatalog catalog = load_catalog(catalog_path);
      const ConflictReport r = conflict_search(cconf, catalog);
      std::cout << conflict_json(r) << "\n";
      manifest.emit({{"max_embeddable", r.max_embeddable}, {"violations", r.violations}});
      std::cerr << "conflict n=" << cconf.n << ": family " << r.family_size << ", max embeddable "
                << r.max_embeddable << " <= " << r.partition_bound.str() << ", skipped "
                << r.skipped << "\n";
      exit_code = r.violations == 0 ? kExitOk : kExitViolations;
    } else if (*bounds) {
      manifest.command = "bounds";
      int lo = bounds_n, hi = bounds_n;
      if (bfrom->count()) lo = bounds_from, hi = bounds_to;
      else if (!bn->count()) throw CLI::ValidationError("bounds", "give --n or --from/--to");
      if (lo > hi) throw CLI::ValidationError("bounds", "--from exceeds --to");
      manifest.config = {{"from", lo}, {"to", hi}, {"csv", bounds_csv}};
      long failures = 0;
      if (bounds_csv) std::cout << bounds_csv_header();
      for (int n = lo; n <= hi; ++n) {
        const BoundsReport r = bounds_report(n);
        if (!r.upper_chain_holds) ++failures;
        if (bounds_csv) std::cout << bounds_csv_row(r);
        else std::cout << bounds_json(r) << "\n";
      }
      manifest.emit({{"rows", hi - lo + 1}, {"upper_chain_failures", failures}});
      std::cerr << "bounds n in [" << lo << ", " << hi << "]: exact_upper <= theorem_upper "
                << (failures == 0 ? "verified" : "FAILED") << "\n";
      exit_code = failures == 0 ? kExitOk : kExitViolations;
    } else if (*corollary) {
      manifest.command = "corollary";
      manifest.config = {{"tol", tol}};
      const CorollaryResult c = corollary_ratio(tol);
      ojson j;
      j["ratio"] = static_cast<double>(c.ratio);
      j["ratio_rounded"] = std::round(static_cast<double>(c.ratio) * 1e4) / 1e4;
      j["residual"] = static_cast<double>(c.residual);
      j["iterations"] = c.iterations;
      if (corollary->count("--double-count")) {
        j["double_count_n"] = dc_n;
        j["double_count_at_n"] = double_count_check(dc_n, dc_n);
        j["double_count_threshold"] = double_count_threshold(dc_n);
      }
      std::cout << j.dump() << "\n";
      manifest.emit({{"ratio", j["ratio_rounded"]}});
      std::cerr << "ratio " << j["ratio_rounded"].get<double>() << " after " << c.iterations
                << " bisection steps\n";
    } else if (*iso) {
      manifest.command = "iso";
      manifest.config = {{"n", iso_n}, {"cap", iso_cap}, {"classes", iso_classes}};
      const GadgetCatalog catalog = load_catalog(catalog_path);
      const FamilySpec spec = family_parameters(iso_n);
      FamilyEnumerator members(spec, catalog, iso_cap);
      IsoHistogram h;
      while (auto m = members.next()) h.add_graph(m->second.adjacency());
      if (iso_classes) {
        std::cout << h.to_csv();
      } else {
        std::cout << "class_size,classes\n";
        for (const auto& [size, k] : h.size_distribution()) std::cout << size << ',' << k << "\n";
      }
      manifest.emit({{"graphs", h.total()}, {"classes", h.classes()}, {"largest", h.largest_class()}});
      std::cerr << "iso n=" << iso_n << ": " << h.total() << " graphs, " << h.classes()
                << " classes, largest " << h.largest_class() << "\n";
    } else if (*render) {
      manifest.command = "render";
      manifest.config = {{"program", program_path}, {"n", render_n}, {"index", render_index},
                         {"points", points_path},   {"canvas", canvas}};
      TriTree g;
      if (!program_path.empty()) g = parse_stacking_text(read_file(program_path));
      else if (render_n > 0) g = member_tree(render_n, render_index);
      else throw CLI::ValidationError("render", "give --program or --n");
      EmbedWitness w;
      if (!points_path.empty()) {
        const PointSet X(points_from_json(read_file(points_path)));
        const auto e = decide_embed_free(g, X);
        if (!e) {
          manifest.emit({{"embeddable", false}});
          std::cerr << "graph does not embed on the given point set\n";
          return kExitViolations;
        }
        w = e->witness;
      } else {
        w = barycentric_layout(g);
      }
      write_output(out_path, render_svg(g, w, canvas));
      manifest.emit({{"vertices", g.size()}});
    } else if (*exporter) {
      manifest.command = "export";
      manifest.config = {{"n", export_n}, {"index", export_index}};
      write_output(out_path, to_stacking_text(member_tree(export_n, export_index)));
      manifest.emit({{"vertices", export_n}});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
