#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gzoo/contextuality.hpp"
#include "gzoo/coset_enum.hpp"
#include "gzoo/dessin.hpp"
#include "gzoo/error.hpp"
#include "gzoo/geometry.hpp"
#include "gzoo/perm_group.hpp"
#include "gzoo/report.hpp"
#include "gzoo/textio.hpp"
#include "json.hpp"

namespace {

using namespace gzoo;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

PermutationInput load_perm(const std::string& path) {
  return textio::parse_permutations(textio::read_file(path));
}

GroupFile load_grp(const std::string& path) {
  return textio::parse_group_file(textio::read_file(path));
}

SubgroupSpec load_sub(const std::optional<std::string>& path, const GroupFile& grp) {
  if (path) return textio::parse_subgroup(textio::read_file(*path), grp.presentation);
  return grp.subgroup.value_or(SubgroupSpec{});
}

GeometryMode parse_mode(const std::string& s) {
  if (s == "stabilized") return GeometryMode::stabilized;
  return GeometryMode::defined;
}

StabilizerKind parse_kind(const std::string& s) {
  if (s == "setwise") return StabilizerKind::setwise;
  return StabilizerKind::pointwise;
}

IncidenceGeometry build_geometry(const PermutationGroup& g, const StabilizerClassification& cls,
                                 std::size_t k, GeometryMode mode, StabilizerKind kind,
                                 std::uint64_t clique_budget) {
  if (mode == GeometryMode::defined) return build_defined_geometry(g, cls, k, clique_budget);
  return build_stabilized_geometry(g, cls, k, {kind, true});
}

std::string signature_text(const DessinSignature& s) {
  return "B=" + std::to_string(s.black) + " W=" + std::to_string(s.white) +
         " F=" + std::to_string(s.faces) + " g=" + std::to_string(s.genus);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace

// Fixed-width columns that never run together.
void print_check(const CheckResult& r) {
  auto cell = [](const std::string& text, std::size_t width) {
    return text + std::string(text.size() + 2 > width ? 2 : width - text.size(), ' ');
  };
  std::cout << cell(r.entry, 18) << cell(r.tag, 16) << cell(r.subject, 22)
            << cell(to_string(r.verdict), 26) << r.detail << "\n";
}

int main(int argc, char** argv) {
  CLI::App app{"gzoo: coset enumeration, dessins and finite geometries of two-generator groups"};
  app.require_subcommand(1);

  std::string grp_path, sub_path_s, perm_path, mode_s = "defined", kind_s = "pointwise",
                                               rule_s = "perp_and_farthest", emit_dir;
  std::optional<std::string> sub_path;
  std::size_t max_cosets = kDefaultMaxCosets, max_index = 15, class_index = 0;
  std::uint64_t node_budget = kDefaultLowIndexNodeBudget, clique_budget = kDefaultCliqueBudget,
                closure_budget = kDefaultClosureBudget;
  std::uint64_t polar_p = 2, polar_n = 2;
  bool json = false, closure = false, check = false, extended = false;
  std::vector<std::string> entries;
  std::string catalog_dir;

  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter enumeration of a subgroup");
  enumerate->add_option("--grp", grp_path, "presentation file")->required();
  enumerate->add_option("--sub", sub_path_s, "subgroup generators file");
  enumerate->add_option("--max-cosets", max_cosets, "table row budget");
  enumerate->add_flag("--json", json);

  auto* low = app.add_subcommand("low-index", "conjugacy classes of subgroups of small index");
  low->add_option("--grp", grp_path, "presentation file")->required();
  low->add_option("--max-index", max_index)->required();
  low->add_option("--node-budget", node_budget);
  low->add_option("--emit-perm", emit_dir, "write one .perm file per class into DIR");
  std::vector<std::string> contains;
  low->add_option("--contains", contains, "only classes with a member containing these words");

  auto* analyze = app.add_subcommand("analyze", "rank, subdegrees and stabilizer classes");
  analyze->add_option("--perm", perm_path)->required();
  analyze->add_flag("--json", json);

  auto* dessin = app.add_subcommand("dessin", "dessin signature and passport");
  dessin->add_option("--perm", perm_path)->required();
  dessin->add_flag("--json", json);

  auto* geometry = app.add_subcommand("geometry", "geometry of one stabilizer class");
  geometry->add_option("--perm", perm_path)->required();
  geometry->add_option("--class", class_index);
  geometry->add_option("--mode", mode_s)->check(CLI::IsMember({"stabilized", "defined"}));
  geometry->add_option("--kind", kind_s)->check(CLI::IsMember({"pointwise", "setwise"}));
  geometry->add_option("--clique-budget", clique_budget);
  geometry->add_flag("--json", json);

  auto* kappa_cmd = app.add_subcommand("kappa", "contextuality of a geometry on the cosets");
  kappa_cmd->add_option("--grp", grp_path)->required();
  kappa_cmd->add_option("--sub", sub_path_s);
  kappa_cmd->add_option("--class", class_index);
  kappa_cmd->add_option("--mode", mode_s)->check(CLI::IsMember({"stabilized", "defined"}));
  kappa_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"pointwise", "setwise"}));
  kappa_cmd->add_option("--max-cosets", max_cosets);
  kappa_cmd->add_option("--clique-budget", clique_budget);
  kappa_cmd->add_flag("--json", json);

  auto* polar = app.add_subcommand("predict-polar", "symplectic polar space W(2n-1,p)");
  polar->add_option("-p", polar_p)->required();
  polar->add_option("-n", polar_n)->required();
  polar->add_flag("--json", json);

  auto* hyper = app.add_subcommand("hyperplanes", "basic hyperplanes and Veldkamp closure");
  hyper->add_option("--perm", perm_path)->required();
  hyper->add_option("--class", class_index);
  hyper->add_option("--mode", mode_s)->check(CLI::IsMember({"stabilized", "defined"}));
  hyper->add_option("--kind", kind_s)->check(CLI::IsMember({"pointwise", "setwise"}));
  hyper->add_option("--rule", rule_s)
      ->check(CLI::IsMember({"perp_and_farthest", "open_perp_and_farthest", "perp_only"}));
  hyper->add_option("--clique-budget", clique_budget);
  hyper->add_option("--closure-budget", closure_budget);
  hyper->add_flag("--closure", closure);

  PipelineOptions popts;
  auto add_pipeline_options = [&](CLI::App* c) {
    c->add_option("--max-index", popts.max_index);
    c->add_option("--min-index", popts.min_index);
    c->add_option("--max-cosets", popts.max_cosets);
    c->add_option("--node-budget", popts.node_budget);
    c->add_option("--clique-budget", popts.clique_budget);
    c->add_flag("!--no-stabilized", popts.stabilized);
    c->add_flag("!--no-setwise", popts.setwise);
    c->add_flag("!--no-defined", popts.defined);
    c->add_flag("!--no-kappa", popts.kappa);
    c->add_flag("--json", json);
  };

  auto* pipe = app.add_subcommand("pipeline", "end-to-end rows for a group or catalog entry");
  auto* pipe_src = pipe->add_option_group("input");
  pipe_src->add_option("--grp", grp_path);
  pipe_src->add_option("--perm", perm_path);
  pipe_src->add_option("entry", entries, "catalog entry name");
  pipe_src->require_option(1);
  pipe->add_option("--catalog", catalog_dir);
  add_pipeline_options(pipe);

  auto* report = app.add_subcommand("report", "run catalog entries, optionally checking them");
  report->add_option("--entry", entries, "restrict to these entries");
  report->add_option("--catalog", catalog_dir);
  report->add_flag("--check", check, "compare with the expected values");
  report->add_flag("--extended", extended, "also run entries marked extended");
  add_pipeline_options(report);

  CLI11_PARSE(app, argc, argv);
  if (!sub_path_s.empty()) sub_path = sub_path_s;

  try {
    if (*enumerate) {
      const GroupFile grp = load_grp(grp_path);
      const CosetTable t = todd_coxeter(grp.presentation, load_sub(sub_path, grp), max_cosets);
      if (json) {
        ordered_json j;
        j["index"] = t.index();
        ordered_json reps = ordered_json::array();
        for (const auto& w : t.representatives()) {
          reps.push_back(textio::format_word(w, grp.presentation));
        }
        j["representatives"] = reps;
        j["permutations"] = textio::format_permutations(table_to_permutations(t));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "index " << t.index() << "\n"
                  << textio::format_permutations(table_to_permutations(t));
      }
    } else if (*low) {
      const GroupFile grp = load_grp(grp_path);
      LowIndexOptions lo{max_index, node_budget, {}};
      for (const auto& w : contains) {
        lo.contains.generators.push_back(textio::parse_word(w, grp.presentation));
      }
      const auto tables = low_index_subgroups(grp.presentation, lo);
      std::map<std::size_t, std::size_t> count, seen;
      for (const auto& t : tables) ++count[t.index()];
      if (!emit_dir.empty()) std::filesystem::create_directories(emit_dir);
      for (const auto& t : tables) {
        const std::size_t n = t.index();
        std::string label = std::to_string(n);
        const std::size_t ordinal = seen[n]++;
        if (count[n] > 1) label += "_" + std::string(1, static_cast<char>('a' + ordinal % 26));
        const PermutationInput perms = table_to_permutations(t);
        const PermutationGroup g = group_from(perms);
        std::cout << std::left << std::setw(8) << label << " order " << g.order().str() << "\n";
        if (!emit_dir.empty()) {
          write_file(std::filesystem::path(emit_dir) / (label + ".perm"),
                     textio::format_permutations(perms));
        }
      }
    } else if (*analyze) {
      const PermutationInput input = load_perm(perm_path);
      PipelineOptions o;
      o.stabilized = o.setwise = o.defined = o.kappa = false;
      const auto rows = pipeline(std::filesystem::path(perm_path).stem().string(), input, o);
      if (json) {
        std::cout << emit_json(rows);
      } else {
        const ReportRow& r = rows.front();
        std::cout << "degree      " << r.index << "\norder       " << r.order.str()
                  << "\nrank        " << r.rank << "\nsubdegrees  " << join(r.subdegrees)
                  << "\nm           " << r.m << " (" << r.m_pairs << " pair classes)\n";
        for (std::size_t k = 0; k < r.classes.size(); ++k) {
          std::cout << "class " << k << "     order " << r.classes[k].order.str()
                    << (r.classes[k].fingerprint_only ? " (fingerprint only)" : "")
                    << ", suborbits " << join(r.classes[k].subdegrees) << "\n";
        }
        for (const auto& f : r.flags) std::cout << "flag        " << f << "\n";
      }
    } else if (*dessin) {
      const PermutationInput input = load_perm(perm_path);
      const DessinSignature s = signature(input);
      const Passport pp = passport(input);
      std::optional<ModularInvariants> mod;
      try {
        mod = modular_invariants(input);
      } catch (const NotModularQuotient&) {
      }
      if (json) {
        ordered_json j{{"schema_version", kReportSchemaVersion},
                       {"signature", {{"B", s.black}, {"W", s.white}, {"F", s.faces}, {"g", s.genus}}},
                       {"edges", s.edges},
                       {"passport", {pp.black, pp.white, pp.faces}}};
        if (mod) {
          j["modular"] = {{"n", mod->n}, {"g", mod->genus}, {"nu2", mod->nu2},
                          {"nu3", mod->nu3}, {"c", mod->cusps}, {"f", mod->fractions}};
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "signature  " << signature_text(s) << " (black: first generator)\n"
                  << "passport   " << format_passport(pp) << "\n";
        if (mod) {
          std::cout << "modular    nu2=" << mod->nu2 << " nu3=" << mod->nu3 << " c=" << mod->cusps
                    << " f=" << mod->fractions << "\n";
        }
      }
    } else if (*geometry || *hyper) {
      const PermutationGroup g = group_from(load_perm(perm_path));
      const auto cls = classify_two_point_stabilizers(g);
      const IncidenceGeometry geom =
          build_geometry(g, cls, class_index, parse_mode(mode_s), parse_kind(kind_s), clique_budget);
      if (*geometry) {
        PipelineOptions o;
        o.kappa = false;
        const GeometryRecord rec =
            describe_geometry(geom, class_index, parse_kind(kind_s), std::nullopt, o);
        std::cout << (json ? emit_json(rec) : emit_text(rec));
      } else {
        HyperplaneRule rule = HyperplaneRule::perp_and_farthest;
        if (rule_s == "open_perp_and_farthest") rule = HyperplaneRule::open_perp_and_farthest;
        if (rule_s == "perp_only") rule = HyperplaneRule::perp_only;
        const auto basics = basic_hyperplanes(geom, rule);
        std::cout << "basic hyperplanes " << basics.size() << " (rule " << to_string(rule) << ")\n";
        if (closure) {
          const VeldkampClosure c = veldkamp_closure(basics, geom.points, &geom, closure_budget);
          std::cout << "rank " << c.rank << ", closure " << c.total << " sets, "
                    << c.class_count() << " classes\n";
          for (const auto& f : c.families) {
            std::cout << "  size " << f.size << " count " << f.count;
            if (f.universe) std::cout << " (all points)";
            for (auto [k, v] : f.profile) std::cout << " " << k << ":" << v;
            std::cout << "\n";
          }
        }
      }
    } else if (*kappa_cmd) {
      const GroupFile grp = load_grp(grp_path);
      const CosetTable t = todd_coxeter(grp.presentation, load_sub(sub_path, grp), max_cosets);
      const PermutationGroup g = group_from(table_to_permutations(t));
      const auto cls = classify_two_point_stabilizers(g);
      const IncidenceGeometry geom =
          build_geometry(g, cls, class_index, parse_mode(mode_s), parse_kind(kind_s), clique_budget);
      const KappaReport k = kappa(t, geom);
      if (json) {
        ordered_json j{{"schema_version", kReportSchemaVersion},
                       {"E", k.edges},
                       {"E_c", k.contextual_edges},
                       {"value", k.formatted()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "kappa " << k.contextual_edges << "/" << k.edges << " = " << k.formatted()
                  << "\n";
      }
    } else if (*polar) {
      const PolarPrediction pr = predict_polar_space(polar_p, polar_n);
      if (json) {
        ordered_json j{{"p", pr.p},
                       {"n", pr.n},
                       {"points", pr.points.str()},
                       {"generators", pr.generators.str()},
                       {"lines_per_point", pr.lines_per_point.str()},
                       {"points_per_generator", pr.points_per_generator.str()},
                       {"spread", pr.spread.str()},
                       {"generator_vectors", pr.generator_vectors.str()},
                       {"srg", {pr.points.str(), pr.srg_k.str(), pr.srg_lambda.str(), pr.srg_mu.str()}},
                       {"configuration", format_predicted_configuration(pr)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "points         " << pr.points.str() << "\n"
                  << "srg            (" << pr.points.str() << "," << pr.srg_k.str() << ","
                  << pr.srg_lambda.str() << "," << pr.srg_mu.str() << ")\n"
                  << "configuration  " << format_predicted_configuration(pr) << "\n"
                  << "generators     " << pr.generators.str() << "\n"
                  << "spread         " << pr.spread.str() << "\n";
      }
    } else if (*pipe) {
      std::vector<ReportRow> rows;
      if (!grp_path.empty()) {
        rows = pipeline(std::filesystem::path(grp_path).stem().string(),
                        load_grp(grp_path).presentation, popts);
      } else if (!perm_path.empty()) {
        rows = pipeline(std::filesystem::path(perm_path).stem().string(), load_perm(perm_path),
                        popts);
      } else {
        const Catalog cat =
            load_catalog(catalog_dir.empty() ? default_catalog_directory() : std::filesystem::path(catalog_dir));
        const CatalogEntry& e = cat.find(entries.front());
        PipelineOptions o = popts;
        rows = run_entry(cat, e, o);
      }
      std::cout << (json ? emit_json(rows) : emit_text(rows));
    } else if (*report) {
      const Catalog cat =
          load_catalog(catalog_dir.empty() ? default_catalog_directory() : std::filesystem::path(catalog_dir));
      bool mismatch = false;
      for (const auto& e : cat.entries) {
        if (!entries.empty() && std::find(entries.begin(), entries.end(), e.name) == entries.end()) {
          continue;
        }
        if (e.extended && !extended &&
            std::find(entries.begin(), entries.end(), e.name) == entries.end()) {
          continue;
        }
        std::vector<ReportRow> rows;
        std::vector<CheckResult> results;
        try {
          rows = run_entry(cat, e, popts);
          results = check_entry(e, rows);
        } catch (const BudgetExceeded& err) {
          for (const auto& x : e.expected) {
            results.push_back({e.name, x.tag, "index " + std::to_string(x.index),
                               Verdict::not_computable, err.what()});
          }
        }
        if (!check) {
          std::cout << (json ? emit_json(rows) : emit_text(rows));
          continue;
        }
        for (const auto& r : results) {
          if (r.verdict == Verdict::mismatch) mismatch = true;
          print_check(r);
        }
      }
      if (check && entries.empty()) {
        for (const auto& r : check_not_computable(cat)) {
          print_check(r);
        }
      }
      if (mismatch) return kExitMismatch;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "gzoo: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "gzoo: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "gzoo: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
