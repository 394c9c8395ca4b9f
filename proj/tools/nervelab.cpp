// nervelab: command-line front end for the nervelab library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nervelab/complex.hpp"
#include "nervelab/constructions.hpp"
#include "nervelab/corpus.hpp"
#include "nervelab/covers.hpp"
#include "nervelab/deleted_product.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/io.hpp"
#include "nervelab/neighborhoods.hpp"
#include "nervelab/presentation.hpp"
#include "nervelab/subdivision.hpp"
#include "nervelab/verify.hpp"

using namespace nervelab;

namespace {

struct Globals {
  std::string format = "json";
  std::size_t max_facets = kDefaultMaxFacets;
};

// Plain "key: value" rendering for reports without a dedicated text form.
void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  if (!j.is_object()) {
    out << indent << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

std::string complex_text(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "name: " << k.name() << "\nf-vector:";
  for (std::size_t f : k.f_vector()) out << ' ' << f;
  out << "\nfacets:\n";
  for (const Simplex& s : k.facets()) out << "  " << face_label(s) << '\n';
  return out.str();
}

void emit(const Globals& g, const Json& j, const std::string& text = {}) {
  if (g.format == "text") {
    if (!text.empty())
      std::cout << text;
    else
      render_text(j, std::cout);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void emit_complex(const Globals& g, const SimplicialComplex& k) {
  emit(g, complex_to_json(k), complex_text(k));
}

Json fvec_json(const SimplicialComplex& k) { return k.f_vector(); }

std::vector<Label> split_labels(const std::string& s) {
  std::vector<Label> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const Label& l : out)
    if (l.empty()) throw Error("empty label in list '" + s + "'");
  return out;
}

std::size_t env_max_facets() {
  const char* env = std::getenv("NERVELAB_MAX_FACETS");
  if (!env) return kDefaultMaxFacets;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error(std::string("NERVELAB_MAX_FACETS must be a positive integer, got '") + env + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nervelab: simplicial complexes, covers, nerves and derived neighborhoods"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::size_t cli_max_facets = 0;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--max-facets", cli_max_facets,
                 "Facet cap for subdivisions (default 1000000, or NERVELAB_MAX_FACETS)")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;
  std::map<CLI::App*, std::function<void()>> run;

  // sd
  auto* sd_cmd = app.add_subcommand("sd", "Iterated barycentric subdivision");
  std::string sd_in, sd_out;
  int sd_times = 1;
  sd_cmd->add_option("complex", sd_in, "Complex JSON")->required();
  sd_cmd->add_option("--times", sd_times, "Number of subdivisions")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sd_cmd->add_option("--out", sd_out, "Write the result to a file");
  run[sd_cmd] = ([&] {
    const SimplicialComplex k = read_complex_file(sd_in);
    SimplicialComplex s = sd_n(k, sd_times, g.max_facets);
    if (!k.name().empty()) s = s.renamed("sd" + std::to_string(sd_times) + "-" + k.name());
    if (!sd_out.empty()) {
      std::ofstream out(sd_out);
      if (!out) throw Error("cannot write " + sd_out);
      out << complex_to_json(s).dump(2) << '\n';
    } else {
      emit_complex(g, s);
    }
  });

  // homology
  auto* hom_cmd = app.add_subcommand("homology", "Simplicial homology");
  std::string hom_in;
  bool hom_reduced = false;
  std::uint32_t hom_mod = 0;
  hom_cmd->add_option("complex", hom_in, "Complex JSON")->required();
  hom_cmd->add_flag("--reduced", hom_reduced, "Reduced homology");
  hom_cmd->add_option("--mod", hom_mod, "Prime coefficient field Z/p");
  run[hom_cmd] = ([&] {
    if (hom_mod != 0 && !is_prime(hom_mod)) throw Error("--mod must be a prime");
    const HomologyGroups h = homology(read_complex_file(hom_in), hom_reduced, hom_mod);
    emit(g, homology_to_json(h), h.to_string() + "\n");
  });

  // pi1
  auto* pi1_cmd = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  std::string pi1_in;
  std::size_t pi1_budget = kDefaultTietzeBudget;
  pi1_cmd->add_option("complex", pi1_in, "Complex JSON")->required();
  pi1_cmd->add_option("--budget", pi1_budget, "Tietze move budget")->capture_default_str();
  run[pi1_cmd] = ([&] {
    const GroupPresentation p = edge_path_presentation(read_complex_file(pi1_in));
    const TietzeResult t = tietze_simplify(p, pi1_budget);
    Json j;
    j["presentation"] = presentation_to_json(p);
    j["abelianization"] = group_to_json(abelianization(p));
    j["simplified"] = presentation_to_json(t.presentation);
    j["status"] = to_string(t.status);
    j["moves"] = t.moves;
    emit(g, j,
         "presentation: " + p.to_string() + "\nsimplified: " + t.presentation.to_string() +
             "\nstatus: " + to_string(t.status) + " after " + std::to_string(t.moves) +
             " moves\n");
  });

  // nerve
  auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a cover");
  std::string nerve_in;
  bool nerve_drop = false;
  nerve_cmd->add_option("cover", nerve_in, "Cover JSON")->required();
  nerve_cmd->add_flag("--drop-empty", nerve_drop, "Ignore empty members");
  run[nerve_cmd] = ([&] {
    const SubcomplexCover c = read_cover_file(nerve_in, nerve_drop);
    const SimplicialComplex n = nerve_of_subcomplexes(c).renamed("nerve");
    const CoverClassification cls = classify_cover(c);
    Json j;
    j["nerve"] = complex_to_json(n);
    j["classification"] = to_string(cls.label);
    Json items = Json::array();
    for (const auto& r : cls.intersections) {
      Json item;
      item["indices"] = r.indices;
      item["faces"] = r.faces;
      item["cone_apex"] = r.cone_apex ? Json(*r.cone_apex) : Json(nullptr);
      item["greedy_collapsible"] = r.greedy_collapsible;
      item["acyclic"] = r.acyclic;
      items.push_back(std::move(item));
    }
    j["intersections"] = std::move(items);
    emit(g, j, complex_text(n) + "classification: " + to_string(cls.label) + "\n");
  });

  // blowup
  auto* blow_cmd = app.add_subcommand("blowup", "Blowup complex of a cover and its homology");
  std::string blow_in;
  blow_cmd->add_option("cover", blow_in, "Cover JSON")->required();
  run[blow_cmd] = ([&] {
    const ProductCellComplex b = blowup_complex(read_cover_file(blow_in));
    const ChainComplex cc = b.chain_complex();
    const HomologyGroups h = homology(cc);
    Json j;
    j["cells"] = b.cell_counts();
    j["boundary_squares_to_zero"] = cc.boundary_squares_to_zero();
    j["homology"] = homology_to_json(h);
    emit(g, j);
  });

  // derived-nbhd and complement
  auto* dn_cmd = app.add_subcommand("derived-nbhd", "Derived neighborhood N(L) in sd sd M");
  std::string dn_m, dn_l;
  dn_cmd->add_option("M", dn_m, "Ambient complex JSON")->required();
  dn_cmd->add_option("L", dn_l, "Subcomplex JSON")->required();
  run[dn_cmd] = ([&] {
    const SimplicialComplex n =
        derived_neighborhood(read_complex_file(dn_l), read_complex_file(dn_m), g.max_facets)
            .faces.renamed("derived-nbhd");
    emit_complex(g, n);
  });

  auto* comp_cmd = app.add_subcommand("complement", "Complement of N(L) in sd sd M");
  std::string comp_m, comp_l;
  comp_cmd->add_option("M", comp_m, "Ambient complex JSON")->required();
  comp_cmd->add_option("L", comp_l, "Subcomplex JSON")->required();
  run[comp_cmd] = ([&] {
    const SimplicialComplex c =
        simplicial_complement(read_complex_file(comp_l), read_complex_file(comp_m), g.max_facets)
            .renamed("complement");
    Json j = complex_to_json(c);
    j["components"] = connected_components(c).size();
    emit(g, j, complex_text(c) + "components: " + std::to_string(connected_components(c).size()) +
                   "\n");
  });

  // collapse
  auto* col_cmd = app.add_subcommand("collapse", "Greedy elementary collapse");
  std::string col_in;
  col_cmd->add_option("complex", col_in, "Complex JSON")->required();
  run[col_cmd] = ([&] {
    const SimplicialComplex k = read_complex_file(col_in);
    const CollapseResult r = greedy_collapse(k);
    const auto apex = is_cone(k);
    Json j;
    j["status"] = r.status == CollapseStatus::collapsed_to_point ? "collapsed-to-point" : "stuck";
    j["pairs_removed"] = r.pairs_removed;
    j["definitive"] = r.definitive;
    j["cone_apex"] = apex ? Json(*apex) : Json(nullptr);
    j["remaining"] = complex_to_json(r.remaining);
    emit(g, j);
  });

  // collar, build-c, cap
  auto* collar_cmd = app.add_subcommand("collar", "The collar complex of a given dimension");
  int collar_dim = 2;
  collar_cmd->add_option("--dim", collar_dim, "Dimension d >= 1")->required();
  run[collar_cmd] = ([&] { emit_complex(g, collar(collar_dim)); });

  auto* bc_cmd = app.add_subcommand("build-c", "Remove a facet and glue in a collar");
  std::string bc_in, bc_facet;
  bc_cmd->add_option("sigma", bc_in, "Complex JSON")->required();
  bc_cmd->add_option("--facet", bc_facet, "Facet to remove, comma separated")->required();
  run[bc_cmd] = ([&] {
    const CollaredComplex c = build_c(read_complex_file(bc_in), split_labels(bc_facet));
    Json j = complex_to_json(c.c);
    j["collar_vertices"] = c.collar_vertices;
    emit(g, j, complex_text(c.c));
  });

  auto* cap_cmd = app.add_subcommand("cap", "Add the far collar facet back");
  std::string cap_in, cap_vertices;
  cap_cmd->add_option("complex", cap_in, "Collared complex JSON")->required();
  cap_cmd->add_option("--collar", cap_vertices,
                      "Collar vertices, comma separated (default: every v#j label)");
  run[cap_cmd] = ([&] {
    const Json in = read_json_file(cap_in);
    const SimplicialComplex c = complex_from_json(in);
    std::vector<Label> verts;
    if (!cap_vertices.empty()) {
      verts = split_labels(cap_vertices);
    } else if (in.contains("collar_vertices")) {
      for (const auto& v : in["collar_vertices"]) verts.push_back(v.get<std::string>());
    } else {
      for (const Label& v : c.vertices())
        if (v.rfind("v#", 0) == 0) verts.push_back(v);
    }
    if (verts.empty()) throw Error("cap: no collar vertices found");
    SimplicialComplex capped = cap(c, verts);
    if (!c.name().empty()) capped = capped.renamed("cap-" + c.name());
    emit_complex(g, capped);
  });

  // deleted-product, fineness, metastable
  auto* dp_cmd = app.add_subcommand("deleted-product", "Simplicial deleted product");
  std::string dp_in;
  bool dp_hom = false;
  dp_cmd->add_option("complex", dp_in, "Complex JSON")->required();
  dp_cmd->add_flag("--homology", dp_hom, "Also compute homology");
  run[dp_cmd] = ([&] {
    const DeletedProductComplex d = deleted_product(read_complex_file(dp_in));
    Json j;
    j["cells"] = d.cells.cell_counts();
    j["involution_free"] = d.involution_is_free();
    if (dp_hom) j["homology"] = homology_to_json(homology(d.cells.chain_complex()));
    emit(g, j);
  });

  auto* fine_cmd = app.add_subcommand("fineness", "Fineness of sd K over K");
  std::string fine_in;
  fine_cmd->add_option("complex", fine_in, "Complex JSON")->required();
  run[fine_cmd] = ([&] {
    const FinenessReport r = fineness_check_sd(read_complex_file(fine_in), g.max_facets);
    Json j;
    j["passed"] = r.passed;
    j["pairs_checked"] = r.pairs_checked;
    if (r.counterexample) {
      j["counterexample"] = {{"alpha", r.counterexample->alpha},
                             {"beta", r.counterexample->beta},
                             {"gamma", r.counterexample->gamma},
                             {"delta", r.counterexample->delta}};
    }
    emit(g, j);
    exit_code = r.passed ? 0 : 1;
  });

  auto* meta_cmd = app.add_subcommand("metastable", "Is 3k <= 2d - 3");
  int meta_k = 0, meta_d = 1;
  meta_cmd->add_option("k", meta_k, "Complex dimension")->required();
  meta_cmd->add_option("d", meta_d, "Ambient dimension")->required();
  run[meta_cmd] = ([&] {
    const bool in = in_metastable_range(meta_k, meta_d);
    Json j;
    j["k"] = meta_k;
    j["d"] = meta_d;
    j["metastable"] = in;
    emit(g, j, std::string(in ? "true" : "false") + "\n");
  });

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string ver_suite, ver_corpus = "full";
  std::vector<std::string> ver_inputs;
  std::uint64_t ver_seed = SuiteConfig{}.seed;
  std::string suite_help = "Suite: all";
  for (const auto& s : suite_names()) suite_help += ", " + s;
  ver_cmd->add_option("suite", ver_suite, suite_help)->required();
  ver_cmd->add_option("inputs", ver_inputs, "Input files for single-input verification");
  ver_cmd->add_option("--corpus", ver_corpus, "Corpus selection")
      ->check(CLI::IsMember({"full", "small"}))
      ->capture_default_str();
  ver_cmd->add_option("--seed", ver_seed, "Seed for random instances")->capture_default_str();
  run[ver_cmd] = ([&] {
    VerificationReport r;
    if (ver_inputs.empty()) {
      SuiteConfig config;
      config.small = ver_corpus == "small";
      config.seed = ver_seed;
      config.max_facets = g.max_facets;
      r = run_suite(ver_suite, config);
    } else if (ver_suite == "star-cover" && ver_inputs.size() == 1) {
      r = verify_star_cover(read_complex_file(ver_inputs[0]), g.max_facets);
    } else if (ver_suite == "nerve-theorem" && ver_inputs.size() == 1) {
      r = verify_cover_nerve_theorem(read_cover_file(ver_inputs[0]));
    } else if (ver_suite == "representation" && ver_inputs.size() == 2) {
      r = verify_representation(read_complex_file(ver_inputs[0]), read_complex_file(ver_inputs[1]),
                                g.max_facets);
    } else {
      throw UnknownSuiteError("suite '" + ver_suite + "' does not take " +
                              std::to_string(ver_inputs.size()) + " input file(s)");
    }
    emit(g, r.to_json(), r.to_text());
    exit_code = r.exit_code();
  });

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "List or print the bundled complexes");
  std::string corpus_name;
  corpus_cmd->add_option("name", corpus_name, "Complex to print");
  run[corpus_cmd] = ([&] {
    if (!corpus_name.empty()) {
      auto k = corpus_lookup(corpus_name);
      if (!k) throw Error("no corpus complex named '" + corpus_name + "'");
      emit_complex(g, *k);
      return;
    }
    Json j = Json::array();
    std::ostringstream text;
    for (const SimplicialComplex& k : corpus()) {
      j.push_back({{"name", k.name()}, {"f_vector", fvec_json(k)}});
      text << k.name() << " (";
      const auto f = k.f_vector();
      for (std::size_t i = 0; i < f.size(); ++i) text << (i ? "," : "") << f[i];
      text << ")\n";
    }
    emit(g, j, text.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    g.max_facets = cli_max_facets ? cli_max_facets : env_max_facets();
    for (CLI::App* sub : app.get_subcommands()) run.at(sub)();
  } catch (const UnknownSuiteError& e) {
    std::cerr << "nervelab: " << e.what() << "\n\n" << ver_cmd->help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nervelab: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
