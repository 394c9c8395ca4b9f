#include "nervelab/verify.hpp"

#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "nervelab/constructions.hpp"
#include "nervelab/corpus.hpp"
#include "nervelab/deleted_product.hpp"
#include "nervelab/homology.hpp"
#include "nervelab/neighborhoods.hpp"
#include "nervelab/presentation.hpp"
#include "nervelab/subdivision.hpp"

namespace nervelab {

namespace {

struct Outcome {
  CheckStatus status;
  std::string details;
};

Outcome pass(std::string details) { return {CheckStatus::pass, std::move(details)}; }
Outcome fail(std::string details) { return {CheckStatus::fail, std::move(details)}; }

Check run_check(std::string name, std::string anchor, const std::function<Outcome()>& body) {
  Check c{std::move(name), std::move(anchor), CheckStatus::fail, {}};
  try {
    Outcome o = body();
    c.status = o.status;
    c.details = std::move(o.details);
  } catch (const SizeCapError& e) {
    c.status = CheckStatus::skipped;
    c.details = std::string("size cap: ") + e.what();
  } catch (const std::exception& e) {
    c.status = CheckStatus::fail;
    c.details = std::string("error: ") + e.what();
  }
  return c;
}

std::string fvec(const SimplicialComplex& k) {
  std::string out = "(";
  const auto f = k.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + ")";
}

std::vector<SimplicialComplex> loop_corpus(const SuiteConfig& config) {
  return config.small ? corpus_small() : corpus();
}

std::mt19937_64 rng_for(const SuiteConfig& config, const std::string& tag) {
  std::seed_seq seq(tag.begin(), tag.end());
  std::vector<std::uint32_t> mixed(2);
  seq.generate(mixed.begin(), mixed.end());
  return std::mt19937_64(config.seed ^ (std::uint64_t{mixed[0]} << 32 | mixed[1]));
}

// Ambients for the derived-neighborhood suites.
std::vector<SimplicialComplex> nbhd_ambients() {
  return {boundary_complex(2), boundary_complex(3), boundary_complex(4), csaszar_torus()};
}

HomologyGroups sphere_groups(int d) {
  HomologyGroups h;
  h.reduced = true;
  h.groups.resize(static_cast<std::size_t>(d) + 1);
  h.groups[static_cast<std::size_t>(d)].betti = 1;
  return h;
}

Outcome star_cover_outcome(const SimplicialComplex& k, std::size_t cap) {
  const SubcomplexCover cover = star_cover(k, cap);
  const SimplicialComplex nerve = nerve_of_subcomplexes(cover);
  if (!(nerve == k))
    return fail("nerve " + fvec(nerve) + " differs from K " + fvec(k) +
                (is_isomorphic(nerve, k) ? " (isomorphic)" : " (not isomorphic)"));
  for (std::size_t s = 0; s < nerve.num_faces(); ++s) {
    const Simplex idx = nerve.simplex(s);
    const SimplicialComplex x = cover_intersection(cover, idx);
    if (!is_cone_with_apex(x, face_label(idx)))
      return fail("X" + face_label(idx) + " is not a cone on " + face_label(idx));
  }
  return pass("nerve = K " + fvec(k) + "; " + std::to_string(nerve.num_faces()) +
              " intersections are cones on their index face");
}

void suite_star_cover(const SuiteConfig& config, std::vector<Check>& out) {
  const std::string anchor = "nerve of the vertex stars of sd K is K";
  for (const SimplicialComplex& k : loop_corpus(config))
    out.push_back(run_check("star-cover/" + k.name(), anchor,
                            [&] { return star_cover_outcome(k, config.max_facets); }));
  if (config.small) return;
  out.push_back(run_check("star-cover/random", anchor, [&]() -> Outcome {
    auto rng = rng_for(config, "star-cover");
    for (int i = 0; i < config.random_complexes; ++i) {
      const SimplicialComplex k = random_complex(rng, 8, 3);
      Outcome o = star_cover_outcome(k, config.max_facets);
      if (o.status != CheckStatus::pass)
        return fail("random complex " + std::to_string(i) + " " + fvec(k) + ": " + o.details);
    }
    return pass(std::to_string(config.random_complexes) +
                " random complexes (<= 8 vertices, dim <= 3)");
  }));
}

std::vector<SimplicialComplex> nbhd_cores(const SimplicialComplex& m, std::mt19937_64& rng,
                                          int random_count) {
  std::vector<SimplicialComplex> cores;
  for (std::size_t f : m.faces_of_dim(0))
    cores.push_back(SimplicialComplex::from_faces(m.vertices(), {m.face(f)}));
  for (std::size_t f : m.faces_of_dim(1))
    cores.push_back(SimplicialComplex::from_faces(m.vertices(), {m.face(f)}));
  for (int i = 0; i < random_count; ++i) cores.push_back(random_subcomplex(rng, m));
  return cores;
}

void suite_derived_nbhd(const SuiteConfig& config, std::vector<Check>& out) {
  for (const SimplicialComplex& m : nbhd_ambients()) {
    out.push_back(run_check("derived-nbhd/" + m.name(), "N(L) = { s : mu(mu(s)) in L }",
                            [&]() -> Outcome {
      auto rng = rng_for(config, "derived-nbhd/" + m.name());
      auto amb = std::make_shared<const DerivedAmbient>(derived_ambient(m, config.max_facets));
      const auto cores = nbhd_cores(m, rng, config.random_subcomplexes);
      for (const SimplicialComplex& l : cores) {
        const SimplicialComplex formula = derived_neighborhood(l, amb).faces;
        const SimplicialComplex oracle = derived_neighborhood_oracle(l, *amb);
        if (!(formula == oracle))
          return fail("L with facets " + std::to_string(l.facets().size()) + " " + fvec(l) +
                      ": formula " + fvec(formula) + " vs oracle " + fvec(oracle));
      }
      return pass(std::to_string(cores.size()) + " cores in sd^2 M with " +
                  std::to_string(amb->sd2().facet_indices().size()) + " facets");
    }));
  }
}

void suite_nbhd_intersection(const SuiteConfig& config, std::vector<Check>& out) {
  for (const SimplicialComplex& m : nbhd_ambients()) {
    out.push_back(run_check("nbhd-intersection/" + m.name(), "N(L1 n L2) = N(L1) n N(L2)",
                            [&]() -> Outcome {
      auto rng = rng_for(config, "nbhd-intersection/" + m.name());
      auto amb = std::make_shared<const DerivedAmbient>(derived_ambient(m, config.max_facets));
      std::size_t nonempty = 0;
      for (int i = 0; i < config.intersection_pairs; ++i) {
        const SimplicialComplex l1 = random_subcomplex(rng, m);
        const SimplicialComplex l2 = random_subcomplex(rng, m);
        if (!subcomplex_intersection(l1, l2).empty()) ++nonempty;
        if (!verify_nbhd_intersection(l1, l2, amb))
          return fail("pair " + std::to_string(i) + ": " + fvec(l1) + " and " + fvec(l2));
      }
      return pass(std::to_string(config.intersection_pairs) + " pairs, " +
                  std::to_string(nonempty) + " with nonempty intersection");
    }));
  }
}

void suite_homology(const SuiteConfig& config, std::vector<Check>& out) {
  for (int d = 0; d <= 3; ++d) {
    const SimplicialComplex s = boundary_complex(d + 1);
    out.push_back(run_check("homology/reduced-" + s.name(), "reduced homology of a sphere",
                            [&]() -> Outcome {
      const HomologyGroups h = homology(s, true);
      const bool ok = same_groups(h, sphere_groups(d));
      return {ok ? CheckStatus::pass : CheckStatus::fail, h.to_string()};
    }));
  }
  out.push_back(run_check("homology/csaszar-torus", "torus homology (Z, Z^2, Z)", [] {
    const HomologyGroups h = homology(csaszar_torus());
    HomologyGroups want;
    want.groups = {{1, {}}, {2, {}}, {1, {}}};
    return Outcome{same_groups(h, want) ? CheckStatus::pass : CheckStatus::fail, h.to_string()};
  }));
  out.push_back(run_check("homology/rp2-6", "projective plane homology (Z, Z/2, 0)", [] {
    const HomologyGroups h = homology(rp2_6());
    HomologyGroups want;
    want.groups = {{1, {}}, {0, {BigInt(2)}}, {0, {}}};
    return Outcome{same_groups(h, want) ? CheckStatus::pass : CheckStatus::fail, h.to_string()};
  }));
  for (const SimplicialComplex& k : loop_corpus(config)) {
    out.push_back(run_check("homology/sd-invariance/" + k.name(),
                            "H(K) = H(sd K) = H(sd^2 K); boundary squares to zero",
                            [&]() -> Outcome {
      const SimplicialComplex sd1 = sd_n(k, 1, config.max_facets);
      const SimplicialComplex sd2 = sd_n(k, 2, config.max_facets);
      for (const SimplicialComplex* x : {&k, &sd1, &sd2})
        if (!simplicial_chain_complex(*x).boundary_squares_to_zero())
          return fail("boundary does not square to zero on " + fvec(*x));
      const HomologyGroups h0 = homology(k);
      const HomologyGroups h1 = homology(sd1);
      const HomologyGroups h2 = homology(sd2);
      if (!same_groups(h0, h1) || !same_groups(h0, h2))
        return fail("K " + h0.to_string() + ", sd K " + h1.to_string() + ", sd^2 K " +
                    h2.to_string());
      return pass(h0.to_string() + " on " + std::to_string(sd2.num_faces()) + " faces of sd^2 K");
    }));
  }
}

void suite_nerve_theorem(const SuiteConfig& config, std::vector<Check>& out) {
  for (const SimplicialComplex& k : loop_corpus(config)) {
    out.push_back(run_check("nerve-theorem/" + k.name(),
                            "acyclic cover: H(nerve) = H(union) = H(blowup)", [&]() -> Outcome {
      const SubcomplexCover cover = star_cover(k, config.max_facets);
      const NerveTheoremReport r = verify_nerve_theorem(cover);
      if (!r.precondition_met)
        return fail(std::to_string(r.non_acyclic.size()) + " intersections are not acyclic");
      if (!blowup_complex(cover).chain_complex().boundary_squares_to_zero())
        return fail("blowup boundary does not square to zero");
      const std::string groups = "nerve " + r.nerve->to_string() + ", union " +
                                 r.union_->to_string() + ", blowup " + r.blowup->to_string();
      return {r.agree ? CheckStatus::pass : CheckStatus::fail, groups};
    }));
  }
}

void suite_collar(const SuiteConfig&, std::vector<Check>& out) {
  const std::string anchor = "C = B u Gamma and its cap";
  for (int d = 1; d <= 3; ++d) {
    out.push_back(run_check("collar/gamma-" + std::to_string(d), anchor, [d]() -> Outcome {
      const SimplicialComplex g = collar(d);
      const HomologyGroups h = homology(g, true);
      if (!same_groups(h, sphere_groups(d - 1)))
        return fail("expected the homology of S^" + std::to_string(d - 1) + ", got " +
                    h.to_string());
      if (d == 2 && g.f_vector() != std::vector<std::size_t>{6, 12, 6})
        return fail("f-vector " + fvec(g) + ", expected (6,12,6)");
      return pass(fvec(g) + ", reduced " + h.to_string());
    }));
  }
  for (int n : {3, 4}) {
    const SimplicialComplex sigma = boundary_complex(n);
    out.push_back(run_check("collar/" + sigma.name(), anchor, [&sigma, n]() -> Outcome {
      Simplex facet;
      for (int i = 1; i <= n; ++i) facet.push_back(std::to_string(i));
      const CollaredComplex c = build_c(sigma, facet);
      const SimplicialComplex capped = cap(c);
      const HomologyGroups hc = homology(c.c, true);
      if (!is_acyclic(c.c)) return fail("C is not acyclic: " + hc.to_string());
      if (!same_groups(homology(c.c), homology(c.b))) return fail("H(C) differs from H(B)");
      if (!same_groups(homology(capped), homology(sigma)) || !is_homology_sphere(capped, n - 1))
        return fail("cap(C) is not a homology " + std::to_string(n - 1) + "-sphere");
      if (capped.facets().size() != c.c.facets().size() + 1)
        return fail("cap(C) has " + std::to_string(capped.facets().size()) + " facets, C has " +
                    std::to_string(c.c.facets().size()));
      return pass("C " + fvec(c.c) + " acyclic; cap(C) " + fvec(capped) + " is a homology sphere");
    }));
  }
}

void suite_two_components(const SuiteConfig& config, std::vector<Check>& out) {
  const std::string anchor = "complement of N(L) for a separating L";
  const SimplicialComplex m = boundary_complex(3);
  std::shared_ptr<const DerivedAmbient> amb;
  auto ambient = [&] {
    if (!amb) amb = std::make_shared<const DerivedAmbient>(derived_ambient(m, config.max_facets));
    return amb;
  };
  const SimplicialComplex equator = SimplicialComplex::from_facets(
      {{"1", "2"}, {"2", "3"}, {"1", "3"}}, "equator");
  const SimplicialComplex edge = SimplicialComplex::from_facets({{"1", "2"}}, "edge");

  out.push_back(run_check("two-components/equator", anchor, [&]() -> Outcome {
    const auto comps = connected_components(simplicial_complement(equator, ambient()));
    return {comps.size() == 2 ? CheckStatus::pass : CheckStatus::fail,
            std::to_string(comps.size()) + " components"};
  }));
  out.push_back(run_check("two-components/edge", anchor, [&]() -> Outcome {
    const auto comps = connected_components(simplicial_complement(edge, ambient()));
    return {comps.size() == 1 ? CheckStatus::pass : CheckStatus::fail,
            std::to_string(comps.size()) + " components"};
  }));
  out.push_back(run_check("two-components/nbhd-plus-component", anchor, [&]() -> Outcome {
    const auto a = ambient();
    const SimplicialComplex n = derived_neighborhood(equator, a).faces;
    const auto comps = connected_components(simplicial_complement(equator, a));
    if (comps.size() != 2) return fail(std::to_string(comps.size()) + " components");
    std::string details;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<Label> verts = n.vertices();
      verts.insert(verts.end(), comps[i].begin(), comps[i].end());
      const SimplicialComplex u = induced(a->sd2(), verts);
      const HomologyGroups h = homology(u);
      if (!h.at_degree(1).trivial())
        return fail("H1(N(L) u C" + std::to_string(i) + ") = " + h.to_string());
      details += (i ? "; " : "") + std::string("N(L) u C") + std::to_string(i) + " " + fvec(u) +
                 " has H1 = 0";
    }
    return pass(details);
  }));
}

void suite_deleted_product(const SuiteConfig& config, std::vector<Check>& out) {
  for (int n = 1; n <= 3; ++n) {
    const SimplicialComplex k = boundary_complex(n);
    out.push_back(run_check("deleted-product/" + k.name(), "deleted product of a sphere",
                            [&, n]() -> Outcome {
      const DeletedProductComplex dp = deleted_product(k);
      if (!dp.involution_is_free()) return fail("involution is not free");
      const ChainComplex cc = dp.cells.chain_complex();
      if (!cc.boundary_squares_to_zero()) return fail("boundary does not square to zero");
      const HomologyGroups h = homology(cc, true);
      const bool ok = same_groups(h, sphere_groups(n - 1));
      return {ok ? CheckStatus::pass : CheckStatus::fail,
              std::to_string(dp.cells.size()) + " cells, reduced " + h.to_string()};
    }));
  }
  for (const SimplicialComplex& k : loop_corpus(config)) {
    out.push_back(run_check("fineness/" + k.name(), "faces with disjoint carriers are remote",
                            [&]() -> Outcome {
      const FinenessReport r = fineness_check_sd(k, config.max_facets);
      if (r.passed) return pass(std::to_string(r.pairs_checked) + " pairs with disjoint carriers");
      const auto& c = *r.counterexample;
      return fail(face_label(c.alpha) + " and " + face_label(c.beta) + " are not remote");
    }));
  }
}

void suite_pi1(const SuiteConfig& config, std::vector<Check>& out) {
  for (const SimplicialComplex& k : loop_corpus(config)) {
    if (connected_components(k).size() != 1) continue;
    out.push_back(run_check("pi1/abelianization/" + k.name(), "abelianized edge-path group = H1",
                            [&]() -> Outcome {
      const GroupPresentation p = edge_path_presentation(k);
      const HomologyGroup ab = abelianization(p);
      const HomologyGroup h1 = homology(k).at_degree(1);
      HomologyGroups shown;
      shown.groups = {ab};
      const std::string details = std::to_string(p.generators.size()) + " generators, " +
                                  std::to_string(p.relators.size()) + " relators, abelianized " +
                                  shown.to_string().substr(1, shown.to_string().size() - 2);
      return {ab == h1 ? CheckStatus::pass : CheckStatus::fail, details};
    }));
  }
  for (int n : {3, 4}) {
    const SimplicialComplex k = boundary_complex(n);
    out.push_back(run_check("pi1/tietze/" + k.name(), "edge-path group of a sphere is trivial",
                            [&]() -> Outcome {
      const TietzeResult r = tietze_simplify(edge_path_presentation(k), config.tietze_budget);
      const std::string details =
          to_string(r.status) + " after " + std::to_string(r.moves) + " moves";
      if (r.status == TietzeStatus::trivialized) return pass(details);
      // The heuristic is incomplete, so a miss is a warning, not a failure.
      return {CheckStatus::skipped, "warning: not trivialized, " + details};
    }));
  }
}

void suite_representation(const SuiteConfig& config, std::vector<Check>& out) {
  const SimplicialComplex m = boundary_complex(3);
  for (const SimplicialComplex& k :
       {boundary_complex(2), simplex_complex(2), path_complex(3)}) {
    out.push_back(run_check("representation/" + k.name(), "K is represented by collapsible sets",
                            [&]() -> Outcome {
      const RepresentationReport r = representation_pipeline(k, m, config.max_facets);
      std::size_t collapsed = 0;
      for (const auto& i : r.intersections) collapsed += i.collapsed ? 1 : 0;
      std::string details = "nerve " + fvec(r.nerve) +
                            (r.nerve_isomorphic ? " ~ K" : " not ~ K") + ", " +
                            std::to_string(collapsed) + "/" +
                            std::to_string(r.intersections.size()) +
                            " intersections collapse in sd^3 M with " +
                            std::to_string(r.ambient_facets) + " facets";
      return {r.passed() ? CheckStatus::pass : CheckStatus::fail, details};
    }));
  }
}

using SuiteFn = void (*)(const SuiteConfig&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"star-cover", suite_star_cover},
      {"derived-nbhd", suite_derived_nbhd},
      {"nbhd-intersection", suite_nbhd_intersection},
      {"homology", suite_homology},
      {"nerve-theorem", suite_nerve_theorem},
      {"collar", suite_collar},
      {"two-components", suite_two_components},
      {"deleted-product", suite_deleted_product},
      {"pi1", suite_pi1},
      {"representation", suite_representation},
  };
  return all;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "fail";
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.status == s ? 1 : 0;
  return n;
}

Json VerificationReport::to_json() const {
  Json out;
  out["suite"] = suite;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json item;
    item["name"] = c.name;
    item["anchor"] = c.anchor;
    item["status"] = to_string(c.status);
    item["details"] = c.details;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  out["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"skipped", count(CheckStatus::skipped)}};
  return out;
}

std::string VerificationReport::to_text() const {
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const Check& c : checks) {
    std::string status = to_string(c.status);
    status.resize(8, ' ');
    std::string name = c.name;
    name.resize(width + 2, ' ');
    out << status << name << c.details << '\n';
  }
  out << "suite " << suite << ": " << count(CheckStatus::pass) << " pass, "
      << count(CheckStatus::fail) << " fail, " << count(CheckStatus::skipped) << " skipped\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  VerificationReport report;
  report.suite = name;
  if (name == "all") {
    for (const auto& [n, fn] : suites()) fn(config, report.checks);
    return report;
  }
  for (const auto& [n, fn] : suites()) {
    if (n == name) {
      fn(config, report.checks);
      return report;
    }
  }
  throw UnknownSuiteError("unknown suite '" + name + "'");
}

VerificationReport verify_star_cover(const SimplicialComplex& k, std::size_t max_facets) {
  VerificationReport report;
  report.suite = "star-cover";
  report.checks.push_back(run_check("star-cover/" + (k.name().empty() ? "input" : k.name()),
                                    "nerve of the vertex stars of sd K is K",
                                    [&] { return star_cover_outcome(k, max_facets); }));
  return report;
}

VerificationReport verify_cover_nerve_theorem(const SubcomplexCover& cover) {
  VerificationReport report;
  report.suite = "nerve-theorem";
  std::optional<NerveTheoremReport> r;
  report.checks.push_back(run_check("nerve-theorem/precondition", "every intersection is acyclic",
                                    [&]() -> Outcome {
    r = verify_nerve_theorem(cover);
    if (r->precondition_met) return pass(to_string(classify_cover(cover).label));
    std::string bad;
    for (const Simplex& s : r->non_acyclic) bad += (bad.empty() ? "" : " ") + face_label(s);
    return fail("precondition failed: not acyclic at " + bad);
  }));
  if (!r || !r->precondition_met) {
    report.checks.push_back({"nerve-theorem/agreement", "H(nerve) = H(union) = H(blowup)",
                             CheckStatus::skipped, "precondition failed"});
    return report;
  }
  report.checks.push_back(run_check("nerve-theorem/agreement", "H(nerve) = H(union) = H(blowup)",
                                    [&]() -> Outcome {
    const std::string groups = "nerve " + r->nerve->to_string() + ", union " +
                               r->union_->to_string() + ", blowup " + r->blowup->to_string();
    return {r->agree ? CheckStatus::pass : CheckStatus::fail, groups};
  }));
  return report;
}

VerificationReport verify_representation(const SimplicialComplex& k, const SimplicialComplex& m,
                                         std::size_t max_facets) {
  VerificationReport report;
  report.suite = "representation";
  std::optional<RepresentationReport> r;
  const std::string anchor = "K is represented by collapsible sets";
  report.checks.push_back(run_check("representation/pipeline", "plumbing", [&]() -> Outcome {
    r = representation_pipeline(k, m, max_facets);
    return pass("sd^3 M has " + std::to_string(r->ambient_facets) + " facets");
  }));
  if (!r) return report;
  report.checks.push_back(
      {"representation/nerve-isomorphic", anchor,
       r->nerve_isomorphic ? CheckStatus::pass : CheckStatus::fail,
       "nerve " + fvec(r->nerve) + ", K " + fvec(k)});
  report.checks.push_back({"representation/nerve-matches-stars", anchor,
                           r->nerve_matches_stars ? CheckStatus::pass : CheckStatus::fail,
                           "star nerve " + fvec(r->star_nerve)});
  for (const auto& i : r->intersections)
    report.checks.push_back({"representation/intersection" + face_label(i.indices), anchor,
                             i.collapsed ? CheckStatus::pass : CheckStatus::fail,
                             std::to_string(i.faces) + " faces" +
                                 (i.collapsed ? ", collapses to a point" : ", greedy collapse stuck")});
  return report;
}

}  // namespace nervelab
