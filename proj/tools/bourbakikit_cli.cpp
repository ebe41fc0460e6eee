#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bourbakikit/json_io.hpp"

namespace {

using bbk::json;

struct Cfg {
  std::string command;
  int n = 0;
  int i = 0;
  int j = 0;
  int rank = 2;  // check-presentation
  long long raw_k = -1, raw_r = -1, raw_e1 = 0;
  bool raw_e1_set = false;
  std::uint64_t seed = 0;
  int tmax = 3;
  int box = -1;  // default n * tmax
  std::uint64_t budget = 2000000;
  std::string format = "text";
  std::string out;
  std::string matrix_file;
  std::string gens_file;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

void emit(const Cfg& cfg, const json& payload, const std::string& text) {
  std::string body = cfg.format == "json" ? bbk::dump_canonical(payload) + "\n" : text;
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out);
    f << body;
  }
}

std::string matrix_text(const bbk::PolyMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [ ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << bbk::to_string(m.at(i, j));
    }
    os << " ]\n";
  }
  if (m.rows() == 0) os << "  (no rows)\n";
  return os.str();
}

std::string certificate_text(const bbk::BourbakiCertificate& c) {
  std::ostringstream os;
  os << "verdict: " << (c.verdict ? "true" : "false") << " (" << c.note << ")\n"
     << "minor size: " << c.minor_size << "\n"
     << "gcd witness: " << bbk::to_string(c.gcd_witness) << "\n";
  return os.str();
}

std::string ideal_text(const bbk::IdealGens& g) {
  std::ostringstream os;
  os << g.gens.size() << " generator" << (g.gens.size() == 1 ? "" : "s")
     << ", degree " << g.generated_degree << ", twist " << g.twist << "\n";
  for (const auto& f : g.gens) os << "  " << bbk::to_string(f) << "\n";
  return os.str();
}

std::string bundle_text(const std::string& name, const bbk::CatalogBundle& b) {
  std::ostringstream os;
  os << "catalog " << name << "  n=" << b.n << " i=" << b.i << "\n"
     << certificate_text(b.certificate) << "divisor: " << bbk::to_string(b.divisor)
     << "\nideal: " << ideal_text(b.ideal);
  if (b.has_expected)
    os << "matches expected generators: " << (b.matches_expected ? "yes" : "NO") << "\n";
  if (b.has_witness) {
    os << "witness minor: " << bbk::to_string(b.witness_value)
       << (b.witness_matches ? " (as expected)" : " (UNEXPECTED, wanted " +
                                                      bbk::to_string(b.witness_expected) + ")")
       << "\n"
       << "witness avoids x" << b.n << ": "
       << (b.witness_avoids_last_variable ? "yes" : "NO") << "\n";
  }
  return os.str();
}

int bundle_exit(const bbk::CatalogBundle& b) {
  bool ok = b.certificate.verdict;
  if (b.has_expected) ok = ok && b.matches_expected;
  if (b.has_witness) ok = ok && b.witness_matches && b.witness_avoids_last_variable;
  return ok ? 0 : 1;
}

std::string lattice_text(const bbk::LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ",";
    os << v[k];
  }
  os << ")";
  return os.str();
}

int dispatch(const Cfg& cfg) {
  if (cfg.command == "koszul-diff") {
    bbk::KoszulMap d = bbk::differential(cfg.n, cfg.i);
    std::ostringstream os;
    os << "koszul differential n=" << d.n << " k=" << d.k << " (" << d.matrix.rows() << " x "
       << d.matrix.cols() << ")\n"
       << matrix_text(d.matrix);
    emit(cfg, bbk::to_json(d), os.str());
    return 0;
  }

  if (cfg.command == "catalog-ztop") {
    bbk::CatalogBundle b = bbk::z_top(cfg.n, cfg.i, cfg.j);
    emit(cfg, bbk::to_json(b), bundle_text("ztop", b));
    return bundle_exit(b);
  }
  if (cfg.command == "catalog-zn2") {
    bbk::CatalogBundle b = bbk::z_nminus2(cfg.n);
    emit(cfg, bbk::to_json(b), bundle_text("zn2", b));
    return bundle_exit(b);
  }
  if (cfg.command == "catalog-z2") {
    bbk::CatalogBundle b = bbk::z2(cfg.n);
    emit(cfg, bbk::to_json(b), bundle_text("z2", b));
    return bundle_exit(b);
  }
  if (cfg.command == "catalog-n6z3") {
    bbk::CatalogBundle b = bbk::n6_z3_explicit();
    emit(cfg, bbk::to_json(b), bundle_text("n6z3", b));
    bbk::ExponentVector e(6, 0);
    e[0] = 4;
    const bool divisor_ok = b.divisor == bbk::Polynomial::monomial(6, e, 1);
    return bundle_exit(b) == 0 && divisor_ok ? 0 : 1;
  }
  if (cfg.command == "catalog-n6z3-bad") {
    bbk::BourbakiCertificate c = bbk::n6_z3_bad_configuration();
    emit(cfg, bbk::to_json(c), certificate_text(c));
    bbk::ExponentVector e(6, 0);
    e[1] = e[3] = e[5] = 1;
    bbk::Polynomial q(6);
    const bool shares = !c.gcd_witness.is_zero() &&
                        bbk::try_exact_div(c.gcd_witness, bbk::Polynomial::monomial(6, e, 1), &q);
    return !c.verdict && shares ? 0 : 1;
  }

  if (cfg.command == "check-map") {
    bbk::PolyMatrix m = bbk::matrix_from_json(load_json_file(cfg.matrix_file));
    bbk::BourbakiCertificate c = bbk::check_bourbaki_map(m, m.cols());
    emit(cfg, bbk::to_json(c), certificate_text(c));
    return c.verdict ? 0 : 1;
  }
  if (cfg.command == "check-presentation") {
    bbk::PolyMatrix m = bbk::matrix_from_json(load_json_file(cfg.matrix_file));
    bbk::BourbakiCertificate c = bbk::check_presentation_criterion(m, m.rows(), cfg.rank);
    emit(cfg, bbk::to_json(c), certificate_text(c));
    return c.verdict ? 0 : 1;
  }
  if (cfg.command == "extract-ideal") {
    bbk::PolyMatrix m{0, 0, 0};
    if (!cfg.matrix_file.empty()) {
      m = bbk::matrix_from_json(load_json_file(cfg.matrix_file));
    } else if (!cfg.gens_file.empty()) {
      m = bbk::taylor_presentation(bbk::ideal_from_json(load_json_file(cfg.gens_file)));
    } else {
      throw std::invalid_argument("extract-ideal needs --matrix or --gens");
    }
    bbk::ExtractionResult r = bbk::extract_bourbaki_ideal(m);
    std::ostringstream os;
    os << "divisor: " << bbk::to_string(r.divisor) << "\nideal: " << ideal_text(r.ideal);
    emit(cfg, bbk::to_json(r), os.str());
    return 0;
  }

  if (cfg.command == "bourbaki-number") {
    json j;
    long long m = 0;
    std::ostringstream os;
    if (cfg.n > 0) {
      m = bbk::koszul_bourbaki_number(cfg.n, cfg.i);
      j["n"] = cfg.n;
      j["i"] = cfg.i;
      os << "m(" << cfg.n << ", " << cfg.i << ") = " << m << "\n";
    } else if (cfg.raw_k >= 0 && cfg.raw_r >= 0 && cfg.raw_e1_set) {
      m = bbk::bourbaki_number(cfg.raw_k, cfg.raw_r, cfg.raw_e1);
      j["k"] = cfg.raw_k;
      j["r"] = cfg.raw_r;
      j["e1"] = cfg.raw_e1;
      os << "m = " << m << "\n";
    } else {
      throw std::invalid_argument("bourbaki-number needs --n/--i or --k/--r/--e1");
    }
    j["m"] = m;
    emit(cfg, j, os.str());
    return 0;
  }

  if (cfg.command == "obstruction") {
    const bool admissible = bbk::multigraded_obstruction(cfg.n, cfg.i);
    json j;
    j["n"] = cfg.n;
    j["i"] = cfg.i;
    j["admissible"] = admissible;
    std::ostringstream os;
    os << "n=" << cfg.n << " i=" << cfg.i << ": "
       << (admissible ? "admissible" : "excluded") << "\n";
    emit(cfg, j, os.str());
    return 0;
  }

  if (cfg.command == "search-generic") {
    bbk::KoszulMap d = bbk::differential(cfg.n, cfg.i);
    const int alpha = d.matrix.cols();
    const int r = static_cast<int>(bbk::cycle_rank(cfg.n, cfg.i));
    bbk::GenericSearchResult res =
        bbk::generic_bourbaki_search(d.matrix, alpha, r, cfg.seed);
    std::ostringstream os;
    os << "generic search n=" << cfg.n << " i=" << cfg.i << " seed=" << cfg.seed << ": "
       << (res.found ? "split found" : "no split") << " after " << res.attempts_used
       << " attempt" << (res.attempts_used == 1 ? "" : "s") << "\n";
    for (const auto& line : res.log) os << "  " << line << "\n";
    emit(cfg, bbk::to_json(res), os.str());
    return res.found ? 0 : 1;
  }

  if (cfg.command == "search-multigraded") {
    bbk::MultigradedSearchReport rep =
        bbk::multigraded_exhaustive_search(cfg.n, cfg.i, cfg.budget);
    std::ostringstream os;
    os << "multigraded search n=" << rep.n << " i=" << rep.i << ": " << rep.passing
       << " passing / " << rep.total << " subsets (" << rep.evaluated << " evaluated, "
       << rep.pruned << " pruned, " << rep.unexplored << " unexplored)\n"
       << (rep.complete ? "complete\n" : "stopped at budget\n");
    emit(cfg, bbk::to_json(rep), os.str());
    return rep.complete ? 0 : 1;
  }

  const int box = cfg.box >= 0 ? cfg.box : cfg.n * cfg.tmax;
  if (cfg.command == "rees-normality") {
    bbk::NormalityReport rep = bbk::normality_check(cfg.n, cfg.tmax, box);
    std::ostringstream os;
    os << "normality n=" << rep.n << " t_max=" << rep.t_max << " box=" << rep.box << ": "
       << rep.decomposable << "/" << rep.cone_points << " cone points decomposable, "
       << rep.counterexamples.size() << " counterexamples\n";
    for (const auto& v : rep.counterexamples) os << "  " << lattice_text(v) << "\n";
    emit(cfg, bbk::to_json(rep), os.str());
    return rep.passed ? 0 : 1;
  }
  if (cfg.command == "rees-canonical") {
    bbk::CanonicalModuleResult res = bbk::canonical_generators(cfg.n, cfg.tmax, box);
    std::ostringstream os;
    os << "canonical module n=" << res.n << " t_max=" << res.t_max << " box=" << res.box
       << ": " << res.generators.size() << " minimal generator"
       << (res.generators.size() == 1 ? "" : "s") << "\n";
    for (const auto& v : res.generators) os << "  " << lattice_text(v) << "\n";
    os << "classification: "
       << (res.classification == bbk::CanonicalClass::gorenstein    ? "gorenstein"
           : res.classification == bbk::CanonicalClass::type_two ? "type_two"
                                                                 : "inconclusive")
       << "\n";
    emit(cfg, bbk::to_json(res), os.str());
    const bool expected =
        cfg.n % 2 == 0 ? res.classification == bbk::CanonicalClass::gorenstein
                       : res.classification == bbk::CanonicalClass::type_two;
    return expected ? 0 : 1;
  }
  if (cfg.command == "rees-reduction") {
    bbk::ReductionReport rep = bbk::interior_reduction_check(cfg.n, cfg.tmax, box);
    std::ostringstream os;
    os << "interior reduction n=" << rep.n << " t_max=" << rep.t_max << " box=" << rep.box
       << ": " << rep.interior_points << " interior points, " << rep.reduced_by_f1
       << " via F1, " << rep.reduced_by_f2 << " via F2, " << rep.violations.size()
       << " violations\n";
    for (const auto& v : rep.violations) os << "  " << lattice_text(v) << "\n";
    emit(cfg, bbk::to_json(rep), os.str());
    return rep.passed ? 0 : 1;
  }

  throw std::invalid_argument("no command selected");
}

}  // namespace

int main(int argc, char** argv) {
  Cfg cfg;
  CLI::App app{"Graded Bourbaki ideal toolkit for Koszul cycle modules"};
  app.require_subcommand(1);

  auto add_io = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write output to this file");
  };
  auto set = [&cfg](const std::string& name) {
    return [&cfg, name]() { cfg.command = name; };
  };

  CLI::App* koszul = app.add_subcommand("koszul", "Koszul complex differentials");
  CLI::App* kdiff = koszul->add_subcommand("diff", "emit the matrix of one differential");
  kdiff->add_option("--n", cfg.n, "number of variables")->required();
  kdiff->add_option("--i", cfg.i, "differential index")->required();
  add_io(kdiff);
  kdiff->callback(set("koszul-diff"));

  CLI::App* cat = app.add_subcommand("catalog", "explicit catalog constructions");
  CLI::App* ztop = cat->add_subcommand("ztop", "top cycle module, cokernel (x_i, x_j)");
  ztop->add_option("--n", cfg.n)->required();
  ztop->add_option("--i", cfg.i, "first surviving index")->required();
  ztop->add_option("--j", cfg.j, "second surviving index")->required();
  add_io(ztop);
  ztop->callback(set("catalog-ztop"));
  CLI::App* zn2 = cat->add_subcommand("zn2", "circular squarefree monomial ideal");
  zn2->add_option("--n", cfg.n)->required();
  add_io(zn2);
  zn2->callback(set("catalog-zn2"));
  CLI::App* z2c = cat->add_subcommand("z2", "degree-two cycle module");
  z2c->add_option("--n", cfg.n)->required();
  add_io(z2c);
  z2c->callback(set("catalog-z2"));
  CLI::App* n6 = cat->add_subcommand("n6z3", "explicit n=6 i=3 construction");
  add_io(n6);
  n6->callback(set("catalog-n6z3"));
  CLI::App* n6bad = cat->add_subcommand("n6z3-bad", "failing n=6 i=3 basis choice");
  add_io(n6bad);
  n6bad->callback(set("catalog-n6z3-bad"));

  CLI::App* cmap = app.add_subcommand("check-map", "unit minor gcd criterion for a map matrix");
  cmap->add_option("--matrix", cfg.matrix_file, "matrix JSON file")->required();
  add_io(cmap);
  cmap->callback(set("check-map"));

  CLI::App* cpres =
      app.add_subcommand("check-presentation", "criterion on a presentation matrix");
  cpres->add_option("--matrix", cfg.matrix_file, "matrix JSON file")->required();
  cpres->add_option("--r", cfg.rank, "rank of the presented module plus its torsion rank")
      ->capture_default_str();
  add_io(cpres);
  cpres->callback(set("check-presentation"));

  CLI::App* ext = app.add_subcommand("extract-ideal", "determinantal extraction");
  ext->add_option("--matrix", cfg.matrix_file, "presentation matrix JSON file");
  ext->add_option("--gens", cfg.gens_file, "monomial ideal JSON file (Taylor syzygies)");
  add_io(ext);
  ext->callback(set("extract-ideal"));

  CLI::App* bnum = app.add_subcommand("bourbaki-number", "twist of the extracted ideal");
  bnum->add_option("--n", cfg.n, "variables (with --i: cycle module form)");
  bnum->add_option("--i", cfg.i, "cycle index");
  bnum->add_option("--k", cfg.raw_k, "generation degree");
  bnum->add_option("--r", cfg.raw_r, "module rank");
  bnum->add_option("--e1", cfg.raw_e1, "first Hilbert coefficient")
      ->each([&cfg](const std::string&) { cfg.raw_e1_set = true; });
  add_io(bnum);
  bnum->callback(set("bourbaki-number"));

  CLI::App* obs = app.add_subcommand("obstruction", "degree bound for basis-subset splittings");
  obs->add_option("--n", cfg.n)->required();
  obs->add_option("--i", cfg.i)->required();
  add_io(obs);
  obs->callback(set("obstruction"));

  CLI::App* sg = app.add_subcommand("search-generic", "random coefficient splitting search");
  sg->add_option("--n", cfg.n)->required();
  sg->add_option("--i", cfg.i)->required();
  sg->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  add_io(sg);
  sg->callback(set("search-generic"));

  CLI::App* sm = app.add_subcommand("search-multigraded", "exhaustive basis-subset scan");
  sm->add_option("--n", cfg.n)->required();
  sm->add_option("--i", cfg.i)->required();
  sm->add_option("--budget", cfg.budget, "max subset evaluations")->capture_default_str();
  add_io(sm);
  sm->callback(set("search-multigraded"));

  CLI::App* rees = app.add_subcommand("rees", "Rees algebra lattice checks");
  for (const char* name : {"normality", "canonical", "reduction"}) {
    CLI::App* sub = rees->add_subcommand(name);
    sub->add_option("--n", cfg.n)->required();
    sub->add_option("--tmax", cfg.tmax, "t-coordinate bound")->capture_default_str();
    sub->add_option("--box", cfg.box, "coordinate bound (default n*tmax)");
    add_io(sub);
    sub->callback(set(std::string("rees-") + name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0, usage errors exit 2
  }

  try {
    return dispatch(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
