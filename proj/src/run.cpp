#include "lcs/run.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcs/forms.hpp"
#include "lcs/presentation_io.hpp"
#include "lcs/reports.hpp"
#include "lcs/sampling.hpp"

namespace lcs {

namespace {

struct CommonOpts {
  std::string pres_file;
  int kmax = 3;
  int maxdeg = 6;
  int threads = 1;
  uint64_t seed = 0;
  std::string format = "tsv";
  std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_kmax = true) {
  cmd->add_option("presentation", o.pres_file,
                  "presentation file (generators/relations blocks)")
      ->required();
  if (with_kmax) cmd->add_option("--kmax", o.kmax, "largest k reported");
  cmd->add_option("--maxdeg", o.maxdeg, "degree truncation window D");
  cmd->add_option("--threads", o.threads, "worker threads for degree waves");
  cmd->add_option("--seed", o.seed, "seed for randomized property sampling");
  cmd->add_option("--format", o.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_option("--out", o.out, "report path ('-' for stdout)");
}

void emit(const std::string& report, const CommonOpts& o, std::ostream& out) {
  if (o.out == "-" || o.out.empty()) {
    out << report;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write report to " + o.out);
  f << report;
}

Filtration make_engine(const Presentation& pres, const CommonOpts& o,
                       int kmax_override = -1) {
  EngineOptions eo;
  eo.kmax = kmax_override > 0 ? kmax_override : o.kmax;
  eo.maxdeg = o.maxdeg;
  eo.threads = o.threads;
  return Filtration(pres, eo);
}

int cmd_dims(const CommonOpts& o, const Presentation& pres,
             std::ostream& out) {
  Filtration f = make_engine(pres, o);
  DimTable t = f.dim_table();
  emit(dims_report(pres, t, parse_format(o.format)), o, out);
  return 0;
}

int cmd_fiber(const CommonOpts& o, const Presentation& pres, int k,
              std::ostream& out) {
  if (!pres.is_free())
    throw UsageError("fiber: standard fibers are computed for free presentations only");
  Filtration f = make_engine(pres, o, std::max(o.kmax, k));
  FiberReportData data;
  data.pres = pres;
  data.fiber = standard_fiber(f, k);
  data.character = character_of(data.fiber, pres.ngens());
  data.schur = decompose(data.character);
  data.kerchev_bound = partition_degree_bound(k, pres.ngens());
  data.kerchev_ok = true;
  for (const auto& [lam, m] : data.schur.mult) {
    int sz = 0;
    for (int part : lam) sz += part;
    if (m > 0 && sz > data.kerchev_bound) data.kerchev_ok = false;
  }
  data.max_active_weight_shift = max_active_weight_shift(f, k, data.fiber);
  if (pres.ngens() == 2 && k == 3 && o.maxdeg >= 4) {
    data.has_witness = true;
    data.witness = n3_nonsplit_witness(f);
  }
  emit(fiber_report(data, parse_format(o.format)), o, out);
  return 0;
}

int cmd_verify(const CommonOpts& o, const Presentation& pres, int samples,
               std::ostream& out, std::ostream& err) {
  Filtration f = make_engine(pres, o, std::max(o.kmax, 3));
  ContainmentReport rep = verify_containments(f, o.maxdeg);

  // Randomized star-product properties, sampled with the seed.
  std::span<const GeneratorSpec> gens(pres.generators);
  const WordTables& wt = f.words();
  Rng rng(o.seed);
  int D = f.maxdeg();
  std::vector<VerifyPropertyRow> props;

  {
    VerifyPropertyRow row{"star associativity defect == [b,[a,c]]/4, in M3", 0,
                          true};
    for (int s = 0; s < samples; ++s) {
      int da = static_cast<int>(rng.range(1, std::max(1, D / 3)));
      int db = static_cast<int>(rng.range(1, std::max(1, (D - da) / 2)));
      int dc = static_cast<int>(rng.range(1, std::max(1, D - da - db)));
      if (da + db + dc > D) continue;
      NCPoly a = random_homog_poly(rng, gens, da);
      NCPoly b = random_homog_poly(rng, gens, db);
      NCPoly c = random_homog_poly(rng, gens, dc);
      NCPoly defect = star_mul(star_mul(a, b), c) - star_mul(a, star_mul(b, c));
      NCPoly expected = commutator(b, commutator(a, c)) * Rat(1, 4);
      ++row.checked;
      if (!(defect == expected)) row.passed = false;
      int d = da + db + dc;
      SparseVec v = f.reduce_ideal(wt.from_poly(defect, d), d);
      if (!member(v, f.mseries(3, d))) row.passed = false;
    }
    props.push_back(std::move(row));
  }

  for (int k = 2; k <= 3; ++k) {
    VerifyPropertyRow row{"star module defect on N" + std::to_string(k) +
                              " == [b,[a,n]]/4, in M" + std::to_string(k + 1),
                          0, true};
    for (int s = 0; s < samples; ++s) {
      int da = static_cast<int>(rng.range(1, 2));
      int db = static_cast<int>(rng.range(1, 2));
      int dn = static_cast<int>(rng.range(k, std::max(k, D - da - db)));
      if (da + db + dn > D) continue;
      const EchelonBasis& mk = f.mseries(k, dn);
      if (mk.dim() == 0) continue;
      NCPoly a = random_homog_poly(rng, gens, da);
      NCPoly b = random_homog_poly(rng, gens, db);
      NCPoly n = wt.to_poly(random_combination(rng, mk), dn);
      if (n.is_zero()) continue;
      NCPoly defect = star_mul(star_mul(a, b), n) - star_mul(a, star_mul(b, n));
      NCPoly expected = commutator(b, commutator(a, n)) * Rat(1, 4);
      ++row.checked;
      if (!(defect == expected)) row.passed = false;
      int d = da + db + dn;
      SparseVec v = f.reduce_ideal(wt.from_poly(defect, d), d);
      if (!member(v, f.mseries(k + 1, d))) row.passed = false;
    }
    props.push_back(std::move(row));
  }

  {
    VerifyPropertyRow row{"star representative independence modulo M3", 0,
                          true};
    for (int s = 0; s < samples; ++s) {
      int da = static_cast<int>(rng.range(3, std::max(3, D - 1)));
      int db = static_cast<int>(rng.range(1, std::max(1, D - da)));
      if (da + db > D) continue;
      const EchelonBasis& m3 = f.mseries(3, da);
      if (m3.dim() == 0) continue;
      NCPoly a = random_homog_poly(rng, gens, da);
      NCPoly b = random_homog_poly(rng, gens, db);
      NCPoly m = wt.to_poly(random_combination(rng, m3), da);
      NCPoly diff = star_mul(a + m, b) - star_mul(a, b);
      ++row.checked;
      int d = da + db;
      SparseVec v = f.reduce_ideal(wt.from_poly(diff, d), d);
      if (!member(v, f.mseries(3, d))) row.passed = false;
    }
    props.push_back(std::move(row));
  }

  emit(verify_report(pres, rep, props, o.seed, parse_format(o.format)), o, out);
  bool ok = rep.all_passed();
  for (const auto& p : props) ok = ok && p.passed;
  if (!ok) {
    err << "verify: FAIL — a containment that is a theorem did not hold; "
           "this is an engine bug, not a property of the input\n";
    return 2;
  }
  return 0;
}

int cmd_hilbert(const CommonOpts& o, const Presentation& pres, int k,
                std::ostream& out) {
  Filtration f = make_engine(pres, o, std::max(o.kmax, k));
  f.compute();
  std::vector<long long> dims(static_cast<std::size_t>(o.maxdeg) + 1, 0);
  for (int d = 0; d <= o.maxdeg; ++d) dims[static_cast<std::size_t>(d)] = f.dim_n(k, d);
  SeriesFit fit = fit_series(dims, pres.generators, o.maxdeg);
  emit(hilbert_report(pres, k, dims, fit, parse_format(o.format)), o, out);
  return 0;
}

int cmd_fscheck(const CommonOpts& o, const Presentation& pres,
                std::ostream& out, std::ostream& err) {
  if (!pres.is_free())
    throw UsageError("fs-check applies to free presentations only");
  for (const auto& g : pres.generators)
    if (g.degree != 1)
      throw UsageError("fs-check requires all generators in degree 1");
  Filtration f = make_engine(pres, o, std::max(o.kmax, 2));
  f.compute();
  const WordTables& wt = f.words();
  int n = pres.ngens();
  std::vector<FsCheckRow> rows;
  bool all_ok = true;
  for (int d = 1; d <= o.maxdeg; ++d) {
    FsCheckRow r;
    r.d = d;
    r.dim_words_side = f.dim_algebra(d) - f.dim_m(3, d);
    r.dim_forms_side = dim_even_forms(n, d);
    FormBasis fbasis = FormBasis::even(n, d);
    const WordTable& t = wt.at(d);
    std::vector<SparseVec> img;
    img.reserve(t.size());
    for (const Word& w : t.words)
      img.push_back(fbasis.coords(fs_map(NCPoly(w), pres.generators)));
    EchelonBasis kernel = row_dependencies(img, fbasis.size());
    r.rank_fs = static_cast<int>(t.size()) - kernel.dim();
    r.kernel_equals_m3 = (kernel == f.mseries(3, d));
    r.pass = r.kernel_equals_m3 && r.dim_words_side == r.dim_forms_side &&
             r.rank_fs == r.dim_forms_side;
    all_ok = all_ok && r.pass;
    rows.push_back(std::move(r));
  }
  emit(fscheck_report(pres, rows, parse_format(o.format)), o, out);
  if (!all_ok) {
    err << "fs-check: FAIL — word-side and forms-side disagree; engine bug\n";
    return 2;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"lower central series invariants of finitely presented algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  int fiber_k = 3;
  int hilbert_k = 2;
  int samples = 20;

  CLI::App* dims = app.add_subcommand(
      "dims", "dimension table for L_k, M_k, B_k, N_k");
  add_common(dims, o);

  CLI::App* fiber = app.add_subcommand(
      "fiber", "standard fiber of N_k with GL_n character decomposition");
  add_common(fiber, o);
  fiber->add_option("--k", fiber_k, "which N_k (default 3)");

  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force containment lemmas and star-product properties");
  add_common(verify, o);
  verify->add_option("--samples", samples, "sample count per property");

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "Hilbert series fit for N_k");
  add_common(hilbert, o);
  hilbert->add_option("--k", hilbert_k, "which N_k (default 2)");

  CLI::App* fscheck = app.add_subcommand(
      "fs-check", "words-vs-forms two-path comparison of A/M_3");
  add_common(fscheck, o, /*with_kmax=*/false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    ParseResult pr = parse_presentation_file(o.pres_file);
    for (const auto& w : pr.warnings) err << "warning: " << w << "\n";
    if (dims->parsed()) return cmd_dims(o, pr.pres, out);
    if (fiber->parsed()) return cmd_fiber(o, pr.pres, fiber_k, out);
    if (verify->parsed()) return cmd_verify(o, pr.pres, samples, out, err);
    if (hilbert->parsed()) return cmd_hilbert(o, pr.pres, hilbert_k, out);
    if (fscheck->parsed()) return cmd_fscheck(o, pr.pres, out, err);
    err << "error: no subcommand\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const EngineError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lcs
