// Acceptance suite: one pass/fail line per criterion, timed.  Everything is
// exact arithmetic; a FAIL prints the offending values.  Exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcs/chardec.hpp"
#include "lcs/forms.hpp"
#include "lcs/hilbert.hpp"
#include "lcs/presentation_io.hpp"
#include "lcs/run.hpp"
#include "lcs/star.hpp"

using namespace lcs;

namespace {

int failures = 0;
std::vector<std::string> detail;

void note(const std::string& s) { detail.push_back(s); }

void report(int number, const std::string& name, bool pass, double seconds) {
  std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL",
              number, name.c_str(), seconds);
  if (!pass) {
    ++failures;
    for (const auto& s : detail) std::printf("        %s\n", s.c_str());
  }
  detail.clear();
  std::fflush(stdout);
}

template <typename F>
void criterion(int number, const std::string& name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  report(number, name, pass, std::chrono::duration<double>(t1 - t0).count());
}

Presentation free_algebra(int n) {
  Presentation p;
  const char* names[] = {"x", "y", "z"};
  for (int i = 0; i < n; ++i) p.generators.push_back({names[i], 1});
  return p;
}

Filtration engine(const Presentation& p, int kmax, int maxdeg, int threads) {
  EngineOptions o;
  o.kmax = kmax;
  o.maxdeg = maxdeg;
  o.threads = threads;
  Filtration f(p, o);
  f.compute();
  return f;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Feigin-Shoikhet equivalence, two code paths: dims and kernels agree.
bool c1_fs_equivalence() {
  Filtration f = engine(free_algebra(2), 3, 7, 2);
  std::span<const GeneratorSpec> gens(f.presentation().generators);
  bool ok = true;
  for (int d = 2; d <= 7; ++d) {
    int words_side = f.dim_algebra(d) - f.dim_m(3, d);
    int forms_side = dim_even_forms(2, d);
    if (words_side != 2 * d || forms_side != 2 * d) {
      note("d=" + std::to_string(d) + ": dim A/M_3 = " +
           std::to_string(words_side) + ", forms = " +
           std::to_string(forms_side) + ", want " + std::to_string(2 * d));
      ok = false;
    }
    FormBasis fb = FormBasis::even(2, d);
    std::vector<SparseVec> img;
    for (const Word& w : f.words().at(d).words)
      img.push_back(fb.coords(fs_map(NCPoly(w), gens)));
    EchelonBasis kernel = row_dependencies(img, fb.size());
    if (!(kernel == f.mseries(3, d))) {
      note("d=" + std::to_string(d) + ": ker(fs) != M_3 as echelon bases");
      ok = false;
    }
  }
  return ok;
}

// 2. dim N_2(A_2)(d) = d-1.
bool c2_n2_closed_form() {
  Filtration f = engine(free_algebra(2), 2, 8, 2);
  bool ok = true;
  for (int d = 2; d <= 8; ++d) {
    if (f.dim_n(2, d) != d - 1) {
      note("dim N_2(" + std::to_string(d) + ") = " +
           std::to_string(f.dim_n(2, d)) + ", want " + std::to_string(d - 1));
      ok = false;
    }
  }
  return ok;
}

// 3. Standard fiber of N_3(A_2): dimension, Schur decomposition, witness.
bool c3_standard_fiber() {
  Filtration f = engine(free_algebra(2), 4, 6, 2);
  StandardFiber fb = standard_fiber(f, 3);
  bool ok = true;
  if (fb.total_dim != 3) {
    note("total dim = " + std::to_string(fb.total_dim) + ", want 3");
    ok = false;
  }
  SchurDecomp dec = decompose(character_of(fb, 2));
  std::map<Partition, long> want = {{{2, 1}, 1}, {{2, 2}, 1}};
  if (dec.mult != want) {
    std::string got;
    for (const auto& [lam, m] : dec.mult)
      got += partition_str(lam) + ":" + std::to_string(m) + " ";
    note("schur decomposition = " + got + ", want (2,1):1 (2,2):1");
    ok = false;
  }
  NonSplitWitness w = n3_nonsplit_witness(f);
  if (!w.action_nonzero) {
    note("x2^2 d2 action on [x1,[x1,x2]] vanished in St");
    ok = false;
  }
  if (!w.equals_twice_bracket_square) {
    note("x2^2 d2 action does not equal 2 [x1,x2]^2 in St");
    ok = false;
  }
  return ok;
}

// 4. Lemma suite by exhaustive membership: A_2 to degree 7, A_3 to degree 5.
bool c4_lemma_suite() {
  bool ok = true;
  auto run_suite = [&](int n, int D) {
    Filtration f = engine(free_algebra(n), 3, D, 4);
    ContainmentReport rep = verify_containments(f, D);
    for (const auto& c : rep.checks) {
      if (!c.passed) {
        note("A_" + std::to_string(n) + ": " + c.claim + " FAILED");
        ok = false;
      }
      if (c.checked == 0) {
        note("A_" + std::to_string(n) + ": " + c.claim + " checked nothing");
        ok = false;
      }
    }
  };
  run_suite(2, 7);
  run_suite(3, 5);
  return ok;
}

// 5. <x,y|y^2>: dim N_2(d) >= 1 with [x^{d-1},y] surviving reduction.
bool c5_counterexample() {
  ParseResult pr = parse_presentation("generators: x:1, y:1\nrelations: y y\n");
  Filtration f = engine(pr.pres, 2, 8, 2);
  std::span<const GeneratorSpec> gens(pr.pres.generators);
  bool ok = true;
  for (int d = 2; d <= 8; ++d) {
    if (f.dim_n(2, d) < 1) {
      note("dim N_2(" + std::to_string(d) + ") = 0");
      ok = false;
    }
    NCPoly witness = commutator(
        NCPoly(Word::make(gens, std::string(static_cast<std::size_t>(d - 1), '\0'))),
        NCPoly(Word::make(gens, std::string(1, '\1'))));
    SparseVec cls = f.nk_class(f.words().from_poly(witness, d), 2, d);
    if (cls.empty()) {
      note("[x^" + std::to_string(d - 1) + ", y] reduced to zero in N_2");
      ok = false;
    }
  }
  return ok;
}

// 6. Zero-dimensional X: N_k vanishes in the top half of the window.
bool c6_finite_dimensionality() {
  ParseResult pr = parse_presentation(
      "generators: x:1, y:1\n"
      "relations:\n"
      "  x x\n"
      "  y y\n"
      "  x y + y x\n");
  Filtration f = engine(pr.pres, 6, 8, 2);
  bool ok = true;
  for (int k = 2; k <= 6; ++k) {
    for (int d = 5; d <= 8; ++d) {
      if (f.dim_n(k, d) != 0) {
        note("dim N_" + std::to_string(k) + "(" + std::to_string(d) +
             ") = " + std::to_string(f.dim_n(k, d)) + ", want 0");
        ok = false;
      }
    }
  }
  return ok;
}

// 7. Hilbert fit for N_2(A_2): t^2/(1-t)^2, stable, exact round trip.
bool c7_hilbert_fit() {
  Filtration f = engine(free_algebra(2), 2, 8, 2);
  std::vector<long long> dims(9, 0);
  for (int d = 0; d <= 8; ++d) dims[static_cast<std::size_t>(d)] = f.dim_n(2, d);
  SeriesFit fit = fit_series(dims, f.presentation().generators, 8);
  bool ok = true;
  if (!fit.stable) {
    note("fit not stable");
    ok = false;
  }
  if (fit.numerator != std::vector<long long>{0, 0, 1} ||
      fit.denom_exponent != 1) {
    note("fit = (" + series_numerator_str(fit) + ") / (" +
         series_denominator_str(fit) + "), want t^2 / (1-t)^2");
    ok = false;
  }
  if (expand_series(fit, 8) != dims) {
    note("round-trip expansion does not reproduce the dims");
    ok = false;
  }
  return ok;
}

// 8. Kerchev bound scan over all computed standard fibers, n <= 3, k <= 5.
bool c8_kerchev_scan() {
  bool ok = true;
  for (int n = 2; n <= 3; ++n) {
    Filtration f = engine(free_algebra(n), 6, 8, 4);
    for (int k = 2; k <= 5; ++k) {
      StandardFiber fb = standard_fiber(f, k);
      SchurDecomp dec = decompose(character_of(fb, n));
      int bound = partition_degree_bound(k, n);
      for (const auto& [lam, m] : dec.mult) {
        int sz = 0;
        for (int part : lam) sz += part;
        if (m > 0 && sz > bound) {
          note("St(N_" + std::to_string(k) + "(A_" + std::to_string(n) +
               ")): partition " + partition_str(lam) + " exceeds bound " +
               std::to_string(bound));
          ok = false;
        }
      }
      std::printf("        St(N_%d(A_%d)): dim %d%s, %zu partitions, bound %d\n",
                  k, n, fb.total_dim, fb.stabilized ? "" : " (provisional)",
                  dec.mult.size(), bound);
    }
  }
  return ok;
}

// 9. Determinism: repeated runs with a fixed seed are byte-identical.
bool c9_determinism() {
  auto tmp = std::filesystem::temp_directory_path();
  std::string pres = (tmp / "acc_a2.pres").string();
  {
    std::ofstream f(pres);
    f << "generators: x:1, y:1\n";
  }
  bool ok = true;
  struct Job {
    std::vector<std::string> args;
    const char* name;
  };
  std::vector<Job> jobs = {
      {{"dims", pres, "--kmax", "3", "--maxdeg", "6", "--format", "json"},
       "dims"},
      {{"fiber", pres, "--k", "3", "--maxdeg", "6", "--format", "json"},
       "fiber"},
      {{"verify", pres, "--maxdeg", "5", "--seed", "99", "--threads", "2"},
       "verify"},
  };
  for (const auto& job : jobs) {
    std::string a = (tmp / "acc_run_a.txt").string();
    std::string b = (tmp / "acc_run_b.txt").string();
    for (const std::string& path : {a, b}) {
      std::vector<std::string> args = job.args;
      args.push_back("--out");
      args.push_back(path);
      std::ostringstream out, err;
      int code = run_cli(args, out, err);
      if (code != 0) {
        note(std::string(job.name) + ": exit code " + std::to_string(code));
        ok = false;
      }
    }
    if (slurp(a) != slurp(b)) {
      note(std::string(job.name) + ": reports differ between runs");
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite: exact-arithmetic checks of the engine\n");
  criterion(1, "Feigin-Shoikhet equivalence (words vs forms, d <= 7)",
            c1_fs_equivalence);
  criterion(2, "dim N_2(A_2)(d) = d-1 for d <= 8", c2_n2_closed_form);
  criterion(3, "St(N_3(A_2)): dim 3, Schur (2,1)+(2,2), non-split witness",
            c3_standard_fiber);
  criterion(4, "containment lemma suite (A_2 to deg 7, A_3 to deg 5)",
            c4_lemma_suite);
  criterion(5, "<x,y|y^2>: [x^{d-1},y] survives in N_2, d <= 8",
            c5_counterexample);
  criterion(6, "zero-dimensional X: N_k vanishes in the top half of the window",
            c6_finite_dimensionality);
  criterion(7, "Hilbert fit of N_2(A_2) is t^2/(1-t)^2, stable",
            c7_hilbert_fit);
  criterion(8, "Kerchev degree bound across St(N_k(A_n)), n <= 3, k <= 5",
            c8_kerchev_scan);
  criterion(9, "determinism: byte-identical reports for a fixed seed",
            c9_determinism);
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
