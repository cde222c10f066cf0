// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "knotsig/report.hpp"
#include "oracles.hpp"

using namespace knotsig;
using knotsig::testing::Generator;

namespace {

int failures = 0;

// Every inertia computed below is also checked for parity and bounds (AC7).
struct ParityLedger {
  long checked = 0;
  long bad = 0;
  void record(const Inertia& in, std::size_t n) {
    ++checked;
    const bool ok = (in.rank - in.signature) % 2 == 0 && std::abs(in.signature) <= in.rank &&
                    in.rank <= static_cast<int>(n);
    if (!ok) ++bad;
  }
} parity;

void report(const char* id, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

Inertia lt(const SeifertMatrix& a, const CirclePoint& w) {
  const Inertia in = levine_tristram_at(a, w);
  parity.record(in, a.dimension());
  return in;
}

void ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  const IntPolynomial expected{1, -2, 3, -2, 1};
  bool ok = true;
  for (long long k = 2; k <= 6; ++k) ok = ok && alexander_polynomial(seifert_matrix_A_k(k)) == expected;
  const double s = seconds_since(t0);
  report("AC1", ok && s < 1.0, "Alexander polynomial of A_k (k=2..6) = " + expected.str() + ", " + fmt_seconds(s) + " (limit 1s)");
}

void ac2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (long long k = 2; k <= 6; ++k)
    ok = ok && lt(seifert_matrix_A_k(k), CirclePoint(Rational(1, 2), Half::Upper)) == Inertia{5, -1};
  const double s = seconds_since(t0);
  report("AC2", ok && s < 1.0, "signature of A_k at x=1/2 (k=2..6) = rank 5, signature -1, " + fmt_seconds(s) + " (limit 1s)");
}

void ac3() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = pretzel_3_minus3_m_verdict(3).verdict == Verdict::Inconclusive;
  int obstructed = 0;
  for (long long m = 4; m <= 20; ++m) {
    const auto v = pretzel_3_minus3_m_verdict(m);
    if (v.verdict == Verdict::Obstructed) ++obstructed;
    if (v.witness) parity.record(v.witness->inertia, 6);
  }
  ok = ok && obstructed == 17;
  const double s = seconds_since(t0);
  report("AC3", ok && s < 5.0,
         "P(3,-3,-m): m=4..20 obstructed " + std::to_string(obstructed) + "/17, m=3 inconclusive, " + fmt_seconds(s) +
             " (limit 5s)");
}

void ac4() {
  bool ok = true;
  for (long long m = 5; m <= 21; m += 2)
    ok = ok && odd_pretzel_doubly_slice_test(PretzelParams({3, -3, -m})).verdict == Verdict::Obstructed;
  for (long long a : {3, 5, 7})
    ok = ok && odd_pretzel_doubly_slice_test(PretzelParams({a, -a, a})).verdict == Verdict::Inconclusive;
  Generator gen(404);
  int mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 * gen.uniform(1, 3) + 1;
    std::vector<long long> params(n);
    if (trial % 2 == 0) {
      const long long a = 2 * gen.uniform(0, 4) + 1;
      for (std::size_t i = 0; i < n; ++i) params[i] = i % 2 == 0 ? a : -a;
    } else {
      for (auto& p : params) p = (2 * gen.uniform(0, 4) + 1) * (gen.coin() ? 1 : -1);
    }
    const Verdict base = odd_pretzel_doubly_slice_test(PretzelParams(params)).verdict;
    std::shuffle(params.begin(), params.end(), gen.engine());
    if (odd_pretzel_doubly_slice_test(PretzelParams(params)).verdict != base) ++mismatches;
  }
  report("AC4", ok && mismatches == 0,
         "odd classifier: (3,-3,-m) m=5..21 obstructed, (a,-a,a) inconclusive, 100 shuffles with " +
             std::to_string(mismatches) + " mismatches");
}

void ac5() {
  Generator gen(5005);
  int compared = 0, skipped = 0, mismatches = 0;
  while (compared < 1000) {
    const std::size_t n = gen.uniform(1, 6);
    const Integer d = gen.uniform(1, 3);
    const auto entries = gen.coin() ? gen.random_hermitian(n, d) : gen.low_rank_hermitian(n, d);
    const auto numeric = testing::eigen_inertia(testing::embed(entries));
    if (!numeric) {
      ++skipped;
      continue;
    }
    const Inertia exact = hermitian_rank_signature(HermitianMatrix(entries));
    parity.record(exact, n);
    if (exact.rank != numeric->rank || exact.signature != numeric->signature) ++mismatches;
    ++compared;
  }
  report("AC5", mismatches == 0,
         "exact vs eigenvalue oracle on " + std::to_string(compared) + " Hermitian matrices (n<=6, D in {1,2,3}), " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(skipped) + " ill-conditioned draws skipped");
}

void ac6() {
  Generator gen(6006);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = gen.uniform(1, 6);
    const Integer d = gen.uniform(1, 3);
    const auto m = gen.coin() ? gen.random_hermitian(n, d) : gen.low_rank_hermitian(n, d);
    const auto p = testing::lift(gen.unimodular(n, 8), d);
    const Inertia before = hermitian_rank_signature(HermitianMatrix(m));
    const Inertia after = hermitian_rank_signature(HermitianMatrix(testing::congruence(m, p)));
    parity.record(before, n);
    parity.record(after, n);
    if (!(before == after)) ++mismatches;
  }
  report("AC6", mismatches == 0, "500 unimodular congruences, " + std::to_string(mismatches) + " mismatches");
}

void ac8() {
  const auto a = testing::trefoil();
  const auto prof = signature_profile(a);
  bool ok = prof.jumps.size() == 1 && prof.jump_roots.size() == 1 && prof.jump_roots[0] == Rational(1, 2) &&
            prof.arc_values == std::vector<int>{0, -2} && prof.value_at_minus_one == -2;
  int compared = 0, mismatches = 0;
  if (ok) {
    const auto& iv = prof.jumps[0];
    const auto inside = [&](double x) { return x >= to_double(iv.lo) && x <= to_double(iv.hi); };
    // Uniform grid on (-1, 1), grown until exactly 200 points avoid the interval.
    int grid = 200;
    for (;; ++grid) {
      int outside = 0;
      for (int i = 1; i <= grid; ++i) outside += !inside(-1.0 + 2.0 * i / (grid + 1));
      if (outside == 200) break;
    }
    for (int i = 1; i <= grid; ++i) {
      const double x = -1.0 + 2.0 * i / (grid + 1);
      if (inside(x)) continue;
      const int expected = x > to_double(iv.hi) ? prof.arc_values[0] : prof.arc_values[1];
      const auto numeric = testing::eigen_inertia(testing::lt_matrix_numeric(a, x, true));
      ++compared;
      if (!numeric || numeric->signature != expected) ++mismatches;
    }
  }
  for (const auto& x : prof.arc_samples) lt(a, CirclePoint(x, Half::Upper));
  lt(a, CirclePoint::minus_one());
  report("AC8", ok && mismatches == 0,
         "trefoil: jump at exactly 1/2, arcs (0,-2), value at -1 = -2; dense oracle " + std::to_string(compared) +
             " points, " + std::to_string(mismatches) + " mismatches");
}

void ac9() {
  Generator gen(9009);
  int compared = 0, skipped = 0, count_mismatch = 0, location_mismatch = 0;
  while (compared < 200) {
    std::vector<Integer> c(gen.uniform(2, 9));
    for (auto& v : c) v = gen.uniform(-20, 20);
    if (c.back() == 0) c.back() = gen.coin() ? 1 : -1;
    const IntPolynomial p(c);
    const auto numeric = testing::numeric_real_roots(p);
    if (!numeric) {
      ++skipped;
      continue;
    }
    Integer bound = 0;
    for (const auto& v : p.coefficients()) bound = std::max(bound, abs(v));
    bound = bound / abs(p.lead()) + 2;
    const auto ivs = sturm_isolate(p, Rational(-bound), Rational(bound));
    ++compared;
    if (ivs.size() != numeric->size()) {
      ++count_mismatch;
      continue;
    }
    for (std::size_t i = 0; i < ivs.size(); ++i)
      if ((*numeric)[i] < to_double(ivs[i].lo) - 1e-9 || (*numeric)[i] > to_double(ivs[i].hi) + 1e-9)
        ++location_mismatch;
  }
  report("AC9", count_mismatch == 0 && location_mismatch == 0,
         "Sturm isolation vs companion-matrix roots on " + std::to_string(compared) + " polynomials (degree<=8), " +
             std::to_string(count_mismatch) + " count / " + std::to_string(location_mismatch) +
             " location mismatches, " + std::to_string(skipped) + " ill-conditioned draws skipped");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

void ac10(const std::string& cli) {
  namespace fs = std::filesystem;
  Generator gen(1010);
  std::vector<KnotRecord> corpus;
  for (int i = 0; i < 45; ++i)
    corpus.push_back({"synthetic-" + std::to_string(i), gen.random_seifert_entries(gen.uniform(0, 3))});
  for (long long k = 2; k <= 6; ++k) {
    const auto a = seifert_matrix_A_k(k);
    corpus.push_back({a.name().value_or("A_k"), a.entries()});
  }
  const fs::path dir = fs::temp_directory_path() / "knotsig_acceptance";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "corpus.jsonl");
    for (const auto& rec : corpus) out << to_json(rec).dump() << '\n';
  }
  std::vector<std::string> outputs;
  bool ran = true;
  for (int run = 0; run < 5; ++run) {
    for (const char* jobs : {"1", "4"}) {
      const fs::path out = dir / ("out_" + std::to_string(run) + "_" + jobs + ".jsonl");
      const std::string cmd =
          cli + " batch " + (dir / "corpus.jsonl").string() + " --out " + out.string() + " --jobs " + jobs;
      const int status = std::system(cmd.c_str());
      ran = ran && WIFEXITED(status) && WEXITSTATUS(status) == 0;
      outputs.push_back(slurp(out));
    }
  }
  fs::remove_all(dir);
  bool identical = ran && !outputs[0].empty();
  for (const auto& o : outputs) identical = identical && o == outputs[0];
  std::size_t lines = std::count(outputs[0].begin(), outputs[0].end(), '\n');
  report("AC10", identical && lines == 50,
         "batch over 50-knot corpus: 5 serial + 5 parallel runs byte-identical, " + std::to_string(lines) + " lines");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : KNOTSIG_CLI;
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac8();
  ac9();
  ac10(cli);
  report("AC7", parity.bad == 0 && parity.checked > 0,
         "sigma = rank (mod 2) and |sigma| <= rank <= n on " + std::to_string(parity.checked) + " computed instances, " +
             std::to_string(parity.bad) + " violations");
  return failures == 0 ? 0 : 1;
}
