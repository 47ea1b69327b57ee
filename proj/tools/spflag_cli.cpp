#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

#include "spflag/double_flag.hpp"
#include "spflag/intertwiners.hpp"
#include "spflag/invariants.hpp"
#include "spflag/lagrangian.hpp"
#include "spflag/matrix_io.hpp"
#include "spflag/principal_series.hpp"
#include "spflag/symplectic.hpp"
#include "spflag/verify.hpp"

using namespace spflag;

namespace {

std::string num(double v) {
  char b[48];
  std::snprintf(b, sizeof b, "%.12g", v);
  return b;
}

std::string cnum(Cplx v) {
  if (v.imag() == 0.0) return num(v.real());
  return num(v.real()) + (v.imag() < 0 ? "-" : "+") + num(std::abs(v.imag())) + "i";
}

std::string vec(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? " " : "") + num(v(i));
  return out;
}

struct ToleranceFlags {
  double rel = 1e-9;
  double abs = 1e-12;
  TolerancePolicy policy() const { return {rel, abs}; }
  void attach(CLI::App* cmd) {
    cmd->add_option("--tol-rel", rel, "relative zero-band threshold");
    cmd->add_option("--tol-abs", abs, "absolute zero-band floor");
  }
};

int cmd_classify(const std::string& frame_path, const std::string& z_path,
                 const std::string& y_path, const TolerancePolicy& tol) {
  if (!frame_path.empty()) {
    MatrixFile mf = read_matrix_file(frame_path, tol);
    LagrangianFrame frame = LagrangianFrame::from_stacked(mf.data, tol);
    LambdaOrbitLabel label = orbit_invariant(frame, tol);
    SymmetricMatrix form(frame.lower().transpose() * frame.upper());
    Eigen::VectorXd ev = sym_eigenvalues(form);
    std::printf("kind: lagrangian-frame\n");
    std::printf("n: %d\n", frame.n());
    std::printf("label: (k=%d; r=%d, s=%d)\n", label.k, label.r, label.s);
    std::printf("form eigenvalues: %s\n", vec(ev).c_str());
    std::printf("zero band: %s\n", num(tol.band(spectral_norm(form))).c_str());
    return 0;
  }
  MatrixFile zf = read_matrix_file(z_path, tol);
  if (zf.data.rows() != zf.data.cols())
    throw ValidationError("classify: --z must be a square symmetric matrix");
  SymmetricMatrix z(zf.data);
  MatrixFile yf = read_matrix_file(y_path, tol);
  PairPoint pt = PairPoint::make(z, yf.data, tol);
  DoubleOrbitLabel label = classify_pair(pt, tol);
  Eigen::VectorXd zev = sym_eigenvalues(z);
  Eigen::MatrixXd w = z.mat().partialPivLu().solve(pt.y);
  Eigen::VectorXd rev = sym_eigenvalues(SymmetricMatrix(pt.y.transpose() * w));
  std::printf("kind: pair\n");
  std::printf("n: %d\nd: %d\n", pt.n(), pt.d());
  std::printf("label: (p=%d, q=%d; s=%d, t=%d; kdef=%d)\n", label.p, label.q, label.s, label.t,
              label.kdef);
  std::printf("open: %s\n", is_open(label) ? "yes" : "no");
  std::printf("z eigenvalues: %s\n", vec(zev).c_str());
  std::printf("restricted eigenvalues: %s\n", vec(rev).c_str());
  std::printf("zero band (z): %s\n", num(tol.band(spectral_norm(z))).c_str());
  return 0;
}

int cmd_enumerate(int n, int d) {
  if (d == 0) {
    auto labels = enumerate_orbit_labels(n);
    std::printf("orbit labels on the Lagrangian Grassmannian, n=%d\n", n);
    std::printf("%4s %4s %4s\n", "k", "r", "s");
    for (const auto& l : labels) std::printf("%4d %4d %4d\n", l.k, l.r, l.s);
    for (int k = 0; k <= n; ++k) {
      int count = 0;
      for (const auto& l : labels)
        if (l.k == k) ++count;
      int m = n - k;
      int expect = (m + 2) * (m + 1) / 2;
      if (count != expect) throw NumericalError("enumerate: per-cell count mismatch");
      std::printf("cell k=%d: %d labels\n", k, count);
    }
    std::printf("total: %zu\n", labels.size());
    return 0;
  }
  auto labels = enumerate_open_orbits(n, d);
  std::printf("open orbit labels on the double flag variety, n=%d d=%d\n", n, d);
  std::printf("%4s %4s %4s %4s\n", "p", "q", "s", "t");
  for (const auto& l : labels) std::printf("%4d %4d %4d %4d\n", l.p, l.q, l.s, l.t);
  std::printf("total: %zu\n", labels.size());
  return 0;
}

int cmd_region(double nu, double mu, int n, int d) {
  bool p = region_P(nu, mu, n, d);
  bool q = region_Q(nu, mu, n, d);
  RegionMargins pm = region_P_margins(nu, mu, n, d);
  RegionMargins qm = region_Q_margins(nu, mu, n, d);
  std::printf("verdict: %s\n", p ? "P" : (q ? "Q" : "neither"));
  std::printf("P margins: radial+ %s, radial- %s (strict), sum %s, mu %s\n", num(pm.radial_plus).c_str(),
              num(pm.radial_minus).c_str(), num(pm.spherical_sum).c_str(), num(pm.spherical_mu).c_str());
  std::printf("Q margins: radial+ %s, radial- %s (strict), sum %s, mu %s\n", num(qm.radial_plus).c_str(),
              num(qm.radial_minus).c_str(), num(qm.spherical_sum).c_str(), num(qm.spherical_mu).c_str());
  return 0;
}

GFunction built_in_g(const std::string& kind, int n, int p, int q, double lo, double hi) {
  if (kind == "indicator") {
    if (n != 1) throw ValidationError("eval-p: the indicator test function requires --n 1");
    return g_indicator(lo, hi);
  }
  if (kind == "gauss") return g_gaussian_on_omega(n, p, q);
  throw ValidationError("eval-p: unknown test function '" + kind + "' (indicator | gauss)");
}

LFunction built_in_l(const std::string& kind, int n, int d, Cplx mu, int power) {
  if (kind == "invariant") return l_k_invariant(n, d, mu);
  if (kind == "monomial") return l_entry_monomial(n, d, mu, power);
  throw ValidationError("eval-q: unknown test function '" + kind + "' (invariant | monomial)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for symplectic double flag varieties"};
  app.require_subcommand(1);

  // classify
  auto* classify = app.add_subcommand("classify", "orbit label of a frame or a (z, y) pair");
  std::string frame_path, z_path, y_path;
  ToleranceFlags ctol;
  classify->add_option("--frame", frame_path, "Lagrangian frame file (2n x n)");
  classify->add_option("--z", z_path, "symmetric matrix file");
  classify->add_option("--y", y_path, "n x d matrix file");
  ctol.attach(classify);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "orbit label census");
  int en = 0, ed = 0;
  enumerate->add_option("--n", en, "size parameter")->required();
  enumerate->add_option("--d", ed, "plane dimension (omit for the Grassmannian census)");

  // region
  auto* region = app.add_subcommand("region", "convergence-region verdict for (nu, mu)");
  double rnu = 0, rmu = 0;
  int rn = 0, rd = 0;
  region->add_option("--nu", rnu)->required();
  region->add_option("--mu", rmu)->required();
  region->add_option("--n", rn)->required();
  region->add_option("--d", rd)->required();

  // eval-p
  auto* evalp = app.add_subcommand("eval-p", "evaluate the forward kernel operator at a frame");
  int pn = 1, pd = 1, pp = -1, pq = -1;
  double palpha = 0, pbeta = 0, pnu = 0, pmu = 0, plo = 1, phi = 2;
  bool have_ab = false, have_numu = false;
  std::uint64_t pseed = 0;
  std::size_t pbudget = 200000;
  int pworkers = 1;
  std::string pf = "indicator", py_path;
  evalp->add_option("--n", pn)->required();
  evalp->add_option("--d", pd)->required();
  evalp->add_option("--p", pp, "stratum signature, positive count");
  evalp->add_option("--q", pq, "stratum signature, negative count");
  auto* oa = evalp->add_option("--alpha", palpha, "kernel exponent");
  auto* ob = evalp->add_option("--beta", pbeta, "kernel exponent");
  auto* onu = evalp->add_option("--nu", pnu, "representation parameter (alpha = nu/2)");
  auto* omu = evalp->add_option("--mu", pmu, "representation parameter (beta = -mu/2)");
  evalp->add_option("--seed", pseed, "root seed")->required();
  evalp->add_option("--budget", pbudget, "sample budget");
  evalp->add_option("--workers", pworkers, "worker hint");
  evalp->add_option("--f", pf, "test function: indicator | gauss");
  evalp->add_option("--lo", plo, "indicator support lower end");
  evalp->add_option("--hi", phi, "indicator support upper end");
  evalp->add_option("--y", py_path, "probe frame file (default: coordinate selector)");

  // eval-q
  auto* evalq = app.add_subcommand("eval-q", "evaluate the reverse kernel operator at a point");
  int qn = 2, qd = 1, qpower = 2;
  double qnu = 0, qmu = 0;
  std::uint64_t qseed = 0;
  std::size_t qbudget = 200000;
  int qworkers = 1;
  std::string qF = "invariant", qz_path;
  evalq->add_option("--n", qn)->required();
  evalq->add_option("--d", qd)->required();
  evalq->add_option("--nu", qnu)->required();
  evalq->add_option("--mu", qmu)->required();
  evalq->add_option("--seed", qseed)->required();
  evalq->add_option("--budget", qbudget);
  evalq->add_option("--workers", qworkers);
  evalq->add_option("--F", qF, "test vector: invariant | monomial");
  evalq->add_option("--power", qpower, "monomial power");
  evalq->add_option("--z", qz_path, "probe point file (default: diag(1_p, -1_q) with p = n-1)");

  // check-intertwine
  auto* chk = app.add_subcommand("check-intertwine", "two-route equivariance comparison");
  std::string side = "P";
  int cn = 1, cd = 1, cprobes = 2;
  double cnu = 0, cmu = 0;
  std::uint64_t cseed = 0;
  std::size_t cbudget = 200000;
  int cworkers = 1;
  chk->add_option("--side", side, "P | Q")->required();
  chk->add_option("--n", cn)->required();
  chk->add_option("--d", cd)->required();
  chk->add_option("--nu", cnu)->required();
  chk->add_option("--mu", cmu)->required();
  chk->add_option("--seed", cseed)->required();
  chk->add_option("--budget", cbudget);
  chk->add_option("--workers", cworkers);
  chk->add_option("--probes", cprobes);

  // bound
  auto* bound = app.add_subcommand("bound", "convergence probe of a majorant integral");
  std::string bside = "P";
  int bn = 1, bd = 1, bp = -1, bq = -1;
  double bnu = 0, bmu = 0;
  std::uint64_t bseed = 0;
  std::size_t bbudget = 200000;
  int bworkers = 1;
  bound->add_option("--side", bside, "P | Q")->required();
  bound->add_option("--nu", bnu)->required();
  bound->add_option("--mu", bmu)->required();
  bound->add_option("--n", bn)->required();
  bound->add_option("--d", bd)->required();
  bound->add_option("--p", bp);
  bound->add_option("--q", bq);
  bound->add_option("--seed", bseed)->required();
  bound->add_option("--budget", bbudget);
  bound->add_option("--workers", bworkers);

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  std::uint64_t vseed = 0;
  std::size_t vbudget = 200000;
  int vworkers = 1, vn = 0, vd = 0;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", vseed)->required();
  verify->add_option("--budget", vbudget);
  verify->add_option("--workers", vworkers);
  verify->add_option("--n", vn);
  verify->add_option("--d", vd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      if (frame_path.empty() == (z_path.empty() || y_path.empty()))
        throw ValidationError("classify: provide either --frame or both --z and --y");
      return cmd_classify(frame_path, z_path, y_path, ctol.policy());
    }
    if (enumerate->parsed()) return cmd_enumerate(en, ed);
    if (region->parsed()) return cmd_region(rnu, rmu, rn, rd);

    if (evalp->parsed()) {
      have_ab = oa->count() || ob->count();
      have_numu = onu->count() || omu->count();
      if (have_ab == have_numu)
        throw ValidationError("eval-p: provide either (--alpha, --beta) or (--nu, --mu)");
      Cplx alpha = have_ab ? Cplx(palpha, 0) : Cplx(0.5 * pnu, 0);
      Cplx beta = have_ab ? Cplx(pbeta, 0) : Cplx(-0.5 * pmu, 0);
      if (pp < 0 && pq < 0) {
        pp = pn;
        pq = 0;
      } else if (pp < 0) {
        pp = pn - pq;
      } else if (pq < 0) {
        pq = pn - pp;
      }
      OrbitIntegrationDomain dom = OrbitIntegrationDomain::make(pn, pp, pq);
      GFunction f = built_in_g(pf, pn, pp, pq, plo, phi);
      Eigen::MatrixXd y;
      if (!py_path.empty())
        y = read_matrix_file(py_path).data;
      else
        y = Eigen::MatrixXd::Identity(pn, pd);
      QuadratureSpec quad{pbudget, pseed, pworkers, 4};
      McEstimateC v = operator_P_at(f, alpha, beta, dom, quad, y);
      std::printf("value: %s\n", cnum(v.value).c_str());
      std::printf("std-error: %s\n", num(v.std_error).c_str());
      std::printf("samples: %zu\n", v.samples);
      return 0;
    }

    if (evalq->parsed()) {
      LFunction F = built_in_l(qF, qn, qd, Cplx(qmu, 0), qpower);
      SymmetricMatrix z = SymmetricMatrix::indefinite_identity(qn, qn - 1, 1);
      if (!qz_path.empty()) {
        MatrixFile mf = read_matrix_file(qz_path);
        if (mf.data.rows() != mf.data.cols())
          throw ValidationError("eval-q: --z must be square");
        z = SymmetricMatrix(mf.data);
      }
      McEstimateC v = operator_Q_at(F, Cplx(qnu, 0), Cplx(qmu, 0), qbudget, qseed, qworkers, z);
      std::printf("value: %s\n", cnum(v.value).c_str());
      std::printf("std-error: %s\n", num(v.std_error).c_str());
      std::printf("samples: %zu\n", v.samples);
      return 0;
    }

    if (chk->parsed()) {
      Eigen::MatrixXd h = Eigen::MatrixXd::Identity(cn, cn);
      h(0, 0) = 2.0;
      IntertwineReport rep;
      if (side == "P") {
        GFunction f = (cn == 1) ? g_indicator(1.0, 2.0) : g_gaussian_on_omega(cn, cn, 0);
        QuadratureSpec quad{cbudget, cseed, cworkers, 4};
        rep = check_intertwine_P(h, Cplx(cnu, 0), Cplx(cmu, 0), f, cd, cprobes, quad);
      } else if (side == "Q") {
        LFunction F = l_k_invariant(cn, cd, Cplx(cmu, 0));
        rep = check_intertwine_Q(h, Cplx(cnu, 0), Cplx(cmu, 0), F, cprobes, cbudget, cseed, cworkers);
      } else {
        throw ValidationError("check-intertwine: --side must be P or Q");
      }
      for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        std::printf("probe %zu: lhs %s rhs %s dev %s rel %s 3sigma %s %s\n", i,
                    cnum(r.lhs).c_str(), cnum(r.rhs).c_str(), num(r.deviation).c_str(),
                    num(r.rel_deviation).c_str(), num(3 * r.sigma_combined).c_str(),
                    r.pass ? "ok" : "FAIL");
      }
      std::printf("max-rel-deviation: %s\n", num(rep.max_rel_deviation).c_str());
      std::printf("result: %s\n", rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }

    if (bound->parsed()) {
      BoundProbe probe;
      if (bside == "P") {
        if (bp < 0 && bq < 0) {
          bp = bn;
          bq = 0;
        } else if (bp < 0) {
          bp = bn - bq;
        } else if (bq < 0) {
          bq = bn - bp;
        }
        probe = bound_estimate_P(bnu, bmu, bn, bd, bp, bq, QuadratureSpec{bbudget, bseed, bworkers, 4});
      } else if (bside == "Q") {
        probe = bound_estimate_Q(bnu, bmu, bn, bd, QuadratureSpec{bbudget, bseed, bworkers, 4});
      } else {
        throw ValidationError("bound: --side must be P or Q");
      }
      std::string rounds;
      for (double r : probe.round_values) rounds += (rounds.empty() ? "" : " ") + num(r);
      std::printf("rounds: %s\n", rounds.c_str());
      std::printf("estimate: %s\n", num(probe.estimate.value).c_str());
      std::printf("std-error: %s\n", num(probe.estimate.std_error).c_str());
      std::printf("verdict: %s\n", probe.divergence_suspected ? "divergence-suspected" : "finite");
      return 0;
    }

    if (verify->parsed()) {
      SuiteOptions opt{vseed, vbudget, vworkers, vn, vd};
      std::vector<SuiteResult> results;
      if (suite == "all")
        results = run_all_suites(opt);
      else
        results.push_back(run_suite(suite, opt));
      bool all_pass = true;
      for (const auto& r : results) {
        for (const auto& l : r.lines) std::printf("%s\n", l.c_str());
        std::printf("suite %s: %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL");
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
