#include "matcount/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "matcount/counting.hpp"
#include "matcount/harness.hpp"
#include "matcount/mainterm.hpp"
#include "matcount/weyl.hpp"

namespace matcount::cli {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using CellValue = std::variant<i64, u64, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<CellValue>> rows;
};

std::string cell_text(const CellValue& v) {
  if (auto* i = std::get_if<i64>(&v)) return std::to_string(*i);
  if (auto* u = std::get_if<u64>(&v)) return std::to_string(*u);
  if (auto* d = std::get_if<double>(&v)) return g17(*d);
  return std::get<std::string>(v);
}

nlohmann::ordered_json cell_json(const CellValue& v) {
  if (auto* i = std::get_if<i64>(&v)) return *i;
  if (auto* u = std::get_if<u64>(&v)) return *u;
  if (auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

void write_table(const Table& t, const std::string& path,
                 const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        obj[t.columns[i]] = cell_json(row[i]);
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << cell_text(row[i]);
      out << '\n';
    }
  }
}

Table scan_table(const std::vector<harness::ConvergenceRow>& rows) {
  Table t;
  t.columns = {"X",    "t",     "r",    "D",     "S_w",
               "M",    "gamma", "main", "ratio", "residual"};
  for (const auto& r : rows)
    t.rows.push_back({r.X, r.t, r.r, r.D, r.S_w, r.M, r.gamma, r.main, r.ratio,
                      r.residual});
  return t;
}

struct CommonFlags {
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  double tol = std::nan("");
  bool has_tol() const { return !std::isnan(tol); }
};

// Main-term integrands sit far below 1 in magnitude, so the quadrature is
// driven purely by relative tolerance here.
weights::QuadratureSpec quad_spec(const CommonFlags& flags) {
  weights::QuadratureSpec spec{1e-8, 0.0, 40};
  if (flags.has_tol()) spec.rel_tol = flags.tol;
  return spec;
}

void maybe_write(const Table& t, const CommonFlags& flags) {
  if (!flags.out.empty()) write_table(t, flags.out, flags.format);
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"matrix counts with fixed trace and determinant"};
  app.require_subcommand(1);

  CommonFlags flags;
  app.add_option("--out", flags.out, "write machine-readable output here");
  app.add_option("--format", flags.format, "output encoding")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", flags.threads, "worker count (0 = hardware)");
  app.add_option("--tol", flags.tol,
                 "tolerance: gamma truncation or quadrature, per subcommand");

  i64 t = 0, r = 0, h = 1, alpha = 0;
  i64 Dval = 5;
  u64 q = 1, c = 0, trunc = 200;
  double X = 0.0, Y = 100.0, shape = 1.5, sigma = 2.0;
  std::vector<double> Xs;
  std::vector<u64> ys;
  std::string profile = "gaussian";

  auto* s_count = app.add_subcommand("count", "sharp box count S(X)");
  s_count->add_option("--t", t)->required();
  s_count->add_option("--r", r)->required();
  s_count->add_option("--X", X)->required();

  auto* s_smooth =
      app.add_subcommand("smooth-count", "smoothed count by both algorithms");
  s_smooth->add_option("--t", t)->required();
  s_smooth->add_option("--r", r)->required();
  s_smooth->add_option("--X", X)->required();

  auto* s_gamma = app.add_subcommand("gamma", "Hooley constant gamma_D(1)");
  s_gamma->add_option("--D", Dval)->required();

  auto* s_main = app.add_subcommand("main-term", "main-term integral M(X,D)");
  s_main->add_option("--t", t)->required();
  s_main->add_option("--r", r)->required();
  s_main->add_option("--X", X)->required();

  auto* s_rho = app.add_subcommand("rho-scan", "Hooley partial-sum residuals");
  s_rho->add_option("--D", Dval)->required();
  s_rho->add_option("--Xs", ys, "checkpoints y, comma separated")
      ->required()
      ->delimiter(',');

  auto* s_weyl = app.add_subcommand("weyl", "Weyl sums over quadratic roots");
  // Frees the short -h so the frequency flag --h below can register.
  s_weyl->set_help_flag("--help", "print help and exit");
  s_weyl->add_option("--h", h);
  s_weyl->add_option("--D", Dval)->required();
  s_weyl->add_option("--q", q);
  s_weyl->add_option("--Y", Y);
  s_weyl->add_option("--c", c, "single modulus instead of the [Y,2Y] average");

  auto* s_poisson = app.add_subcommand("poisson", "Poisson summation check");
  s_poisson->add_option("--profile", profile)
      ->check(CLI::IsMember({"gaussian", "bump"}));
  s_poisson->add_option("--alpha", alpha);
  s_poisson->add_option("--q", q);
  s_poisson->add_option("--trunc", trunc);
  s_poisson->add_option("--sigma", sigma, "gaussian width");
  s_poisson->add_option("--X", X, "bump dilation (bump profile only)");

  auto* s_theorem =
      app.add_subcommand("theorem-scan", "S_w(X) vs gamma * M(X,D)");
  s_theorem->add_option("--Xs", Xs)->required()->delimiter(',');
  s_theorem->add_option("--shape", shape, "t = shape * X, in (1,2)");

  auto* s_corollary =
      app.add_subcommand("corollary-scan", "divisor-sum corollary convergence");
  s_corollary->add_option("--D", Dval, "fixed fundamental Delta");
  s_corollary->add_option("--Xs", Xs)->required()->delimiter(',');

  for (auto* sub :
       {s_count, s_smooth, s_gamma, s_main, s_rho, s_weyl, s_poisson,
        s_theorem, s_corollary})
    sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("matcount");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_worker_count(flags.threads);

  try {
    if (app.got_subcommand(s_count)) {
      auto params = counting::CharPolyParams::make(t, r, X);
      i64 v = counting::count_exact_box(params);
      std::printf("S(X) = %lld for t=%lld r=%lld X=%s\n", (long long)v,
                  (long long)t, (long long)r, g17(X).c_str());
      Table tab;
      tab.columns = {"t", "r", "X", "count"};
      tab.rows.push_back({t, r, X, v});
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_smooth)) {
      auto params = counting::CharPolyParams::make(t, r, X);
      auto dir = counting::count_smoothed_direct(params);
      auto cong = counting::count_smoothed_congruence(params);
      std::printf("direct     = %s  (%llu terms, %.3fs)\n",
                  g17(dir.value).c_str(), (unsigned long long)dir.terms,
                  dir.elapsed_sec);
      std::printf("congruence = %s  (%llu terms, %.3fs)\n",
                  g17(cong.value).c_str(), (unsigned long long)cong.terms,
                  cong.elapsed_sec);
      double scale = std::max(std::abs(dir.value), 1e-300);
      std::printf("relative difference = %s\n",
                  g17(std::abs(dir.value - cong.value) / scale).c_str());
      Table tab;
      tab.columns = {"t", "r", "X", "direct", "congruence", "terms"};
      tab.rows.push_back({t, r, X, dir.value, cong.value, dir.terms});
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_gamma)) {
      double tol = flags.has_tol() ? flags.tol : 1e-6;
      auto D = arith::Discriminant::make(Dval);
      auto g = mainterm::gamma1(D, tol);
      std::printf("K1    = %s  (err <= %s)\n", g17(g.K1).c_str(),
                  g17(g.err_K).c_str());
      std::printf("M1    = %s  (err <= %s)\n", g17(g.M1).c_str(),
                  g17(g.err_M).c_str());
      std::printf("zeta2 = %s\n", g17(g.zeta2).c_str());
      std::printf("gamma = %s\n", g17(g.gamma).c_str());
      Table tab;
      tab.columns = {"D", "K1", "M1", "zeta2", "gamma", "err_K", "err_M"};
      tab.rows.push_back({Dval, g.K1, g.M1, g.zeta2, g.gamma, g.err_K,
                          g.err_M});
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_main)) {
      auto params = counting::CharPolyParams::make(t, r, X);
      double v = mainterm::main_term(params, quad_spec(flags));
      std::printf("M(X,D) = %s\n", g17(v).c_str());
      Table tab;
      tab.columns = {"t", "r", "X", "D", "M"};
      tab.rows.push_back({t, r, X, params.disc(), v});
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_rho)) {
      auto D = arith::Discriminant::make(Dval);
      auto rows = mainterm::hooley_residual_scan(D, ys);
      Table tab;
      tab.columns = {"y", "rho_sum", "y_gamma", "residual", "scaled"};
      for (const auto& row : rows) {
        std::printf("y=%llu  sum=%llu  y*gamma=%s  residual=%s  scaled=%s\n",
                    (unsigned long long)row.y, (unsigned long long)row.rho_sum,
                    g17(row.y_gamma).c_str(), g17(row.residual).c_str(),
                    g17(row.scaled).c_str());
        tab.rows.push_back(
            {row.y, row.rho_sum, row.y_gamma, row.residual, row.scaled});
      }
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_weyl)) {
      auto D = arith::Discriminant::make(Dval);
      Table tab;
      if (c > 0) {
        std::complex<double> w = weyl::weyl_single(h, D, c);
        std::printf("W_%lld(%lld;%llu) = %s + %si  |W| = %s\n", (long long)h,
                    (long long)Dval, (unsigned long long)c,
                    g17(w.real()).c_str(), g17(w.imag()).c_str(),
                    g17(std::abs(w)).c_str());
        tab.columns = {"h", "D", "c", "re", "im", "abs"};
        tab.rows.push_back({h, Dval, c, w.real(), w.imag(), std::abs(w)});
      } else {
        weyl::WeylQuery query{h, D, q, Y};
        auto avg = weyl::weyl_averaged(query);
        double ratio = h >= 1 ? weyl::dfi_bound_ratio(query) : 0.0;
        std::printf("W_%lld(D=%lld) over c in [%s, %s], q | c with q=%llu\n",
                    (long long)h, (long long)Dval, g17(Y).c_str(),
                    g17(2 * Y).c_str(), (unsigned long long)q);
        std::printf("value = %s + %si  |value| = %s  kappa = %s  terms = %llu\n",
                    g17(avg.value.real()).c_str(), g17(avg.value.imag()).c_str(),
                    g17(std::abs(avg.value)).c_str(), g17(avg.kappa).c_str(),
                    (unsigned long long)avg.terms);
        if (h >= 1) std::printf("bound ratio = %s\n", g17(ratio).c_str());
        tab.columns = {"h", "D", "q", "Y", "re", "im", "abs", "kappa", "ratio"};
        tab.rows.push_back({h, Dval, q, Y, avg.value.real(), avg.value.imag(),
                            std::abs(avg.value), avg.kappa, ratio});
      }
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_poisson)) {
      weyl::PoissonProfile prof;
      if (profile == "gaussian") {
        prof.kind = weyl::PoissonProfile::Kind::gaussian;
        prof.param = sigma;
      } else {
        prof.kind = weyl::PoissonProfile::Kind::bump_dilate;
        prof.param = X > 0 ? X : 20.0;
      }
      double d = weyl::poisson_check(prof, alpha, q, trunc);
      std::printf("poisson discrepancy = %s  (profile=%s alpha=%lld q=%llu trunc=%llu)\n",
                  g17(d).c_str(), profile.c_str(), (long long)alpha,
                  (unsigned long long)q, (unsigned long long)trunc);
      Table tab;
      tab.columns = {"profile", "alpha", "q", "trunc", "param", "discrepancy"};
      tab.rows.push_back({profile, alpha, q, trunc, prof.param, d});
      maybe_write(tab, flags);
    } else if (app.got_subcommand(s_theorem)) {
      harness::ScanOptions opts;
      if (flags.has_tol()) opts.gamma_tol = flags.tol;
      auto rows = harness::theorem_scan(Xs, shape, opts);
      for (const auto& row : rows)
        std::printf("X=%s t=%lld r=%lld D=%lld S_w=%s main=%s ratio=%s\n",
                    g17(row.X).c_str(), (long long)row.t, (long long)row.r,
                    (long long)row.D, g17(row.S_w).c_str(),
                    g17(row.main).c_str(), g17(row.ratio).c_str());
      maybe_write(scan_table(rows), flags);
    } else if (app.got_subcommand(s_corollary)) {
      harness::ScanOptions opts;
      if (flags.has_tol()) opts.gamma_tol = flags.tol;
      auto Delta = arith::Discriminant::make(Dval);
      auto rows = harness::corollary_scan(Delta, Xs, opts);
      for (const auto& row : rows)
        std::printf("X=%s Delta=%lld S=%s main=%s ratio=%s\n",
                    g17(row.X).c_str(), (long long)row.D, g17(row.S_w).c_str(),
                    g17(row.main).c_str(), g17(row.ratio).c_str());
      maybe_write(scan_table(rows), flags);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace matcount::cli
