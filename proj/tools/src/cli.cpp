#include "gale/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>

#include "gale/cli/gcpx.hpp"
#include "gale/domains.hpp"
#include "gale/gale.hpp"
#include "gale/metrics.hpp"
#include "gale/oracle.hpp"
#include "gale/phantom.hpp"
#include "gale/recon.hpp"
#include "gale/windows.hpp"

namespace gale::cli {
namespace {

struct TransformFlags {
  int M = 0;
  int N = 0;
  double theta0 = kPi / 2;
  std::string sigma = "auto";
  int NL = 0;
  int S = 4;
  double eps = kDefaultEpsilon;
  int P = 0;
  int threads = 0;
};

void add_domain_flags(CLI::App* sub, TransformFlags& f) {
  sub->add_option("--M", f.M, "samples per ray (even)")->required();
  sub->add_option("--N", f.N, "number of golden-angle rays")->required();
  sub->add_option("--theta0", f.theta0, "angle of ray 0")->capture_default_str();
  sub->add_option("--sigma", f.sigma, "ray offset, or 'auto' for pi/M")->capture_default_str();
}

void add_gale_flags(CLI::App* sub, TransformFlags& f) {
  sub->add_option("--NL", f.NL, "Fourier length N_L (default: multiple of 4 >= 2.25 max(m,n))");
  sub->add_option("--S", f.S, "truncation parameter, 1 < S <= 15")->capture_default_str();
  sub->add_option("--eps", f.eps, "window epsilon in (0,1)")->capture_default_str();
  sub->add_option("--P", f.P, "CZT length; sets N_L = 2P - 4(S+1)");
}

void add_threads_flag(CLI::App* sub, int& threads) {
  sub->add_option("--threads", threads, "worker threads (default: $GALE_THREADS or 1)");
}

int resolve_threads(int flag) {
  if (flag != 0) {
    require(flag >= 1, "--threads must be at least 1");
    return flag;
  }
  if (const char* env = std::getenv("GALE_THREADS")) {
    try {
      const int v = std::stoi(env);
      require(v >= 1, "GALE_THREADS must be at least 1");
      return v;
    } catch (const std::logic_error&) {
      throw InvalidArgument("GALE_THREADS must be a positive integer");
    }
  }
  return 1;
}

double resolve_sigma(const std::string& text, int M) {
  if (text == "auto") return kPi / M;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  require(used == text.size() && used > 0, "--sigma must be a number or 'auto'");
  return v;
}

GalfdSpec make_spec(const TransformFlags& f) {
  require(f.M > 0 && f.M % 2 == 0, "--M must be a positive even integer");
  return make_galfd_spec(f.M, f.N, f.theta0, resolve_sigma(f.sigma, f.M));
}

GaleSettings make_settings(const TransformFlags& f) {
  GaleSettings s;
  s.S = f.S;
  s.epsilon = f.eps;
  s.threads = resolve_threads(f.threads);
  if (f.P != 0) {
    s.fourier_length = fourier_length_for_czt_length(f.P, f.S);
  } else {
    require(f.NL >= 0, "--NL must be positive");
    s.fourier_length = f.NL;
  }
  return s;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 2-D arrays travel as [rows, cols]; stacks of them as [count, rows, cols].
template <typename Tag>
std::vector<Array2D<Tag>> unstack(const GcpxArray& a, const char* what) {
  std::vector<Array2D<Tag>> out;
  if (a.dims.size() == 2) {
    out.emplace_back(a.dims[0], a.dims[1], a.data);
    return out;
  }
  require(a.dims.size() == 3, std::string(what) + " must be a 2-D array or a 3-D stack");
  const std::size_t rows = a.dims[1];
  const std::size_t cols = a.dims[2];
  for (std::size_t c = 0; c < a.dims[0]; ++c) {
    const auto first = a.data.begin() + static_cast<std::ptrdiff_t>(c * rows * cols);
    out.emplace_back(rows, cols, ComplexVector(first, first + static_cast<std::ptrdiff_t>(rows * cols)));
  }
  return out;
}

template <typename Tag>
GcpxArray stack(const std::vector<Array2D<Tag>>& items, bool as_stack) {
  GcpxArray a;
  const auto rows = static_cast<std::uint32_t>(items.front().rows());
  const auto cols = static_cast<std::uint32_t>(items.front().cols());
  if (as_stack) {
    a.dims = {static_cast<std::uint32_t>(items.size()), rows, cols};
  } else {
    a.dims = {rows, cols};
  }
  for (const auto& item : items) a.data.insert(a.data.end(), item.values().begin(), item.values().end());
  return a;
}

// Text sink: the -o file when given, otherwise the caller's stream.
class TextOutput {
 public:
  TextOutput(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

ComplexImage random_image(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
  ComplexImage x(m, n);
  for (auto& v : x.values()) {
    const double re = unit();
    v = Complex(re, unit());
  }
  return x;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

// --- subcommands -----------------------------------------------------------

struct DomainCmd {
  TransformFlags f;
  std::string output;

  void run(std::ostream& out) const {
    const auto spec = make_spec(f);
    const auto points = galfd_points(spec);
    TextOutput sink(output, out);
    auto& os = sink.stream();
    os << "K,I,theta,xi,upsilon\n";
    const auto M = static_cast<std::size_t>(spec.M);
    for (std::size_t K = 0; K < spec.angles.size(); ++K) {
      const double theta = spec.angles[K];
      const int first = ray_family(theta) == RayFamily::vertical ? -spec.M / 2 + 1 : -spec.M / 2;
      for (std::size_t k = 0; k < M; ++k) {
        const auto& p = points[K * M + k];
        os << K << ',' << first + static_cast<int>(k) << ',' << fmt17(theta) << ','
           << fmt17(p.xi) << ',' << fmt17(p.upsilon) << '\n';
      }
    }
    sink.finish();
  }
};

struct PhantomCmd {
  std::size_t m = 64;
  std::size_t n = 64;
  std::string kind = "ellipses";
  std::uint64_t seed = 0;
  std::size_t coils = 1;
  std::string output;

  void run() const {
    require(coils >= 1, "--coils must be at least 1");
    const auto x = make_phantom({m, n, parse_phantom_kind(kind), seed});
    if (coils == 1) {
      write_gcpx(output, stack(std::vector<ComplexImage>{x}, false));
      return;
    }
    auto maps = make_sensitivities(m, n, coils);
    for (auto& map : maps) {
      auto v = map.values();
      for (std::size_t p = 0; p < v.size(); ++p) v[p] *= x.values()[p];
    }
    write_gcpx(output, stack(maps, true));
  }
};

struct ForwardCmd {
  TransformFlags f;
  std::string input;
  std::string output;
  bool exact = false;  // oracle subcommand

  void run() const {
    const auto in = read_gcpx(input);
    const auto images = unstack<ImageTag>(in, "input image");
    const auto spec = make_spec(f);
    const std::size_t m = images.front().rows();
    const std::size_t n = images.front().cols();
    std::unique_ptr<LinearOperator> op;
    if (exact) {
      op = std::make_unique<DirectGalfdOperator>(spec, m, n, resolve_threads(f.threads));
    } else {
      op = std::make_unique<GalfdOperator>(spec, m, n, make_settings(f));
    }
    std::vector<RaySamples> ys;
    for (const auto& x : images) ys.push_back(op->forward(x));
    write_gcpx(output, stack(ys, in.dims.size() == 3));
  }
};

struct AdjointCmd {
  TransformFlags f;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string input;
  std::string output;

  void run() const {
    const auto in = read_gcpx(input);
    const auto samples = unstack<RayTag>(in, "input samples");
    const GalfdOperator op(make_spec(f), m, n, make_settings(f));
    std::vector<ComplexImage> xs;
    for (const auto& y : samples) xs.push_back(op.adjoint(y));
    write_gcpx(output, stack(xs, in.dims.size() == 3));
  }
};

struct BoundCmd {
  int M = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string sigma = "auto";
  std::vector<int> NL;
  std::vector<int> S{2, 4, 8};
  double eps = kDefaultEpsilon;
  double l1 = 1.0;
  std::string output;

  void run(std::ostream& out) const {
    require(M > 0 && M % 2 == 0, "--M must be a positive even integer");
    require(static_cast<std::size_t>(M) >= m, "M >= m violated");
    require(l1 >= 0.0, "--l1 must be non-negative");
    const double s = resolve_sigma(sigma, M);
    const auto lengths = NL.empty() ? std::vector<int>{default_fourier_length(n)} : NL;
    const int R1 = M / 2 - 1;  // vertical family
    TextOutput sink(output, out);
    auto& os = sink.stream();
    os << "I,NL,S,bound\n";
    for (int nl : lengths) {
      for (int sv : S) {
        for (int row = 0; row < M; ++row) {
          const auto wp = window_params(row - R1, M, static_cast<int>(n), nl, sv, s, eps);
          os << row - R1 << ',' << nl << ',' << sv << ',' << fmt17(error_bound(sv, wp, l1))
             << '\n';
        }
      }
    }
    sink.finish();
  }
};

struct BenchCmd {
  TransformFlags f;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<int> S{2, 4, 6, 8};
  std::vector<int> P;
  std::vector<int> NL;
  std::uint64_t seed = 0;
  int repeats = 1;
  bool skip_zeros = false;
  std::string input;
  std::string output;

  void run(std::ostream& out) const {
    require(repeats >= 1, "--repeats must be at least 1");
    require(P.empty() || NL.empty(), "--P and --NL are mutually exclusive");
    const auto spec = make_spec(f);
    const ComplexImage x = input.empty() ? random_image(m, n, seed)
                                         : unstack<ImageTag>(read_gcpx(input), "input image").front();
    const int threads = resolve_threads(f.threads);
    const auto reference = DirectGalfdOperator(spec, x.rows(), x.cols(), threads).forward(x);
    const double l1 = l1_norm(x);

    // Build every plan first so an invalid grid point fails before any output.
    std::vector<std::pair<int, int>> grid;
    for (int sv : S) {
      if (!P.empty()) {
        for (int p : P) grid.emplace_back(sv, fourier_length_for_czt_length(p, sv));
      } else if (!NL.empty()) {
        for (int nl : NL) grid.emplace_back(sv, nl);
      } else {
        grid.emplace_back(sv, default_fourier_length(std::max(x.rows(), x.cols())));
      }
    }
    std::vector<GalfdOperator> ops;
    for (const auto& [sv, nl] : grid) {
      GaleSettings settings;
      settings.S = sv;
      settings.epsilon = f.eps;
      settings.fourier_length = nl;
      settings.threads = threads;
      ops.emplace_back(spec, x.rows(), x.cols(), settings);
    }

    TextOutput sink(output, out);
    auto& os = sink.stream();
    for (const auto& op : ops) {
      const int sv = op.settings().S;
      RaySamples y;
      std::vector<double> times;
      for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        y = op.forward(x);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        times.push_back(dt.count());
      }
      const auto bounds = op.error_bounds(l1);
      nlohmann::ordered_json row;
      row["S"] = sv;
      row["P"] = op.fourier_length() / 2 + 2 * (sv + 1);
      row["NL"] = op.fourier_length();
      if (skip_zeros) {
        std::size_t skipped = 0;
        row["mre"] = mre_skip_zeros(reference.values(), y.values(), skipped);
        row["mre_skipped"] = skipped;
      } else {
        row["mre"] = mre(reference.values(), y.values());
      }
      row["rse"] = rse(reference.values(), y.values());
      row["max_abs"] = max_abs_error(reference.values(), y.values());
      row["bound"] = *std::max_element(bounds.begin(), bounds.end());
      row["elapsed_seconds"] = median(times);
      os << row.dump() << '\n';
    }
    sink.finish();
  }
};

struct FbpCmd {
  TransformFlags f;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string input;
  std::string output;

  void run() const {
    CoilData data;
    data.coils = unstack<RayTag>(read_gcpx(input), "input samples");
    const auto spec = make_spec(f);
    const auto x = fbp_reconstruct(data, spec, m, n, make_settings(f));
    write_gcpx(output, stack(std::vector<ComplexImage>{x}, false));
  }
};

struct CgCmd {
  TransformFlags f;
  std::size_t m = 0;
  std::size_t n = 0;
  int iters = 20;
  std::string input;
  std::string x0_path;
  std::string residuals;
  std::string output;

  void run(std::ostream& err) const {
    const auto samples = unstack<RayTag>(read_gcpx(input), "input samples");
    require(samples.size() == 1, "cg expects single-coil samples");
    const GalfdOperator op(make_spec(f), m, n, make_settings(f));
    ComplexImage x0(m, n);
    if (!x0_path.empty()) {
      x0 = unstack<ImageTag>(read_gcpx(x0_path), "x0").front();
    }
    const auto result = cg_least_squares(op, samples.front(), x0, iters);
    if (result.breakdown) {
      err << "cg: stopped after " << result.iterations << " iterations (zero curvature)\n";
    }
    write_gcpx(output, stack(std::vector<ComplexImage>{result.x}, false));
    if (!residuals.empty()) {
      std::ofstream csv(residuals);
      if (!csv) throw IoError("cannot open '" + residuals + "' for writing");
      csv << "iteration,residual,normal_residual\n";
      for (std::size_t k = 0; k < result.residual_norms.size(); ++k) {
        csv << k << ',' << fmt17(result.residual_norms[k]) << ','
            << fmt17(result.normal_residual_norms[k]) << '\n';
      }
      if (!csv) throw IoError("write failed: " + residuals);
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golden-angle linogram DTFT evaluation", "gale"};
  app.require_subcommand(1);

  DomainCmd domain;
  auto* domain_cmd = app.add_subcommand("domain", "write GALFD points as CSV K,I,theta,xi,upsilon");
  add_domain_flags(domain_cmd, domain.f);
  domain_cmd->add_option("-o,--output", domain.output, "CSV path (default: stdout)");

  PhantomCmd phantom;
  auto* phantom_cmd = app.add_subcommand("phantom", "write a synthetic image (or coil stack)");
  phantom_cmd->add_option("--m", phantom.m, "rows")->capture_default_str();
  phantom_cmd->add_option("--n", phantom.n, "columns")->capture_default_str();
  phantom_cmd->add_option("--kind", phantom.kind, "ellipses, bars or delta")->capture_default_str();
  phantom_cmd->add_option("--seed", phantom.seed)->capture_default_str();
  phantom_cmd->add_option("--coils", phantom.coils, "coil count; >1 writes [C,m,n]")
      ->capture_default_str();
  phantom_cmd->add_option("-o,--output", phantom.output)->required();

  ForwardCmd forward;
  auto* forward_cmd = app.add_subcommand("forward", "GALE forward transform of an image");
  add_domain_flags(forward_cmd, forward.f);
  add_gale_flags(forward_cmd, forward.f);
  add_threads_flag(forward_cmd, forward.f.threads);
  forward_cmd->add_option("-i,--input", forward.input)->required();
  forward_cmd->add_option("-o,--output", forward.output)->required();

  ForwardCmd oracle;
  oracle.exact = true;
  auto* oracle_cmd = app.add_subcommand("oracle", "direct DTFT on the GALFD points");
  add_domain_flags(oracle_cmd, oracle.f);
  add_gale_flags(oracle_cmd, oracle.f);  // accepted for symmetry with forward, unused
  add_threads_flag(oracle_cmd, oracle.f.threads);
  oracle_cmd->add_option("-i,--input", oracle.input)->required();
  oracle_cmd->add_option("-o,--output", oracle.output)->required();

  AdjointCmd adjoint;
  auto* adjoint_cmd = app.add_subcommand("adjoint", "GALE adjoint of ray samples");
  add_domain_flags(adjoint_cmd, adjoint.f);
  add_gale_flags(adjoint_cmd, adjoint.f);
  add_threads_flag(adjoint_cmd, adjoint.f.threads);
  adjoint_cmd->add_option("--m", adjoint.m, "image rows")->required();
  adjoint_cmd->add_option("--n", adjoint.n, "image columns")->required();
  adjoint_cmd->add_option("-i,--input", adjoint.input)->required();
  adjoint_cmd->add_option("-o,--output", adjoint.output)->required();

  BoundCmd bound;
  auto* bound_cmd = app.add_subcommand("bound", "error bound table as CSV I,NL,S,bound");
  bound_cmd->add_option("--M", bound.M)->required();
  bound_cmd->add_option("--m", bound.m)->required();
  bound_cmd->add_option("--n", bound.n)->required();
  bound_cmd->add_option("--sigma", bound.sigma)->capture_default_str();
  bound_cmd->add_option("--NL", bound.NL, "comma separated")->delimiter(',');
  bound_cmd->add_option("--S", bound.S, "comma separated")->delimiter(',')->capture_default_str();
  bound_cmd->add_option("--eps", bound.eps)->capture_default_str();
  bound_cmd->add_option("--l1", bound.l1, "||x||_1 the bound is scaled by")->capture_default_str();
  bound_cmd->add_option("-o,--output", bound.output, "CSV path (default: stdout)");

  BenchCmd bench;
  auto* bench_cmd = app.add_subcommand("bench", "GALE vs direct DTFT over an (S, P) grid, JSON lines");
  add_domain_flags(bench_cmd, bench.f);
  bench_cmd->add_option("--m", bench.m)->required();
  bench_cmd->add_option("--n", bench.n)->required();
  bench_cmd->add_option("--S", bench.S, "comma separated")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--P", bench.P, "comma separated CZT lengths")->delimiter(',');
  bench_cmd->add_option("--NL", bench.NL, "comma separated Fourier lengths")->delimiter(',');
  bench_cmd->add_option("--eps", bench.f.eps)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "seed of the random test image")->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "timed repetitions (median reported)")
      ->capture_default_str();
  bench_cmd->add_flag("--mre-skip-zeros", bench.skip_zeros,
                      "skip zero reference entries in mre and report their count");
  add_threads_flag(bench_cmd, bench.f.threads);
  bench_cmd->add_option("-i,--input", bench.input, "test image (default: random)");
  bench_cmd->add_option("-o,--output", bench.output, "JSON lines path (default: stdout)");

  FbpCmd fbp;
  auto* fbp_cmd = app.add_subcommand("fbp", "density-compensated adjoint, root-sum-of-squares combine");
  add_domain_flags(fbp_cmd, fbp.f);
  add_gale_flags(fbp_cmd, fbp.f);
  add_threads_flag(fbp_cmd, fbp.f.threads);
  fbp_cmd->add_option("--m", fbp.m, "image rows")->required();
  fbp_cmd->add_option("--n", fbp.n, "image columns")->required();
  fbp_cmd->add_option("-i,--input", fbp.input)->required();
  fbp_cmd->add_option("-o,--output", fbp.output)->required();

  CgCmd cg;
  auto* cg_cmd = app.add_subcommand("cg", "conjugate gradients on the normal equations");
  add_domain_flags(cg_cmd, cg.f);
  add_gale_flags(cg_cmd, cg.f);
  add_threads_flag(cg_cmd, cg.f.threads);
  cg_cmd->add_option("--m", cg.m, "image rows")->required();
  cg_cmd->add_option("--n", cg.n, "image columns")->required();
  cg_cmd->add_option("--iters", cg.iters)->capture_default_str();
  cg_cmd->add_option("--x0", cg.x0_path, "initial image (default: zero)");
  cg_cmd->add_option("--residuals", cg.residuals, "CSV iteration,residual,normal_residual");
  cg_cmd->add_option("-i,--input", cg.input)->required();
  cg_cmd->add_option("-o,--output", cg.output)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (domain_cmd->parsed()) domain.run(out);
    if (phantom_cmd->parsed()) phantom.run();
    if (forward_cmd->parsed()) forward.run();
    if (oracle_cmd->parsed()) oracle.run();
    if (adjoint_cmd->parsed()) adjoint.run();
    if (bound_cmd->parsed()) bound.run(out);
    if (bench_cmd->parsed()) bench.run(out);
    if (fbp_cmd->parsed()) fbp.run();
    if (cg_cmd->parsed()) cg.run(err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace gale::cli
