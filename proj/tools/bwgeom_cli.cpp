#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "bwgeom/bw_core.hpp"
#include "bwgeom/classical.hpp"
#include "bwgeom/density.hpp"
#include "bwgeom/io.hpp"
#include "bwgeom/qmetrics.hpp"
#include "bwgeom/types.hpp"

namespace {

using namespace bwgeom;

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitNumerical = 4;

// fisher-metric tangents are plain real vectors, not measures
RVector as_measure_tangent(const VectorFile& f) {
  const double scale = std::max(1.0, f.data.cwiseAbs().maxCoeff());
  for (Index i = 0; i < f.data.size(); ++i) {
    if (std::abs(f.data(i).imag()) > 1e-12 * scale) {
      throw validation_error("tangent entries must be real");
    }
  }
  return f.data.real();
}

struct Options {
  std::string space;
  std::string metric;
  std::string path_a;
  std::string path_b;
  std::string path_base;
  std::string path_h;
  std::string path_k;
  std::string dir;
  int steps = 10;
  bool arclength = false;
  double tol_pd = -1.0;
};

int run_dist(const Options& opt) {
  double d = 0.0;
  if (opt.space == "pn") {
    d = bw_distance_pn(as_pd(read_matrix_file(opt.path_a)),
                       as_pd(read_matrix_file(opt.path_b)));
  } else if (opt.space == "dn") {
    d = bw_distance_dn(as_density(read_matrix_file(opt.path_a)),
                       as_density(read_matrix_file(opt.path_b)));
  } else if (opt.space == "hellinger") {
    d = hellinger_distance(as_measure(read_vector_file(opt.path_a)),
                           as_measure(read_vector_file(opt.path_b)));
  } else if (opt.space == "fisher") {
    d = fisher_distance(as_prob(read_vector_file(opt.path_a)),
                        as_prob(read_vector_file(opt.path_b)));
  } else {  // fs
    d = fubini_study_distance(as_pure_state(read_vector_file(opt.path_a)),
                              as_pure_state(read_vector_file(opt.path_b)));
  }
  std::cout << "{\"distance\": " << format_number(d) << "}\n";
  return 0;
}

template <typename Geodesic>
int emit_geodesic(const Geodesic& geo, const Options& opt, const std::string& kind) {
  std::vector<double> params;
  double constant_speed = 0.0;
  if (opt.arclength) {
    params = geo.equispaced_arclength_params(opt.steps);
    constant_speed = geo.length();
  } else {
    params.reserve(static_cast<size_t>(opt.steps) + 1);
    for (int k = 0; k <= opt.steps; ++k) {
      params.push_back(static_cast<double>(k) / opt.steps);
    }
  }
  std::cout << "[\n";
  for (size_t i = 0; i < params.size(); ++i) {
    const auto s = geo.sample(params[i]);
    // with --arclength the parameter runs at d(length)/d(sample) = total
    // length, which is the reported speed; otherwise the raw t-speed
    const double speed = opt.arclength ? constant_speed : s.speed;
    std::cout << "{\"t\": " << format_number(params[i])
              << ", \"point\": " << matrix_to_json(s.point.mat(), kind)
              << ", \"speed\": " << format_number(speed) << "}";
    std::cout << (i + 1 < params.size() ? ",\n" : "\n");
  }
  std::cout << "]\n";
  return 0;
}

int run_geodesic(const Options& opt) {
  if (opt.steps < 1) {
    std::cerr << "geodesic: --steps must be >= 1\n";
    return kExitUsage;
  }
  if (opt.space == "pn") {
    const GeodesicPn geo(as_pd(read_matrix_file(opt.path_a)),
                         as_pd(read_matrix_file(opt.path_b)));
    return emit_geodesic(geo, opt, "pd");
  }
  const GeodesicDn geo(as_density(read_matrix_file(opt.path_a)),
                       as_density(read_matrix_file(opt.path_b)));
  return emit_geodesic(geo, opt, "density");
}

int run_metric(const Options& opt) {
  double v = 0.0;
  if (opt.metric == "fisher") {
    const PositiveMeasure base = as_measure(read_vector_file(opt.path_base));
    const RVector h = as_measure_tangent(read_vector_file(opt.path_h));
    const RVector k = as_measure_tangent(read_vector_file(opt.path_k));
    v = fisher_metric(base, h, k);
  } else if (opt.metric == "sld" || opt.metric == "bogoliubov") {
    const DensityMatrix base = as_density(read_matrix_file(opt.path_base));
    const HermitianMatrix h = as_hermitian(read_matrix_file(opt.path_h));
    const HermitianMatrix k = as_hermitian(read_matrix_file(opt.path_k));
    v = opt.metric == "sld" ? sld_metric(base, h, k) : bogoliubov_metric(base, h, k);
  } else {
    const PDMatrix base = as_pd(read_matrix_file(opt.path_base));
    const HermitianMatrix h = as_hermitian(read_matrix_file(opt.path_h));
    const HermitianMatrix k = as_hermitian(read_matrix_file(opt.path_k));
    if (opt.metric == "bw") {
      v = bw_metric(base, h, k);
    } else if (opt.metric == "wy") {
      v = wigner_yanase_metric(base, h, k);
    } else {  // gh
      v = horizontal_metric_gh(base, h, k);
    }
  }
  std::cout << "{\"value\": " << format_number(v) << "}\n";
  return 0;
}

int run_batch_dist(const Options& opt) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  {
    std::error_code ec;
    fs::directory_iterator it(opt.dir, ec);
    if (ec) {
      std::cerr << "batch-dist: cannot read directory " << opt.dir << "\n";
      return kExitUsage;
    }
    for (const auto& entry : it) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty()) {
    std::cerr << "batch-dist: no files in " << opt.dir << "\n";
    return kExitUsage;
  }

  // load and validate everything up front so a bad file aborts before work starts
  const size_t n = files.size();
  std::vector<PDMatrix> pd;
  std::vector<DensityMatrix> dens;
  for (const auto& f : files) {
    try {
      if (opt.space == "pn") {
        pd.push_back(as_pd(read_matrix_file(f.string())));
      } else {
        dens.push_back(as_density(read_matrix_file(f.string())));
      }
    } catch (const validation_error& e) {
      std::cerr << f.filename().string() << ": " << e.what() << "\n";
      return kExitInvariant;
    }
  }

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> dist(n * n, 0.0);
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= pairs.size() || failed.load()) return;
      const auto [i, j] = pairs[k];
      try {
        const double d = opt.space == "pn" ? bw_distance_pn(pd[i], pd[j])
                                           : bw_distance_dn(dens[i], dens[j]);
        dist[i * n + j] = d;
        dist[j * n + i] = d;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const size_t nthreads = std::min<size_t>(hw, std::max<size_t>(pairs.size(), 1));
  std::vector<std::thread> threads;
  for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);

  for (size_t j = 0; j < n; ++j) std::cout << "," << files[j].filename().string();
  std::cout << "\n";
  for (size_t i = 0; i < n; ++i) {
    std::cout << files[i].filename().string();
    for (size_t j = 0; j < n; ++j) std::cout << "," << format_number(dist[i * n + j]);
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bures-Wasserstein geometry on positive definite matrices"};
  app.require_subcommand(1);

  Options opt;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol-pd", opt.tol_pd,
                    "relative positive-definiteness tolerance override");
  };

  CLI::App* dist = app.add_subcommand("dist", "distance between two points");
  dist->add_option("--space", opt.space, "pn|dn|hellinger|fisher|fs")
      ->required()
      ->check(CLI::IsMember({"pn", "dn", "hellinger", "fisher", "fs"}));
  dist->add_option("a", opt.path_a, "first input file")->required();
  dist->add_option("b", opt.path_b, "second input file")->required();
  add_tol(dist);

  CLI::App* geo = app.add_subcommand("geodesic", "sample the geodesic between two points");
  geo->add_option("--space", opt.space, "pn|dn")
      ->required()
      ->check(CLI::IsMember({"pn", "dn"}));
  geo->add_option("--steps", opt.steps, "number of segments (K+1 samples)");
  geo->add_flag("--arclength", opt.arclength, "equispace samples in integrated length");
  geo->add_option("a", opt.path_a, "start point file")->required();
  geo->add_option("b", opt.path_b, "end point file")->required();
  add_tol(geo);

  CLI::App* met = app.add_subcommand("metric", "metric value at a base point");
  met->add_option("--metric", opt.metric, "bw|sld|bogoliubov|wy|gh|fisher")
      ->required()
      ->check(CLI::IsMember({"bw", "sld", "bogoliubov", "wy", "gh", "fisher"}));
  met->add_option("base", opt.path_base, "base point file")->required();
  met->add_option("H", opt.path_h, "first tangent file")->required();
  met->add_option("K", opt.path_k, "second tangent file")->required();
  add_tol(met);

  CLI::App* batch = app.add_subcommand("batch-dist", "CSV distance matrix for a directory");
  batch->add_option("--space", opt.space, "pn|dn")
      ->required()
      ->check(CLI::IsMember({"pn", "dn"}));
  batch->add_option("dir", opt.dir, "directory of matrix files")->required();
  add_tol(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (opt.tol_pd > 0.0) tolerances().pd = opt.tol_pd;

  try {
    if (dist->parsed()) return run_dist(opt);
    if (geo->parsed()) return run_geodesic(opt);
    if (met->parsed()) return run_metric(opt);
    return run_batch_dist(opt);
  } catch (const parse_error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const validation_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvariant;
  } catch (const domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvariant;
  } catch (const numerical_error& e) {
    std::cerr << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
