#include "hyperball/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyperball/charfn.hpp"
#include "hyperball/convergence.hpp"
#include "hyperball/errors.hpp"
#include "hyperball/format.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/marginal.hpp"
#include "hyperball/sampling.hpp"

namespace hyperball::cli {

namespace {

long long parse_int(std::string_view s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

class CsvWriter {
public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(std::initializer_list<std::string_view> cols) {
    bool first = true;
    for (auto c : cols) {
      if (!first) os_ << ',';
      os_ << c;
      first = false;
    }
    os_ << '\n';
  }

  template <typename... Ts>
  void row(const Ts&... values) {
    bool first = true;
    ((emit(values, first)), ...);
    os_ << '\n';
  }

private:
  void emit(double v, bool& first) { sep(first); os_ << format_number(v); }
  void emit(int v, bool& first) { sep(first); os_ << v; }
  void emit(std::size_t v, bool& first) { sep(first); os_ << v; }
  void sep(bool& first) {
    if (!first) os_ << ',';
    first = false;
  }

  std::ostream& os_;
};

// Options shared by the grid-evaluating commands.
struct GridOptions {
  std::optional<long long> n;
  std::optional<std::string> dims;
  GridSpec grid;
};

void add_grid_options(CLI::App* cmd, GridOptions& o, double lo, double hi, int steps) {
  o.grid = {lo, hi, steps};
  auto* n_opt = cmd->add_option("--n", o.n, "Dimension");
  auto* dims_opt = cmd->add_option("--dims", o.dims, "Dimensions: a..b or a,b,c");
  n_opt->excludes(dims_opt);
  cmd->add_option("--lo", o.grid.lo, "Grid start")->capture_default_str();
  cmd->add_option("--hi", o.grid.hi, "Grid end")->capture_default_str();
  cmd->add_option("--steps", o.grid.steps, "Grid points")->capture_default_str();
}

std::vector<Dimension> resolve_dims(const GridOptions& o, std::vector<Dimension> fallback) {
  if (o.n) return {Dimension(*o.n)};
  if (o.dims) return parse_dims(*o.dims);
  if (fallback.empty()) throw DomainError("one of --n or --dims is required");
  return fallback;
}

void cmd_density(const GridOptions& o, bool cumulative, std::ostream& os) {
  o.grid.validate();
  const auto dims = resolve_dims(o, {});
  const auto xs = o.grid.points();
  const bool surface = o.dims.has_value();
  const std::string_view value_col = cumulative ? "cdf" : "pdf";
  CsvWriter csv(os);
  if (surface) csv.header({"n", "x", value_col}); else csv.header({"x", value_col});

  std::vector<double> values(xs.size());
  for (const Dimension n : dims) {
    const marginal::MarginalDist d(n);
    if (cumulative) {
      std::transform(xs.begin(), xs.end(), values.begin(), [&d](double x) { return marginal::cdf(d, x); });
    } else {
      marginal::pdf_grid(d, xs, values);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (surface) csv.row(n.value(), xs[i], values[i]); else csv.row(xs[i], values[i]);
    }
  }
}

void cmd_charfn(long long n_raw, const GridSpec& grid, const std::string& form, std::ostream& os) {
  grid.validate();
  const Dimension n(n_raw);
  if (form == "quad" && n.value() > 50) throw DomainError("--form quad supports n <= 50");
  CsvWriter csv(os);
  csv.header({"t", "phi_n", "phi_gauss", "abs_err"});
  for (double t : grid.points()) {
    double phi = 0.0;
    if (form == "hyp" || (form == "bessel" && t == 0.0)) {
      phi = charfn::charfn_hyp(n, t);
    } else if (form == "bessel") {
      phi = charfn::charfn_bessel(n, t);
    } else {
      phi = charfn::charfn_quad(n, t);
    }
    const double gauss = charfn::charfn_gauss_limit(t);
    csv.row(t, phi, gauss, std::fabs(phi - gauss));
  }
}

void cmd_volume(const GridOptions& o, std::ostream& os) {
  std::vector<Dimension> fallback;
  for (int n = 1; n <= 30; ++n) fallback.emplace_back(n);
  const auto dims = resolve_dims(o, fallback);
  CsvWriter csv(os);
  csv.header({"n", "volume", "log_volume", "cube_ratio"});
  for (const Dimension n : dims) {
    csv.row(n.value(), geometry::ball_volume(n), geometry::log_ball_volume(n), geometry::cube_ratio(n));
  }
}

struct SampleOptions {
  long long n = 0;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::string method = "dir-radius";
  int bins = 0;
  bool rescale = false;
};

void cmd_sample(const SampleOptions& o, std::ostream& os) {
  const Dimension n(o.n);
  if (o.count == 0) throw DomainError("--count must be >= 1");
  if (o.bins < 0) throw DomainError("--bins must be positive");
  const auto method = sampling::parse_method(o.method);
  std::vector<double> xs = sampling::sample_coordinate_streams(n, method, o.count, o.seed);
  if (o.rescale) xs = sampling::rescale_z(xs, n);
  const double half_range = o.rescale ? std::sqrt(n.as_double() + 2.0) : 1.0;

  CsvWriter csv(os);
  if (o.bins == 0) {
    csv.header({o.rescale ? "z" : "x"});
    for (double x : xs) csv.row(x);
    return;
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(o.bins), 0);
  const double width = 2.0 * half_range / o.bins;
  for (double x : xs) {
    auto b = static_cast<long long>(std::floor((x + half_range) / width));
    b = std::clamp<long long>(b, 0, o.bins - 1);
    ++counts[static_cast<std::size_t>(b)];
  }
  csv.header({"bin_lo", "bin_hi", "count"});
  for (int b = 0; b < o.bins; ++b) {
    csv.row(-half_range + b * width, -half_range + (b + 1) * width, counts[static_cast<std::size_t>(b)]);
  }
}

void cmd_converge(const std::optional<std::string>& dims_text, std::ostream& os) {
  const auto dims = dims_text ? parse_dims(*dims_text) : convergence::default_report_dims();
  const auto report = convergence::build_report(dims);
  CsvWriter csv(os);
  csv.header({"n", "pdf_sup_err", "cf_sup_err"});
  for (std::size_t i = 0; i < report.dims.size(); ++i) {
    csv.row(report.dims[i].value(), report.pdf_sup_err[i], report.cf_sup_err[i]);
  }
}

} // namespace

void GridSpec::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) throw DomainError("grid: need lo < hi");
  if (steps < 2) throw DomainError("grid: need steps >= 2");
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> xs(static_cast<std::size_t>(steps));
  const double step = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) xs[static_cast<std::size_t>(i)] = lo + i * step;
  return xs;
}

std::vector<Dimension> parse_dims(const std::string& text) {
  std::vector<Dimension> dims;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long long a = parse_int(std::string_view(text).substr(0, dots));
    const long long b = parse_int(std::string_view(text).substr(dots + 2));
    if (a > b) throw DomainError("--dims range must be ascending");
    for (long long n = a; n <= b; ++n) dims.emplace_back(n);
    return dims;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) dims.emplace_back(parse_int(item));
  if (dims.empty()) throw DomainError("--dims is empty");
  return dims;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marginal law of a coordinate of a uniform point in the unit n-ball", "hyperball-cli"};
  app.require_subcommand(1);
  std::optional<std::string> out_path;
  app.add_option("--out", out_path, "Write CSV to this file instead of stdout");

  GridOptions pdf_opts;
  auto* pdf_cmd = app.add_subcommand("pdf", "Density f_n(x) on a grid");
  add_grid_options(pdf_cmd, pdf_opts, -1.0, 1.0, 201);
  pdf_cmd->add_option("--out", out_path, "Output file");

  GridOptions cdf_opts;
  auto* cdf_cmd = app.add_subcommand("cdf", "Distribution function on a grid");
  add_grid_options(cdf_cmd, cdf_opts, -1.0, 1.0, 201);
  cdf_cmd->add_option("--out", out_path, "Output file");

  long long cf_n = 0;
  GridSpec cf_grid{0.0, 3.0, 25};
  std::string cf_form = "hyp";
  auto* cf_cmd = app.add_subcommand("charfn", "Characteristic function of sqrt(n+2) x vs exp(-t^2/2)");
  cf_cmd->add_option("--n", cf_n, "Dimension")->required();
  cf_cmd->add_option("--lo", cf_grid.lo, "First t")->capture_default_str();
  cf_cmd->add_option("--hi", cf_grid.hi, "Last t")->capture_default_str();
  cf_cmd->add_option("--steps", cf_grid.steps, "Number of t values")->capture_default_str();
  cf_cmd->add_option("--form", cf_form, "hyp, bessel or quad")
      ->check(CLI::IsMember({"hyp", "bessel", "quad"}))
      ->capture_default_str();
  cf_cmd->add_option("--out", out_path, "Output file");

  GridOptions vol_opts;
  auto* vol_cmd = app.add_subcommand("volume", "Unit-ball volume, its log, and ratio to the cube");
  auto* vol_n = vol_cmd->add_option("--n", vol_opts.n, "Dimension");
  vol_cmd->add_option("--dims", vol_opts.dims, "Dimensions: a..b or a,b,c (default 1..30)")->excludes(vol_n);
  vol_cmd->add_option("--out", out_path, "Output file");

  SampleOptions sample_opts;
  auto* sample_cmd = app.add_subcommand("sample", "Draw first coordinates of uniform ball points");
  sample_cmd->add_option("--n", sample_opts.n, "Dimension")->required();
  sample_cmd->add_option("--count", sample_opts.count, "Number of draws")->capture_default_str();
  sample_cmd->add_option("--seed", sample_opts.seed, "Generator seed")->capture_default_str();
  sample_cmd->add_option("--method", sample_opts.method, "reject-cube or dir-radius")
      ->check(CLI::IsMember({"reject-cube", "dir-radius"}))
      ->capture_default_str();
  sample_cmd->add_option("--bins", sample_opts.bins, "Emit a histogram with this many bins");
  sample_cmd->add_flag("--rescale", sample_opts.rescale, "Emit z = sqrt(n+2) x");
  sample_cmd->add_option("--out", out_path, "Output file");

  std::optional<std::string> conv_dims;
  auto* conv_cmd = app.add_subcommand("converge", "Distance of the rescaled law to the standard normal");
  conv_cmd->add_option("--dims", conv_dims, "Dimensions (default 1,2,4,...,256)");
  conv_cmd->add_option("--out", out_path, "Output file");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("hyperball-cli");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::ofstream file;
    if (out_path) {
      file.open(*out_path);
      if (!file) {
        err << "error: cannot open " << *out_path << '\n';
        return kExitUsage;
      }
    }
    std::ostream& os = out_path ? static_cast<std::ostream&>(file) : out;

    if (pdf_cmd->parsed()) cmd_density(pdf_opts, false, os);
    else if (cdf_cmd->parsed()) cmd_density(cdf_opts, true, os);
    else if (cf_cmd->parsed()) cmd_charfn(cf_n, cf_grid, cf_form, os);
    else if (vol_cmd->parsed()) cmd_volume(vol_opts, os);
    else if (sample_cmd->parsed()) cmd_sample(sample_opts, os);
    else if (conv_cmd->parsed()) cmd_converge(conv_dims, os);
    os.flush();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

} // namespace hyperball::cli
