#include "chainsim/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "chainsim/errors.hpp"

namespace chainsim {

namespace {

double metric_value(const MetricsRecord& r, int field) {
  switch (field) {
    case 0: return r.mean_fitness;
    case 1: return static_cast<double>(r.diversity);
    case 2: return r.mean_chain_length;
    default: return r.fraction_optimal_base;
  }
}

double& stat_field(MetricsStat& s, int field) {
  switch (field) {
    case 0: return s.mean_fitness;
    case 1: return s.diversity;
    case 2: return s.mean_chain_length;
    default: return s.fraction_optimal_base;
  }
}

}  // namespace

AggregateSeries run_batch(const WorldConfig& config, int runs, std::uint64_t base_seed,
                          int threads) {
  if (runs < 1) throw std::invalid_argument("run_batch: runs must be >= 1");
  if (threads < 1) threads = 1;

  std::vector<std::vector<MetricsRecord>> results(static_cast<std::size_t>(runs));
  const auto execute = [&](int run_index) {
    WorldConfig run_config = config;
    run_config.seed = base_seed + static_cast<std::uint64_t>(run_index);
    results[static_cast<std::size_t>(run_index)] = run(run_config);
  };

  if (threads == 1 || runs == 1) {
    for (int r = 0; r < runs; ++r) execute(r);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int r = w; r < runs; r += threads) execute(r);
      });
    }
    for (std::thread& worker : workers) worker.join();
  }

  // Reduce in seed order: two passes, mean then population deviation.
  const std::size_t len = results.front().size();
  AggregateSeries series;
  series.points.resize(len);
  const double n = static_cast<double>(runs);
  for (std::size_t t = 0; t < len; ++t) {
    AggregatePoint& point = series.points[t];
    point.iteration = results.front()[t].iteration;
    for (int field = 0; field < 4; ++field) {
      double sum = 0.0;
      for (const auto& records : results) sum += metric_value(records[t], field);
      const double mean = sum / n;
      double sq = 0.0;
      for (const auto& records : results) {
        const double d = metric_value(records[t], field) - mean;
        sq += d * d;
      }
      stat_field(point.mean, field) = mean;
      stat_field(point.stddev, field) = std::sqrt(sq / n);
    }
  }
  return series;
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_decimal(double value) {
  std::string text = format_number(value);
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
    text += ".0";
  }
  return text;
}

std::string csv_text(const AggregateSeries& series) {
  std::string out =
      "iteration,mean_fitness,fitness_stddev,diversity,diversity_stddev,"
      "mean_chain_length,fraction_optimal_base\n";
  for (const AggregatePoint& p : series.points) {
    out += std::to_string(p.iteration);
    out += ',';
    out += format_decimal(p.mean.mean_fitness);
    out += ',';
    out += format_decimal(p.stddev.mean_fitness);
    out += ',';
    out += format_number(p.mean.diversity);
    out += ',';
    out += format_decimal(p.stddev.diversity);
    out += ',';
    out += format_decimal(p.mean.mean_chain_length);
    out += ',';
    out += format_decimal(p.mean.fraction_optimal_base);
    out += '\n';
  }
  return out;
}

void write_csv(const AggregateSeries& series, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open for writing: " + path.string());
  file << csv_text(series);
  if (!file) throw io_error("write failed: " + path.string());
}

namespace {

constexpr double kChartWidth = 960.0;
constexpr double kChartHeight = 540.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 55.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::function<double(const MetricsStat&)> metric_selector(const std::string& metric_name) {
  if (metric_name == "mean_fitness") return [](const MetricsStat& s) { return s.mean_fitness; };
  if (metric_name == "diversity") return [](const MetricsStat& s) { return s.diversity; };
  if (metric_name == "mean_chain_length") {
    return [](const MetricsStat& s) { return s.mean_chain_length; };
  }
  if (metric_name == "fraction_optimal_base") {
    return [](const MetricsStat& s) { return s.fraction_optimal_base; };
  }
  throw std::invalid_argument("render_chart: unknown metric " + metric_name);
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string chart_svg(const std::vector<AggregateSeries>& aggregates,
                      const std::string& metric_name) {
  if (aggregates.empty()) throw std::invalid_argument("render_chart: no series given");
  const std::size_t len = aggregates.front().points.size();
  if (len == 0) throw std::invalid_argument("render_chart: empty series");
  for (const AggregateSeries& s : aggregates) {
    if (s.points.size() != len) {
      throw std::invalid_argument("render_chart: series lengths differ");
    }
  }
  const auto select = metric_selector(metric_name);

  double y_max = 0.0;
  int x_max = 0;
  for (const AggregateSeries& s : aggregates) {
    for (const AggregatePoint& p : s.points) {
      y_max = std::max(y_max, select(p.mean));
      x_max = std::max(x_max, p.iteration);
    }
  }
  if (y_max <= 0.0) y_max = 1.0;
  if (x_max <= 0) x_max = 1;

  const double plot_w = kChartWidth - kMarginLeft - kMarginRight;
  const double plot_h = kChartHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double it) { return kMarginLeft + plot_w * (it / x_max); };
  const auto sy = [&](double v) { return kMarginTop + plot_h * (1.0 - v / y_max); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + coord(kChartWidth) + " " +
         coord(kChartHeight) + "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Gridlines and tick labels, five divisions per axis.
  for (int i = 0; i <= 5; ++i) {
    const double frac = i / 5.0;
    const double gx = kMarginLeft + plot_w * frac;
    const double gy = kMarginTop + plot_h * (1.0 - frac);
    svg += "<line x1=\"" + coord(gx) + "\" y1=\"" + coord(kMarginTop) + "\" x2=\"" + coord(gx) +
           "\" y2=\"" + coord(kMarginTop + plot_h) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<line x1=\"" + coord(kMarginLeft) + "\" y1=\"" + coord(gy) + "\" x2=\"" +
           coord(kMarginLeft + plot_w) + "\" y2=\"" + coord(gy) + "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + coord(gx) + "\" y=\"" + coord(kMarginTop + plot_h + 20.0) +
           "\" text-anchor=\"middle\">" + format_number(frac * x_max) + "</text>\n";
    svg += "<text x=\"" + coord(kMarginLeft - 8.0) + "\" y=\"" + coord(gy + 4.0) +
           "\" text-anchor=\"end\">" + format_number(std::round(frac * y_max * 100.0) / 100.0) +
           "</text>\n";
  }

  // Axes.
  svg += "<line x1=\"" + coord(kMarginLeft) + "\" y1=\"" + coord(kMarginTop) + "\" x2=\"" +
         coord(kMarginLeft) + "\" y2=\"" + coord(kMarginTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + coord(kMarginLeft) + "\" y1=\"" + coord(kMarginTop + plot_h) +
         "\" x2=\"" + coord(kMarginLeft + plot_w) + "\" y2=\"" + coord(kMarginTop + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + coord(kMarginLeft + plot_w / 2.0) + "\" y=\"" +
         coord(kChartHeight - 12.0) + "\" text-anchor=\"middle\">iteration</text>\n";
  svg += "<text x=\"18\" y=\"" + coord(kMarginTop + plot_h / 2.0) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         coord(kMarginTop + plot_h / 2.0) + ")\">" + xml_escape(metric_name) + "</text>\n";

  // Series polylines plus legend entries.
  for (std::size_t s = 0; s < aggregates.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    std::string pts;
    for (const AggregatePoint& p : aggregates[s].points) {
      pts += coord(sx(p.iteration)) + "," + coord(sy(select(p.mean))) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";

    const double ly = kMarginTop + 16.0 + 22.0 * static_cast<double>(s);
    const double lx = kChartWidth - kMarginRight + 16.0;
    svg += "<rect x=\"" + coord(lx) + "\" y=\"" + coord(ly - 9.0) +
           "\" width=\"14\" height=\"14\" fill=\"" + color + "\"/>\n";
    svg += "<text class=\"legend\" x=\"" + coord(lx + 20.0) + "\" y=\"" + coord(ly + 3.0) +
           "\">" + xml_escape(aggregates[s].condition_label) + "</text>\n";
  }

  svg += "</svg>\n";
  return svg;
}

void render_chart(const std::vector<AggregateSeries>& aggregates, const std::string& metric_name,
                  const std::filesystem::path& path) {
  const std::string svg = chart_svg(aggregates, metric_name);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot open for writing: " + path.string());
  file << svg;
  if (!file) throw io_error("write failed: " + path.string());
}

ExperimentSpec make_experiment(const std::string& short_name, int runs, std::uint64_t base_seed) {
  ExperimentSpec spec;
  spec.runs = runs;
  spec.base_config = WorldConfig{};
  spec.base_config.seed = base_seed;
  if (short_name == "fig3") {
    spec.name = "fig3_fitness";
    spec.chart_metric = "mean_fitness";
    spec.conditions = {{"chaining", true, true}, {"no_chaining", false, true}};
  } else if (short_name == "fig4") {
    spec.name = "fig4_diversity";
    spec.chart_metric = "diversity";
    spec.conditions = {{"chaining", true, true}, {"no_chaining", false, true}};
  } else if (short_name == "fig5") {
    spec.name = "fig5_learning_matrix";
    spec.chart_metric = "mean_fitness";
    spec.conditions = {{"chaining_learning", true, true},
                       {"chaining_only", true, false},
                       {"learning_only", false, true},
                       {"neither", false, false}};
  } else {
    throw std::invalid_argument("unknown experiment " + short_name +
                                " (valid: fig3, fig4, fig5)");
  }
  return spec;
}

std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec,
                                                  const std::filesystem::path& out_dir,
                                                  int threads) {
  const std::filesystem::path dir = out_dir / spec.name;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> manifest;
  std::vector<AggregateSeries> aggregates;
  aggregates.reserve(spec.conditions.size());
  for (const Condition& condition : spec.conditions) {
    WorldConfig config = spec.base_config;
    config.invention.chaining_enabled = condition.chaining_enabled;
    config.invention.learning_enabled = condition.learning_enabled;
    AggregateSeries series = run_batch(config, spec.runs, spec.base_config.seed, threads);
    series.condition_label = condition.label;

    const std::filesystem::path csv_path = dir / (condition.label + ".csv");
    write_csv(series, csv_path);
    manifest.push_back(csv_path);
    aggregates.push_back(std::move(series));
  }

  const std::filesystem::path chart_path = dir / "chart.svg";
  render_chart(aggregates, spec.chart_metric, chart_path);
  manifest.push_back(chart_path);
  return manifest;
}

}  // namespace chainsim
