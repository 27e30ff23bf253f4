#include "rmt/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "rmt/common.hpp"

namespace rmt {

void Spectrum::validate() const {
    require(beta == 1 || beta == 2 || beta == 4, "beta must be 1, 2 or 4");
    require(dim > 0, "dim must be positive");
    require(static_cast<int>(values.size()) == dim,
            "spectrum length must equal dim");
    for (std::size_t i = 1; i < values.size(); ++i)
        require(values[i - 1] <= values[i], "spectrum must be ascending");
}

Spectrum rescale_spectrum(const Spectrum& s) {
    s.validate();
    Spectrum out = s;
    const double f = std::sqrt(static_cast<double>(s.beta) * s.dim);
    for (double& v : out.values) v /= f;
    out.rescaled = true;
    return out;
}

GridFunction::GridFunction(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    require(xs_.size() == ys_.size(), "grid and values must have equal length");
    require(xs_.size() >= 2, "grid needs at least two points");
    for (std::size_t i = 1; i < xs_.size(); ++i)
        require(xs_[i] > xs_[i - 1], "grid must be strictly increasing");
}

GridFunction GridFunction::density(std::vector<double> xs,
                                   std::vector<double> ys, double tol) {
    GridFunction f(std::move(xs), std::move(ys));
    for (double y : f.ys_) require(y >= 0.0, "density values must be >= 0");
    const double mass = trapezoid_integral(f);
    require(std::abs(mass - 1.0) <= tol,
            "density mass " + std::to_string(mass) + " outside 1 +- tol");
    f.is_density_ = true;
    f.density_tol_ = tol;
    return f;
}

double GridFunction::operator()(double x) const {
    if (x < xs_.front() || x > xs_.back()) return 0.0;
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.begin()) return ys_.front();
    if (it == xs_.end()) return ys_.back();
    std::size_t i = static_cast<std::size_t>(it - xs_.begin());
    double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return (1.0 - t) * ys_[i - 1] + t * ys_[i];
}

void HistogramSpec::validate() const {
    require(lo < hi, "histogram needs lo < hi");
    require(bins >= 0, "bin count must be >= 0");
}

static int freedman_diaconis_bins(std::vector<double> v, double lo, double hi) {
    std::sort(v.begin(), v.end());
    auto quantile = [&](double q) {
        double pos = q * static_cast<double>(v.size() - 1);
        std::size_t i = static_cast<std::size_t>(pos);
        if (i + 1 >= v.size()) return v.back();
        double t = pos - static_cast<double>(i);
        return (1.0 - t) * v[i] + t * v[i + 1];
    };
    double iqr = quantile(0.75) - quantile(0.25);
    double width = 2.0 * iqr / std::cbrt(static_cast<double>(v.size()));
    if (!(width > 0.0)) return 1;
    int bins = static_cast<int>(std::ceil((hi - lo) / width));
    return std::clamp(bins, 1, 100000);
}

GridFunction build_histogram(const std::vector<double>& samples,
                             HistogramSpec spec) {
    spec.validate();
    require(!samples.empty(), "no data");
    int bins = spec.bins > 0 ? spec.bins
                             : freedman_diaconis_bins(samples, spec.lo, spec.hi);
    const double width = (spec.hi - spec.lo) / bins;
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    std::size_t in_range = 0;
    for (double s : samples) {
        if (s < spec.lo || s > spec.hi) continue;
        int b = static_cast<int>((s - spec.lo) / width);
        b = std::clamp(b, 0, bins - 1);
        counts[static_cast<std::size_t>(b)] += 1.0;
        ++in_range;
    }
    require(in_range > 0, "empty histogram");
    std::vector<double> centers(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        centers[i] = spec.lo + (static_cast<double>(i) + 0.5) * width;
    if (spec.normalized) {
        const double norm = static_cast<double>(in_range) * width;
        for (double& c : counts) c /= norm;
    }
    return GridFunction(std::move(centers), std::move(counts));
}

HistogramSpec histogram_span(const std::vector<double>& samples, int bins,
                             double nsigma) {
    require(!samples.empty(), "no data");
    double mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                  static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) var += (s - mean) * (s - mean);
    var /= static_cast<double>(samples.size());
    double sd = std::sqrt(var);
    HistogramSpec spec;
    spec.lo = mean - nsigma * sd;
    spec.hi = mean + nsigma * sd;
    spec.bins = bins;
    spec.normalized = true;
    return spec;
}

double trapezoid_integral(const GridFunction& f) {
    return trapezoid_integral(f, f.x_min(), f.x_max());
}

double trapezoid_integral(const GridFunction& f, double lo, double hi) {
    require(lo < hi, "integration needs lo < hi");
    require(lo >= f.x_min() - 1e-12 && hi <= f.x_max() + 1e-12,
            "integration range outside grid");
    const auto& xs = f.xs();
    const auto& ys = f.ys();
    double sum = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double a = std::max(xs[i - 1], lo);
        double b = std::min(xs[i], hi);
        if (b <= a) continue;
        double ya = f(a);
        double yb = f(b);
        sum += 0.5 * (ya + yb) * (b - a);
    }
    return sum;
}

double ks_distance(const std::vector<double>& sorted,
                   const std::function<double(double)>& cdf) {
    require(!sorted.empty(), "empty sample");
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double c = cdf(sorted[i]);
        double hi = (static_cast<double>(i) + 1.0) / n - c;
        double lo = c - static_cast<double>(i) / n;
        d = std::max({d, std::abs(hi), std::abs(lo)});
    }
    return d;
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a.ys()[i] - b(a.xs()[i])));
    return d;
}

GridFunction bin_average(const GridFunction& hist,
                         const std::function<double(double)>& f) {
    const auto& xs = hist.xs();
    require(xs.size() >= 2, "histogram too small");
    const double w = xs[1] - xs[0];
    std::vector<double> ys(xs.size());
    const int sub = 16;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double a = xs[i] - 0.5 * w;
        double s = 0.5 * (f(a) + f(a + w));
        for (int k = 1; k < sub; ++k)
            s += f(a + w * static_cast<double>(k) / sub);
        ys[i] = s / sub;
    }
    return GridFunction(xs, std::move(ys));
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const GridFunction& f) {
    os << "x,y\n";
    for (std::size_t i = 0; i < f.size(); ++i)
        os << format_double(f.xs()[i]) << ',' << format_double(f.ys()[i])
           << '\n';
}

void write_csv_columns(std::ostream& os, const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& columns) {
    require(!columns.empty() && header.size() == columns.size(),
            "header/column mismatch");
    for (std::size_t j = 0; j < header.size(); ++j)
        os << header[j] << (j + 1 < header.size() ? ',' : '\n');
    std::size_t rows = columns[0].size();
    for (const auto& c : columns)
        require(c.size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            os << format_double(columns[j][i])
               << (j + 1 < columns.size() ? ',' : '\n');
}

}  // namespace rmt
