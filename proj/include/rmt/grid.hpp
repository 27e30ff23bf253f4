#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace rmt {

// Ordered real eigenvalues of one ensemble draw.
struct Spectrum {
    std::vector<double> values;  // ascending
    int beta = 1;                // Dyson index, one of {1,2,4}
    int dim = 0;                 // N (GSE spectra are deduplicated to N values)
    bool rescaled = false;       // true once divided by sqrt(beta*N)
    bool degenerate = false;     // GSE: each value stood for a two-fold pair

    void validate() const;
};

// Every eigenvalue divided by sqrt(beta*N); ordering and signs preserved.
Spectrum rescale_spectrum(const Spectrum& s);

// A real function tabulated on a strictly increasing grid.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(std::vector<double> xs, std::vector<double> ys);

    // Density constructor: additionally asserts ys >= 0 and unit trapezoid
    // mass within `tol`.
    static GridFunction density(std::vector<double> xs, std::vector<double> ys,
                                double tol);

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    std::size_t size() const { return xs_.size(); }
    bool is_density() const { return is_density_; }
    double density_tol() const { return density_tol_; }

    double x_min() const { return xs_.front(); }
    double x_max() const { return xs_.back(); }

    // linear interpolation, zero outside the grid
    double operator()(double x) const;

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    bool is_density_ = false;
    double density_tol_ = 0.0;
};

struct HistogramSpec {
    double lo = 0.0;
    double hi = 1.0;
    int bins = 0;  // 0: choose by the Freedman-Diaconis rule
    bool normalized = true;

    void validate() const;
};

// Bin-center grid with counts, or with density heights when normalized
// (sum of height*width is exactly the in-range fraction seen as 1).
GridFunction build_histogram(const std::vector<double>& samples,
                             HistogramSpec spec);

// Convenience: histogram spanning mean +- nsigma*stddev of the samples.
HistogramSpec histogram_span(const std::vector<double>& samples, int bins,
                             double nsigma);

// Composite trapezoid of f over [lo,hi]; both ends must lie in the grid range.
double trapezoid_integral(const GridFunction& f, double lo, double hi);
double trapezoid_integral(const GridFunction& f);

// sup over sample points of |F_emp - cdf|; `sorted` must be ascending.
double ks_distance(const std::vector<double>& sorted,
                   const std::function<double(double)>& cdf);

// sup_i |a.ys[i] - b(a.xs[i])|, b linearly interpolated
double sup_distance(const GridFunction& a, const GridFunction& b);

// Average of `f` over each bin [center-w/2, center+w/2] of `hist`, returned
// on the histogram grid. Comparing histograms against bin-averaged curves
// removes the binning bias.
GridFunction bin_average(const GridFunction& hist,
                         const std::function<double(double)>& f);

// IEEE-754 round-trip decimal formatting
std::string format_double(double v);

// CSV with header "x,y"
void write_csv(std::ostream& os, const GridFunction& f);
void write_csv_columns(std::ostream& os, const std::vector<std::string>& header,
                       const std::vector<std::vector<double>>& columns);

}  // namespace rmt
