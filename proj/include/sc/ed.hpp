#pragma once

#include "sc/effective.hpp"

#include <Eigen/Dense>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

template <class T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
using NumericOperator = DenseMatrix<double>;

template <class T>
DenseMatrix<T> to_dense(const SparseOperator<T>& a)
{
    DenseMatrix<T> m = DenseMatrix<T>::Zero(a.codomain()->size(), a.domain()->size());
    a.for_each([&](int r, int c, const T& v) { m(r, c) = v; });
    return m;
}

// Substitutes exact values for every symbol and converts to double.
NumericOperator evaluate_dense(const Operator& a, const std::map<int, Rational>& values);

// Raised when a numeric precondition or witness tolerance is breached.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sorted eigenvalues of a symmetric matrix; throws ToleranceError when the
// input is not Hermitian to `tol` relative.
Eigen::VectorXd numeric_spectrum(const NumericOperator& h, double tol = 1e-12);

// e^S H e^{−S} by scaling-and-squaring; S must be anti-Hermitian to `tol`.
NumericOperator conjugate_numeric(const NumericOperator& h, const NumericOperator& s, double tol = 1e-12);

// Largest singular value.
double operator_norm(const NumericOperator& a);

struct UnitarityWitness {
    double relative_error = 0;
    bool passed = false;
};

// Compares the spectra of H and e^S H e^{−S}; the error is relative to the
// spectral radius of H (or 1 if smaller).
UnitarityWitness unitarity_witness(const NumericOperator& h, const NumericOperator& s, double tol = 1e-10);

// Sum of S₁ over the bonds whose protection zone fits inside the cluster.
Operator s1_interior_total(const SectorConjugation& c);

struct LogLogFit {
    double slope = 0;
    double width = 0;  // two standard errors of the slope
};

// Least-squares fit of log y against log x; needs ≥ 2 positive samples.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingSample {
    double t = 0;
    double residual = 0;    // max over sectors of ‖P⁰H⁽ⁿ⁾P¹‖₂ (numeric conjugation)
    double band_error = 0;  // max distance between low exact and effective band eigenvalues
};

struct ScalingReport {
    std::string model, cluster;
    int order = 0;
    std::vector<ScalingSample> samples;
    LogLogFit residual_fit, band_fit;
    double residual_threshold = 0;  // n + 1 − 0.2
    double band_threshold = 0;      // 2n + 1 − 0.3
    bool residual_ok() const { return residual_fit.slope >= residual_threshold; }
    bool band_ok() const { return band_fit.slope >= band_threshold; }
};

struct ScalingSetup {
    ModelChoice model = ModelChoice::one_band_symmetric;
    std::string cluster = "bond";
    int order = 1;
    // Every hopping symbol is set to t · ratio (ratio 1 unless given).
    std::vector<Rational> t_values;
    std::map<std::string, Rational> hopping_ratios;
    // Values of the classical symbols (U, h, k, ...).
    std::map<std::string, Rational> values;
};

// Needs ≥ 4 t values spanning at least one decade (std::invalid_argument).
ScalingReport band_scaling_study(const ScalingSetup& setup);

// Binds the classical values and hopping symbols of a model at amplitude t.
std::map<int, Rational> scaling_bindings(const Model& m, const ScalingSetup& setup, const Rational& t);

// Per-sector low-band spectra: lowest dim(P⁰) exact eigenvalues and the
// eigenvalues of the order-n effective band operator, both sorted.
struct BandSpectra {
    std::vector<Eigen::VectorXd> exact, effective;
};
BandSpectra band_spectra(const Model& m, int order, const std::map<int, Rational>& values);

}  // namespace sc
