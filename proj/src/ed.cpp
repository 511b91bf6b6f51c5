#include "sc/ed.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sc {

NumericOperator evaluate_dense(const Operator& a, const std::map<int, Rational>& values)
{
    return to_dense(evaluate(a, values));
}

namespace {

double scale_of(const NumericOperator& a) { return std::max(1.0, a.cwiseAbs().maxCoeff()); }

struct SectorData {
    BasisPtr basis;
    Operator h, s1, s2, effective;
    std::vector<int> band;  // basis indices in range(P⁰)
};

std::vector<SectorData> sector_data(const Model& m, int order, bool generators)
{
    std::vector<SectorData> out;
    for (const auto& sector : m.band_sectors()) {
        SectorConjugation c(m, sector_basis(m.cluster, sector));
        SectorData d;
        d.basis = c.basis();
        d.h = c.hamiltonian();
        const Operator& p0 = c.band_projector();
        d.effective = p0 * c.conjugated(order, 2 * order) * p0;
        if (generators) {
            d.s1 = c.s1_total();
            d.s2 = order == 2 ? c.s2_total() : Operator(d.basis);
        }
        p0.for_each([&](int r, int col, const ScalarValue& v) {
            if (r == col && !v.is_zero()) d.band.push_back(r);
        });
        out.push_back(std::move(d));
    }
    return out;
}

Eigen::VectorXd band_block_spectrum(const NumericOperator& a, const std::vector<int>& band)
{
    const auto n = static_cast<Eigen::Index>(band.size());
    NumericOperator b(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) b(i, j) = a(band[i], band[j]);
    return numeric_spectrum(b);
}

}  // namespace

Eigen::VectorXd numeric_spectrum(const NumericOperator& h, double tol)
{
    if (h.rows() != h.cols()) throw std::invalid_argument("spectrum of a non-square matrix");
    if (h.size() == 0) return {};
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol * scale_of(h)) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max |H - H^T| = " << asym;
        throw ToleranceError(os.str());
    }
    Eigen::SelfAdjointEigenSolver<NumericOperator> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

NumericOperator conjugate_numeric(const NumericOperator& h, const NumericOperator& s, double tol)
{
    if (s.size() == 0) return h;
    const double herm = (s + s.transpose()).cwiseAbs().maxCoeff();
    if (herm > tol * scale_of(s)) {
        std::ostringstream os;
        os << "generator is not anti-Hermitian: max |S + S^T| = " << herm;
        throw ToleranceError(os.str());
    }
    // e^S is the identity on coordinates whose row and column of S vanish, so
    // the exponential is taken on the support block only.
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < s.rows(); ++i)
        if (!s.row(i).isZero(0) || !s.col(i).isZero(0)) support.push_back(i);
    if (support.empty()) return h;
    const NumericOperator block = s(support, support);
    const NumericOperator u = block.exp();
    const NumericOperator uinv = (-block).exp();
    NumericOperator r = h;
    r(support, Eigen::all) = u * h(support, Eigen::all);
    r(Eigen::all, support) = r(Eigen::all, support) * uinv;
    return r;
}

double operator_norm(const NumericOperator& a)
{
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<NumericOperator> svd(a);
    return svd.singularValues()(0);
}

UnitarityWitness unitarity_witness(const NumericOperator& h, const NumericOperator& s, double tol)
{
    Eigen::VectorXd before = numeric_spectrum(h);
    Eigen::VectorXd after = numeric_spectrum(conjugate_numeric(h, s), 1e-9);
    const double radius = before.size() ? std::max(1.0, before.cwiseAbs().maxCoeff()) : 1.0;
    UnitarityWitness w;
    w.relative_error = before.size() ? (before - after).cwiseAbs().maxCoeff() / radius : 0.0;
    w.passed = w.relative_error <= tol;
    return w;
}

Operator s1_interior_total(const SectorConjugation& c)
{
    Operator s(c.basis());
    for (int b = 0; b < c.bond_count(); ++b) {
        try {
            s += c.s1(b);
        } catch (const std::out_of_range&) {
            // The bond's protection zone leaves the cluster.
        }
    }
    return s;
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("log-log fit needs at least two samples");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("log-log fit needs positive samples");
        a(i, 0) = std::log(x[i]);
        a(i, 1) = 1.0;
        b(i) = std::log(y[i]);
    }
    Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
    LogLogFit fit;
    fit.slope = coef(0);
    if (n > 2) {
        const double rss = (a * coef - b).squaredNorm();
        const double sigma2 = rss / static_cast<double>(n - 2);
        const Eigen::Matrix2d cov = sigma2 * (a.transpose() * a).inverse();
        fit.width = 2.0 * std::sqrt(std::max(0.0, cov(0, 0)));
    }
    return fit;
}

std::map<int, Rational> scaling_bindings(const Model& m, const ScalingSetup& setup, const Rational& t)
{
    std::map<int, Rational> values;
    for (const auto& [name, v] : setup.values) {
        auto s = find_symbol(name);
        if (!s) throw std::invalid_argument("unknown symbol '" + name + "'");
        values[s->index] = v;
    }
    for (const auto& s : m.hopping_symbols) {
        auto r = setup.hopping_ratios.find(symbol_name(s));
        values[s.index] = t * (r == setup.hopping_ratios.end() ? Rational(1) : r->second);
    }
    return values;
}

BandSpectra band_spectra(const Model& m, int order, const std::map<int, Rational>& values)
{
    BandSpectra out;
    for (const auto& d : sector_data(m, order, false)) {
        Eigen::VectorXd exact = numeric_spectrum(evaluate_dense(d.h, values));
        out.exact.push_back(exact.head(static_cast<Eigen::Index>(d.band.size())));
        out.effective.push_back(band_block_spectrum(evaluate_dense(d.effective, values), d.band));
    }
    return out;
}

ScalingReport band_scaling_study(const ScalingSetup& setup)
{
    if (setup.order != 1 && setup.order != 2) throw std::invalid_argument("order must be 1 or 2");
    if (setup.t_values.size() < 4) throw std::invalid_argument("scaling study needs at least 4 t values");
    std::vector<double> ts;
    for (const auto& t : setup.t_values) {
        if (t <= 0) throw std::invalid_argument("t values must be positive");
        ts.push_back(to_double(t));
    }
    const auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
    if (*hi < 10.0 * *lo * (1 - 1e-12)) throw std::invalid_argument("t values must span at least one decade");

    Model m = make_model(setup.model, setup.cluster);
    auto data = sector_data(m, setup.order, true);
    ScalingReport report;
    report.model = model_choice_name(setup.model);
    report.cluster = setup.cluster;
    report.order = setup.order;
    report.residual_threshold = setup.order + 1 - 0.2;
    report.band_threshold = 2 * setup.order + 1 - 0.3;
    for (const auto& t : setup.t_values) {
        auto values = scaling_bindings(m, setup, t);
        ScalingSample sample;
        sample.t = to_double(t);
        for (const auto& d : data) {
            NumericOperator h = evaluate_dense(d.h, values);
            NumericOperator conj = conjugate_numeric(conjugate_numeric(h, evaluate_dense(d.s1, values)),
                                                     evaluate_dense(d.s2, values));
            NumericOperator p0 = NumericOperator::Zero(h.rows(), h.cols());
            for (int i : d.band) p0(i, i) = 1;
            NumericOperator p1 = NumericOperator::Identity(h.rows(), h.cols()) - p0;
            sample.residual = std::max(sample.residual, operator_norm(p0 * conj * p1));
            Eigen::VectorXd exact = numeric_spectrum(h).head(static_cast<Eigen::Index>(d.band.size()));
            Eigen::VectorXd eff = band_block_spectrum(evaluate_dense(d.effective, values), d.band);
            if (exact.size()) sample.band_error = std::max(sample.band_error, (exact - eff).cwiseAbs().maxCoeff());
        }
        report.samples.push_back(sample);
    }
    std::vector<double> res, band;
    for (const auto& s : report.samples) {
        res.push_back(s.residual);
        band.push_back(s.band_error);
    }
    report.residual_fit = fit_loglog(ts, res);
    report.band_fit = fit_loglog(ts, band);
    return report;
}

}  // namespace sc
