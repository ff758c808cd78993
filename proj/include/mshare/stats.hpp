#pragma once

#include "mshare/common.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

namespace mshare {

template <typename Derived>
double series_variance(const Eigen::MatrixBase<Derived>& x) {
    const double mean = x.template cast<double>().mean();
    return (x.template cast<double>().array() - mean).square().sum() /
           static_cast<double>(x.size());
}

namespace detail {
// Centers and scales to unit variance. Returns false for a numerically
// constant series.
inline bool standardize(const Eigen::VectorXd& v, Eigen::VectorXd& out) {
    const double mean = v.mean();
    out = v.array() - mean;
    const double sd = std::sqrt(out.squaredNorm() / static_cast<double>(v.size()));
    if (sd <= 1e-12 * std::max(1.0, std::abs(mean))) {
        return false;
    }
    out /= sd;
    return true;
}
} // namespace detail

/// Pearson correlation of two equal-length series. Empty option when either
/// series is (numerically) constant.
template <typename DerivedA, typename DerivedB>
std::optional<double> pearson(const Eigen::MatrixBase<DerivedA>& x,
                              const Eigen::MatrixBase<DerivedB>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw Error("pearson: series lengths mismatch or too short");
    }
    Eigen::VectorXd sx;
    Eigen::VectorXd sy;
    if (!detail::standardize(x.template cast<double>().eval(), sx) ||
        !detail::standardize(y.template cast<double>().eval(), sy)) {
        return std::nullopt;
    }
    const double r = sx.dot(sy) / static_cast<double>(x.size());
    return std::clamp(r, -1.0, 1.0);
}

/// Partial correlation of x and y controlling for the given series,
/// computed by inverting the correlation matrix of [x, y, controls]:
///
///   rho_{xy.Z} = -P_xy / sqrt(P_xx * P_yy)
///
/// where P is the precision matrix. A singular correlation matrix falls back
/// to the Moore-Penrose pseudo-inverse. Returns an empty option when x or y
/// carries no variance (the correlation is undefined); constant controls are
/// dropped, so an all-constant control set degrades gracefully to Pearson.
template <typename DerivedA, typename DerivedB>
std::optional<double> partial_correlation(const Eigen::MatrixBase<DerivedA>& x,
                                          const Eigen::MatrixBase<DerivedB>& y,
                                          const std::vector<Eigen::VectorXd>& controls = {}) {
    const auto n = x.size();
    if (y.size() != n) {
        throw Error("partial_correlation: series lengths differ");
    }
    for (const auto& z : controls) {
        if (z.size() != n) {
            throw Error("partial_correlation: control length differs");
        }
    }
    if (n < static_cast<Eigen::Index>(controls.size()) + 3) {
        throw Error("partial_correlation: need n >= |controls| + 3 samples");
    }

    std::vector<Eigen::VectorXd> cols;
    cols.reserve(controls.size() + 2);
    {
        Eigen::VectorXd sx;
        Eigen::VectorXd sy;
        if (!detail::standardize(x.template cast<double>().eval(), sx) ||
            !detail::standardize(y.template cast<double>().eval(), sy)) {
            return std::nullopt;
        }
        cols.push_back(std::move(sx));
        cols.push_back(std::move(sy));
    }
    for (const auto& z : controls) {
        Eigen::VectorXd sz;
        if (detail::standardize(z, sz)) {
            cols.push_back(std::move(sz));
        }
    }

    const auto k = static_cast<Eigen::Index>(cols.size());
    Eigen::MatrixXd std_cols(n, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        std_cols.col(j) = cols[static_cast<std::size_t>(j)];
    }
    const Eigen::MatrixXd corr = (std_cols.transpose() * std_cols) / static_cast<double>(n);

    Eigen::MatrixXd precision;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(corr);
    if (lu.isInvertible()) {
        precision = lu.inverse();
    } else {
        precision = corr.completeOrthogonalDecomposition().pseudoInverse();
    }

    const double denom = precision(0, 0) * precision(1, 1);
    if (!(denom > 0.0)) {
        return std::nullopt;
    }
    const double rho = -precision(0, 1) / std::sqrt(denom);
    if (!std::isfinite(rho)) {
        return std::nullopt;
    }
    return std::clamp(rho, -1.0, 1.0);
}

} // namespace mshare
