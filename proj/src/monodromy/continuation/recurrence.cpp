#include "monodromy/continuation/recurrence.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "monodromy/error.hpp"

namespace monodromy::continuation {

const char* field_tag_name(FieldTag t) {
    switch (t) {
        case FieldTag::Rational: return "rational";
        case FieldTag::Real: return "real";
        case FieldTag::Complex: return "complex";
    }
    return "complex";
}

namespace {

bool looks_rational(double x, double tol) {
    // continued fraction with denominators up to 1000
    double h0 = 0, h1 = 1, k0 = 1, k1 = 0, v = x;
    for (int i = 0; i < 20; ++i) {
        double a = std::floor(v);
        double h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > 1000) return false;
        if (std::abs(x - h2 / k2) <= tol * (1.0 + std::abs(x))) return true;
        double frac = v - a;
        if (frac < 1e-15) return false;
        v = 1.0 / frac;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    }
    return false;
}

// residual of the fit at offset m using the coefficients a
double fit(const std::vector<std::vector<cplx>>& values, int d, int m, std::vector<cplx>* coeffs) {
    const int T = int(values[0].size());
    Eigen::MatrixXcd A(T, d);
    Eigen::VectorXcd b(T);
    for (int t = 0; t < T; ++t) {
        for (int j = 0; j < d; ++j) A(t, j) = values[m + j][t];
        b(t) = values[m + d][t];
    }
    Eigen::VectorXcd a = A.colPivHouseholderQr().solve(b);
    double nb = std::max(b.norm(), 1e-300);
    if (coeffs) coeffs->assign(a.data(), a.data() + d);
    return (A * a - b).norm() / nb;
}

double check(const std::vector<std::vector<cplx>>& values, int d, int m, const std::vector<cplx>& a) {
    const int T = int(values[0].size());
    double num = 0, den = 0;
    for (int t = 0; t < T; ++t) {
        cplx s{};
        for (int j = 0; j < d; ++j) s += a[j] * values[m + j][t];
        num += std::norm(s - values[m + d][t]);
        den += std::norm(values[m + d][t]);
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

}  // namespace

FieldTag classify_field(const std::vector<cplx>& coeffs, double tol) {
    bool real = true, rational = true;
    for (auto c : coeffs) {
        if (std::abs(c.imag()) > tol * (1.0 + std::abs(c))) real = false;
        if (!looks_rational(c.real(), tol)) rational = false;
    }
    if (!real) return FieldTag::Complex;
    return rational ? FieldTag::Rational : FieldTag::Real;
}

std::optional<RecurrenceRelation> recurrence_detect_values(const std::vector<std::vector<cplx>>& values,
                                                           int d_max, double tol) {
    if (d_max < 1) throw Error(ErrorCode::InvalidArgument, "d_max must be >= 1");
    if (int(values.size()) < 2 * d_max + 1)
        throw Error(ErrorCode::InvalidArgument, "need branches 0..2*d_max for recurrence detection");
    if (values[0].empty()) throw Error(ErrorCode::InvalidArgument, "no test points");
    for (int d = 1; d <= d_max; ++d) {
        std::vector<cplx> a;
        double r0 = fit(values, d, 0, &a);
        if (!(r0 < tol)) continue;
        double rd = check(values, d, d, a);
        if (!(rd < tol)) continue;
        RecurrenceRelation rel;
        rel.d = d;
        rel.coeffs = a;
        rel.residual = std::max(r0, rd);
        rel.field = classify_field(a);
        return rel;
    }
    return std::nullopt;
}

std::optional<RecurrenceRelation> recurrence_detect(const BranchTable& table, int d_max,
                                                    std::span<const cplx> test_points, double tol) {
    std::vector<std::vector<cplx>> values;
    for (int k = 0; k <= 2 * d_max; ++k) {
        auto it = table.branches.find(k);
        if (it == table.branches.end())
            throw Error(ErrorCode::InvalidArgument, "branch table lacks branch " + std::to_string(k));
        std::vector<cplx> row;
        for (auto z : test_points) row.push_back(germs::germ_eval(it->second, z).value);
        values.push_back(std::move(row));
    }
    return recurrence_detect_values(values, d_max, tol);
}

}  // namespace monodromy::continuation
