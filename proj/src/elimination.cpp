#include "indep/elimination.hpp"

#include <algorithm>
#include <string>

namespace indep {

Matrix EliminationStep::embedded(std::size_t n, const FieldDescriptor& fd) const {
    Matrix m = Matrix::identity(n, fd);
    for (std::size_t r = 0; r < multipliers.size(); ++r) {
        m(pivot_index + 1 + r, pivot_index) = multipliers[r];
    }
    return m;
}

std::optional<Point> find_pivot(const FunctionHandle& fn, const CandidatePool& pool,
                                const FieldDescriptor& fd) {
    if (pool.size() == 0) throw EmptyPool();
    if (fd.is_exact()) {
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (!is_effectively_zero(fn(pool[j]), 0.0, fd)) return pool[j];
        }
        return std::nullopt;
    }
    // Partial pivoting: the point of maximal magnitude, first wins ties.
    std::size_t best = 0;
    double best_mag = -1.0;
    Scalar best_val = zero(fd);
    for (std::size_t j = 0; j < pool.size(); ++j) {
        Scalar v = fn(pool[j]);
        double m = magnitude(v);
        if (m > best_mag) {
            best_mag = m;
            best = j;
            best_val = v;
        }
    }
    if (is_effectively_zero(best_val, best_mag, fd)) return std::nullopt;
    return pool[best];
}

std::pair<Matrix, FunctionColumn> elimination_step(const FunctionColumn& col,
                                                   const Point& pivot_pt) {
    const FieldDescriptor fd = col.field();
    const std::size_t n = col.size();
    if (n < 2) throw DimensionMismatch("elimination step needs at least two functions");
    Scalar pivot = col[0](pivot_pt);
    if (is_effectively_zero(pivot, 0.0, fd)) throw PivotIsZero();

    Matrix m = Matrix::identity(n, fd);
    std::vector<FunctionHandle> tail;
    tail.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        Scalar multiplier = neg(div(col[i](pivot_pt), pivot, fd), fd);
        m(i, 0) = multiplier;
        if (fd.is_exact() && is_effectively_zero(multiplier, 0.0, fd)) {
            tail.push_back(col[i]); // untouched row, keep the handle (and its memo)
        } else {
            tail.push_back(linear_combination(
                col[i].name() + "'",
                {{one(fd), col[i]}, {multiplier, col[0]}}, fd));
        }
    }
    return {std::move(m), FunctionColumn(std::move(tail), fd)};
}

namespace {

struct RecursiveResult {
    bool independent = false;
    PointTuple points;        // on success
    Matrix a;                 // on success
    EliminationTrace steps;   // pivot indices local to this block
    std::vector<Scalar> beta; // on failure
};

RecursiveResult certify_recursive(const FunctionColumn& col, const CandidatePool& pool) {
    const FieldDescriptor fd = col.field();
    const std::size_t n = col.size();

    std::optional<Point> pivot_pt = find_pivot(col[0], pool, fd);
    if (!pivot_pt) {
        // The leading reduced function vanishes on the whole pool.
        RecursiveResult r;
        r.beta.assign(n, zero(fd));
        r.beta[0] = one(fd);
        return r;
    }
    Scalar pivot_val = col[0](*pivot_pt);
    if (n == 1) {
        RecursiveResult r;
        r.independent = true;
        r.points = {*pivot_pt};
        r.a = Matrix::identity(1, fd);
        r.steps.push_back(EliminationStep{0, *pivot_pt, pivot_val, {}});
        return r;
    }

    auto [m, tail] = elimination_step(col, *pivot_pt);
    RecursiveResult sub = certify_recursive(tail, pool);

    if (!sub.independent) {
        // Lift the tail witness through M: beta^T = (0 | beta~^T) M.
        RecursiveResult r;
        r.beta.assign(n, zero(fd));
        Scalar head = zero(fd);
        for (std::size_t i = 1; i < n; ++i) {
            r.beta[i] = sub.beta[i - 1];
            head = add(head, mul(sub.beta[i - 1], m(i, 0), fd), fd);
        }
        r.beta[0] = head;
        return r;
    }

    // A = B M with B = diag(1, B~); points = (x1, x~).
    Matrix b = Matrix::identity(n, fd);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) b(i + 1, j + 1) = sub.a(i, j);

    RecursiveResult r;
    r.independent = true;
    r.a = mat_mul(b, m, fd);
    r.points.reserve(n);
    r.points.push_back(*pivot_pt);
    r.points.insert(r.points.end(), sub.points.begin(), sub.points.end());

    std::vector<Scalar> multipliers;
    multipliers.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) multipliers.push_back(m(i, 0));
    r.steps.push_back(EliminationStep{0, *pivot_pt, pivot_val, std::move(multipliers)});
    for (EliminationStep& s : sub.steps) {
        s.pivot_index += 1;
        r.steps.push_back(std::move(s));
    }
    return r;
}

} // namespace

CertifyOutcome certify_independence(const FunctionColumn& col, const CandidatePool& pool) {
    if (pool.size() == 0) throw EmptyPool();
    RecursiveResult rec = certify_recursive(col, pool);
    CertifyOutcome out;
    if (rec.independent) {
        IndependenceCertificate cert;
        cert.points = rec.points;
        cert.a = rec.a;
        cert.u = mat_mul(rec.a, sample_matrix(col, rec.points).values, col.field());
        cert.field = col.field();
        out.result = std::move(cert);
    } else {
        out.result = DependenceWitness{std::move(rec.beta), col.field()};
    }
    out.trace = std::move(rec.steps);
    return out;
}

namespace {

double row_scale(const Matrix& m, std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s = std::max(s, magnitude(m(i, j)));
    return s;
}

} // namespace

bool verify_certificate(const FunctionColumn& col, const IndependenceCertificate& cert) {
    const std::size_t n = col.size();
    if (cert.points.size() != n || cert.a.rows() != n || cert.a.cols() != n ||
        cert.u.rows() != n || cert.u.cols() != n)
        throw DimensionMismatch("certificate does not match an n=" + std::to_string(n) +
                                " function column");
    if (!(cert.field == col.field()))
        throw FieldMismatch("certificate field " + cert.field.name() +
                            " vs column field " + col.field().name());
    const FieldDescriptor& fd = cert.field;
    const Scalar unit = one(fd);

    // A of the unit lower-triangular kind.
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_effectively_zero(sub(cert.a(i, i), unit, fd), 1.0, fd)) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!is_effectively_zero(cert.a(i, j), row_scale(cert.a, i), fd)) return false;
        }
    }
    // U upper triangular with no effectively-zero diagonal entry.
    for (std::size_t i = 0; i < n; ++i) {
        double scale = row_scale(cert.u, i);
        if (is_effectively_zero(cert.u(i, i), scale, fd)) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (!is_effectively_zero(cert.u(i, j), scale, fd)) return false;
        }
    }
    // A f(x) = U.
    Matrix product = mat_mul(cert.a, sample_matrix(col, cert.points).values, fd);
    for (std::size_t i = 0; i < n; ++i) {
        double scale = std::max(1.0, row_scale(product, i));
        for (std::size_t j = 0; j < n; ++j) {
            Scalar diff = sub(product(i, j), cert.u(i, j), fd);
            if (fd.is_exact()) {
                if (!is_effectively_zero(diff, 0.0, fd)) return false;
            } else if (magnitude(diff) > fd.tolerance * scale) {
                return false;
            }
        }
    }
    return true;
}

bool witness_check(const FunctionColumn& col, const DependenceWitness& w,
                   const CandidatePool& pool) {
    const std::size_t n = col.size();
    if (w.beta.size() != n)
        throw DimensionMismatch("witness length " + std::to_string(w.beta.size()) +
                                " vs column length " + std::to_string(n));
    if (!(w.field == col.field()))
        throw FieldMismatch("witness field " + w.field.name() + " vs column field " +
                            col.field().name());
    const FieldDescriptor& fd = w.field;

    double beta_scale = 0.0;
    for (const Scalar& b : w.beta) beta_scale = std::max(beta_scale, magnitude(b));
    bool nonzero = false;
    for (const Scalar& b : w.beta) {
        if (!is_effectively_zero(b, beta_scale, fd)) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) return false;

    for (std::size_t j = 0; j < pool.size(); ++j) {
        Scalar acc = zero(fd);
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Scalar term = mul(w.beta[i], col[i](pool[j]), fd);
            scale = std::max(scale, magnitude(term));
            acc = add(acc, term, fd);
        }
        if (!is_effectively_zero(acc, scale, fd)) return false;
    }
    return true;
}

std::vector<Scalar> solve_transposed_sample(const IndependenceCertificate& cert,
                                            const std::vector<Scalar>& rhs) {
    const FieldDescriptor& fd = cert.field;
    // f(x)^T w = rhs with A f(x) = U: solve U^T y = rhs, then w = A^T y.
    std::vector<Scalar> y = solve_lower(cert.u.transposed(), rhs, fd);
    return vec_mat(y, cert.a, fd);
}

} // namespace indep
