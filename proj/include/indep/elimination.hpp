#ifndef INDEP_ELIMINATION_HPP
#define INDEP_ELIMINATION_HPP

#include <optional>
#include <utility>
#include <variant>

#include "indep/funcsys.hpp"

namespace indep {

// Proof object for linear independence over the pool: points x drawn
// from the pool, a unit lower-triangular transform A and an upper-
// triangular U with nonzero diagonal such that A * f(x) = U. Anyone can
// re-check it against the functions without trusting the producer.
struct IndependenceCertificate {
    PointTuple points; // length n
    Matrix a;          // n x n, unit lower triangular
    Matrix u;          // n x n, upper triangular, diagonal not effectively zero
    FieldDescriptor field;
};

// Proof object for dependence over the pool: a nonzero coefficient
// vector beta with sum_i beta_i f_i vanishing at every pool point.
struct DependenceWitness {
    std::vector<Scalar> beta;
    FieldDescriptor field;
};

struct EliminationStep {
    std::size_t pivot_index;         // 0-based depth of this step
    Point pivot_point;
    Scalar pivot_value;
    std::vector<Scalar> multipliers; // the -g_i(x)/g_k(x) entries, i > k

    // The step matrix embedded at its block position in an n x n frame.
    Matrix embedded(std::size_t n, const FieldDescriptor& fd) const;
};

using EliminationTrace = std::vector<EliminationStep>;

struct CertifyOutcome {
    std::variant<IndependenceCertificate, DependenceWitness> result;
    EliminationTrace trace;

    bool independent() const { return std::holds_alternative<IndependenceCertificate>(result); }
    const IndependenceCertificate& certificate() const {
        return std::get<IndependenceCertificate>(result);
    }
    const DependenceWitness& witness() const { return std::get<DependenceWitness>(result); }
};

// Pivot search for one function. Exact fields take the first point in
// pool order with a nonzero value; ApproxReal takes the point of
// maximal magnitude, provided that maximum is not effectively zero.
std::optional<Point> find_pivot(const FunctionHandle& fn, const CandidatePool& pool,
                                const FieldDescriptor& fd);

// One forward-elimination step at the pivot point: returns the unit
// lower-triangular step matrix M (first column carries the multipliers)
// and the tail column, rows 2..n of M f. Every tail function vanishes
// at the pivot point.
std::pair<Matrix, FunctionColumn> elimination_step(const FunctionColumn& col,
                                                   const Point& pivot_pt);

// The generalized forward elimination: recursively pick pivots and
// eliminate, producing either a certificate (A, U, points) or, when a
// reduced function vanishes on the whole pool, a dependence witness
// obtained by back-substituting through the accumulated transform.
CertifyOutcome certify_independence(const FunctionColumn& col, const CandidatePool& pool);

// Re-check a certificate against the functions: shape of A, shape and
// diagonal of U, and A * f(points) = U (exact, or entrywise within
// tolerance * max(1, row magnitude) for ApproxReal). Independent of how
// the certificate was produced.
bool verify_certificate(const FunctionColumn& col, const IndependenceCertificate& cert);

// True iff beta is nonzero and sum_i beta_i f_i(p) is effectively zero
// at every pool point.
bool witness_check(const FunctionColumn& col, const DependenceWitness& w,
                   const CandidatePool& pool);

// Solve f(x)^T w = rhs using the certificate's pair A f(x) = U:
// forward substitution on U^T, then w = A^T y. Serves interpolation and
// change-of-basis computations downstream.
std::vector<Scalar> solve_transposed_sample(const IndependenceCertificate& cert,
                                            const std::vector<Scalar>& rhs);

} // namespace indep

#endif // INDEP_ELIMINATION_HPP
