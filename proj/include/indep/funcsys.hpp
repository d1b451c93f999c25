#ifndef INDEP_FUNCSYS_HPP
#define INDEP_FUNCSYS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "indep/matrix.hpp"

namespace indep {

// A domain point: one coordinate for scalar domains, several for
// product domains. The label is for display and serialization; identity
// (distinctness, memo keys) is the coordinate tuple.
struct Point {
    std::vector<Scalar> coords;
    std::string label;

    std::string key() const; // canonical coordinate text, field-independent
};

Point make_point(Scalar coord, std::string label = "");
Point make_point(std::vector<Scalar> coords, std::string label = "");

using PointTuple = std::vector<Point>;

// The finite working subset of the domain X. Points are pairwise
// distinct and keep their construction order.
class CandidatePool {
public:
    explicit CandidatePool(std::vector<Point> points); // throws EmptyPool / Error on duplicates

    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    static CandidatePool grid(const Scalar& start, const Scalar& step, std::size_t count,
                              const FieldDescriptor& fd);
    // Seeded draws of distinct integer-valued points in [lo, hi].
    static CandidatePool random_integers(std::uint64_t seed, std::size_t count,
                                         std::int64_t lo, std::int64_t hi,
                                         const FieldDescriptor& fd);

private:
    std::vector<Point> points_;
};

// An evaluable, pure map from domain points to field values. Copies
// share the underlying function and its memo table; memoization is
// sound because evaluation is deterministic by contract.
class FunctionHandle {
public:
    FunctionHandle(std::string name, std::function<Scalar(const Point&)> fn);

    const std::string& name() const;
    Scalar operator()(const Point& p) const; // memoized; propagates the callee's exception

private:
    struct State;
    std::shared_ptr<State> state_;
};

// Handle backed by an explicit table of per-point values. Evaluating at
// a point that is not tabulated throws.
FunctionHandle tabulated_handle(std::string name,
                                const std::vector<std::pair<Point, Scalar>>& table);

// g(p) = sum_i coeff_i * term_i(p), composed lazily.
FunctionHandle linear_combination(std::string name,
                                  std::vector<std::pair<Scalar, FunctionHandle>> terms,
                                  const FieldDescriptor& fd);

FunctionHandle constant_handle(std::string name, const Scalar& value);

// The column f = [f_i] of n functions, all valued in the same field.
class FunctionColumn {
public:
    FunctionColumn(std::vector<FunctionHandle> fns, FieldDescriptor fd); // n >= 1

    std::size_t size() const { return fns_.size(); }
    const FunctionHandle& operator[](std::size_t i) const { return fns_[i]; }
    const FieldDescriptor& field() const { return fd_; }
    const std::vector<FunctionHandle>& handles() const { return fns_; }

    FunctionColumn head_removed() const;                                // rows 2..n
    FunctionColumn subsystem(const std::vector<std::size_t>& idx) const;
    FunctionColumn appended(const FunctionHandle& fn) const;

private:
    std::vector<FunctionHandle> fns_;
    FieldDescriptor fd_;
};

// The matrix [f_i(x_j)] with row index = function, column index = point,
// together with the points that generated it.
struct SampleMatrix {
    Matrix values;
    PointTuple points;

    bool recheck(const FunctionColumn& col) const; // re-evaluate every entry
};

SampleMatrix sample_matrix(const FunctionColumn& col, const PointTuple& pts);

// g = A f for square A; each g_i evaluates as the A-combination of the
// original handles, so (A f)(x) = A * f(x) by construction.
FunctionColumn apply_transform(const Matrix& a, const FunctionColumn& col);

} // namespace indep

#endif // INDEP_FUNCSYS_HPP
