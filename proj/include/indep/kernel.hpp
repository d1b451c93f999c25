#ifndef INDEP_KERNEL_HPP
#define INDEP_KERNEL_HPP

#include "indep/rank.hpp"

namespace indep {

// K(t, s) = sum_j T_j(t) S_j(s). Factor lists always have equal length;
// an empty representation stands for the zero kernel (the possible
// outcome of reduction, not a valid user input).
struct SeparableKernel {
    std::vector<FunctionHandle> t_factors;
    std::vector<FunctionHandle> s_factors;
    FieldDescriptor field;

    static SeparableKernel make(std::vector<FunctionHandle> t_factors,
                                std::vector<FunctionHandle> s_factors,
                                const FieldDescriptor& fd);

    std::size_t terms() const { return t_factors.size(); }
    Scalar eval(const Point& t, const Point& s) const;

    FunctionColumn t_column() const; // requires terms() >= 1
    FunctionColumn s_column() const;
};

// The kernel as a black box (t, s) -> value.
struct KernelSampler {
    std::function<Scalar(const Point&, const Point&)> fn;

    Scalar operator()(const Point& t, const Point& s) const { return fn(t, s); }
    static KernelSampler from_kernel(const SeparableKernel& k);
};

// Interpolation nodes with the square sample matrices [T_j(t_i)] and
// [S_j(s_i)] (rows indexed by points), nonsingular by construction,
// plus the elimination certificates that factor them.
struct InterpolationPoints {
    PointTuple t_points, s_points;
    Matrix t_matrix, s_matrix;
    IndependenceCertificate t_certificate, s_certificate;

    std::size_t size() const { return t_points.size(); }
};

enum class RecoverSide { SFromT, TFromS };

// Factor functions reconstructed from the kernel alone: lazily
// evaluable handles plus their tabulation on the requested points
// (row = factor index, column = eval point).
struct RecoveredFactors {
    RecoverSide side;
    PointTuple eval_points;
    Matrix table;
    std::vector<FunctionHandle> handles;
};

// Rewrite the representation so that the T factors are independent over
// t_pool and the S factors over s_pool, without changing the kernel on
// t_pool x s_pool: dependent factors on one side are expressed in the
// kept basis (solving on the basis certificate's points) and folded
// into the other side. Returns the empty representation when the kernel
// vanishes on the pools.
SeparableKernel reduce_representation(const SeparableKernel& k, const CandidatePool& t_pool,
                                      const CandidatePool& s_pool);

// Certify both factor systems and package the certificate points with
// their (nonsingular) sample matrices. Throws NotReduced if either side
// is still dependent over its pool.
InterpolationPoints select_interpolation_points(const SeparableKernel& k,
                                                const CandidatePool& t_pool,
                                                const CandidatePool& s_pool);

// Recover one factor family from the kernel: for SFromT, each
// S_i(s) solves [T_j(t_i)] w = [K(t_j, s)] via the certificate's
// triangular pair; symmetrically for TFromS.
RecoveredFactors recover_factors(const KernelSampler& sampler, const InterpolationPoints& pts,
                                 RecoverSide side, const PointTuple& eval_points);

// max |K(t,s) - sum_j T_j(t) S_j(s)| over the grid, as a double.
// Exact rationals report the exact maximum magnitude (0 iff identical);
// prime fields report a 0/1 mismatch flag.
double reconstruction_residual(const KernelSampler& sampler, const SeparableKernel& rep,
                               const PointTuple& t_grid, const PointTuple& s_grid);

} // namespace indep

#endif // INDEP_KERNEL_HPP
