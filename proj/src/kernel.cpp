#include "indep/kernel.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

namespace indep {

SeparableKernel SeparableKernel::make(std::vector<FunctionHandle> t_factors,
                                      std::vector<FunctionHandle> s_factors,
                                      const FieldDescriptor& fd) {
    if (t_factors.size() != s_factors.size())
        throw DimensionMismatch("kernel factor lists differ in length: " +
                                std::to_string(t_factors.size()) + " vs " +
                                std::to_string(s_factors.size()));
    SeparableKernel k;
    k.t_factors = std::move(t_factors);
    k.s_factors = std::move(s_factors);
    k.field = fd;
    return k;
}

Scalar SeparableKernel::eval(const Point& t, const Point& s) const {
    Scalar acc = zero(field);
    for (std::size_t j = 0; j < terms(); ++j)
        acc = add(acc, mul(t_factors[j](t), s_factors[j](s), field), field);
    return acc;
}

FunctionColumn SeparableKernel::t_column() const { return FunctionColumn(t_factors, field); }
FunctionColumn SeparableKernel::s_column() const { return FunctionColumn(s_factors, field); }

KernelSampler KernelSampler::from_kernel(const SeparableKernel& k) {
    return KernelSampler{[k](const Point& t, const Point& s) { return k.eval(t, s); }};
}

namespace {

// Express every dropped factor of `primary` in the kept basis (solving
// on the basis certificate's points) and fold the coefficients into the
// `secondary` side. Returns the new (kept-basis) factor lists.
std::pair<std::vector<FunctionHandle>, std::vector<FunctionHandle>>
fold_dependent_side(const std::vector<FunctionHandle>& primary,
                    const std::vector<FunctionHandle>& secondary, const RankResult& rank,
                    const FieldDescriptor& fd) {
    const IndependenceCertificate& cert = *rank.certificate;
    const std::vector<std::size_t>& basis = rank.basis_indices;
    const std::size_t r = basis.size();

    std::vector<bool> kept(primary.size(), false);
    for (std::size_t b : basis) kept[b] = true;

    // combo[q] accumulates the terms of the new secondary factor q.
    std::vector<std::vector<std::pair<Scalar, FunctionHandle>>> combo(r);
    for (std::size_t q = 0; q < r; ++q)
        combo[q].emplace_back(one(fd), secondary[basis[q]]);

    for (std::size_t d = 0; d < primary.size(); ++d) {
        if (kept[d]) continue;
        std::vector<Scalar> rhs;
        rhs.reserve(r);
        for (const Point& x : cert.points) rhs.push_back(primary[d](x));
        std::vector<Scalar> coeff = solve_transposed_sample(cert, rhs);
        for (std::size_t q = 0; q < r; ++q) {
            if (fd.is_exact() && is_effectively_zero(coeff[q], 0.0, fd)) continue;
            combo[q].emplace_back(coeff[q], secondary[d]);
        }
    }

    std::vector<FunctionHandle> new_primary, new_secondary;
    new_primary.reserve(r);
    new_secondary.reserve(r);
    for (std::size_t q = 0; q < r; ++q) {
        new_primary.push_back(primary[basis[q]]);
        if (combo[q].size() == 1) {
            new_secondary.push_back(secondary[basis[q]]); // nothing folded in
        } else {
            new_secondary.push_back(linear_combination(secondary[basis[q]].name() + "+",
                                                       std::move(combo[q]), fd));
        }
    }
    return {std::move(new_primary), std::move(new_secondary)};
}

} // namespace

SeparableKernel reduce_representation(const SeparableKernel& k, const CandidatePool& t_pool,
                                      const CandidatePool& s_pool) {
    const FieldDescriptor fd = k.field;
    std::vector<FunctionHandle> ts = k.t_factors;
    std::vector<FunctionHandle> ss = k.s_factors;

    // Each fold strictly decreases the term count, so this terminates
    // after at most terms() passes.
    for (std::size_t guard = 0; guard <= 2 * k.terms() + 2; ++guard) {
        if (ts.empty()) return SeparableKernel::make({}, {}, fd);

        FunctionColumn t_col(ts, fd);
        RankResult t_rank = system_rank(t_col, t_pool);
        if (t_rank.rank == 0) return SeparableKernel::make({}, {}, fd);
        if (t_rank.rank < ts.size()) {
            auto [nt, nss] = fold_dependent_side(ts, ss, t_rank, fd);
            ts = std::move(nt);
            ss = std::move(nss);
            continue;
        }

        FunctionColumn s_col(ss, fd);
        RankResult s_rank = system_rank(s_col, s_pool);
        if (s_rank.rank == 0) return SeparableKernel::make({}, {}, fd);
        if (s_rank.rank < ss.size()) {
            auto [ns, nts] = fold_dependent_side(ss, ts, s_rank, fd);
            ss = std::move(ns);
            ts = std::move(nts);
            continue;
        }

        return SeparableKernel::make(std::move(ts), std::move(ss), fd);
    }
    throw Error("kernel reduction did not converge"); // unreachable
}

InterpolationPoints select_interpolation_points(const SeparableKernel& k,
                                                const CandidatePool& t_pool,
                                                const CandidatePool& s_pool) {
    InterpolationPoints pts;
    if (k.terms() == 0) return pts; // zero kernel: nothing to interpolate

    CertifyOutcome t_out = certify_independence(k.t_column(), t_pool);
    if (!t_out.independent()) throw NotReduced("t-side");
    CertifyOutcome s_out = certify_independence(k.s_column(), s_pool);
    if (!s_out.independent()) throw NotReduced("s-side");

    pts.t_certificate = t_out.certificate();
    pts.s_certificate = s_out.certificate();
    pts.t_points = pts.t_certificate.points;
    pts.s_points = pts.s_certificate.points;
    pts.t_matrix = sample_matrix(k.t_column(), pts.t_points).values.transposed();
    pts.s_matrix = sample_matrix(k.s_column(), pts.s_points).values.transposed();
    return pts;
}

namespace {

// Solves the interpolation system once per evaluation point and caches
// the whole recovered vector, shared by the n factor handles.
struct RecoverySolver {
    KernelSampler sampler;
    IndependenceCertificate cert;
    PointTuple nodes;
    bool s_from_t;

    std::mutex mutex;
    std::unordered_map<std::string, std::vector<Scalar>> cache;

    std::vector<Scalar> at(const Point& p) {
        const std::string key = p.key();
        {
            std::lock_guard<std::mutex> lock(mutex);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        std::vector<Scalar> rhs;
        rhs.reserve(nodes.size());
        for (const Point& node : nodes)
            rhs.push_back(s_from_t ? sampler(node, p) : sampler(p, node));
        std::vector<Scalar> w = solve_transposed_sample(cert, rhs);
        std::lock_guard<std::mutex> lock(mutex);
        return cache.emplace(key, std::move(w)).first->second;
    }
};

} // namespace

RecoveredFactors recover_factors(const KernelSampler& sampler, const InterpolationPoints& pts,
                                 RecoverSide side, const PointTuple& eval_points) {
    const bool s_from_t = side == RecoverSide::SFromT;
    const IndependenceCertificate& cert = s_from_t ? pts.t_certificate : pts.s_certificate;
    const std::size_t n = pts.size();
    const FieldDescriptor fd = cert.field;

    auto solver = std::make_shared<RecoverySolver>();
    solver->sampler = sampler;
    solver->cert = cert;
    solver->nodes = s_from_t ? pts.t_points : pts.s_points;
    solver->s_from_t = s_from_t;

    RecoveredFactors out;
    out.side = side;
    out.eval_points = eval_points;
    out.handles.reserve(n);
    const std::string stem = s_from_t ? "S'" : "T'";
    for (std::size_t i = 0; i < n; ++i) {
        out.handles.push_back(FunctionHandle(
            stem + std::to_string(i + 1),
            [solver, i](const Point& p) { return solver->at(p)[i]; }));
    }
    out.table = Matrix(n, eval_points.size(), zero(fd));
    for (std::size_t j = 0; j < eval_points.size(); ++j) {
        std::vector<Scalar> w = solver->at(eval_points[j]);
        for (std::size_t i = 0; i < n; ++i) out.table(i, j) = w[i];
    }
    return out;
}

double reconstruction_residual(const KernelSampler& sampler, const SeparableKernel& rep,
                               const PointTuple& t_grid, const PointTuple& s_grid) {
    if (t_grid.empty() || s_grid.empty()) throw EmptyPool();
    const FieldDescriptor& fd = rep.field;
    double worst = 0.0;
    for (const Point& t : t_grid) {
        for (const Point& s : s_grid) {
            Scalar diff = sub(sampler(t, s), rep.eval(t, s), fd);
            if (fd.kind == FieldKind::PrimeField) {
                if (!is_effectively_zero(diff, 0.0, fd)) return 1.0;
            } else {
                worst = std::max(worst, magnitude(diff));
            }
        }
    }
    return worst;
}

} // namespace indep
