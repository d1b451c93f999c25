#include "indep/rank.hpp"

#include <string>

namespace indep {

RankResult system_rank(const FunctionColumn& col, const CandidatePool& pool) {
    if (pool.size() == 0) throw EmptyPool();
    const std::size_t n = col.size();

    SampleMatrix full = sample_matrix(col, pool.points());
    RankResult result;
    result.rank = mat_rank(full.values, col.field());

    // Greedy first-fit basis: keep f_i iff the kept set plus f_i still
    // certifies independent over the pool.
    std::vector<std::size_t> kept;
    std::optional<IndependenceCertificate> cert;
    for (std::size_t i = 0; i < n && kept.size() < result.rank; ++i) {
        std::vector<std::size_t> trial = kept;
        trial.push_back(i);
        CertifyOutcome outcome = certify_independence(col.subsystem(trial), pool);
        if (outcome.independent()) {
            kept = std::move(trial);
            cert = outcome.certificate();
        }
    }
    result.basis_indices = std::move(kept);
    if (result.rank > 0) result.certificate = std::move(cert);
    return result;
}

std::size_t brute_force_rank(const FunctionColumn& col, const CandidatePool& pool) {
    if (pool.size() == 0) throw EmptyPool();
    const std::size_t n = col.size();
    const std::size_t m = pool.size();

    double tuples = 1.0;
    for (std::size_t i = 0; i < n; ++i) tuples *= static_cast<double>(m);
    if (tuples > 1e6)
        throw CombinatorialBlowup(std::to_string(m) + "^" + std::to_string(n) + " tuples");

    // Sample once over the whole pool; every tuple is a column selection.
    SampleMatrix full = sample_matrix(col, pool.points());
    const FieldDescriptor& fd = col.field();

    std::vector<std::size_t> idx(n, 0);
    std::size_t best = 0;
    for (;;) {
        Matrix sub(n, n, zero(fd));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) sub(i, j) = full.values(i, idx[j]);
        best = std::max(best, mat_rank(std::move(sub), fd));
        if (best == n) break; // cannot grow further

        std::size_t k = 0;
        while (k < n && ++idx[k] == m) idx[k++] = 0;
        if (k == n) break;
    }
    return best;
}

} // namespace indep
