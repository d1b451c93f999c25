#ifndef INDEP_RANK_HPP
#define INDEP_RANK_HPP

#include "indep/elimination.hpp"

namespace indep {

struct RankResult {
    std::size_t rank = 0;
    std::vector<std::size_t> basis_indices; // 0-based, strictly increasing
    std::optional<IndependenceCertificate> certificate; // for the basis subsystem; absent when rank 0
};

// Rank of the function system over the pool: the rank of the full
// n x m sample matrix, with a greedy first-fit maximal independent
// subsystem and a certificate for it.
RankResult system_rank(const FunctionColumn& col, const CandidatePool& pool);

// Literal maximization of sample-matrix rank over all n-tuples drawn
// from the pool (with repetition). Guarded: m^n must stay <= 10^6.
std::size_t brute_force_rank(const FunctionColumn& col, const CandidatePool& pool);

} // namespace indep

#endif // INDEP_RANK_HPP
