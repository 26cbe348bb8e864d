#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cospec/linalg.hpp"
#include "cospec/matrices.hpp"

namespace cospec {

/// Block-diagonal rational matrix S = B_1 (+) ... (+) B_l aligned to a
/// vertex partition: block i acts on the coordinates of class V_i (in the
/// class's own vertex order).
struct BlockSimilarity {
    std::vector<ExactMatrix> blocks;
    Partition partition;

    /// Scatter blocks into the full n x n matrix: S[V_i[r], V_i[c]] = B_i[r,c].
    ExactMatrix assemble(int n) const;
    /// det(S) = product of block determinants.
    Rat determinant() const;
    void validate() const;  // throws ShapeError on block/class size mismatch
};

struct SimilarityConstraints {
    bool require_sj_eq_js = false;
    /// Require S A^(t)_{G1} = A^(t)_{G2} S for every t up to the larger
    /// diameter (A^(t) = adjacency of the distance-t graph, A^(0) = I).
    bool simultaneous_all_t = false;
};

struct SimilarityProblem {
    Graph g1, g2;
    Partition partition;  // indexes identically into both graphs
    MatrixKind kind;
    SimilarityConstraints constraints;
};

struct SimilarityCertificate {
    bool residual_zero = false;  // S M1 - M2 S = O, exact
    Rat det;                     // nonzero
    bool sj_js_zero = false;     // when required
    bool simultaneous_zero = false;
    int max_t = -1;  // largest t covered by the simultaneous check
};

struct SimilarityWitness {
    BlockSimilarity s;
    SimilarityCertificate certificate;
};

struct CheckFailure {
    std::string reason;
    // 1-based class indices of the first violated sub-block equation
    // B_{i1} M1[i1,i2] = M2[i1,i2] B_{i2}; 0 when not block-attributable.
    int block_i1 = 0;
    int block_i2 = 0;
};

struct CheckOutcome {
    std::optional<SimilarityWitness> witness;
    std::optional<CheckFailure> failure;
    bool ok() const { return witness.has_value(); }
};

/// Exact verification that S certifies the problem: S M1 = M2 S, det(S) != 0,
/// plus each requested constraint. Shape mismatches throw ShapeError;
/// mathematical violations come back as CheckFailure.
CheckOutcome check_similarity(const BlockSimilarity& s, const SimilarityProblem& prob);

struct NonexistenceReport {
    enum class Verdict { NoSolutionSpace, AllSampledSingular };

    Verdict verdict = Verdict::NoSolutionSpace;
    int solution_space_dim = 0;
    int trials = 0;
    long long coeff_bound = 0;
    /// For AllSampledSingular: log10 of the Schwartz-Zippel failure bound
    /// (n / (2*coeff_bound + 1))^trials; 0 probability for NoSolutionSpace.
    double log10_error_bound = 0.0;
    std::string statement;
};

struct FindResult {
    std::optional<SimilarityWitness> witness;
    std::optional<NonexistenceReport> report;
    int solution_space_dim = 0;
    bool found() const { return witness.has_value(); }
};

inline constexpr int kDefaultTrials = 64;
inline constexpr long long kDefaultCoeffBound = 1000000;

/// Sets up the sub-block commutation system B_{i1} M1[i1,i2] = M2[i1,i2] B_{i2}
/// over all class pairs (plus B_{i1} J = J B_{i2} rows under the SJ=JS
/// constraint, plus one copy per t when simultaneous), computes its exact
/// nullspace, and samples integer coefficient vectors from
/// [-coeff_bound, coeff_bound] looking for an invertible element.
FindResult find_block_similarity(const SimilarityProblem& prob,
                                 uint64_t rng_seed = 0,
                                 int trials = kDefaultTrials,
                                 long long coeff_bound = kDefaultCoeffBound);

/// S-hat: block B_i repeated |V(H_i)| times, aligned to the (i, j) block
/// order of the coalesced labeling. Inherits invertibility blockwise.
BlockSimilarity extend_similarity(const BlockSimilarity& s, const CoalescingSpec& spec);

}  // namespace cospec
