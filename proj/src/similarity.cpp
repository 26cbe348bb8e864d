#include "cospec/similarity.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace cospec {

ExactMatrix BlockSimilarity::assemble(int n) const {
    validate();
    partition.validate(n);
    ExactMatrix s(n, n);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& cls = partition.classes[i];
        for (size_t r = 0; r < cls.size(); ++r)
            for (size_t c = 0; c < cls.size(); ++c)
                s.at(cls[r], cls[c]) = blocks[i].at(static_cast<int>(r), static_cast<int>(c));
    }
    return s;
}

Rat BlockSimilarity::determinant() const {
    Rat det(1);
    for (const ExactMatrix& b : blocks) det *= cospec::determinant(b);
    return det;
}

void BlockSimilarity::validate() const {
    if (blocks.size() != partition.size())
        throw ShapeError("block count does not match partition class count");
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!blocks[i].square() ||
            blocks[i].rows() != static_cast<int>(partition.classes[i].size()))
            throw ShapeError("block " + std::to_string(i + 1) + " does not match its class size");
    }
}

namespace {

// Adjacency matrices of the distance-t graphs, t = 0..diameter.
std::vector<ExactMatrix> distance_layers(const Graph& g) {
    DistanceTable d = all_pairs_distances(g);
    int diam = d.diameter();
    std::vector<ExactMatrix> layers;
    for (int t = 0; t <= diam; ++t) {
        ExactMatrix a(g.order(), g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                if (d.at(u, v) == t) a.at(u, v) = 1;
        layers.push_back(std::move(a));
    }
    return layers;
}

// Equation families (P, Q): S must satisfy S P = Q S.
struct EquationFamily {
    ExactMatrix p, q;
    std::string label;
};

std::vector<EquationFamily> problem_families(const SimilarityProblem& prob) {
    std::vector<EquationFamily> fams;
    fams.push_back({build_matrix(prob.g1, prob.kind), build_matrix(prob.g2, prob.kind),
                    prob.kind.to_string()});
    int n = prob.g1.order();
    if (prob.constraints.require_sj_eq_js)
        fams.push_back({ExactMatrix::ones(n, n), ExactMatrix::ones(n, n), "J"});
    if (prob.constraints.simultaneous_all_t) {
        std::vector<ExactMatrix> l1 = distance_layers(prob.g1);
        std::vector<ExactMatrix> l2 = distance_layers(prob.g2);
        size_t tmax = std::max(l1.size(), l2.size());
        for (size_t t = 0; t < tmax; ++t) {
            ExactMatrix a1 = t < l1.size() ? l1[t] : ExactMatrix(n, n);
            ExactMatrix a2 = t < l2.size() ? l2[t] : ExactMatrix(n, n);
            fams.push_back({std::move(a1), std::move(a2), "A^(" + std::to_string(t) + ")"});
        }
    }
    return fams;
}

void check_problem_shapes(const SimilarityProblem& prob) {
    if (prob.g1.order() != prob.g2.order())
        throw ShapeError("similarity problems need equal vertex counts");
    prob.partition.validate(prob.g1.order());
}

}  // namespace

CheckOutcome check_similarity(const BlockSimilarity& s, const SimilarityProblem& prob) {
    check_problem_shapes(prob);
    s.validate();
    if (s.partition.classes != prob.partition.classes)
        throw ShapeError("similarity blocks do not conform to the problem partition");

    int n = prob.g1.order();
    std::vector<EquationFamily> fams = problem_families(prob);
    ExactMatrix full = s.assemble(n);

    CheckOutcome out;
    Rat det = s.determinant();
    if (det == 0) {
        out.failure = CheckFailure{"S is singular (zero determinant)", 0, 0};
        return out;
    }

    size_t l = prob.partition.size();
    for (size_t fi = 0; fi < fams.size(); ++fi) {
        const EquationFamily& fam = fams[fi];
        // Sub-block equations B_{i1} M1[i1,i2] = M2[i1,i2] B_{i2}; by
        // block-diagonality they are equivalent to S M1 = M2 S.
        for (size_t i1 = 0; i1 < l; ++i1)
            for (size_t i2 = 0; i2 < l; ++i2) {
                const auto& c1 = prob.partition.classes[i1];
                const auto& c2 = prob.partition.classes[i2];
                ExactMatrix lhs = s.blocks[i1] * fam.p.submatrix(c1, c2);
                ExactMatrix rhs = fam.q.submatrix(c1, c2) * s.blocks[i2];
                if (!(lhs == rhs)) {
                    out.failure = CheckFailure{
                        "block equation violated for " + fam.label,
                        static_cast<int>(i1) + 1, static_cast<int>(i2) + 1};
                    return out;
                }
            }
    }

    SimilarityCertificate cert;
    cert.det = det;
    cert.residual_zero = (full * fams[0].p - fams[0].q * full).is_zero();
    if (prob.constraints.require_sj_eq_js) {
        ExactMatrix j = ExactMatrix::ones(n, n);
        cert.sj_js_zero = (full * j - j * full).is_zero();
    }
    if (prob.constraints.simultaneous_all_t) {
        cert.simultaneous_zero = true;
        for (const EquationFamily& fam : fams) {
            if (fam.label.rfind("A^(", 0) != 0) continue;
            cert.max_t = std::max(cert.max_t,
                                  std::stoi(fam.label.substr(3, fam.label.size() - 4)));
            if (!(full * fam.p - fam.q * full).is_zero()) cert.simultaneous_zero = false;
        }
    }
    if (!cert.residual_zero ||
        (prob.constraints.require_sj_eq_js && !cert.sj_js_zero) ||
        (prob.constraints.simultaneous_all_t && !cert.simultaneous_zero)) {
        out.failure = CheckFailure{"full residual nonzero", 0, 0};
        return out;
    }
    out.witness = SimilarityWitness{s, std::move(cert)};
    return out;
}

FindResult find_block_similarity(const SimilarityProblem& prob, uint64_t rng_seed, int trials,
                                 long long coeff_bound) {
    check_problem_shapes(prob);
    if (trials < 1) throw Error("trials must be positive");
    if (coeff_bound < 1) throw Error("coefficient bound must be positive");

    size_t l = prob.partition.size();
    std::vector<int> class_size(l), unknown_offset(l);
    int unknowns = 0;
    for (size_t i = 0; i < l; ++i) {
        class_size[i] = static_cast<int>(prob.partition.classes[i].size());
        unknown_offset[i] = unknowns;
        unknowns += class_size[i] * class_size[i];
    }
    auto uix = [&](size_t i, int r, int c) { return unknown_offset[i] + r * class_size[i] + c; };

    std::vector<EquationFamily> fams = problem_families(prob);

    size_t total_rows = 0;
    for (size_t i1 = 0; i1 < l; ++i1)
        for (size_t i2 = 0; i2 < l; ++i2)
            total_rows += static_cast<size_t>(class_size[i1]) * class_size[i2];
    total_rows *= fams.size();

    ExactMatrix sys(static_cast<int>(total_rows), unknowns);
    int row = 0;
    for (const EquationFamily& fam : fams) {
        for (size_t i1 = 0; i1 < l; ++i1)
            for (size_t i2 = 0; i2 < l; ++i2) {
                const auto& c1 = prob.partition.classes[i1];
                const auto& c2 = prob.partition.classes[i2];
                for (int r = 0; r < class_size[i1]; ++r)
                    for (int c = 0; c < class_size[i2]; ++c) {
                        // sum_k B_{i1}[r,k] P[c1[k], c2[c]] - sum_k Q[c1[r], c2[k]] B_{i2}[k,c] = 0
                        for (int k = 0; k < class_size[i1]; ++k)
                            sys.at(row, uix(i1, r, k)) += fam.p.at(c1[static_cast<size_t>(k)],
                                                                   c2[static_cast<size_t>(c)]);
                        for (int k = 0; k < class_size[i2]; ++k)
                            sys.at(row, uix(i2, k, c)) -= fam.q.at(c1[static_cast<size_t>(r)],
                                                                   c2[static_cast<size_t>(k)]);
                        ++row;
                    }
            }
    }

    std::vector<std::vector<Rat>> basis = nullspace(sys);
    FindResult result;
    result.solution_space_dim = static_cast<int>(basis.size());

    auto blocks_from = [&](const std::vector<Rat>& x) {
        std::vector<ExactMatrix> blocks;
        for (size_t i = 0; i < l; ++i) {
            ExactMatrix b(class_size[i], class_size[i]);
            for (int r = 0; r < class_size[i]; ++r)
                for (int c = 0; c < class_size[i]; ++c)
                    b.at(r, c) = x[static_cast<size_t>(uix(i, r, c))];
            blocks.push_back(std::move(b));
        }
        return blocks;
    };

    if (!basis.empty()) {
        std::mt19937_64 rng(rng_seed);
        std::uniform_int_distribution<long long> coeff(-coeff_bound, coeff_bound);
        std::vector<Rat> x(static_cast<size_t>(unknowns));
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<long long> lambda(basis.size());
            for (auto& v : lambda) v = coeff(rng);
            // Clear common factors so witnesses come out with small entries.
            long long g = 0;
            for (long long v : lambda) g = std::gcd(g, v);
            if (g > 1)
                for (auto& v : lambda) v /= g;
            std::fill(x.begin(), x.end(), Rat(0));
            Rat term;
            for (size_t b = 0; b < basis.size(); ++b) {
                if (lambda[b] == 0) continue;
                for (size_t u = 0; u < x.size(); ++u) {
                    if (basis[b][u] == 0) continue;
                    term = basis[b][u];
                    term *= static_cast<long>(lambda[b]);
                    x[u] += term;
                }
            }
            BlockSimilarity s{blocks_from(x), prob.partition};
            if (s.determinant() == 0) continue;
            CheckOutcome chk = check_similarity(s, prob);
            if (!chk.ok()) throw Error("internal: sampled solution failed exact verification");
            result.witness = std::move(chk.witness);
            return result;
        }
    }

    NonexistenceReport rep;
    rep.solution_space_dim = result.solution_space_dim;
    rep.trials = trials;
    rep.coeff_bound = coeff_bound;
    int n = prob.g1.order();
    if (basis.empty()) {
        rep.verdict = NonexistenceReport::Verdict::NoSolutionSpace;
        rep.log10_error_bound = 0.0;
        rep.statement =
            "solution space of the block commutation system is {0}; "
            "no invertible element exists (exact)";
    } else {
        rep.verdict = NonexistenceReport::Verdict::AllSampledSingular;
        double per_trial = std::log10(static_cast<double>(n)) -
                           std::log10(2.0 * static_cast<double>(coeff_bound) + 1.0);
        rep.log10_error_bound = trials * per_trial;
        std::ostringstream os;
        os << "all " << trials << " sampled elements of the " << basis.size()
           << "-dimensional solution space were singular; if an invertible element existed, "
           << "P[all samples singular] <= (" << n << "/" << (2 * coeff_bound + 1) << ")^" << trials
           << " <= 10^" << rep.log10_error_bound;
        rep.statement = os.str();
    }
    result.report = std::move(rep);
    return result;
}

BlockSimilarity extend_similarity(const BlockSimilarity& s, const CoalescingSpec& spec) {
    s.validate();
    spec.validate();
    if (s.partition.classes != spec.partition.classes)
        throw ShapeError("similarity blocks do not align with the coalescing partition");

    BlockSimilarity out;
    int offset = 0;
    for (size_t i = 0; i < s.blocks.size(); ++i) {
        int copies = spec.attachments[i].graph.order();
        int width = static_cast<int>(spec.partition.classes[i].size());
        for (int j = 0; j < copies; ++j) {
            out.blocks.push_back(s.blocks[i]);
            std::vector<int> cls(static_cast<size_t>(width));
            std::iota(cls.begin(), cls.end(), offset);
            out.partition.classes.push_back(std::move(cls));
            offset += width;
        }
    }
    return out;
}

}  // namespace cospec
