#pragma once

#include "twomain/graph.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace twomain {

/// Exact walk matrix [j, Aj, …, A^{n−1}j], stored column-wise.
struct WalkMatrix {
    int order = 0;
    std::vector<std::vector<mpz_class>> columns;
};

WalkMatrix walk_matrix(const IntSymMatrix& a);
WalkMatrix walk_matrix(const Multigraph& m);
WalkMatrix walk_matrix(const SignedGraph& s);

/// Rank over Q by fraction-free (Bareiss) elimination with full pivoting.
/// Equals the number of distinct main eigenvalues.
int walk_rank(const WalkMatrix& w);
int walk_rank(const Multigraph& m);
int walk_rank(const SignedGraph& s);

inline constexpr double kDefaultTolerance = 1e-9;

/// One distinct eigenvalue (after merging numerically equal ones).
struct EigenCluster {
    double value = 0.0;
    int multiplicity = 0;
    /// Squared norm of the projection of j onto the eigenspace.
    double projection = 0.0;
    bool main = false;
};

struct SpectralReport {
    std::vector<double> eigenvalues;  // ascending, with multiplicity
    std::vector<EigenCluster> clusters;
    int main_count_float = 0;
    int main_count_exact = 0;

    bool disagree() const { return main_count_float != main_count_exact; }
    std::vector<double> main_eigenvalues() const;
};

/// Float eigendecomposition cross-check. Eigenvalues within tol·max(1,|A|max)·n
/// of their neighbour share an eigenspace; a cluster is main when its squared
/// projection exceeds tol·n. Throws NumericalFailure if the solver fails and
/// std::invalid_argument unless 0 < tol < 1.
SpectralReport main_eigenvalues_float(const IntSymMatrix& a, double tol = kDefaultTolerance);
SpectralReport main_eigenvalues_float(const Multigraph& m, double tol = kDefaultTolerance);

enum class CertificateStatus {
    valid,          // integers a, b with zero residuals and j not an eigenvector
    j_eigenvector,  // constant degree: no certificate exists
    inconsistent,   // the pair system has no common solution at every vertex
    nonintegral,    // a rational solution fits every vertex but is not integral
};

std::string to_string(CertificateStatus s);

struct ABCertificate {
    long long a = 0;
    long long b = 0;
    /// a·d(v) + b − s(v) per vertex.
    std::vector<long long> residuals;
    bool j_is_eigenvector = false;

    bool valid() const;
};

struct ABSolution {
    CertificateStatus status = CertificateStatus::inconsistent;
    /// Present whenever the candidate (a, b) is integral, even if residuals are nonzero.
    std::optional<ABCertificate> certificate;
    /// The candidate pair as rationals; absent when j is an eigenvector.
    std::optional<mpq_class> a_rational;
    std::optional<mpq_class> b_rational;

    bool valid() const { return status == CertificateStatus::valid; }
};

/// Solves a·d(v) + b = s(v) from the lexicographically first vertex pair with
/// distinct degrees and checks every vertex. Throws OrderTooSmall for n < 2.
ABSolution solve_ab(const Multigraph& m);

struct TwoMainEvidence {
    bool two_main = false;
    int walk_rank = 0;
    ABSolution ab;
    /// Walk rank 2 and the certificate test disagree (should never happen).
    bool disagree = false;
};

TwoMainEvidence two_main_check(const Multigraph& m);

}  // namespace twomain
