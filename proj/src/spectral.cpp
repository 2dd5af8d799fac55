#include "twomain/spectral.hpp"

#include "twomain/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twomain {

WalkMatrix walk_matrix(const IntSymMatrix& a) {
    const int n = a.order();
    WalkMatrix w;
    w.order = n;
    w.columns.reserve(n);
    w.columns.emplace_back(n, mpz_class(1));
    for (int k = 1; k < n; ++k) {
        const auto& prev = w.columns.back();
        std::vector<mpz_class> next(n, mpz_class(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (int x = a.at(i, j); x != 0) next[i] += x * prev[j];
        w.columns.push_back(std::move(next));
    }
    return w;
}

WalkMatrix walk_matrix(const Multigraph& m) { return walk_matrix(m.adjacency()); }
WalkMatrix walk_matrix(const SignedGraph& s) { return walk_matrix(s.adjacency()); }

int walk_rank(const WalkMatrix& w) {
    const int n = w.order;
    // rows = vertices, cols = powers
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) m[i][k] = w.columns[k][i];

    mpz_class prev = 1;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        int pr = -1, pc = -1;
        for (int i = k; i < n && pr < 0; ++i)
            for (int j = k; j < n; ++j)
                if (sgn(m[i][j]) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[k], m[pr]);
        if (pc != k)
            for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][pc]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
        ++rank;
    }
    return rank;
}

int walk_rank(const Multigraph& m) { return walk_rank(walk_matrix(m)); }
int walk_rank(const SignedGraph& s) { return walk_rank(walk_matrix(s)); }

std::vector<double> SpectralReport::main_eigenvalues() const {
    std::vector<double> out;
    for (const auto& c : clusters)
        if (c.main) out.push_back(c.value);
    return out;
}

SpectralReport main_eigenvalues_float(const IntSymMatrix& a, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("tolerance must lie in (0, 1)");
    const int n = a.order();
    Eigen::MatrixXd mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat(i, j) = a.at(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver did not converge");

    const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    const double merge = tol * std::max(1, a.max_abs_entry()) * n;
    const double main_threshold = tol * n;

    SpectralReport r;
    r.eigenvalues.assign(values.data(), values.data() + n);
    int i = 0;
    while (i < n) {
        int j = i + 1;
        while (j < n && values(j) - values(j - 1) <= merge) ++j;
        EigenCluster c;
        c.multiplicity = j - i;
        double sum = 0.0, proj = 0.0;
        for (int k = i; k < j; ++k) {
            sum += values(k);
            double dot = vectors.col(k).sum();
            proj += dot * dot;
        }
        c.value = sum / c.multiplicity;
        c.projection = proj;
        c.main = proj > main_threshold;
        if (c.main) ++r.main_count_float;
        r.clusters.push_back(c);
        i = j;
    }
    r.main_count_exact = walk_rank(walk_matrix(a));
    return r;
}

SpectralReport main_eigenvalues_float(const Multigraph& m, double tol) {
    return main_eigenvalues_float(m.adjacency(), tol);
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::valid: return "valid";
        case CertificateStatus::j_eigenvector: return "j-eigenvector";
        case CertificateStatus::inconsistent: return "inconsistent";
        case CertificateStatus::nonintegral: return "nonintegral";
    }
    return "unknown";
}

bool ABCertificate::valid() const {
    return !j_is_eigenvector && std::all_of(residuals.begin(), residuals.end(), [](long long r) { return r == 0; });
}

ABSolution solve_ab(const Multigraph& m) {
    const int n = m.order();
    if (n < 2) throw OrderTooSmall("solve_ab needs order >= 2, got " + std::to_string(n));
    const DegreeProfile p = degree_profile(m);

    int first = -1, second = -1;
    for (int u = 0; u < n && first < 0; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.degrees[u] != p.degrees[v]) {
                first = u;
                second = v;
                break;
            }

    ABSolution out;
    if (first < 0) {
        out.status = CertificateStatus::j_eigenvector;
        return out;
    }

    mpq_class a(mpz_class(static_cast<long>(p.s_values[first] - p.s_values[second])),
                mpz_class(static_cast<long>(p.degrees[first] - p.degrees[second])));
    a.canonicalize();
    mpq_class b = mpq_class(static_cast<long>(p.s_values[first])) - a * static_cast<long>(p.degrees[first]);
    out.a_rational = a;
    out.b_rational = b;

    bool fits = true;
    for (int v = 0; v < n; ++v)
        if (a * static_cast<long>(p.degrees[v]) + b != static_cast<long>(p.s_values[v])) fits = false;

    const bool integral = a.get_den() == 1 && b.get_den() == 1;
    if (integral) {
        ABCertificate c;
        c.a = a.get_num().get_si();
        c.b = b.get_num().get_si();
        c.residuals.resize(n);
        for (int v = 0; v < n; ++v) c.residuals[v] = c.a * p.degrees[v] + c.b - p.s_values[v];
        out.certificate = std::move(c);
    }
    if (!fits)
        out.status = CertificateStatus::inconsistent;
    else
        out.status = integral ? CertificateStatus::valid : CertificateStatus::nonintegral;
    return out;
}

TwoMainEvidence two_main_check(const Multigraph& m) {
    if (m.order() < 2) throw OrderTooSmall("two_main_check needs order >= 2");
    TwoMainEvidence e;
    e.walk_rank = walk_rank(m);
    e.two_main = e.walk_rank == 2;
    e.ab = solve_ab(m);
    e.disagree = e.two_main != e.ab.valid();
    return e;
}

}  // namespace twomain
