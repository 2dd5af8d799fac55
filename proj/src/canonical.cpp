#include "twomain/canonical.hpp"

#include "twomain/errors.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <tuple>

namespace twomain {

namespace {

// Dense copy of the weights plus the refined colouring.
struct Prepared {
    int n = 0;
    std::vector<unsigned char> w;
    std::vector<int> color;

    int at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
};

Prepared prepare(const Multigraph& m) {
    Prepared p;
    p.n = m.order();
    p.w.assign(static_cast<std::size_t>(p.n) * p.n, 0);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) p.w[static_cast<std::size_t>(i) * p.n + j] = static_cast<unsigned char>(m.weight(i, j));

    // Colour refinement. Colours are ranks of sorted signatures, so the final
    // colouring is an isomorphism invariant (not just a partition).
    p.color.assign(p.n, 0);
    int classes = 1;
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    while (true) {
        std::vector<Signature> sig(p.n);
        for (int v = 0; v < p.n; ++v) {
            sig[v].first = p.color[v];
            for (int u = 0; u < p.n; ++u)
                if (int x = p.at(v, u); x != 0) sig[v].second.emplace_back(x, p.color[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::vector<Signature> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < p.n; ++v)
            p.color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return p;
}

// x and y are interchangeable: the transposition (x y) is an automorphism.
bool twins(const Prepared& p, int x, int y) {
    if (p.color[x] != p.color[y]) return false;
    for (int z = 0; z < p.n; ++z) {
        if (z == x || z == y) continue;
        if (p.at(x, z) != p.at(y, z)) return false;
    }
    return true;
}

class CanonSearch {
public:
    explicit CanonSearch(const Prepared& p) : p_(p), n_(p.n) {
        slot_color_ = p.color;
        std::sort(slot_color_.begin(), slot_color_.end());
        row_offset_.resize(n_ + 1, 0);
        for (int i = 1; i <= n_; ++i) row_offset_[i] = row_offset_[i - 1] + (i - 1);
        cur_.assign(row_offset_[n_], '0');
        perm_.assign(n_, -1);
        used_.assign(n_, false);
        twin_.assign(static_cast<std::size_t>(n_) * n_, false);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) twin_[static_cast<std::size_t>(x) * n_ + y] = x != y && twins(p_, x, y);
    }

    void run() { dfs(0); }

    std::string best;
    std::vector<int> best_perm;

private:
    void dfs(int i) {
        if (i == n_) {
            if (!have_best_ || cur_ > best) {
                best = cur_;
                best_perm = perm_;
                have_best_ = true;
            }
            return;
        }
        const int end = row_offset_[i + 1];
        std::vector<int> tried;
        for (int x = 0; x < n_; ++x) {
            if (used_[x] || p_.color[x] != slot_color_[i]) continue;
            bool redundant = false;
            for (int y : tried)
                if (twin_[static_cast<std::size_t>(x) * n_ + y]) redundant = true;
            if (redundant) continue;
            tried.push_back(x);
            for (int j = 0; j < i; ++j) cur_[row_offset_[i] + j] = static_cast<char>('0' + p_.at(x, perm_[j]));
            if (have_best_ && std::memcmp(cur_.data(), best.data(), end) < 0) continue;
            perm_[i] = x;
            used_[x] = true;
            dfs(i + 1);
            used_[x] = false;
            perm_[i] = -1;
        }
    }

    const Prepared& p_;
    int n_;
    std::vector<int> slot_color_;
    std::vector<int> row_offset_;
    std::string cur_;
    std::vector<int> perm_;
    std::vector<bool> used_;
    std::vector<bool> twin_;
    bool have_best_ = false;
};

// Extend a partial automorphism (image[v] >= 0 where fixed). Vertices are
// assigned in increasing order; candidates must match colour and all weights
// to already-mapped vertices.
bool extend_automorphism(const Prepared& p, std::vector<int>& image, std::vector<bool>& taken, int next) {
    while (next < p.n && image[next] >= 0) ++next;
    if (next == p.n) return true;
    for (int c = 0; c < p.n; ++c) {
        if (taken[c] || p.color[c] != p.color[next]) continue;
        bool ok = true;
        for (int v = 0; v < p.n && ok; ++v)
            if (image[v] >= 0 && p.at(next, v) != p.at(c, image[v])) ok = false;
        if (!ok) continue;
        image[next] = c;
        taken[c] = true;
        if (extend_automorphism(p, image, taken, next + 1)) return true;
        image[next] = -1;
        taken[c] = false;
    }
    return false;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void check_cap(int order, int cap) {
    if (order > cap) throw OrderTooLarge(order, cap);
}

}  // namespace

std::string CanonicalKey::str() const { return std::to_string(order) + ":" + cells; }

Multigraph permute(const Multigraph& m, const std::vector<int>& perm) {
    std::vector<Edge> es;
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (int x = m.weight(perm[i], perm[j]); x != 0) es.push_back({i, j, x});
    return Multigraph(n, es);
}

CanonicalForm canonical_form(const Multigraph& m, int cap) {
    check_cap(m.order(), cap);
    Prepared p = prepare(m);
    CanonSearch search(p);
    search.run();
    CanonicalForm out;
    out.key = {m.order(), search.best};
    out.labeling = search.best_perm;
    out.graph = permute(m, out.labeling);
    return out;
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b, int cap) {
    if (a.order() != b.order()) return false;
    return canonical_form(a, cap).key == canonical_form(b, cap).key;
}

std::vector<int> automorphism_orbits(const Multigraph& m, int cap) {
    check_cap(m.order(), cap);
    Prepared p = prepare(m);
    std::vector<int> parent(p.n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < p.n; ++x) {
        for (int y = x + 1; y < p.n; ++y) {
            if (p.color[x] != p.color[y] || find_root(parent, x) == find_root(parent, y)) continue;
            std::vector<int> image(p.n, -1);
            std::vector<bool> taken(p.n, false);
            image[x] = y;
            taken[y] = true;
            if (!extend_automorphism(p, image, taken, 0)) continue;
            for (int v = 0; v < p.n; ++v) parent[find_root(parent, v)] = find_root(parent, image[v]);
        }
    }
    std::vector<int> orbit(p.n, -1), label_of_root(p.n, -1);
    int next = 0;
    for (int v = 0; v < p.n; ++v) {
        int r = find_root(parent, v);
        if (label_of_root[r] < 0) label_of_root[r] = next++;
        orbit[v] = label_of_root[r];
    }
    return orbit;
}

int automorphism_orbit_count(const Multigraph& m, int cap) {
    auto orbit = automorphism_orbits(m, cap);
    return orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
}

}  // namespace twomain
