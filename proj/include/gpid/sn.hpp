#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "gpid/linalg.hpp"
#include "gpid/partition.hpp"
#include "gpid/schur.hpp"

namespace gpid {

// Permutations are 0-based image vectors. Composition convention, used
// everywhere in the library: (a * b)(i) = a(b(i)) — apply the right factor
// first. A permutation acts on polynomials by substitution of variables,
// sigma * f(x_1,...,x_n) = f(x_{sigma(1)},...,x_{sigma(n)}).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

inline int perm_sign(const Perm& p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

// Canonical class representative: cycles of the given lengths laid out
// consecutively on 0..n-1.
inline Perm class_representative(const Partition& mu) {
    Perm p(mu.size());
    int start = 0;
    for (int part : mu.parts()) {
        for (int i = 0; i < part; ++i) p[start + i] = start + (i + 1) % part;
        start += part;
    }
    return p;
}

// |class of cycle type mu| = n! / z_mu, z_mu = prod_i i^{m_i} m_i!.
inline Int class_size(const Partition& mu) {
    int n = mu.size();
    Int z = 1;
    int i = 0;
    const auto& parts = mu.parts();
    while (i < static_cast<int>(parts.size())) {
        int j = i;
        while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= parts[i];
        z *= factorial(mult);
        i = j;
    }
    return factorial(n) / z;
}

namespace detail {
// Beta-set (first-column hook lengths) form of the Murnaghan-Nakayama rule:
// removing a border strip of length r corresponds to replacing some b in the
// beta-set by b - r (if absent), with sign (-1)^{#elements strictly between}.
inline Int mn_rec(std::vector<int>& beta, const std::vector<int>& cycles, size_t idx) {
    if (idx == cycles.size()) return 1;
    int r = cycles[idx];
    Int total = 0;
    for (size_t t = 0; t < beta.size(); ++t) {
        int b = beta[t];
        if (b < r) continue;
        if (std::find(beta.begin(), beta.end(), b - r) != beta.end()) continue;
        int between = 0;
        for (int c : beta)
            if (c > b - r && c < b) ++between;
        std::vector<int> next = beta;
        next[t] = b - r;
        std::sort(next.begin(), next.end());
        Int sub = mn_rec(next, cycles, idx + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}
} // namespace detail

// Irreducible character chi_lambda evaluated on the class of cycle type mu.
inline Int irreducible_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("irreducible_character: |lambda| != |mu|");
    if (lambda.empty()) return 1;
    int h = lambda.height();
    std::vector<int> beta(h);
    for (int i = 1; i <= h; ++i) beta[i - 1] = lambda.part(i) + (h - i);
    std::sort(beta.begin(), beta.end());
    return detail::mn_rec(beta, mu.parts(), 0);
}

// A class function on S_n, stored per cycle type.
struct CharacterVector {
    int n = 0;
    std::map<Partition, Rat, PartitionOrder> values;

    Rat operator()(const Partition& mu) const {
        auto it = values.find(mu);
        if (it == values.end()) throw std::invalid_argument("CharacterVector: value missing on class " + mu.to_string());
        return it->second;
    }
};

inline CharacterVector character_of(const Partition& lambda) {
    CharacterVector phi;
    phi.n = lambda.size();
    for (const Partition& mu : enumerate_partitions(phi.n))
        phi.values[mu] = Rat(irreducible_character(lambda, mu));
    return phi;
}

inline Rat inner_product(const CharacterVector& phi, const CharacterVector& psi) {
    if (phi.n != psi.n) throw std::invalid_argument("inner_product: degree mismatch");
    Rat s = 0;
    for (const Partition& mu : enumerate_partitions(phi.n))
        s += Rat(class_size(mu)) * phi(mu) * psi(mu);
    return s / Rat(factorial(phi.n));
}

// Multiplicities <phi, chi_lambda>. Hard failure on a non-integral or
// negative value: for genuine module characters that is a bug upstream.
inline SchurExpansion decompose(const CharacterVector& phi) {
    SchurExpansion exp(phi.n == 0 ? 1 : phi.n);
    for (const Partition& lambda : enumerate_partitions(phi.n)) {
        Rat m = inner_product(phi, character_of(lambda));
        if (!is_integer(m) || m < 0)
            throw VerificationError("decompose: multiplicity of " + lambda.to_string() + " is " +
                                    rat_to_string(m) + ", expected a nonnegative integer");
        exp.add(lambda, m);
    }
    return exp;
}

// A bijective filling of the diagram of `shape` with 1..n, row by row.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    static Tableau row_major(const Partition& shape) {
        Tableau t{shape, {}};
        int next = 1;
        for (int i = 1; i <= shape.height(); ++i) {
            std::vector<int> row(shape.part(i));
            for (int& v : row) v = next++;
            t.rows.push_back(std::move(row));
        }
        return t;
    }
};

// Element of the group algebra F[S_n] with finite support.
struct GroupAlgebraElement {
    int n = 0;
    std::map<Perm, Rat> terms;

    void add(const Perm& p, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(p);
        if (it == terms.end()) {
            terms.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

namespace detail {
// All permutations of 0..n-1 stabilizing each block, as full permutations.
inline std::vector<Perm> block_stabilizer(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<Perm> result{perm_identity(n)};
    for (const auto& block : blocks) {
        std::vector<int> arranged = block;
        std::sort(arranged.begin(), arranged.end());
        std::vector<Perm> grown;
        do {
            Perm p = perm_identity(n);
            std::vector<int> sorted = block;
            std::sort(sorted.begin(), sorted.end());
            for (size_t i = 0; i < sorted.size(); ++i) p[sorted[i]] = arranged[i];
            for (const Perm& q : result) grown.push_back(perm_compose(p, q));
        } while (std::next_permutation(arranged.begin(), arranged.end()));
        result = std::move(grown);
    }
    return result;
}
} // namespace detail

// e_T = sum over sigma in the row stabilizer, tau in the column stabilizer
// of sgn(tau) sigma tau.
inline GroupAlgebraElement young_symmetrizer(const Tableau& t) {
    int n = t.shape.size();
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> rows, cols(t.shape.part(1));
    for (const auto& row : t.rows) {
        std::vector<int> r;
        for (size_t j = 0; j < row.size(); ++j) {
            int v = row[j] - 1;
            if (v < 0 || v >= n || used[v]) throw std::invalid_argument("young_symmetrizer: filling is not a bijection");
            used[v] = true;
            r.push_back(v);
            cols[j].push_back(v);
        }
        rows.push_back(std::move(r));
    }
    GroupAlgebraElement e;
    e.n = n;
    for (const Perm& sigma : detail::block_stabilizer(rows, n))
        for (const Perm& tau : detail::block_stabilizer(cols, n))
            e.add(perm_compose(sigma, tau), perm_sign(tau));
    return e;
}

inline std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// dim span{sigma e_T : sigma in S_n} inside F[S_n]; equals d_lambda for any
// standard tableau (the span is a minimal left ideal).
inline int symmetrizer_span_dimension(const Tableau& t) {
    int n = t.shape.size();
    std::vector<Perm> perms = all_permutations(n);
    std::map<Perm, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    GroupAlgebraElement e = young_symmetrizer(t);
    RowReducer red(static_cast<int>(perms.size()));
    for (const Perm& sigma : perms) {
        RatVec row(perms.size(), 0);
        for (const auto& [pi, c] : e.terms) row[index[perm_compose(sigma, pi)]] += c;
        red.add_row(std::move(row));
    }
    return red.rank();
}

// Restriction of chi_lambda to S_{n-1} equals the sum of chi_mu over the
// remove-one-box partitions mu.
inline bool branching_check(const Partition& lambda) {
    int n = lambda.size();
    if (n < 2) return true;
    std::vector<Partition> down = branch_down(lambda);
    for (const Partition& mu : enumerate_partitions(n - 1)) {
        std::vector<int> with_fixed = mu.parts();
        with_fixed.push_back(1);
        std::sort(with_fixed.rbegin(), with_fixed.rend());
        Int restricted = irreducible_character(lambda, Partition(std::move(with_fixed)));
        Int expected = 0;
        for (const Partition& d : down) expected += irreducible_character(d, mu);
        if (restricted != expected) return false;
    }
    return true;
}

} // namespace gpid
