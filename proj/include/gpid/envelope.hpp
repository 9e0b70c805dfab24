#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/engine.hpp"
#include "gpid/gpoly.hpp"
#include "gpid/walgebra.hpp"

namespace gpid {

namespace detail {

// Exterior algebra on m generators as a plain FiniteAlgebra, basis indexed by
// subsets (bitmask), parity = word length mod 2.
inline FiniteAlgebra exterior_algebra(int m) { return grassmann_truncated(m).A; }

} // namespace detail

// Grassmann envelope over the exterior algebra on m generators:
// (A_0 tensor E_0) + (A_1 tensor E_1), a subalgebra of A tensor E with
// componentwise multiplication, carrying the W-action w(a tensor g) =
// (wa) tensor g. The carrier stays Z_2-graded by the common parity of the
// two tensor factors. For multilinear questions of degree <= m the finite
// truncation is faithful: any evaluation of degree n uses at most n odd
// generators.
inline WAction envelope(const WAction& act, int m) {
    if (!act.is_graded()) throw std::invalid_argument("envelope: base algebra must be graded");
    if (m < 1) throw std::invalid_argument("envelope: m must be positive");
    FiniteAlgebra E = detail::exterior_algebra(m);
    int de = E.dim();
    auto subset_parity = [](int s) { return __builtin_popcount(static_cast<unsigned>(s)) % 2; };

    // Carrier basis: pairs (A-basis index, subset) of matching parity.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < act.A.dim(); ++i)
        for (int s = 0; s < de; ++s)
            if (subset_parity(s) == act.parity[i]) pairs.emplace_back(i, s);
    int d = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_index(act.A.dim(), std::vector<int>(de, -1));
    for (int p = 0; p < d; ++p) pair_index[pairs[p].first][pairs[p].second] = p;

    WAction out;
    out.name = act.name + "_envelope" + std::to_string(m);
    out.W = act.W;
    for (const auto& [i, s] : pairs) {
        out.A.basis.push_back(act.A.basis[i] + "*" + E.basis[s]);
        out.parity.push_back(act.parity[i]);
    }
    out.A.mult.assign(d, std::vector<RatVec>(d, RatVec(d, 0)));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            auto [i, s] = pairs[p];
            auto [j, t] = pairs[q];
            if (s & t) continue; // square of a generator
            const Rat& esign = E.mult[s][t][s | t];
            if (esign == 0) continue;
            for (int u = 0; u < act.A.dim(); ++u) {
                const Rat& c = act.A.mult[i][j][u];
                if (c == 0) continue;
                int target = pair_index[u][s | t];
                if (target < 0)
                    throw VerificationError("envelope: product left the carrier (grading violated)");
                out.A.mult[p][q][target] += c * esign;
            }
        }
    out.left.assign(act.W.dim(), std::vector<RatVec>(d, RatVec(d, 0)));
    out.right.assign(d, std::vector<RatVec>(act.W.dim(), RatVec(d, 0)));
    for (int wi = 0; wi < act.W.dim(); ++wi)
        for (int p = 0; p < d; ++p) {
            auto [i, s] = pairs[p];
            for (int u = 0; u < act.A.dim(); ++u) {
                if (act.left[wi][i][u] != 0) {
                    int target = pair_index[u][s];
                    if (target < 0) throw VerificationError("envelope: W-action left the carrier");
                    out.left[wi][p][target] += act.left[wi][i][u];
                }
                if (act.right[i][wi][u] != 0) {
                    int target = pair_index[u][s];
                    if (target < 0) throw VerificationError("envelope: W-action left the carrier");
                    out.right[p][wi][target] += act.right[i][wi][u];
                }
            }
        }
    out.validate();
    return out;
}

// Full tensor product A tensor E with the diagonal grading; provided for
// experimentation (the envelope is its even part re-graded by the A factor).
inline WAction tensor_with_grassmann(const WAction& act, int m) {
    if (!act.is_graded()) throw std::invalid_argument("tensor_with_grassmann: base algebra must be graded");
    FiniteAlgebra E = detail::exterior_algebra(m);
    int de = E.dim(), da = act.A.dim(), d = da * de;
    auto idx = [&](int i, int s) { return i * de + s; };
    WAction out;
    out.name = act.name + "_tensorE" + std::to_string(m);
    out.W = act.W;
    for (int i = 0; i < da; ++i)
        for (int s = 0; s < de; ++s) {
            out.A.basis.push_back(act.A.basis[i] + "*" + E.basis[s]);
            out.parity.push_back((act.parity[i] + __builtin_popcount(static_cast<unsigned>(s))) % 2);
        }
    out.A.mult.assign(d, std::vector<RatVec>(d, RatVec(d, 0)));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int s = 0; s < de; ++s)
                for (int t = 0; t < de; ++t) {
                    if (s & t) continue;
                    const Rat& esign = E.mult[s][t][s | t];
                    if (esign == 0) continue;
                    for (int u = 0; u < da; ++u)
                        if (act.A.mult[i][j][u] != 0)
                            out.A.mult[idx(i, s)][idx(j, t)][idx(u, s | t)] += act.A.mult[i][j][u] * esign;
                }
    out.left.assign(act.W.dim(), std::vector<RatVec>(d, RatVec(d, 0)));
    out.right.assign(d, std::vector<RatVec>(act.W.dim(), RatVec(d, 0)));
    for (int wi = 0; wi < act.W.dim(); ++wi)
        for (int i = 0; i < da; ++i)
            for (int s = 0; s < de; ++s)
                for (int u = 0; u < da; ++u) {
                    if (act.left[wi][i][u] != 0) out.left[wi][idx(i, s)][idx(u, s)] += act.left[wi][i][u];
                    if (act.right[i][wi][u] != 0) out.right[idx(i, s)][wi][idx(u, s)] += act.right[i][wi][u];
                }
    out.validate();
    return out;
}

// Graded identity testing: f (multilinear, with declared variable parities)
// vanishes under every admissible substitution, i.e. even variables range
// over the even part of A and odd variables over the odd part.
inline bool graded_is_identity(const GradedGenPoly& f, const WAction& act) {
    if (!act.is_graded()) throw std::invalid_argument("graded_is_identity: algebra must be graded");
    if (f.poly.w_dim != act.W.dim()) throw std::invalid_argument("graded_is_identity: ambient W mismatch");
    int n = static_cast<int>(f.parity.size());
    if (f.poly.terms.empty()) return true;
    if (!f.poly.is_multilinear(n))
        throw std::invalid_argument("graded_is_identity: polynomial must be multilinear in its declared variables");
    std::vector<std::vector<int>> allowed(n);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < act.A.dim(); ++j)
            if (act.parity[j] == f.parity[v]) allowed[v].push_back(j);
    for (int v = 0; v < n; ++v)
        if (allowed[v].empty()) return true; // the only admissible value is 0
    std::vector<int> choice(n, 0);
    while (true) {
        std::vector<RatVec> args(n);
        for (int v = 0; v < n; ++v) args[v] = act.A.basis_vec(allowed[v][choice[v]]);
        RatVec val = evaluate(f.poly, act, args);
        for (const Rat& c : val)
            if (c != 0) return false;
        int pos = n - 1;
        while (pos >= 0 && choice[pos] + 1 == static_cast<int>(allowed[pos].size())) choice[pos--] = 0;
        if (pos < 0) break;
        choice[pos]++;
    }
    return true;
}

// The sign-twist correspondence: a multilinear graded f of degree <= m is a
// graded identity of the envelope over m Grassmann generators if and only if
// its sign twist is a graded identity of A. Degrees above m are rejected
// because the truncated envelope would not be faithful there.
inline bool tilde_correspondence_check(const GradedGenPoly& f, const WAction& act, int m) {
    int n = static_cast<int>(f.parity.size());
    if (n > m) throw std::invalid_argument("tilde_correspondence_check: degree exceeds the generator count m");
    WAction env = envelope(act, m);
    bool on_envelope = graded_is_identity(f, env);
    bool twisted_on_base = graded_is_identity(tilde(f), act);
    return on_envelope == twisted_on_base;
}

} // namespace gpid
