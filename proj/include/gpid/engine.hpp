#pragma once

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gpid/gpoly.hpp"
#include "gpid/linalg.hpp"
#include "gpid/partition.hpp"
#include "gpid/poly.hpp"
#include "gpid/schur.hpp"
#include "gpid/sn.hpp"
#include "gpid/walgebra.hpp"

namespace gpid {

// ---------------------------------------------------------------------------
// Evaluation of generalized polynomials.
// ---------------------------------------------------------------------------

// Value of a monomial w_0 x_{j_1} w_1 ... x_{j_n} w_n at a tuple of elements
// of A (coordinate vectors). W factors equal to -1 mean 1_W and are skipped.
inline RatVec evaluate(const GenMonomial& m, const WAction& act, const std::vector<RatVec>& args) {
    if (m.degree() == 0)
        throw std::invalid_argument("evaluate: monomials without variables have no value in A");
    RatVec v = args.at(m.x[0]);
    if (m.w[0] >= 0) v = act.act_left(act.W.basis_vec(m.w[0]), v);
    for (int j = 1; j < m.degree(); ++j) {
        if (m.w[j] >= 0) v = act.act_right(v, act.W.basis_vec(m.w[j]));
        v = act.A.multiply(v, args.at(m.x[j]));
    }
    if (m.w[m.degree()] >= 0) v = act.act_right(v, act.W.basis_vec(m.w[m.degree()]));
    return v;
}

inline RatVec evaluate(const GenPoly& f, const WAction& act, const std::vector<RatVec>& args) {
    RatVec r = act.A.zero();
    for (const auto& [m, c] : f.terms) {
        RatVec v = evaluate(m, act, args);
        for (int t = 0; t < act.A.dim(); ++t)
            if (v[t] != 0) r[t] += c * v[t];
    }
    return r;
}

namespace detail {

inline int num_workers() {
    if (const char* s = std::getenv("GPI_THREADS")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 1;
}

// All k-tuples of nonnegative integers summing to n, in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == k - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (k >= 1) rec(rec, 0, n);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// The multilinear evaluation space.
// ---------------------------------------------------------------------------

// Image of the evaluation map on the multilinear space in x_1..x_n: one row
// per canonical basis monomial, one column per (basis tuple of A^n, output
// coordinate). A multilinear polynomial is an identity iff it vanishes at
// all basis tuples, so the row span is isomorphic to gP_n modulo identities
// and its rank is the codimension gc_n(A).
//
// The S_n action travels through the evaluation map as a column permutation,
// (sigma * v)[(t, c)] = v[(t o sigma, c)] with (t o sigma)(i) = t(sigma(i)),
// so the cocharacter's traces can be read off the reduced row basis: in an
// RREF basis the coordinate of a span vector with respect to basis row j is
// its entry at the j-th pivot column.
class EvaluationSpace {
public:
    EvaluationSpace(const WAction& act, int n)
        : n_(n), da_(act.A.dim()), reducer_(ipow(act.A.dim(), n + 1)) {
        if (n < 1) throw std::invalid_argument("EvaluationSpace: need n >= 1");
        MultilinearBasis basis(n, act.W.dim());
        std::vector<RatVec> args(da_);
        for (int i = 0; i < da_; ++i) args[i] = act.A.basis_vec(i);

        int workers = detail::num_workers();
        int total = basis.size();
        int chunk = std::max(1, std::min(total, 64 * workers));
        std::vector<RatVec> rows(chunk);
        for (int start = 0; start < total; start += chunk) {
            int count = std::min(chunk, total - start);
            auto fill = [&](int lo, int hi) {
                std::vector<int> tuple(n_, 0);
                for (int r = lo; r < hi; ++r) {
                    RatVec row(reducer_.ncols(), 0);
                    std::fill(tuple.begin(), tuple.end(), 0);
                    std::vector<RatVec> pick(n_);
                    int tidx = 0;
                    while (true) {
                        for (int i = 0; i < n_; ++i) pick[i] = args[tuple[i]];
                        RatVec v = evaluate(basis.monomials[start + r], act, pick);
                        for (int c = 0; c < da_; ++c)
                            if (v[c] != 0) row[tidx * da_ + c] = v[c];
                        int pos = n_ - 1;
                        while (pos >= 0 && tuple[pos] == da_ - 1) tuple[pos--] = 0;
                        if (pos < 0) break;
                        tuple[pos]++;
                        ++tidx;
                        continue;
                    }
                    rows[r] = std::move(row);
                }
            };
            if (workers == 1 || count == 1) {
                fill(0, count);
            } else {
                std::vector<std::thread> pool;
                int per = (count + workers - 1) / workers;
                for (int w = 0; w < workers; ++w) {
                    int lo = w * per, hi = std::min(count, lo + per);
                    if (lo >= hi) break;
                    pool.emplace_back(fill, lo, hi);
                }
                for (auto& th : pool) th.join();
            }
            for (int r = 0; r < count; ++r) reducer_.add_row(std::move(rows[r]));
        }
    }

    int n() const { return n_; }
    int rank() const { return reducer_.rank(); }

    // Trace of sigma acting on the row span: for each reduced basis row b_j
    // with pivot (t_j, c_j), the coefficient of b_j in sigma * b_j is
    // b_j[(t_j o sigma, c_j)].
    Rat trace(const Perm& sigma) const {
        Rat total = 0;
        for (int j = 0; j < reducer_.rank(); ++j) {
            int p = reducer_.pivots()[j];
            int c = p % da_;
            std::vector<int> t(n_);
            int rest = p / da_;
            for (int i = n_ - 1; i >= 0; --i) {
                t[i] = rest % da_;
                rest /= da_;
            }
            int col = 0;
            for (int i = 0; i < n_; ++i) col = col * da_ + t[sigma[i]];
            total += reducer_.basis()[j][col * da_ + c];
        }
        return total;
    }

private:
    static int ipow(int b, int e) {
        int r = 1;
        while (e--) r *= b;
        return r;
    }

    int n_, da_;
    RowReducer reducer_;
};

inline Int codimension(const WAction& act, int n) { return EvaluationSpace(act, n).rank(); }

// ---------------------------------------------------------------------------
// Cocharacters (S_n pipeline).
// ---------------------------------------------------------------------------

struct CocharacterResult {
    int n = 0;
    SchurExpansion multiplicities{1};
    Int codim = 0;
    Int colength = 0;
};

inline CocharacterResult cocharacter(const WAction& act, int n) {
    EvaluationSpace space(act, n);
    CharacterVector phi;
    phi.n = n;
    for (const Partition& mu : enumerate_partitions(n))
        phi.values[mu] = space.trace(class_representative(mu));
    CocharacterResult res;
    res.n = n;
    res.multiplicities = decompose(phi);
    res.codim = space.rank();
    Int from_mult = 0;
    for (const auto& [lambda, m] : res.multiplicities.coeffs) {
        from_mult += rat_num(m) * sn_dimension(lambda);
        res.colength += rat_num(m);
    }
    if (from_mult != res.codim) {
        std::ostringstream os;
        os << "cocharacter: sum of multiplicity * irreducible dimension is " << from_mult
           << " but the evaluation rank is " << res.codim;
        throw VerificationError(os.str());
    }
    return res;
}

// ---------------------------------------------------------------------------
// Multigraded dimensions and the Hilbert series (GL pipeline).
// ---------------------------------------------------------------------------

// dim of the multidegree-alpha component of the relatively free W-algebra of
// A: the full linearization embeds it into the multilinear space in |alpha|
// variables, so the dimension is the rank of the evaluated linearizations of
// all multidegree-alpha monomials.
inline Int multidegree_dimension(const WAction& act, const std::vector<int>& alpha) {
    int n = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("multidegree_dimension: negative entry");
        n += a;
    }
    if (n < 1) throw std::invalid_argument("multidegree_dimension: need |alpha| >= 1");
    int da = act.A.dim(), dw = act.W.dim();
    int ncols = da;
    for (int i = 0; i < n; ++i) ncols *= da;
    std::vector<RatVec> args(da);
    for (int i = 0; i < da; ++i) args[i] = act.A.basis_vec(i);
    // Variable word = multiset permutations of {i^{alpha_i}}.
    std::vector<int> word;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int t = 0; t < alpha[i]; ++t) word.push_back(static_cast<int>(i));
    RowReducer red(ncols);
    do {
        std::vector<int> w(n + 1, 0);
        while (true) {
            GenPoly mono(dw);
            mono.add_term(GenMonomial(w, word), 1);
            GenPoly ml = multilinearize(mono);
            RatVec row(ncols, 0);
            std::vector<int> tuple(n, 0);
            std::vector<RatVec> pick(n);
            int tidx = 0;
            while (true) {
                for (int i = 0; i < n; ++i) pick[i] = args[tuple[i]];
                RatVec v = evaluate(ml, act, pick);
                for (int c = 0; c < da; ++c)
                    if (v[c] != 0) row[tidx * da + c] = v[c];
                int pos = n - 1;
                while (pos >= 0 && tuple[pos] == da - 1) tuple[pos--] = 0;
                if (pos < 0) break;
                tuple[pos]++;
                ++tidx;
            }
            red.add_row(std::move(row));
            int pos = n;
            while (pos >= 0 && w[pos] == dw - 1) w[pos--] = 0;
            if (pos < 0) break;
            w[pos]++;
        }
    } while (std::next_permutation(word.begin(), word.end()));
    return red.rank();
}

namespace detail {

// Multidegree dimensions depend only on the multiset of the exponents, so a
// per-computation cache keyed by the sorted positive part pays off.
struct MultidegreeCache {
    const WAction& act;
    std::map<std::vector<int>, Int> cache;

    Int operator()(const std::vector<int>& alpha) {
        std::vector<int> key;
        for (int a : alpha)
            if (a > 0) key.push_back(a);
        std::sort(key.rbegin(), key.rend());
        if (key.empty()) throw std::invalid_argument("multidegree dimension of the empty degree");
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Int v = multidegree_dimension(act, key);
        cache.emplace(key, v);
        return v;
    }
};

} // namespace detail

// Degree-n dimension of the relatively free W-algebra of A in k variables,
// computed as the sum of multidegree dimensions and cross-checked against
// sum m_lambda * (Weyl module dimension).
inline Int homogeneous_codimension(const WAction& act, int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("homogeneous_codimension: need n, k >= 1");
    detail::MultidegreeCache dim{act};
    Int total = 0;
    for (const auto& alpha : detail::compositions(n, k)) total += dim(alpha);
    CocharacterResult coch = cocharacter(act, n);
    Int expected = 0;
    for (const auto& [lambda, m] : coch.multiplicities.coeffs)
        expected += rat_num(m) * weyl_dimension(lambda, k);
    if (total != expected) {
        std::ostringstream os;
        os << "homogeneous_codimension: direct sum " << total << " != multiplicity formula " << expected
           << " at n=" << n << ", k=" << k;
        throw VerificationError(os.str());
    }
    return total;
}

// Cocharacter multiplicities recovered from the multigraded character
// polynomial sum_alpha dim V^(alpha) t^alpha, expanded in Schur polynomials.
// With k >= n every partition of n appears. Independent of the S_n route.
inline SchurExpansion gl_pipeline_multiplicities(const WAction& act, int n, int k) {
    if (k < n) throw std::invalid_argument("gl_pipeline_multiplicities: need k >= n");
    detail::MultidegreeCache dim{act};
    ExactPoly p(k);
    for (const auto& alpha : detail::compositions(n, k)) p.add_term(alpha, Rat(dim(alpha)));
    SchurExpansion exp = schur_expand(p);
    exp.assert_nonneg_integers("gl_pipeline_multiplicities");
    return exp;
}

// Truncated Hilbert series of the relatively free W-algebra in k variables.
inline TruncatedSeries hilbert_truncated(const WAction& act, int k, int N) {
    if (k < 1 || N < 1) throw std::invalid_argument("hilbert_truncated: need k, N >= 1");
    detail::MultidegreeCache dim{act};
    TruncatedSeries s(k, N);
    for (int n = 1; n <= N; ++n)
        for (const auto& alpha : detail::compositions(n, k)) s.add_term(alpha, Rat(dim(alpha)));
    return s;
}

// --- the free W-algebra of W-dimension d (no identities) -------------------

// dim of the multidegree-alpha component of the free algebra: monomials are
// free, so it is d^{n+1} times the number of arrangements of the variables.
inline Int free_multidegree_dimension(int d, const std::vector<int>& alpha) {
    int n = 0;
    Int arrangements = 1;
    for (int a : alpha) n += a;
    Int fact = factorial(n);
    for (int a : alpha) fact /= factorial(a);
    arrangements = fact;
    Int coeff = d;
    for (int i = 0; i < n; ++i) coeff *= d;
    return coeff * arrangements;
}

inline Int free_codimension(int d, int n) { return free_multidegree_dimension(d, std::vector<int>(n, 1)); }

inline TruncatedSeries free_hilbert_truncated(int d, int k, int N) {
    if (d < 1 || k < 1 || N < 1) throw std::invalid_argument("free_hilbert_truncated: need d, k, N >= 1");
    TruncatedSeries s(k, N);
    for (int n = 1; n <= N; ++n)
        for (const auto& alpha : detail::compositions(n, k))
            s.add_term(alpha, Rat(free_multidegree_dimension(d, alpha)));
    return s;
}

inline SchurExpansion free_gl_multiplicities(int d, int n, int k) {
    if (k < n) throw std::invalid_argument("free_gl_multiplicities: need k >= n");
    ExactPoly p(k);
    for (const auto& alpha : detail::compositions(n, k))
        p.add_term(alpha, Rat(free_multidegree_dimension(d, alpha)));
    SchurExpansion exp = schur_expand(p);
    exp.assert_nonneg_integers("free_gl_multiplicities");
    return exp;
}

// ---------------------------------------------------------------------------
// Identity testing.
// ---------------------------------------------------------------------------

// True iff f vanishes under every substitution of elements of A. Multilinear
// components are checked on basis tuples; multihomogeneous components are
// routed through full linearization first (equivalent in characteristic 0),
// and a general f splits into its multihomogeneous components, each of which
// must vanish separately over an infinite field.
inline bool is_identity(const GenPoly& f, const WAction& act) {
    if (f.w_dim != act.W.dim()) throw std::invalid_argument("is_identity: ambient W mismatch");
    if (f.terms.empty()) return true;
    int k = 0;
    for (const auto& [m, c] : f.terms) {
        if (m.degree() == 0)
            throw std::invalid_argument("is_identity: monomials without variables are not supported");
        for (int v : m.x) k = std::max(k, v + 1);
    }
    std::map<std::vector<int>, GenPoly> components;
    for (const auto& [m, c] : f.terms) {
        std::vector<int> deg(k, 0);
        for (int v : m.x) deg[v]++;
        auto it = components.find(deg);
        if (it == components.end()) it = components.emplace(deg, GenPoly(f.w_dim)).first;
        it->second.add_term(m, c);
    }
    int da = act.A.dim();
    std::vector<RatVec> args(da);
    for (int i = 0; i < da; ++i) args[i] = act.A.basis_vec(i);
    for (auto& [deg, comp] : components) {
        int n = 0;
        for (int a : deg) n += a;
        GenPoly ml = comp.is_multilinear(n) ? comp : multilinearize(comp);
        std::vector<int> tuple(n, 0);
        std::vector<RatVec> pick(n);
        while (true) {
            for (int i = 0; i < n; ++i) pick[i] = args[tuple[i]];
            RatVec v = evaluate(ml, act, pick);
            for (const Rat& c : v)
                if (c != 0) return false;
            int pos = n - 1;
            while (pos >= 0 && tuple[pos] == da - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            tuple[pos]++;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Capelli sets.
// ---------------------------------------------------------------------------

struct CapelliReport {
    bool holds = true;
    std::string witness; // description of a nonvanishing evaluation, if any
};

// True iff every member of the generalized Capelli set of rank m is an
// identity of A. Each member is alternating in x_1..x_m, so an evaluation
// with a repeated x-argument cancels pairwise and only injective basis
// tuples need to be checked; in particular the set holds trivially whenever
// m > dim A.
inline CapelliReport capelli_report(const WAction& act, int m) {
    CapelliReport rep;
    int da = act.A.dim();
    if (m > da) return rep;
    std::vector<RatVec> basis(da);
    for (int i = 0; i < da; ++i) basis[i] = act.A.basis_vec(i);
    std::vector<GenPoly> members = generalized_capelli_set(m, act.W);
    for (size_t idx = 0; idx < members.size(); ++idx) {
        const GenPoly& f = members[idx];
        int n = f.num_variables(); // m x's plus the free y's
        int nfree = n - m;
        // x-arguments: injective tuples only; y-arguments: all basis tuples.
        std::vector<int> xs(m, 0);
        auto next_injective = [&]() {
            while (true) {
                int pos = m - 1;
                while (pos >= 0 && xs[pos] == da - 1) xs[pos--] = 0;
                if (pos < 0) return false;
                xs[pos]++;
                std::vector<int> s = xs;
                std::sort(s.begin(), s.end());
                if (std::adjacent_find(s.begin(), s.end()) == s.end()) return true;
            }
        };
        auto injective = [&] {
            std::vector<int> s = xs;
            std::sort(s.begin(), s.end());
            return std::adjacent_find(s.begin(), s.end()) == s.end();
        };
        if (!injective() && !next_injective()) continue;
        do {
            std::vector<int> ys(nfree, 0);
            while (true) {
                std::vector<RatVec> args(n);
                for (int i = 0; i < m; ++i) args[i] = basis[xs[i]];
                for (int i = 0; i < nfree; ++i) args[m + i] = basis[ys[i]];
                RatVec v = evaluate(f, act, args);
                for (const Rat& c : v)
                    if (c != 0) {
                        rep.holds = false;
                        std::ostringstream os;
                        os << "member " << idx << " nonzero at x-tuple (";
                        for (int i = 0; i < m; ++i) os << (i ? "," : "") << act.A.basis[xs[i]];
                        os << ")";
                        if (nfree) {
                            os << ", y-tuple (";
                            for (int i = 0; i < nfree; ++i) os << (i ? "," : "") << act.A.basis[ys[i]];
                            os << ")";
                        }
                        rep.witness = os.str();
                        return rep;
                    }
                int pos = nfree - 1;
                while (pos >= 0 && ys[pos] == da - 1) ys[pos--] = 0;
                if (pos < 0) break;
                ys[pos]++;
            }
        } while (next_injective());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The multiplicity bound.
// ---------------------------------------------------------------------------

struct BoundRow {
    Partition lambda;
    Int multiplicity = 0;
    Int bound = 0;
};

struct BoundReport {
    int n = 0;
    std::vector<BoundRow> rows;
    SchurExpansion ordinary{1}; // ordinary multiplicities a_mu at degree 2n+1
};

// For unital A: each generalized multiplicity m_lambda (lambda of size n) is
// at most sum over mu of size 2n+1 containing lambda of a_mu times the skew
// Schur polynomial s_{mu/lambda} at dim W ones, where a_mu are the ordinary
// cocharacter multiplicities of A. Violations are hard failures.
inline BoundReport multiplicity_bound_check(const WAction& act, int n) {
    if (!act.A.find_unity())
        throw std::invalid_argument("multiplicity_bound_check: A must be unital");
    int d = act.W.dim();
    CocharacterResult gen = cocharacter(act, n);
    WAction ord = ordinary_action(act.name + "_ordinary", act.A);
    CocharacterResult ordc = cocharacter(ord, 2 * n + 1);
    BoundReport rep;
    rep.n = n;
    rep.ordinary = ordc.multiplicities;
    for (const Partition& lambda : enumerate_partitions(n)) {
        BoundRow row;
        row.lambda = lambda;
        row.multiplicity = rat_num(gen.multiplicities.coefficient(lambda));
        for (const Partition& mu : enumerate_partitions(2 * n + 1)) {
            Rat a = ordc.multiplicities.coefficient(mu);
            if (a == 0 || !mu.contains(lambda)) continue;
            row.bound += rat_num(a) * skew_schur_at_ones(mu, lambda, d);
        }
        if (row.multiplicity > row.bound)
            throw VerificationError("multiplicity bound fails at " + lambda.to_string() + ": " +
                                    row.multiplicity.str() + " > " + row.bound.str());
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace gpid
