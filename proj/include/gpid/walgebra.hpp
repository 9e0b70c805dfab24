#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/linalg.hpp"
#include "gpid/rational.hpp"

namespace gpid {

// A finite-dimensional associative algebra given by exact rational structure
// constants: mult[i][j] is the coordinate vector of b_i * b_j.
struct FiniteAlgebra {
    std::vector<std::string> basis;
    std::vector<std::vector<RatVec>> mult;

    int dim() const { return static_cast<int>(basis.size()); }

    RatVec zero() const { return RatVec(dim(), 0); }

    RatVec basis_vec(int i) const {
        RatVec v = zero();
        v[i] = 1;
        return v;
    }

    RatVec multiply(const RatVec& a, const RatVec& b) const {
        RatVec r = zero();
        for (int i = 0; i < dim(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                if (b[j] == 0) continue;
                Rat c = a[i] * b[j];
                const RatVec& m = mult[i][j];
                for (int t = 0; t < dim(); ++t)
                    if (m[t] != 0) r[t] += c * m[t];
            }
        }
        return r;
    }

    void validate_associativity() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (int l = 0; l < dim(); ++l) {
                    RatVec lhs = multiply(mult[i][j], basis_vec(l));
                    RatVec rhs = multiply(basis_vec(i), mult[j][l]);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "associativity fails on basis triple (" << basis[i] << ", " << basis[j]
                           << ", " << basis[l] << ")";
                        throw std::invalid_argument(os.str());
                    }
                }
    }

    // The unique two-sided unit, if one exists: solve e b_i = b_i e = b_i.
    std::optional<RatVec> find_unity() const {
        int d = dim();
        std::vector<RatVec> rows;
        RatVec rhs;
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < d; ++c) {
                RatVec row(d);
                for (int j = 0; j < d; ++j) row[j] = mult[j][i][c]; // (e b_i)_c
                rows.push_back(std::move(row));
                rhs.push_back(i == c ? 1 : 0);
                RatVec row2(d);
                for (int j = 0; j < d; ++j) row2[j] = mult[i][j][c]; // (b_i e)_c
                rows.push_back(std::move(row2));
                rhs.push_back(i == c ? 1 : 0);
            }
        auto e = solve_linear(rows, rhs, d);
        if (!e) return std::nullopt;
        for (int i = 0; i < d; ++i) {
            RatVec b = basis_vec(i);
            if (multiply(*e, b) != b || multiply(b, *e) != b) return std::nullopt;
        }
        return e;
    }
};

// A W-algebra: A together with a validated unitary W-bimodule action
// compatible with the multiplication of A. An optional parity vector on the
// A-basis turns it into a W-superalgebra.
struct WAction {
    std::string name;
    FiniteAlgebra W;
    FiniteAlgebra A;
    std::vector<std::vector<RatVec>> left;  // left[w][a] = w * b_a in A
    std::vector<std::vector<RatVec>> right; // right[a][w] = b_a * w in A
    std::vector<int> parity;                // empty = ungraded
    RatVec unity_W;

    bool is_graded() const { return !parity.empty(); }

    RatVec act_left(const RatVec& w, const RatVec& a) const {
        RatVec r = A.zero();
        for (int i = 0; i < W.dim(); ++i) {
            if (w[i] == 0) continue;
            for (int j = 0; j < A.dim(); ++j) {
                if (a[j] == 0) continue;
                Rat c = w[i] * a[j];
                for (int t = 0; t < A.dim(); ++t)
                    if (left[i][j][t] != 0) r[t] += c * left[i][j][t];
            }
        }
        return r;
    }

    RatVec act_right(const RatVec& a, const RatVec& w) const {
        RatVec r = A.zero();
        for (int j = 0; j < A.dim(); ++j) {
            if (a[j] == 0) continue;
            for (int i = 0; i < W.dim(); ++i) {
                if (w[i] == 0) continue;
                Rat c = a[j] * w[i];
                for (int t = 0; t < A.dim(); ++t)
                    if (right[j][i][t] != 0) r[t] += c * right[j][i][t];
            }
        }
        return r;
    }

    // Full axiom validation over basis triples; throws naming the failure.
    void validate(bool check_axioms = true) {
        if (static_cast<int>(left.size()) != W.dim() || static_cast<int>(right.size()) != A.dim())
            throw std::invalid_argument("WAction: action table shape mismatch");
        auto u = W.find_unity();
        if (!u) throw std::invalid_argument("W must be unital");
        unity_W = *u;
        if (!check_axioms) return;
        W.validate_associativity();
        A.validate_associativity();
        for (int j = 0; j < A.dim(); ++j) {
            RatVec a = A.basis_vec(j);
            if (act_left(unity_W, a) != a || act_right(a, unity_W) != a)
                throw std::invalid_argument("1_W does not act as the identity on basis element " + A.basis[j]);
        }
        auto fail = [&](const char* axiom, int i, int j, int l) {
            std::ostringstream os;
            os << "W-algebra axiom " << axiom << " fails on basis triple (" << i << ", " << j << ", " << l << ")";
            throw std::invalid_argument(os.str());
        };
        for (int wi = 0; wi < W.dim(); ++wi) {
            RatVec w = W.basis_vec(wi);
            for (int i = 0; i < A.dim(); ++i) {
                RatVec a1 = A.basis_vec(i);
                for (int j = 0; j < A.dim(); ++j) {
                    RatVec a2 = A.basis_vec(j);
                    if (act_left(w, A.multiply(a1, a2)) != A.multiply(act_left(w, a1), a2))
                        fail("w(a1 a2) = (w a1) a2", wi, i, j);
                    if (act_right(A.multiply(a1, a2), w) != A.multiply(a1, act_right(a2, w)))
                        fail("(a1 a2) w = a1 (a2 w)", wi, i, j);
                    if (A.multiply(act_right(a1, w), a2) != A.multiply(a1, act_left(w, a2)))
                        fail("(a1 w) a2 = a1 (w a2)", wi, i, j);
                }
            }
        }
        for (int wi = 0; wi < W.dim(); ++wi)
            for (int wj = 0; wj < W.dim(); ++wj) {
                RatVec w1 = W.basis_vec(wi), w2 = W.basis_vec(wj);
                RatVec w12 = W.multiply(w1, w2);
                for (int i = 0; i < A.dim(); ++i) {
                    RatVec a = A.basis_vec(i);
                    if (act_left(w12, a) != act_left(w1, act_left(w2, a)))
                        fail("(w1 w2) a = w1 (w2 a)", wi, wj, i);
                    if (act_right(a, w12) != act_right(act_right(a, w1), w2))
                        fail("a (w1 w2) = (a w1) w2", wi, wj, i);
                    if (act_left(w1, act_right(a, w2)) != act_right(act_left(w1, a), w2))
                        fail("w1 (a w2) = (w1 a) w2", wi, wj, i);
                }
            }
        if (is_graded()) validate_grading();
    }

    // Multiplication and W-action must respect the Z_2-grading.
    void validate_grading() const {
        if (static_cast<int>(parity.size()) != A.dim())
            throw std::invalid_argument("parity vector length must equal dim A");
        auto homogeneous = [&](const RatVec& v, int p) {
            for (int t = 0; t < A.dim(); ++t)
                if (v[t] != 0 && parity[t] != p) return false;
            return true;
        };
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j)
                if (!homogeneous(A.mult[i][j], (parity[i] + parity[j]) % 2))
                    throw std::invalid_argument("multiplication does not respect the grading");
        for (int wi = 0; wi < W.dim(); ++wi)
            for (int i = 0; i < A.dim(); ++i)
                if (!homogeneous(left[wi][i], parity[i]) || !homogeneous(right[i][wi], parity[i]))
                    throw std::invalid_argument("W-action does not respect the grading");
    }
};

// --- built-in algebras -----------------------------------------------------

namespace detail {

inline FiniteAlgebra ut2_algebra() {
    // Basis order fixed as (e11, e12, e22).
    FiniteAlgebra a;
    a.basis = {"e11", "e12", "e22"};
    a.mult.assign(3, std::vector<RatVec>(3, RatVec(3, 0)));
    a.mult[0][0][0] = 1; // e11 e11 = e11
    a.mult[0][1][1] = 1; // e11 e12 = e12
    a.mult[1][2][1] = 1; // e12 e22 = e12
    a.mult[2][2][2] = 1; // e22 e22 = e22
    return a;
}

inline FiniteAlgebra matrix_algebra(int n) {
    FiniteAlgebra a;
    int d = n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.basis.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    a.mult.assign(d, std::vector<RatVec>(d, RatVec(d, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) a.mult[i * n + j][k * n + l][i * n + l] = 1;
    return a;
}

// Action of a subalgebra of A (spanned by the given coordinate vectors) on A
// by left and right multiplication.
inline WAction subalgebra_action(std::string name, const FiniteAlgebra& A,
                                 const std::vector<std::string>& w_basis_names,
                                 const std::vector<RatVec>& w_basis_in_A) {
    WAction act;
    act.name = std::move(name);
    act.A = A;
    int d = static_cast<int>(w_basis_in_A.size());
    act.W.basis = w_basis_names;
    act.W.mult.assign(d, std::vector<RatVec>(d, RatVec(d, 0)));
    // Structure constants of W: products must stay in the span.
    RowReducer span(A.dim());
    for (const RatVec& w : w_basis_in_A) span.add_row(w);
    std::vector<RatVec> rows;
    for (const RatVec& w : w_basis_in_A) rows.push_back(w);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            RatVec prod = A.multiply(w_basis_in_A[i], w_basis_in_A[j]);
            // Express prod in the chosen basis of W.
            std::vector<RatVec> cols(A.dim(), RatVec(d));
            for (int c = 0; c < A.dim(); ++c)
                for (int t = 0; t < d; ++t) cols[c][t] = w_basis_in_A[t][c];
            auto sol = solve_linear(cols, prod, d);
            if (!sol) throw std::invalid_argument("subalgebra_action: span is not closed under multiplication");
            act.W.mult[i][j] = *sol;
        }
    act.left.assign(d, std::vector<RatVec>(A.dim()));
    act.right.assign(A.dim(), std::vector<RatVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < A.dim(); ++j) {
            act.left[i][j] = A.multiply(w_basis_in_A[i], A.basis_vec(j));
            act.right[j][i] = A.multiply(A.basis_vec(j), w_basis_in_A[i]);
        }
    act.validate();
    return act;
}

} // namespace detail

// UT2 acting on itself by left and right multiplication.
inline WAction builtin_ut2_self() {
    FiniteAlgebra a = detail::ut2_algebra();
    return detail::subalgebra_action("ut2_self", a, {"e11", "e12", "e22"},
                                     {a.basis_vec(0), a.basis_vec(1), a.basis_vec(2)});
}

// W = D = span{e11, e22}.
inline WAction builtin_ut2_D() {
    FiniteAlgebra a = detail::ut2_algebra();
    return detail::subalgebra_action("ut2_D", a, {"e11", "e22"}, {a.basis_vec(0), a.basis_vec(2)});
}

// W = F(e11 + e22): ordinary polynomial identities of UT2.
inline WAction builtin_ut2_F() {
    FiniteAlgebra a = detail::ut2_algebra();
    RatVec one = a.zero();
    one[0] = 1;
    one[2] = 1;
    return detail::subalgebra_action("ut2_F", a, {"1"}, {one});
}

// Full matrix algebra M_n acting on itself.
inline WAction builtin_matrix(int n) {
    FiniteAlgebra a = detail::matrix_algebra(n);
    std::vector<RatVec> basis;
    for (int i = 0; i < a.dim(); ++i) basis.push_back(a.basis_vec(i));
    return detail::subalgebra_action("matrix" + std::to_string(n), a, a.basis, basis);
}

// W = F acting by scalars; turns the engine into the ordinary-PI engine on A.
inline WAction ordinary_action(std::string name, const FiniteAlgebra& A) {
    WAction act;
    act.name = std::move(name);
    act.A = A;
    act.W.basis = {"1"};
    act.W.mult = {{RatVec{1}}};
    act.left.assign(1, std::vector<RatVec>(A.dim()));
    act.right.assign(A.dim(), std::vector<RatVec>(1));
    for (int j = 0; j < A.dim(); ++j) {
        act.left[0][j] = A.basis_vec(j);
        act.right[j][0] = A.basis_vec(j);
    }
    act.validate();
    return act;
}

// Exterior algebra on m generators with parity = word length mod 2 and
// trivial (scalar) W-action. Stands in for the infinite Grassmann algebra:
// for multilinear questions of degree n, any m >= n suffices.
inline WAction grassmann_truncated(int m) {
    if (m < 1) throw std::invalid_argument("grassmann_truncated: m must be positive");
    FiniteAlgebra a;
    int d = 1 << m;
    for (int s = 0; s < d; ++s) {
        std::string label = "1";
        if (s) {
            label.clear();
            for (int g = 0; g < m; ++g)
                if (s & (1 << g)) label += "e" + std::to_string(g + 1);
        }
        a.basis.push_back(label);
    }
    a.mult.assign(d, std::vector<RatVec>(d, RatVec(d, 0)));
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            if (s & t) continue; // repeated generator
            int sign = 1;
            for (int g = 0; g < m; ++g)
                if (t & (1 << g)) {
                    int higher = s >> (g + 1);
                    int cnt = 0;
                    while (higher) {
                        cnt += higher & 1;
                        higher >>= 1;
                    }
                    if (cnt % 2) sign = -sign;
                }
            a.mult[s][t][s | t] = sign;
        }
    WAction act = ordinary_action("grassmann" + std::to_string(m), a);
    for (int s = 0; s < d; ++s) act.parity.push_back(__builtin_popcount(static_cast<unsigned>(s)) % 2);
    act.validate_grading();
    return act;
}

// The map pi(w) = w 1_A, as columns per W-basis element; verified to be an
// algebra homomorphism compatible with the action.
inline std::vector<RatVec> pi_map(const WAction& act) {
    auto unity = act.A.find_unity();
    if (!unity) throw std::invalid_argument("pi_map: A has no unity");
    std::vector<RatVec> pi(act.W.dim());
    for (int i = 0; i < act.W.dim(); ++i) pi[i] = act.act_left(act.W.basis_vec(i), *unity);
    auto apply = [&](const RatVec& w) {
        RatVec r = act.A.zero();
        for (int i = 0; i < act.W.dim(); ++i)
            for (int t = 0; t < act.A.dim(); ++t) r[t] += w[i] * pi[i][t];
        return r;
    };
    for (int i = 0; i < act.W.dim(); ++i) {
        RatVec wi = act.W.basis_vec(i);
        if (act.act_right(*unity, wi) != pi[i])
            throw VerificationError("pi_map: w 1_A != 1_A w on basis element " + act.W.basis[i]);
        for (int j = 0; j < act.W.dim(); ++j)
            if (apply(act.W.multiply(wi, act.W.basis_vec(j))) != act.A.multiply(pi[i], pi[j]))
                throw VerificationError("pi_map: not multiplicative on basis pair");
        for (int a = 0; a < act.A.dim(); ++a) {
            RatVec av = act.A.basis_vec(a);
            if (act.act_left(wi, av) != act.A.multiply(pi[i], av) ||
                act.act_right(av, wi) != act.A.multiply(av, pi[i]))
                throw VerificationError("pi_map: action incompatible with pi on basis pair");
        }
    }
    return pi;
}

// Semidirect product A x| W on A + W with
// (a1,w1)(a2,w2) = (a1 a2 + w1 a2 + a1 w2, w1 w2), W acting through the
// W-component. Unital with unity (0, 1_W); A embeds as an ideal.
inline WAction semidirect(const WAction& act) {
    int da = act.A.dim(), dw = act.W.dim(), d = da + dw;
    FiniteAlgebra B;
    for (const std::string& s : act.A.basis) B.basis.push_back("a:" + s);
    for (const std::string& s : act.W.basis) B.basis.push_back("w:" + s);
    auto combine = [&](const RatVec& a, const RatVec& w) {
        RatVec v(d, 0);
        for (int i = 0; i < da; ++i) v[i] = a[i];
        for (int i = 0; i < dw; ++i) v[da + i] = w[i];
        return v;
    };
    auto a_part = [&](int i) { return i < da ? act.A.basis_vec(i) : act.A.zero(); };
    auto w_part = [&](int i) { return i < da ? RatVec(dw, 0) : act.W.basis_vec(i - da); };
    B.mult.assign(d, std::vector<RatVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            RatVec a1 = a_part(i), a2 = a_part(j);
            RatVec w1 = w_part(i), w2 = w_part(j);
            RatVec apart = act.A.multiply(a1, a2);
            RatVec la = act.act_left(w1, a2);
            RatVec ra = act.act_right(a1, w2);
            for (int t = 0; t < da; ++t) apart[t] += la[t] + ra[t];
            B.mult[i][j] = combine(apart, act.W.multiply(w1, w2));
        }
    WAction out;
    out.name = act.name + "_semidirect";
    out.A = B;
    out.W = act.W;
    out.left.assign(dw, std::vector<RatVec>(d));
    out.right.assign(d, std::vector<RatVec>(dw));
    for (int wi = 0; wi < dw; ++wi) {
        RatVec w = act.W.basis_vec(wi);
        for (int j = 0; j < d; ++j) {
            // w (a, w1) = (w a, w w1), (a, w1) w = (a w, w1 w)
            out.left[wi][j] = combine(act.act_left(w, a_part(j)), act.W.multiply(w, w_part(j)));
            out.right[j][wi] = combine(act.act_right(a_part(j), w), act.W.multiply(w_part(j), w));
        }
    }
    out.validate();
    return out;
}

} // namespace gpid
