#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/rational.hpp"
#include "gpid/sn.hpp"
#include "gpid/walgebra.hpp"

namespace gpid {

// A monomial w_{i0} x_{j1} w_{i1} ... x_{jn} w_{in} of the free W-algebra:
// n variable indices interleaved with n+1 W-basis indices. The W entry -1
// stands for 1_W (the unity is not required to be a basis element). The
// augmented variant n = 0 (a bare W factor) is allowed as a carrier for
// polynomials with constant term.
struct GenMonomial {
    std::vector<int> w; // length x.size() + 1, entries in {-1, 0, ..., d-1}
    std::vector<int> x; // 0-based variable indices

    GenMonomial() : w{-1} {}
    GenMonomial(std::vector<int> w_, std::vector<int> x_) : w(std::move(w_)), x(std::move(x_)) {
        if (w.size() != x.size() + 1) throw std::invalid_argument("GenMonomial: need one more W index than variables");
    }

    int degree() const { return static_cast<int>(x.size()); }

    // Monomial order: lexicographic on (variable word, W-index word).
    bool operator<(const GenMonomial& o) const {
        if (x != o.x) return x < o.x;
        return w < o.w;
    }
    bool operator==(const GenMonomial& o) const { return x == o.x && w == o.w; }
};

// Sparse generalized polynomial: monomial -> exact rational coefficient.
struct GenPoly {
    int w_dim = 1;
    std::map<GenMonomial, Rat> terms;

    explicit GenPoly(int w_dim_ = 1) : w_dim(w_dim_) {}

    void add_term(const GenMonomial& m, const Rat& c) {
        if (c == 0) return;
        for (int wi : m.w)
            if (wi < -1 || wi >= w_dim) throw std::invalid_argument("GenPoly: W index out of range");
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    GenPoly& operator+=(const GenPoly& o) {
        if (w_dim != o.w_dim) throw std::invalid_argument("GenPoly: ambient W mismatch");
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }

    GenPoly operator*(const Rat& c) const {
        GenPoly r(w_dim);
        for (const auto& [m, cc] : terms) r.add_term(m, cc * c);
        return r;
    }

    // Number of distinct variables; variables must be 0..k-1 contiguous.
    int num_variables() const {
        std::set<int> vars;
        for (const auto& [m, c] : terms)
            for (int v : m.x) vars.insert(v);
        if (vars.empty()) return 0;
        int k = *vars.rbegin() + 1;
        if (static_cast<int>(vars.size()) != k)
            throw std::invalid_argument("GenPoly: variable indices are not contiguous from 0");
        return k;
    }

    // Multilinear in x_1..x_n: every monomial's variable word is a
    // permutation of 0..n-1.
    bool is_multilinear(int n) const {
        for (const auto& [m, c] : terms) {
            if (m.degree() != n) return false;
            std::vector<int> sorted = m.x;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < n; ++i)
                if (sorted[i] != i) return false;
        }
        return true;
    }

    // The common multidegree, or nullopt if not multihomogeneous.
    std::optional<std::vector<int>> multidegree() const {
        if (terms.empty()) return std::nullopt;
        int k = 0;
        for (const auto& [m, c] : terms)
            for (int v : m.x) k = std::max(k, v + 1);
        std::optional<std::vector<int>> result;
        for (const auto& [m, c] : terms) {
            std::vector<int> deg(k, 0);
            for (int v : m.x) deg[v]++;
            if (!result)
                result = deg;
            else if (*result != deg)
                return std::nullopt;
        }
        return result;
    }

    std::string to_string(const std::vector<std::string>* w_names = nullptr) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << rat_to_string(c);
            for (size_t i = 0; i <= m.x.size(); ++i) {
                if (m.w[i] >= 0) {
                    if (w_names)
                        os << ' ' << (*w_names)[m.w[i]];
                    else
                        os << " w[" << m.w[i] << "]";
                }
                if (i < m.x.size()) os << " x" << m.x[i] + 1;
            }
        }
        if (first) os << "0";
        return os.str();
    }
};

// Product in the free W-algebra: concatenation with contraction of the two
// neighboring W factors through the structure constants of W.
inline GenPoly gp_multiply(const GenPoly& f, const GenPoly& g, const FiniteAlgebra& W) {
    if (f.w_dim != g.w_dim || f.w_dim != W.dim())
        throw std::invalid_argument("gp_multiply: ambient W mismatch");
    GenPoly r(f.w_dim);
    for (const auto& [mf, cf] : f.terms)
        for (const auto& [mg, cg] : g.terms) {
            std::vector<int> x = mf.x;
            x.insert(x.end(), mg.x.begin(), mg.x.end());
            int wl = mf.w.back(), wr = mg.w.front();
            auto emit = [&](int mid, const Rat& scale) {
                std::vector<int> w(mf.w.begin(), mf.w.end() - 1);
                w.push_back(mid);
                w.insert(w.end(), mg.w.begin() + 1, mg.w.end());
                r.add_term(GenMonomial(std::move(w), x), cf * cg * scale);
            };
            if (wl == -1)
                emit(wr, 1);
            else if (wr == -1)
                emit(wl, 1);
            else
                for (int t = 0; t < W.dim(); ++t)
                    if (W.mult[wl][wr][t] != 0) emit(t, W.mult[wl][wr][t]);
        }
    return r;
}

// sigma * f = f(x_{sigma(1)}, ..., x_{sigma(n)}).
inline GenPoly sigma_act(const Perm& sigma, const GenPoly& f) {
    GenPoly r(f.w_dim);
    for (const auto& [m, c] : f.terms) {
        std::vector<int> x = m.x;
        for (int& v : x) v = sigma[v];
        r.add_term(GenMonomial(m.w, std::move(x)), c);
    }
    return r;
}

// The canonical basis of the space of multilinear generalized polynomials in
// x_1..x_n: all d^{n+1} n! monomials with basis W decorations, enumerated
// lexicographically by (variable word, W word).
struct MultilinearBasis {
    int n, d;
    std::vector<GenMonomial> monomials;
    std::map<GenMonomial, int> index;

    MultilinearBasis(int n_, int d_) : n(n_), d(d_) {
        if (n < 1 || d < 1) throw std::invalid_argument("MultilinearBasis: need n, d >= 1");
        Perm word = perm_identity(n);
        do {
            std::vector<int> w(n + 1, 0);
            while (true) {
                monomials.emplace_back(w, word);
                int pos = n;
                while (pos >= 0 && w[pos] == d - 1) w[pos--] = 0;
                if (pos < 0) break;
                w[pos]++;
            }
        } while (std::next_permutation(word.begin(), word.end()));
        for (size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = static_cast<int>(i);
    }

    int size() const { return static_cast<int>(monomials.size()); }
};

// Full linearization of a multihomogeneous polynomial of multidegree alpha:
// the alpha_i occurrences of x_i are replaced, in all alpha_i! ways, by the
// distinct variables of block i. Variable blocks are laid out consecutively,
// so the result lives in gP_n with n = |alpha|.
inline GenPoly multilinearize(const GenPoly& f) {
    auto alpha = f.multidegree();
    if (!alpha) throw std::invalid_argument("multilinearize: input is not multihomogeneous");
    int k = static_cast<int>(alpha->size());
    std::vector<int> offset(k, 0);
    for (int i = 1; i < k; ++i) offset[i] = offset[i - 1] + (*alpha)[i - 1];
    GenPoly r(f.w_dim);
    for (const auto& [m, c] : f.terms) {
        // Assignment of fresh indices per variable, iterated as a product of
        // permutations of each block.
        std::vector<std::vector<int>> assign(k);
        for (int i = 0; i < k; ++i) {
            assign[i].resize((*alpha)[i]);
            std::iota(assign[i].begin(), assign[i].end(), 0);
        }
        while (true) {
            std::vector<int> seen(k, 0);
            std::vector<int> x;
            for (int v : m.x) x.push_back(offset[v] + assign[v][seen[v]++]);
            r.add_term(GenMonomial(m.w, std::move(x)), c);
            int i = 0;
            while (i < k && !std::next_permutation(assign[i].begin(), assign[i].end())) ++i;
            if (i == k) break;
        }
    }
    return r;
}

// Capelli polynomial of rank m: variables x_1..x_m at indices 0..m-1 and
// y_1..y_{m+1} at indices m..2m, all W-decorations unital.
inline GenPoly capelli(int m, int w_dim = 1) {
    if (m < 1) throw std::invalid_argument("capelli: m must be positive");
    GenPoly r(w_dim);
    Perm sigma = perm_identity(m);
    do {
        std::vector<int> x;
        for (int i = 0; i < m; ++i) {
            x.push_back(m + i);       // y_{i+1}
            x.push_back(sigma[i]);    // x_{sigma(i+1)}
        }
        x.push_back(2 * m); // y_{m+1}
        std::vector<int> w(x.size() + 1, -1);
        r.add_term(GenMonomial(std::move(w), std::move(x)), perm_sign(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

// The generalized Capelli set of rank m: all substitutions of the y-slots of
// Cap_m by W-basis elements or nothing ("free"). By linearity in each y_i,
// basis substitutions are equivalent to substituting arbitrary elements of W.
// The all-free member is Cap_m itself. Free y's are renumbered after the x's.
inline std::vector<GenPoly> generalized_capelli_set(int m, const FiniteAlgebra& W) {
    if (m < 1) throw std::invalid_argument("generalized_capelli_set: m must be positive");
    int d = W.dim();
    std::vector<GenPoly> out;
    std::vector<int> pattern(m + 1, -1); // -1 = free, otherwise W basis index
    while (true) {
        GenPoly f(d);
        Perm sigma = perm_identity(m);
        do {
            std::vector<int> w, x;
            int pending = -1; // W decoration accumulated before the next variable
            int next_free = m;
            auto flush_var = [&](int var) {
                w.push_back(pending);
                pending = -1;
                x.push_back(var);
            };
            for (int slot = 0; slot <= m; ++slot) {
                if (pattern[slot] < 0)
                    flush_var(next_free++);
                else
                    pending = pattern[slot]; // two W slots are never adjacent
                if (slot < m) flush_var(sigma[slot]);
            }
            w.push_back(pending);
            f.add_term(GenMonomial(std::move(w), std::move(x)), perm_sign(sigma));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        out.push_back(std::move(f));
        int pos = m;
        while (pos >= 0 && pattern[pos] == d - 1) pattern[pos--] = -1;
        if (pos < 0) break;
        pattern[pos]++;
    }
    return out;
}

// A generalized polynomial over a graded variable alphabet: parity[i] is the
// degree (0 even / 1 odd) of variable i.
struct GradedGenPoly {
    GenPoly poly;
    std::vector<int> parity;
};

// The sign-twisting involution on multilinear graded polynomials: each
// monomial picks up the sign of the permutation in which its odd variables
// appear.
inline GradedGenPoly tilde(const GradedGenPoly& f) {
    std::vector<int> odd;
    for (size_t i = 0; i < f.parity.size(); ++i)
        if (f.parity[i] == 1) odd.push_back(static_cast<int>(i));
    GradedGenPoly r{GenPoly(f.poly.w_dim), f.parity};
    for (const auto& [m, c] : f.poly.terms) {
        std::vector<int> order;
        for (int v : m.x)
            if (v < static_cast<int>(f.parity.size()) && f.parity[v] == 1) order.push_back(v);
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != odd)
            throw std::invalid_argument("tilde: polynomial is not multilinear in the odd variables");
        // Permutation sigma with order[t] = odd[sigma(t)].
        Perm sigma(order.size());
        for (size_t t = 0; t < order.size(); ++t)
            sigma[t] = static_cast<int>(std::lower_bound(odd.begin(), odd.end(), order[t]) - odd.begin());
        r.poly.add_term(m, c * perm_sign(sigma));
    }
    return r;
}

// Substitutes variable `var` (which must occur exactly once per monomial) by
// a W element: a basis index, or -1 for 1_W. Higher variables shift down.
inline GenPoly substitute_w(const GenPoly& f, int var, int w_elt, const FiniteAlgebra& W) {
    GenPoly r(f.w_dim);
    for (const auto& [m, c] : f.terms) {
        int pos = -1;
        for (size_t i = 0; i < m.x.size(); ++i)
            if (m.x[i] == var) {
                if (pos >= 0) throw std::invalid_argument("substitute_w: variable occurs more than once");
                pos = static_cast<int>(i);
            }
        if (pos < 0) throw std::invalid_argument("substitute_w: variable missing from a monomial");
        std::vector<int> x;
        for (size_t i = 0; i < m.x.size(); ++i) {
            if (static_cast<int>(i) == pos) continue;
            x.push_back(m.x[i] > var ? m.x[i] - 1 : m.x[i]);
        }
        // Contract w[pos] * w_elt * w[pos+1].
        auto emit = [&](int mid, const Rat& scale) {
            std::vector<int> w;
            for (int i = 0; i < pos; ++i) w.push_back(m.w[i]);
            w.push_back(mid);
            for (size_t i = pos + 2; i < m.w.size(); ++i) w.push_back(m.w[i]);
            r.add_term(GenMonomial(std::move(w), x), c * scale);
        };
        auto contract2 = [&](int a, int b, const Rat& scale) {
            if (a == -1)
                emit(b, scale);
            else if (b == -1)
                emit(a, scale);
            else
                for (int t = 0; t < W.dim(); ++t)
                    if (W.mult[a][b][t] != 0) emit(t, scale * W.mult[a][b][t]);
        };
        int wl = m.w[pos], wr = m.w[pos + 1];
        if (wl == -1) {
            contract2(w_elt, wr, 1);
        } else if (w_elt == -1) {
            contract2(wl, wr, 1);
        } else {
            for (int t = 0; t < W.dim(); ++t)
                if (W.mult[wl][w_elt][t] != 0) contract2(t, wr, W.mult[wl][w_elt][t]);
        }
    }
    return r;
}

// Parses the CLI polynomial syntax: terms like "3/2 * w[0] x1 w[2] x2 w[0]"
// joined by "+"/"-". Missing W factors between variables mean 1_W.
inline GenPoly parse_genpoly(const std::string& text, int w_dim) {
    GenPoly out(w_dim);
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
        } else if (ch == '+' || ch == '-' || ch == '*') {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
            tokens.push_back(std::string(1, ch));
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    size_t i = 0;
    bool expect_term = true;
    while (i < tokens.size()) {
        Rat sign = 1;
        while (i < tokens.size() && (tokens[i] == "+" || tokens[i] == "-")) {
            if (tokens[i] == "-") sign = -sign;
            ++i;
            expect_term = true;
        }
        if (i >= tokens.size()) {
            if (expect_term) throw std::invalid_argument("parse_genpoly: dangling sign");
            break;
        }
        Rat coeff = sign;
        if (!tokens[i].empty() && (isdigit(static_cast<unsigned char>(tokens[i][0])))) {
            coeff = sign * rat_from_string(tokens[i]);
            ++i;
            if (i < tokens.size() && tokens[i] == "*") ++i;
        }
        std::vector<int> w, x;
        int pending = -1;
        bool saw_atom = false;
        while (i < tokens.size() && tokens[i] != "+" && tokens[i] != "-") {
            const std::string& t = tokens[i];
            if (t.rfind("w[", 0) == 0 && t.back() == ']') {
                int idx = std::stoi(t.substr(2, t.size() - 3));
                if (idx < 0 || idx >= w_dim) throw std::invalid_argument("parse_genpoly: W index out of range");
                if (pending != -1) throw std::invalid_argument("parse_genpoly: adjacent W factors; contract them first");
                pending = idx;
            } else if (t[0] == 'x') {
                int idx = std::stoi(t.substr(1));
                if (idx < 1) throw std::invalid_argument("parse_genpoly: variables are x1, x2, ...");
                w.push_back(pending);
                pending = -1;
                x.push_back(idx - 1);
            } else {
                throw std::invalid_argument("parse_genpoly: unexpected token '" + t + "'");
            }
            ++i;
            saw_atom = true;
        }
        if (!saw_atom) throw std::invalid_argument("parse_genpoly: empty term");
        w.push_back(pending);
        out.add_term(GenMonomial(std::move(w), std::move(x)), coeff);
        expect_term = false;
    }
    return out;
}

} // namespace gpid
