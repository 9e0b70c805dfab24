#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/partition.hpp"
#include "gpid/poly.hpp"
#include "gpid/tableaux.hpp"

namespace gpid {

// A linear combination of Schur polynomials s^k_lambda, keyed by partition.
// Coefficients are kept rational; integrality is asserted only where a
// theorem guarantees it (see SchurExpansion::assert_nonneg_integers).
struct SchurExpansion {
    int num_vars = 1;
    std::map<Partition, Rat, PartitionOrder> coeffs;

    explicit SchurExpansion(int k = 1) : num_vars(k) {}

    void add(const Partition& lambda, const Rat& c) {
        if (lambda.height() > num_vars)
            throw std::invalid_argument("SchurExpansion: partition height exceeds variable count");
        if (c == 0) return;
        auto it = coeffs.find(lambda);
        if (it == coeffs.end()) {
            coeffs.emplace(lambda, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Rat coefficient(const Partition& lambda) const {
        auto it = coeffs.find(lambda);
        return it == coeffs.end() ? Rat(0) : it->second;
    }

    bool operator==(const SchurExpansion& o) const {
        return num_vars == o.num_vars && coeffs == o.coeffs;
    }

    void assert_nonneg_integers(const std::string& context) const {
        for (const auto& [lambda, c] : coeffs)
            if (!is_integer(c) || c < 0)
                throw VerificationError(context + ": multiplicity of " + lambda.to_string() +
                                        " is " + rat_to_string(c) + ", expected a nonnegative integer");
    }

    // Lines "lambda-string: coefficient".
    std::string to_string() const {
        std::ostringstream os;
        for (const auto& [lambda, c] : coeffs)
            os << lambda.to_string() << ": " << rat_to_string(c) << '\n';
        return os.str();
    }
};

// Schur polynomial s^k_lambda as the SSYT content generating function.
inline ExactPoly schur_poly(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("schur_poly: k must be positive");
    ExactPoly p(k);
    if (lambda.empty()) {
        p.add_term(Exponent(k, 0), 1);
        return p;
    }
    for_each_ssyt(lambda, k, [&](const SkewTableau& t) {
        p.add_term(tableau_content(t, k), 1);
        return true;
    });
    return p;
}

// Complete homogeneous polynomial h_m in k variables (h_0 = 1, h_{<0} = 0).
inline ExactPoly complete_homogeneous(int m, int k) {
    ExactPoly p(k);
    if (m < 0) return p;
    if (m == 0) {
        p.add_term(Exponent(k, 0), 1);
        return p;
    }
    return schur_poly(Partition{m}, k);
}

// Independent route to s^k_lambda: the Jacobi-Trudi determinant
// det(h_{lambda_i - i + j}) expanded over permutations.
inline ExactPoly schur_poly_jt(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("schur_poly_jt: k must be positive");
    int h = lambda.height();
    if (h == 0) return ExactPoly::constant(1, k);
    std::vector<int> perm(h);
    for (int i = 0; i < h; ++i) perm[i] = i;
    ExactPoly det(k);
    do {
        int sign = 1;
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        ExactPoly prod = ExactPoly::constant(sign, k);
        bool zero = false;
        for (int i = 0; i < h && !zero; ++i) {
            ExactPoly hp = complete_homogeneous(lambda.part(i + 1) - (i + 1) + (perm[i] + 1), k);
            if (hp.is_zero()) zero = true;
            else prod = prod * hp;
        }
        if (!zero) det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Littlewood-Richardson coefficient c^nu_{lambda,mu}: LR skew tableaux of
// shape nu/lambda with content mu (semistandard, lattice reverse reading word).
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.empty()) return 1; // nu == lambda at this point
    Int count = 0;
    std::vector<int> target = mu.parts();
    for_each_skew_ssyt(nu, lambda, mu.height(), [&](const SkewTableau& t) {
        if (tableau_content(t, mu.height()) == target && is_lattice_word(reverse_reading_word(t)))
            ++count;
        return true;
    });
    return count;
}

// Skew Schur polynomial s_{mu\lambda} as a Schur expansion:
// sum over nu of c^mu_{lambda,nu} s_nu. Partitions of height > k are dropped
// (their Schur polynomial in k variables vanishes).
inline SchurExpansion skew_schur(const Partition& mu, const Partition& lambda, int k) {
    if (!mu.contains(lambda)) throw std::invalid_argument("skew_schur: lambda not contained in mu");
    SchurExpansion exp(k);
    for (const Partition& nu : enumerate_partitions(mu.size() - lambda.size(), k))
        exp.add(nu, Rat(lr_coefficient(lambda, nu, mu)));
    return exp;
}

// s^d_{mu\lambda}(1,...,1) = sum over nu of c^mu_{lambda,nu} dim W^d_nu;
// equals the number of skew SSYT of shape mu/lambda with entries <= d.
inline Int skew_schur_at_ones(const Partition& mu, const Partition& lambda, int d) {
    if (!mu.contains(lambda)) throw std::invalid_argument("skew_schur_at_ones: lambda not contained in mu");
    Int total = 0;
    for (const Partition& nu : enumerate_partitions(mu.size() - lambda.size()))
        total += lr_coefficient(lambda, nu, mu) * weyl_dimension(nu, d);
    return total;
}

// Skew Schur polynomial as an honest polynomial in k variables.
inline ExactPoly skew_schur_poly(const Partition& mu, const Partition& lambda, int k) {
    ExactPoly p(k);
    for (const auto& [nu, c] : skew_schur(mu, lambda, k).coeffs)
        p += schur_poly(nu, k) * c;
    return p;
}

// Expands a symmetric polynomial in the Schur basis by leading-monomial
// elimination: per homogeneous component, the lex-leading exponent of a
// symmetric polynomial is weakly decreasing; subtract its coefficient times
// that Schur polynomial and repeat.
inline SchurExpansion schur_expand(const ExactPoly& p) {
    if (!p.is_symmetric()) throw std::invalid_argument("schur_expand: input is not symmetric");
    int k = p.num_vars();
    SchurExpansion exp(k);
    for (int d = 0; d <= p.max_total_degree(); ++d) {
        ExactPoly comp = p.homogeneous_component(d);
        while (!comp.is_zero()) {
            auto lead = comp.terms().rbegin(); // lex-largest exponent
            Exponent e = lead->first;
            Rat c = lead->second;
            for (size_t i = 0; i + 1 < e.size(); ++i)
                if (e[i] < e[i + 1])
                    throw VerificationError("schur_expand: leading exponent not dominant");
            Partition lambda(e);
            comp -= schur_poly(lambda, k) * c;
            if (!comp.is_zero() && !(comp.terms().rbegin()->first < e))
                throw VerificationError("schur_expand: elimination made no progress");
            exp.add(lambda, c);
        }
    }
    return exp;
}

// Young-derived multiplicity: given the Schur coefficients alpha of a series,
// the product with prod 1/(1-t_i) has Schur coefficient at lambda equal to
// the sum of alpha_mu over all mu interleaving lambda.
inline Rat young_derived_multiplicity(const SchurExpansion& alpha, const Partition& lambda) {
    Rat m = 0;
    for (const auto& [mu, c] : alpha.coeffs)
        if (interleaves(lambda, mu)) m += c;
    return m;
}

// Closed-form Hilbert series expanded by truncated geometric arithmetic.
enum class ClosedForm { FreeAlgebra, UT2, UT2_D, UT2_F };

inline TruncatedSeries expand_closed_form(ClosedForm name, int k, int max_degree, int d = 0) {
    if (k < 1) throw std::invalid_argument("expand_closed_form: k must be positive");
    int N = max_degree;
    if (name == ClosedForm::FreeAlgebra) {
        if (d < 1) throw std::invalid_argument("expand_closed_form: free algebra needs the dimension d of W");
        // d^2 s / (1 - d s) with s = t_1 + ... + t_k.
        TruncatedSeries s(k, N);
        for (int i = 0; i < k; ++i) {
            Exponent e(k, 0);
            e[i] = 1;
            s.add_term(e, 1);
        }
        TruncatedSeries acc(k, N), power = s;
        for (int n = 1; n <= N; ++n) {
            // power = s^n here; coefficient d^{n+1}.
            Rat c = 1;
            for (int i = 0; i <= n; ++i) c *= d;
            acc = acc + power * TruncatedSeries::from_poly(ExactPoly::constant(c, k), N);
            if (n < N) power = power * s;
        }
        return acc;
    }
    TruncatedSeries geom(k, N);
    geom.add_term(Exponent(k, 0), 1);
    for (int i = 0; i < k; ++i) geom = geom * TruncatedSeries::geometric(i, k, N);
    TruncatedSeries geom2 = geom * geom;
    ExactPoly s1(k);
    for (int i = 0; i < k; ++i) {
        Exponent e(k, 0);
        e[i] = 1;
        s1.add_term(e, 1);
    }
    auto cst = [&](const Rat& c) { return TruncatedSeries::from_poly(ExactPoly::constant(c, k), N); };
    auto lin = [&](const Rat& c) { // t_1 + ... + t_k + c
        return TruncatedSeries::from_poly(s1 + ExactPoly::constant(c, k), N);
    };
    switch (name) {
        case ClosedForm::UT2:   return cst(-3) + cst(2) * geom + lin(1) * geom2;
        case ClosedForm::UT2_D: return cst(-2) + cst(2) * geom + lin(0) * geom2;
        case ClosedForm::UT2_F: return cst(-1) + cst(2) * geom + lin(-1) * geom2;
        default: throw std::logic_error("unreachable");
    }
}

// Duplication formula for skew Schur polynomials on split variable sets:
// s^{l+k}_{mu\lambda}(t,v) = sum over lambda <= nu <= mu of
// s^l_{mu\nu}(t) s^k_{nu\lambda}(v).
inline bool duplication_check(const Partition& mu, const Partition& lambda, int l, int k) {
    if (!mu.contains(lambda)) throw std::invalid_argument("duplication_check: lambda not contained in mu");
    ExactPoly lhs = skew_schur_poly(mu, lambda, l + k);
    ExactPoly rhs(l + k);
    for (int s = lambda.size(); s <= mu.size(); ++s)
        for (const Partition& nu : enumerate_partitions(s)) {
            if (!nu.contains(lambda) || !mu.contains(nu)) continue;
            rhs += skew_schur_poly(mu, nu, l).embed(l + k, 0) *
                   skew_schur_poly(nu, lambda, k).embed(l + k, l);
        }
    return lhs == rhs;
}

} // namespace gpid
