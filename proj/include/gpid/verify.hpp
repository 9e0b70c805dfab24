#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gpid/engine.hpp"
#include "gpid/envelope.hpp"
#include "gpid/schur.hpp"

namespace gpid {

// The full verification suite: each criterion is an independent end-to-end
// check of a structural result on desk-scale data, reported as one pass/fail
// line. A throw inside a criterion is a failure with the message as detail.

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

// Expected cocharacter tables of the two UT2 actions, from the closed-form
// multiplicity rows: first row for one-row shapes, second for (p+q, p),
// third for (p+q, p, 1); everything else vanishes.
inline SchurExpansion ut2_family_table(int n, Int one_row, Int two_row_per_q, Int three_row_per_q) {
    SchurExpansion exp(n);
    for (const Partition& lambda : enumerate_partitions(n)) {
        if (lambda.height() == 1) {
            exp.add(lambda, Rat(one_row));
        } else if (lambda.height() == 2) {
            Int q = lambda.part(1) - lambda.part(2);
            exp.add(lambda, Rat(two_row_per_q * (q + 1)));
        } else if (lambda.height() == 3 && lambda.part(3) == 1) {
            Int q = lambda.part(1) - lambda.part(2);
            exp.add(lambda, Rat(three_row_per_q * (q + 1)));
        }
    }
    return exp;
}

inline SchurExpansion ut2_self_table(int n) { return ut2_family_table(n, 2 * n + 3, 3, 1); }
inline SchurExpansion ut2_D_table(int n) { return ut2_family_table(n, n + 2, 2, 1); }

// Character of the minimal left ideal F[S_n] e_T for the row-major filling:
// trace of left multiplication by a class representative, read off the RREF
// basis of the ideal. Independent of the combinatorial character rule.
inline Int ideal_character(const Partition& lambda, const Partition& mu) {
    int n = lambda.size();
    std::vector<Perm> perms = all_permutations(n);
    std::map<Perm, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    GroupAlgebraElement e = young_symmetrizer(Tableau::row_major(lambda));
    RowReducer red(static_cast<int>(perms.size()));
    for (const Perm& sigma : perms) {
        RatVec row(perms.size(), 0);
        for (const auto& [pi, c] : e.terms) row[index[perm_compose(sigma, pi)]] += c;
        red.add_row(std::move(row));
    }
    Perm inv = perm_inverse(class_representative(mu));
    Rat trace = 0;
    for (int j = 0; j < red.rank(); ++j)
        trace += red.basis()[j][index[perm_compose(inv, perms[red.pivots()[j]])]];
    if (!is_integer(trace)) throw VerificationError("ideal_character: non-integral trace");
    return rat_num(trace);
}

// UT2 with the natural grading (diagonal part even, strictly upper part odd)
// under the diagonal W = D.
inline WAction graded_ut2_D() {
    WAction g = builtin_ut2_D();
    g.parity = {0, 1, 0};
    g.validate_grading();
    return g;
}

using Check = std::function<std::string()>; // returns detail, throws on failure

inline CriterionResult run_criterion(int number, const std::string& name, const Check& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    try {
        r.detail = body();
        r.passed = true;
    } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = ex.what();
    }
    return r;
}

inline void require(bool cond, const std::string& message) {
    if (!cond) throw VerificationError(message);
}

} // namespace detail

// Envelope/sign-twist suite, also exposed through the CLI: the involution
// property, three graded correspondence desk cases, the semidirect-product
// unity, and the Capelli landing property. Throws on any failure; returns a
// one-line summary.
inline std::string envelope_suite_check() {
    using detail::require;
    // The sign twist is an involution on every multilinear graded space with
    // at most 4 variables.
    for (int l = 0; l <= 4; ++l)
        for (int m = 0; l + m <= 4; ++m) {
            if (l + m == 0) continue;
            MultilinearBasis basis(l + m, 2);
            GradedGenPoly f{GenPoly(2), {}};
            for (int i = 0; i < l; ++i) f.parity.push_back(0);
            for (int i = 0; i < m; ++i) f.parity.push_back(1);
            for (int i = 0; i < basis.size(); ++i) f.poly.add_term(basis.monomials[i], i + 1);
            require(tilde(tilde(f)).poly.terms == f.poly.terms,
                    "sign twist is not an involution at (" + std::to_string(l) + "," + std::to_string(m) + ")");
        }
    // Correspondence between identities of the envelope and twisted
    // identities of the base, on three graded desk cases.
    {
        WAction g = detail::graded_ut2_D();
        GradedGenPoly even_comm{parse_genpoly("x1 x2 - x2 x1", g.W.dim()), {0, 0}};
        require(tilde_correspondence_check(even_comm, g, 2), "even commutator case fails");
        for (const GenMonomial& m : MultilinearBasis(2, g.W.dim()).monomials) {
            GradedGenPoly f{GenPoly(g.W.dim()), {0, 1}};
            f.poly.add_term(m, 1);
            require(tilde_correspondence_check(f, g, 2),
                    "graded ut2 correspondence fails on " + f.poly.to_string());
        }
    }
    {
        WAction e = grassmann_truncated(2);
        GradedGenPoly f{parse_genpoly("x1 x2 - x2 x1", e.W.dim()), {1, 1}};
        require(tilde_correspondence_check(f, e, 2), "exterior algebra odd-commutator case fails");
    }
    // Semidirect product: unital with unity supported on the W part.
    {
        WAction base = builtin_ut2_D();
        WAction sd = semidirect(base);
        auto unity = sd.A.find_unity();
        require(unity.has_value(), "semidirect product has no unity");
        for (int i = 0; i < base.A.dim(); ++i)
            require((*unity)[i] == 0, "semidirect unity has a nonzero A component");
    }
    // Capelli landing: evaluations of the rank-(dim W + 1) Capelli polynomial
    // on the semidirect product stay inside the ideal A.
    {
        WAction base = builtin_ut2_F();
        WAction sd = semidirect(base);
        GenPoly cap = capelli(base.W.dim() + 1, sd.W.dim());
        int nv = cap.num_variables();
        int da = sd.A.dim(), base_da = base.A.dim();
        std::vector<int> tuple(nv, 0);
        while (true) {
            std::vector<RatVec> args(nv);
            for (int i = 0; i < nv; ++i) args[i] = sd.A.basis_vec(tuple[i]);
            RatVec v = evaluate(cap, sd, args);
            for (int c = base_da; c < da; ++c)
                require(v[c] == 0, "Capelli evaluation leaves the ideal A");
            int pos = nv - 1;
            while (pos >= 0 && tuple[pos] == da - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            tuple[pos]++;
        }
    }
    return "involution, three correspondence cases, semidirect unity, Capelli landing";
}

inline AcceptanceReport run_acceptance_suite(int max_n = 4) {
    AcceptanceReport report;
    using detail::require;

    // Cocharacter results are reused across several criteria.
    std::map<std::string, WAction> builtins;
    builtins.emplace("ut2_self", builtin_ut2_self());
    builtins.emplace("ut2_D", builtin_ut2_D());
    builtins.emplace("ut2_F", builtin_ut2_F());
    std::map<std::pair<std::string, int>, CocharacterResult> cache;
    auto coch = [&](const std::string& name, int n) -> const CocharacterResult& {
        auto key = std::make_pair(name, n);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, cocharacter(builtins.at(name), n)).first;
        return it->second;
    };

    report.criteria.push_back(detail::run_criterion(1, "ut2_self multiplicity tables, n=1..4", [&] {
        std::ostringstream os;
        for (int n = 1; n <= max_n; ++n) {
            const CocharacterResult& r = coch("ut2_self", n);
            require(r.multiplicities == detail::ut2_self_table(n),
                    "ut2_self table mismatch at n=" + std::to_string(n));
            os << "gc_" << n << "=" << r.codim << (n < max_n ? " " : "");
        }
        return os.str();
    }));

    report.criteria.push_back(detail::run_criterion(2, "ut2_D multiplicity tables, n=1..4", [&] {
        std::ostringstream os;
        for (int n = 1; n <= max_n; ++n) {
            const CocharacterResult& r = coch("ut2_D", n);
            require(r.multiplicities == detail::ut2_D_table(n),
                    "ut2_D table mismatch at n=" + std::to_string(n));
            os << "gc_" << n << "=" << r.codim << (n < max_n ? " " : "");
        }
        return os.str();
    }));

    report.criteria.push_back(detail::run_criterion(3, "Hilbert series vs closed forms, k<=2, N=4", [&] {
        const int N = 4;
        int checked = 0;
        for (int k = 1; k <= 2; ++k) {
            require(hilbert_truncated(builtins.at("ut2_self"), k, N) == expand_closed_form(ClosedForm::UT2, k, N),
                    "ut2_self Hilbert mismatch at k=" + std::to_string(k));
            require(hilbert_truncated(builtins.at("ut2_D"), k, N) == expand_closed_form(ClosedForm::UT2_D, k, N),
                    "ut2_D Hilbert mismatch at k=" + std::to_string(k));
            require(hilbert_truncated(builtins.at("ut2_F"), k, N) == expand_closed_form(ClosedForm::UT2_F, k, N),
                    "ut2_F Hilbert mismatch at k=" + std::to_string(k));
            checked += 3;
            for (int d = 1; d <= 3; ++d) {
                require(free_hilbert_truncated(d, k, N) == expand_closed_form(ClosedForm::FreeAlgebra, k, N, d),
                        "free algebra Hilbert mismatch at d=" + std::to_string(d) + ", k=" + std::to_string(k));
                ++checked;
            }
        }
        return std::to_string(checked) + " series compared";
    }));

    report.criteria.push_back(detail::run_criterion(4, "S_n and GL pipelines agree, n<=3, k=n", [&] {
        int checked = 0;
        for (const auto& [name, act] : builtins)
            for (int n = 1; n <= 3; ++n) {
                require(gl_pipeline_multiplicities(act, n, n) == coch(name, n).multiplicities,
                        name + " pipeline mismatch at n=" + std::to_string(n));
                ++checked;
            }
        return std::to_string(checked) + " tables agree";
    }));

    report.criteria.push_back(detail::run_criterion(5, "codimension and colength formulas, n<=4", [&] {
        int checked = 0;
        for (const auto& [name, act] : builtins)
            for (int n = 1; n <= max_n; ++n) {
                const CocharacterResult& r = coch(name, n);
                Int from_dim = 0, from_count = 0;
                for (const auto& [lambda, m] : r.multiplicities.coeffs) {
                    from_dim += rat_num(m) * sn_dimension(lambda);
                    from_count += rat_num(m);
                }
                require(from_dim == r.codim, name + ": codimension formula fails at n=" + std::to_string(n));
                require(from_count == r.colength, name + ": colength formula fails at n=" + std::to_string(n));
                ++checked;
            }
        return std::to_string(checked) + " (n, algebra) pairs";
    }));

    report.criteria.push_back(detail::run_criterion(6, "multiplicity bound, ut2_self/ut2_D, n<=2", [&] {
        std::ostringstream os;
        for (const std::string& name : {std::string("ut2_self"), std::string("ut2_D")})
            for (int n = 1; n <= 2; ++n) {
                BoundReport b = multiplicity_bound_check(builtins.at(name), n); // throws on violation
                os << name << " n=" << n << ": " << b.rows.size() << " shapes bounded; ";
            }
        return os.str();
    }));

    report.criteria.push_back(detail::run_criterion(7, "Capelli set of rank 4 and height-4 vanishing", [&] {
        for (const auto& [name, act] : builtins) {
            require(capelli_report(act, 4).holds, name + ": Capelli set of rank 4 fails");
            for (int n = 1; n <= max_n; ++n)
                for (const auto& [lambda, m] : coch(name, n).multiplicities.coeffs)
                    require(lambda.height() <= 3,
                            name + ": nonzero multiplicity at height >= 4: " + lambda.to_string());
        }
        return "rank-4 Capelli set holds on all three actions; all tables live in the height-3 strip";
    }));

    report.criteria.push_back(detail::run_criterion(8, "symmetric function oracles", [&] {
        // Two independent Schur polynomial constructions.
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lambda : enumerate_partitions(size))
                for (int k = 1; k <= 4; ++k)
                    require(schur_poly(lambda, k) == schur_poly_jt(lambda, k),
                            "Schur constructions disagree at " + lambda.to_string() + ", k=" + std::to_string(k));
        // Littlewood-Richardson by tableaux vs by multiplication + expansion.
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (const Partition& lambda : enumerate_partitions(a))
                    for (const Partition& mu : enumerate_partitions(b)) {
                        int k = std::max(1, a + b);
                        SchurExpansion prod = schur_expand(schur_poly(lambda, k) * schur_poly(mu, k));
                        for (const Partition& nu : enumerate_partitions(a + b))
                            require(prod.coefficient(nu) == Rat(lr_coefficient(lambda, mu, nu)),
                                    "LR mismatch at (" + lambda.to_string() + ", " + mu.to_string() + ", " +
                                        nu.to_string() + ")");
                    }
        // Duplication formula, exhaustively over small skew shapes.
        for (int size = 1; size <= 4; ++size)
            for (const Partition& mu : enumerate_partitions(size))
                for (int sub = 0; sub <= size; ++sub)
                    for (const Partition& lambda : enumerate_partitions(sub))
                        if (mu.contains(lambda))
                            for (int l = 1; l <= 2; ++l)
                                for (int k = 1; k <= 2; ++k)
                                    require(duplication_check(mu, lambda, l, k),
                                            "duplication fails at " + mu.to_string() + " / " + lambda.to_string());
        // Young-derived coefficients vs a truncated product, to degree 6.
        {
            const int k = 3, N = 6;
            SchurExpansion alpha(k);
            ExactPoly sum(k);
            for (int size = 0; size <= 3; ++size)
                for (const Partition& mu : enumerate_partitions(size, k)) {
                    alpha.add(mu, 1);
                    sum += schur_poly(mu, k);
                }
            TruncatedSeries prod = TruncatedSeries::from_poly(sum, N);
            for (int i = 0; i < k; ++i) prod = prod * TruncatedSeries::geometric(i, k, N);
            for (int d = 0; d <= N; ++d) {
                SchurExpansion got = schur_expand(prod.poly().homogeneous_component(d));
                for (const Partition& lambda : enumerate_partitions(d, k))
                    require(got.coefficient(lambda) == young_derived_multiplicity(alpha, lambda),
                            "Young-derived coefficient mismatch at " + lambda.to_string());
            }
        }
        return "Schur/JT, LR, duplication, Young-derived all agree";
    }));

    report.criteria.push_back(detail::run_criterion(9, "representation theory oracles", [&] {
        // Character rule vs matrix-model traces on minimal left ideals.
        for (int n = 1; n <= 5; ++n)
            for (const Partition& lambda : enumerate_partitions(n))
                for (const Partition& mu : enumerate_partitions(n))
                    require(irreducible_character(lambda, mu) == detail::ideal_character(lambda, mu),
                            "character mismatch at (" + lambda.to_string() + ", " + mu.to_string() + ")");
        // Sum of squared dimensions.
        for (int n = 1; n <= 8; ++n) {
            Int s = 0;
            for (const Partition& lambda : enumerate_partitions(n)) {
                Int d = sn_dimension(lambda);
                s += d * d;
            }
            require(s == factorial(n), "sum of squared dimensions wrong at n=" + std::to_string(n));
        }
        // Symmetrizer span dimension.
        for (int n = 1; n <= 5; ++n)
            for (const Partition& lambda : enumerate_partitions(n))
                require(Int(symmetrizer_span_dimension(Tableau::row_major(lambda))) == sn_dimension(lambda),
                        "symmetrizer span dimension wrong at " + lambda.to_string());
        // Branching.
        for (int n = 1; n <= 6; ++n)
            for (const Partition& lambda : enumerate_partitions(n))
                require(branching_check(lambda), "branching fails at " + lambda.to_string());
        return "characters, dimensions, symmetrizers, branching all verified";
    }));

    report.criteria.push_back(
        detail::run_criterion(10, "Grassmann envelope and sign twist", [&] { return envelope_suite_check(); }));

    return report;
}

inline std::string render_report(const AcceptanceReport& report) {
    std::ostringstream os;
    for (const auto& c : report.criteria)
        os << "criterion " << c.number << " [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
           << (c.detail.empty() ? "" : " — " + c.detail) << '\n';
    os << (report.all_passed() ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << '\n';
    return os.str();
}

} // namespace gpid
