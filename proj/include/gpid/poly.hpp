#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/rational.hpp"

namespace gpid {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over exact rationals. Zero coefficients are
// never stored. Keys are exponent vectors of fixed length num_vars, ordered
// lexicographically by std::map.
class ExactPoly {
public:
    explicit ExactPoly(int num_vars = 1) : k_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("ExactPoly: need at least one variable");
    }

    int num_vars() const { return k_; }
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& e, const Rat& c) {
        if (static_cast<int>(e.size()) != k_) throw std::invalid_argument("ExactPoly: exponent length mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    static ExactPoly variable(int i, int num_vars) {
        ExactPoly p(num_vars);
        Exponent e(num_vars, 0);
        e[i] = 1;
        p.add_term(e, 1);
        return p;
    }

    static ExactPoly constant(const Rat& c, int num_vars) {
        ExactPoly p(num_vars);
        p.add_term(Exponent(num_vars, 0), c);
        return p;
    }

    ExactPoly& operator+=(const ExactPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ExactPoly& operator-=(const ExactPoly& o) {
        check_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    ExactPoly operator+(const ExactPoly& o) const { ExactPoly r = *this; r += o; return r; }
    ExactPoly operator-(const ExactPoly& o) const { ExactPoly r = *this; r -= o; return r; }

    ExactPoly operator*(const ExactPoly& o) const {
        check_vars(o);
        ExactPoly r(k_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exponent e(k_);
                for (int i = 0; i < k_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    ExactPoly operator*(const Rat& c) const {
        ExactPoly r(k_);
        for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
        return r;
    }

    bool operator==(const ExactPoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    static int total_degree(const Exponent& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    // The homogeneous component of total degree d.
    ExactPoly homogeneous_component(int d) const {
        ExactPoly r(k_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.add_term(e, c);
        return r;
    }

    int max_total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    // Invariance under all adjacent-variable transpositions.
    bool is_symmetric() const {
        for (int i = 0; i + 1 < k_; ++i)
            for (const auto& [e, c] : terms_) {
                Exponent f = e;
                std::swap(f[i], f[i + 1]);
                if (coefficient(f) != c) return false;
            }
        return true;
    }

    // Substitutes 1 for every variable.
    Rat at_ones() const {
        Rat s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // Reinterprets this polynomial in total_vars variables, with variable i
    // becoming variable i + offset.
    ExactPoly embed(int total_vars, int offset) const {
        if (offset < 0 || offset + k_ > total_vars) throw std::invalid_argument("ExactPoly::embed: out of range");
        ExactPoly r(total_vars);
        for (const auto& [e, c] : terms_) {
            Exponent f(total_vars, 0);
            for (int i = 0; i < k_; ++i) f[offset + i] = e[i];
            r.add_term(f, c);
        }
        return r;
    }

    // Lines "exponent-vector: coefficient", e.g. "2 1 0: 3/2".
    std::string to_string() const {
        std::ostringstream os;
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) os << ' ';
                os << e[i];
            }
            os << ": " << rat_to_string(c) << '\n';
        }
        return os.str();
    }

private:
    void check_vars(const ExactPoly& o) const {
        if (k_ != o.k_) throw std::invalid_argument("ExactPoly: variable count mismatch");
    }

    int k_;
    std::map<Exponent, Rat> terms_;
};

// Power series truncated at a fixed total degree; multiplication discards
// everything above the bound.
class TruncatedSeries {
public:
    TruncatedSeries(int num_vars, int max_total_degree)
        : poly_(num_vars), max_degree_(max_total_degree) {
        if (max_total_degree < 0) throw std::invalid_argument("TruncatedSeries: negative truncation degree");
    }

    static TruncatedSeries from_poly(const ExactPoly& p, int max_total_degree) {
        TruncatedSeries s(p.num_vars(), max_total_degree);
        for (const auto& [e, c] : p.terms())
            s.add_term(e, c);
        return s;
    }

    int num_vars() const { return poly_.num_vars(); }
    int max_degree() const { return max_degree_; }
    const ExactPoly& poly() const { return poly_; }

    void add_term(const Exponent& e, const Rat& c) {
        if (ExactPoly::total_degree(e) > max_degree_) return;
        poly_.add_term(e, c);
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        check(o);
        return from_poly(poly_ + o.poly_, max_degree_);
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        check(o);
        return from_poly(poly_ - o.poly_, max_degree_);
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        check(o);
        TruncatedSeries r(num_vars(), max_degree_);
        for (const auto& [e1, c1] : poly_.terms())
            for (const auto& [e2, c2] : o.poly_.terms()) {
                Exponent e(num_vars());
                int deg = 0;
                for (int i = 0; i < num_vars(); ++i) {
                    e[i] = e1[i] + e2[i];
                    deg += e[i];
                }
                if (deg <= max_degree_) r.poly_.add_term(e, c1 * c2);
            }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const {
        return max_degree_ == o.max_degree_ && poly_ == o.poly_;
    }

    // Truncated 1/(1 - t_i).
    static TruncatedSeries geometric(int var, int num_vars, int max_total_degree) {
        TruncatedSeries s(num_vars, max_total_degree);
        Exponent e(num_vars, 0);
        for (int d = 0; d <= max_total_degree; ++d) {
            e[var] = d;
            s.poly_.add_term(e, 1);
        }
        return s;
    }

    std::string to_string() const { return poly_.to_string(); }

private:
    void check(const TruncatedSeries& o) const {
        if (num_vars() != o.num_vars() || max_degree_ != o.max_degree_)
            throw std::invalid_argument("TruncatedSeries: shape mismatch");
    }

    ExactPoly poly_;
    int max_degree_;
};

} // namespace gpid
