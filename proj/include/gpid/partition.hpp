#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpid/rational.hpp"

namespace gpid {

// A partition: weakly decreasing sequence of positive integers, stored
// without trailing zeros. The empty vector is the empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("not a partition: parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int height() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access, zero beyond the height.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("part index is 1-based");
        return i <= height() ? parts_[i - 1] : 0;
    }

    // mu is contained in *this cell-wise.
    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.height(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // Serializes as "3,1,1"; the empty partition as "-".
    std::string to_string() const {
        if (parts_.empty()) return "-";
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& s) {
        if (s.empty() || s == "-") return Partition();
        std::vector<int> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
};

// Canonical order used everywhere: by size, then decreasing lexicographic,
// so partitions of n list as (n), (n-1,1), ..., (1^n).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.parts() < a.parts(); // lex-greater first
    }
};

// Hook H(k,l): partitions with lambda_{k+1} <= l. Strip = H(k,0).
struct HookShape {
    int arm = 0; // k
    int leg = 0; // l
};

inline bool hook_membership(const Partition& lambda, const HookShape& h) {
    return lambda.part(h.arm + 1) <= h.leg;
}

// All partitions of n (height <= max_height if given), in canonical order.
inline std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_height = std::nullopt) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (max_height && static_cast<int>(cur.size()) >= *max_height) return;
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// Hook length of the cell (i,j), 1-based.
inline int hook_length(const Partition& lambda, int i, int j) {
    return lambda.part(i) - j + lambda.conjugate().part(j) - i + 1;
}

// dim of the S_n-irreducible indexed by lambda, via the hook-length formula.
inline Int sn_dimension(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("sn_dimension: empty partition");
    Int num = factorial(lambda.size());
    Partition conj = lambda.conjugate();
    Int hooks = 1;
    for (int i = 1; i <= lambda.height(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            hooks *= lambda.part(i) - j + conj.part(j) - i + 1;
    return num / hooks;
}

// dim of the GL_k Weyl module: s_lambda(1,...,1) (k ones) by the product
// formula; 0 when the height exceeds k.
inline Int weyl_dimension(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("weyl_dimension: k must be positive");
    if (lambda.height() > k) return 0;
    Rat prod = 1;
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
            prod *= Rat(lambda.part(i) - lambda.part(j) + j - i, j - i);
    if (!is_integer(prod)) throw VerificationError("weyl_dimension: non-integer product");
    return rat_num(prod);
}

// Partitions obtained by adding one box (addable corners).
inline std::vector<Partition> branch_up(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 1; i <= lambda.height() + 1; ++i) {
        if (i == 1 || lambda.part(i) < lambda.part(i - 1)) {
            std::vector<int> p = lambda.parts();
            if (i <= lambda.height())
                p[i - 1]++;
            else
                p.push_back(1);
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

// Partitions obtained by removing one box (removable corners).
inline std::vector<Partition> branch_down(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("branch_down: empty partition");
    std::vector<Partition> out;
    for (int i = 1; i <= lambda.height(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) {
            std::vector<int> p = lambda.parts();
            p[i - 1]--;
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

// lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
inline bool interleaves(const Partition& lambda, const Partition& mu) {
    int h = std::max(lambda.height(), mu.height());
    for (int i = 1; i <= h; ++i) {
        if (mu.part(i) > lambda.part(i)) return false;
        if (lambda.part(i + 1) > mu.part(i)) return false;
    }
    return true;
}

} // namespace gpid
