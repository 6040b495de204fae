#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/numeric.hpp"

namespace milnor {

/// Integer partition with weakly decreasing positive parts.
/// Partitions of equal weight are ordered lexicographically on the parts
/// vector, which is the canonical map-key order throughout.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    explicit IntPartition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("partition part < 1");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts not descending");
        }
    }

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }

    int length() const { return static_cast<int>(parts.size()); }

    /// multiplicity of i among the parts
    int multiplicity(int i) const {
        return static_cast<int>(std::count(parts.begin(), parts.end(), i));
    }

    std::string to_string() const {
        if (parts.empty()) return "";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << '+';
            os << parts[i];
        }
        return os.str();
    }

    static IntPartition parse(const std::string& s) {
        std::vector<int> parts;
        if (!s.empty()) {
            std::istringstream is(s);
            std::string tok;
            while (std::getline(is, tok, '+')) parts.push_back(std::stoi(tok));
        }
        return IntPartition(std::move(parts));
    }

    auto operator<=>(const IntPartition&) const = default;
};

/// All partitions of n in descending lexicographic order, (n) first.
inline std::vector<IntPartition> partitions_of(int n) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// z_lambda = prod_i i^{m_i} m_i!, the order of the centralizer of a
/// permutation of cycle type lambda.
inline ZZ z_lambda(const IntPartition& lambda) {
    ZZ z = 1;
    int run = 0;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        ZZ p(lambda.parts[i]);
        z *= p;
        run = (i > 0 && lambda.parts[i] == lambda.parts[i - 1]) ? run + 1 : 1;
        z *= run;
    }
    return z;
}

/// Number-theoretic Moebius function.
inline int moebius(int d) {
    if (d < 1) throw std::domain_error("moebius requires d >= 1");
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            result = -result;
        }
    }
    if (d > 1) result = -result;
    return result;
}

/// Signed Stirling number of the first kind, s(n,n) = 1,
/// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k).
inline ZZ stirling_first(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("stirling_first out of range");
    std::vector<ZZ> prev{1};  // row 0
    for (int m = 1; m <= n; ++m) {
        std::vector<ZZ> cur(m + 1);
        for (int j = 0; j <= m; ++j) {
            ZZ a = (j >= 1) ? prev[j - 1] : ZZ(0);
            ZZ b = (j <= m - 1) ? prev[j] : ZZ(0);
            cur[j] = a - ZZ(m - 1) * b;
        }
        prev = std::move(cur);
    }
    return prev[k];
}

} // namespace milnor
