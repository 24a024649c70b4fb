#include "listpack/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace listpack {

Perm identity_perm(int k)
{
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm inverse(const Perm& p)
{
    Perm q(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        q[p[i]] = i;
    }
    return q;
}

Perm compose(const Perm& a, const Perm& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("compose: length mismatch");
    }
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        c[i] = a[b[i]];
    }
    return c;
}

bool is_permutation(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

bool is_identity(const Perm& p)
{
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        if (p[i] != i) {
            return false;
        }
    }
    return true;
}

int parity(const Perm& p)
{
    std::vector<bool> seen(p.size(), false);
    int transpositions = 0;
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::uint64_t factorial(int k)
{
    if (k > 20) {
        throw std::overflow_error("factorial: k > 20 overflows 64 bits");
    }
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

std::uint64_t perm_rank(const Perm& p)
{
    const int k = static_cast<int>(p.size());
    std::uint64_t rank = 0;
    std::vector<bool> used(k, false);
    for (int i = 0; i < k; ++i) {
        int smaller = 0;
        for (int x = 0; x < p[i]; ++x) {
            if (!used[x]) {
                ++smaller;
            }
        }
        rank += static_cast<std::uint64_t>(smaller) * factorial(k - 1 - i);
        used[p[i]] = true;
    }
    return rank;
}

Perm perm_unrank(std::uint64_t rank, int k)
{
    std::vector<int> pool = identity_perm(k);
    Perm p;
    p.reserve(k);
    for (int i = 0; i < k; ++i) {
        std::uint64_t f = factorial(k - 1 - i);
        auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        p.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<long>(idx));
    }
    return p;
}

std::vector<Perm> all_perms(int k)
{
    std::vector<Perm> out;
    Perm p = identity_perm(k);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_to_string(const Perm& p)
{
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(p[i] + 1);
    }
    return s + ")";
}

Perm perm_from_string(const std::string& text)
{
    Perm p;
    int cur = -1;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        } else if (cur >= 0) {
            p.push_back(cur - 1);
            cur = -1;
        }
    }
    if (cur >= 0) {
        p.push_back(cur - 1);
    }
    if (!is_permutation(p)) {
        throw std::invalid_argument("not a permutation: " + text);
    }
    return p;
}

}  // namespace listpack
