#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace listpack {

/// Permutation of {0..k-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int k);
Perm inverse(const Perm& p);
/// (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
bool is_permutation(const Perm& p);
bool is_identity(const Perm& p);
/// +1 for even, -1 for odd.
int parity(const Perm& p);

std::uint64_t factorial(int k);
/// Lexicographic rank among all permutations of the same length.
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(std::uint64_t rank, int k);
/// All permutations of {0..k-1} in lexicographic order.
std::vector<Perm> all_perms(int k);

/// 1-based tuple rendering, e.g. "(2,3,4,1)".
std::string perm_to_string(const Perm& p);
/// Parses the 1-based tuple rendering.
Perm perm_from_string(const std::string& text);

}  // namespace listpack
