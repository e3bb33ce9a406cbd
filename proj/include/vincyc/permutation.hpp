#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vincyc {

/// A permutation of {1,...,n} in one-line notation. Entries are 1-based
/// everywhere: word()[i-1] is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    /// Accepts either a digit string ("2341", entries 1..9 only) or a
    /// comma-separated list ("6,14,1,2"). Throws std::invalid_argument with
    /// the offending token on malformed input or non-permutations.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }

    /// Image of i, 1-based.
    int operator()(int i) const { return word_[i - 1]; }

    const std::vector<int>& word() const { return word_; }

    /// Digit string when n <= 9, comma-separated otherwise.
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

using Cycle = std::vector<int>;

/// Standard cycle form: every cycle is rotated to start with its largest
/// element and cycles are ordered by increasing maximum. Fixed points are
/// kept as singleton cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

int cycle_count(const Permutation& p);

/// True when p consists of a single n-cycle. Size 1 counts as cyclic.
bool is_cyclic(const Permutation& p);

/// The fundamental bijection: write p in standard cycle form and erase the
/// parentheses. p is cyclic exactly when theta(p) starts with n.
Permutation theta(const Permutation& p);

/// Inverse of theta: cut the word before every left-to-right maximum and read
/// the pieces as cycles (each piece starts with its own maximum).
Permutation theta_inv(const Permutation& w);

/// Sum of p(i) - i over the positions with p(i) > i.
int depth(const Permutation& p);

int inversions(const Permutation& p);

/// n minus the number of cycles; the minimum number of transpositions whose
/// product is p.
int reflection_length(const Permutation& p);

Permutation reverse(const Permutation& p);
Permutation inverse(const Permutation& p);

/// a followed by b with b's entries shifted above a's.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// a's entries shifted above b's, followed by b unchanged.
Permutation skew_sum(const Permutation& a, const Permutation& b);

/// Replace the entry of VALUE a by a block order-isomorphic to q occupying
/// values a..a+|q|-1; values above a shift up by |q|-1.
Permutation inflate_at(const Permutation& p, int a, const Permutation& q);

/// inflate_at(p, 1, q).
Permutation inflate_at_one(const Permutation& p, const Permutation& q);

/// Order-isomorphic relabeling of distinct integers onto 1..k.
Permutation reduce(const std::vector<int>& values);

}  // namespace vincyc
